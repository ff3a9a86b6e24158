#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "doodle/canonical.hpp"
#include "doodle/map.hpp"

using namespace doodle;

namespace {

DoodleMap hopf_map() { return DoodleMap::from_pairing(1, {2, 3, 0, 1}); }
DoodleMap curl_map() { return DoodleMap::from_pairing(1, {1, 0, 3, 2}); }

// Random relabeling: permute crossing ids and rotate slot bases; both are
// isomorphisms of the map.  Optionally shuffles the component table.
DoodleMap relabel(const DoodleMap& m, std::mt19937_64& rng, bool shuffle_table) {
    const std::uint32_t n = m.crossing_count();
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::uint32_t> shift(n);
    for (auto& s : shift) s = static_cast<std::uint32_t>(rng() % 4);

    auto phi = [&](DartId d) {
        return make_dart(perm[owner(d)], (slot(d) + shift[owner(d)]) & 3u);
    };
    std::vector<DartId> p(m.dart_count());
    for (DartId d = 0; d < m.dart_count(); ++d) p[phi(d)] = phi(m.pair(d));
    std::vector<Component> table;
    for (const auto& c : m.components())
        table.push_back(c.is_circle() ? c : Component::strand(phi(c.rep)));
    if (shuffle_table) std::shuffle(table.begin(), table.end(), rng);
    return DoodleMap::with_components(n, std::move(p), std::move(table), m.mode());
}

}  // namespace

TEST_CASE("canonical code is a relabeling invariant (1e4 trials)") {
    std::mt19937_64 rng(7);
    std::vector<DoodleMap> seeds = {hopf_map(), curl_map(),
                                    DoodleMap::disjoint_union(hopf_map(), curl_map()),
                                    DoodleMap::from_pairing(2, {6, 2, 1, 4, 3, 7, 0, 5}),
                                    DoodleMap::from_pairing(2, {6, 3, 4, 1, 2, 7, 0, 5})};
    std::size_t bad = 0, trials = 0;
    for (const auto& m : seeds) {
        REQUIRE(validate(m).empty());
        auto code = canonical_code(m, kUnorientedUnordered);
        for (int trial = 0; trial < 2000; ++trial, ++trials) {
            auto r = relabel(m, rng, true);
            bad += !(canonical_code(r, kUnorientedUnordered) == code);
        }
    }
    CHECK(trials >= 10000);
    CHECK(bad == 0);
}

TEST_CASE("genus is invariant under relabeling") {
    std::mt19937_64 rng(13);
    auto m = DoodleMap::from_pairing(2, {6, 2, 1, 4, 3, 7, 0, 5});
    auto g = genus(m).total;
    for (int trial = 0; trial < 100; ++trial) CHECK(genus(relabel(m, rng, true)).total == g);
}

TEST_CASE("euler characteristic per component is even and at most 2") {
    for (const auto& m : {hopf_map(), curl_map(),
                          DoodleMap::disjoint_union(hopf_map(), curl_map()),
                          DoodleMap::from_pairing(0, {}, 3)}) {
        auto [faces, fv] = face_trace(m);
        for (const auto& sc : fv.components) {
            int chi = static_cast<int>(sc.vertices) - static_cast<int>(sc.edges) +
                      static_cast<int>(sc.faces);
            CHECK(chi % 2 == 0);
            CHECK(chi <= 2);
        }
    }
}

TEST_CASE("canonical code distinguishes hopf from two circles") {
    auto two_circles = DoodleMap::from_pairing(0, {}, 2);
    CHECK(canonical_code(hopf_map(), kUnorientedUnordered) !=
          canonical_code(two_circles, kUnorientedUnordered));
}

TEST_CASE("the two curl chiralities differ by a slot rotation only") {
    auto a = curl_map();                                // loop on slots 0,1
    auto b = DoodleMap::from_pairing(1, {3, 2, 1, 0});  // loop on slots 0,3
    CHECK(canonical_code(a, kUnorientedUnordered) == canonical_code(b, kUnorientedUnordered));
    CHECK(canonical_code(a, kUnorientedUnordered) !=
          canonical_code(hopf_map(), kUnorientedUnordered));
}

TEST_CASE("trivial circle counts are part of identity") {
    auto one = DoodleMap::from_pairing(0, {}, 1);
    auto two = DoodleMap::from_pairing(0, {}, 2);
    CHECK(canonical_code(one, kUnorientedUnordered) != canonical_code(two, kUnorientedUnordered));
    CHECK(canonical_code(DoodleMap(), kUnorientedUnordered) !=
          canonical_code(one, kUnorientedUnordered));
}

TEST_CASE("reversing a strand direction changes nothing in unoriented mode") {
    DoodleMap m = hopf_map();
    auto table = m.components();
    for (std::size_t i = 0; i < table.size(); ++i) {
        auto flipped = table;
        // The reverse traversal's out-darts are the pair-images of this one's.
        flipped[i] = Component::strand(m.pair(flipped[i].rep));
        auto r = DoodleMap::with_components(m.crossing_count(),
                                            std::vector<DartId>(m.pairing()), flipped, m.mode());
        REQUIRE(validate(r).empty());
        CHECK(canonical_code(r, kUnorientedUnordered) == canonical_code(m, kUnorientedUnordered));
    }
}

TEST_CASE("ordered mode separates component order, unordered does not") {
    auto m = hopf_map();
    std::vector<Component> t1 = m.components();
    t1.push_back(Component::circle());
    std::vector<Component> t2;
    t2.push_back(Component::circle());
    for (const auto& c : m.components()) t2.push_back(c);
    auto a = DoodleMap::with_components(1, std::vector<DartId>(m.pairing()), t1);
    auto b = DoodleMap::with_components(1, std::vector<DartId>(m.pairing()), t2);
    Mode ordered{Orientation::unoriented, Ordering::ordered};
    CHECK(canonical_code(a, kUnorientedUnordered) == canonical_code(b, kUnorientedUnordered));
    CHECK(canonical_code(a, ordered) != canonical_code(b, ordered));
}

TEST_CASE("mode monotonicity: relabelings agree in every mode") {
    std::mt19937_64 rng(11);
    auto m = DoodleMap::disjoint_union(hopf_map(), curl_map());
    for (int trial = 0; trial < 50; ++trial) {
        auto r = relabel(m, rng, false);  // keep table order and directions
        for (Mode mode : {kOrientedOrdered, Mode{Orientation::oriented, Ordering::unordered},
                          Mode{Orientation::unoriented, Ordering::ordered},
                          kUnorientedUnordered}) {
            CHECK(canonical_code(r, mode) == canonical_code(m, mode));
        }
    }
}

namespace {

// Brute-force direction-respecting isomorphism search over crossing
// permutations and slot rotations; the independent oracle for oriented-mode
// code equality on small maps.
bool oriented_iso_exists(const DoodleMap& a, const DoodleMap& b) {
    const std::uint32_t n = a.crossing_count();
    if (b.crossing_count() != n) return false;
    auto out_darts = [](const DoodleMap& m) {
        std::vector<bool> out(m.dart_count(), false);
        for (const auto& c : m.components())
            if (!c.is_circle())
                for (DartId d : m.strand_orbit(c.rep)) out[d] = true;
        return out;
    };
    auto outs_a = out_darts(a), outs_b = out_darts(b);
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
    do {
        std::vector<std::uint32_t> shifts(n, 0);
        for (std::uint64_t mask = 0; mask < (1ull << (2 * n)); ++mask) {
            for (std::uint32_t c = 0; c < n; ++c) shifts[c] = (mask >> (2 * c)) & 3u;
            auto phi = [&](DartId d) {
                return make_dart(perm[owner(d)], (slot(d) + shifts[owner(d)]) & 3u);
            };
            bool ok = true;
            for (DartId d = 0; d < a.dart_count() && ok; ++d) {
                ok &= phi(a.pair(d)) == b.pair(phi(d));
                ok &= outs_a[d] == outs_b[phi(d)];
            }
            if (ok) return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("oriented mode matches a brute-force direction-respecting search") {
    // Two crossings, three strands: a meridian plus two loops.
    DoodleMap base = DoodleMap::from_pairing(2, {6, 3, 4, 1, 2, 7, 0, 5});
    REQUIRE(validate(base).empty());
    Mode oriented{Orientation::oriented, Ordering::unordered};

    std::vector<DoodleMap> variants;
    for (unsigned mask = 0; mask < 8; ++mask) {
        auto table = base.components();
        for (std::size_t i = 0; i < table.size(); ++i)
            if (mask & (1u << i)) table[i] = Component::strand(base.pair(table[i].rep));
        variants.push_back(DoodleMap::with_components(
            base.crossing_count(), std::vector<DartId>(base.pairing()), table, base.mode()));
    }
    for (const auto& x : variants) {
        for (const auto& y : variants) {
            bool codes = canonical_code(x, oriented) == canonical_code(y, oriented);
            CHECK(codes == oriented_iso_exists(x, y));
            CHECK(canonical_code(x, kUnorientedUnordered) ==
                  canonical_code(y, kUnorientedUnordered));
        }
    }
    // The hopf curls: every direction assignment is isomorphic by symmetry.
    DoodleMap h = hopf_map();
    auto t = h.components();
    t[0] = Component::strand(h.pair(t[0].rep));
    auto h2 = DoodleMap::with_components(1, std::vector<DartId>(h.pairing()), t, h.mode());
    CHECK((canonical_code(h, {Orientation::oriented, Ordering::unordered}) ==
           canonical_code(h2, {Orientation::oriented, Ordering::unordered})) ==
          oriented_iso_exists(h, h2));
}

TEST_CASE("hex rendering is versioned and stable") {
    auto h = canonical_code(hopf_map(), kUnorientedUnordered).hex();
    CHECK(h.substr(0, 3) == "v1:");
    CHECK(h == canonical_code(hopf_map(), kUnorientedUnordered).hex());
}
