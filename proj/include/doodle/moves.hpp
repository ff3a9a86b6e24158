#pragma once

// Diagram moves: the monogon/bigon collapses H1-/H2- and their inverses,
// confluent reduction to the unique minimal diagram, and the +-1
// construction on minimal diagrams.
//
// Sites are positional and invalidated by any move; apply_* throws on a
// stale site instead of silently recomputing.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "doodle/canonical.hpp"
#include "doodle/faces.hpp"
#include "doodle/map.hpp"

namespace doodle {

struct ReductionSite {
    enum class Kind : std::uint8_t { monogon, bigon };
    Kind kind;
    std::vector<DartId> face;  // current face orbit, least dart first

    std::vector<std::uint32_t> crossings() const {
        std::vector<std::uint32_t> cs;
        for (DartId d : face) cs.push_back(owner(d));
        return cs;
    }
};

// All monogon and distinct-corner bigon faces, in face order.  Empty iff
// the map is minimal: the disk-face encoding makes every region simply
// connected, so monogons and bigons are the only obstructions.  A degree-2
// face whose corners coincide is not a reduction site.
inline std::vector<ReductionSite> find_sites(const DoodleMap& m) {
    std::vector<ReductionSite> sites;
    for (const Face& f : trace_faces(m)) {
        if (f.degree() == 1)
            sites.push_back({ReductionSite::Kind::monogon, f.darts});
        else if (f.degree() == 2 && owner(f.darts[0]) != owner(f.darts[1]))
            sites.push_back({ReductionSite::Kind::bigon, f.darts});
    }
    return sites;
}

namespace detail {

inline void check_site_current(const DoodleMap& m, const std::vector<DartId>& face,
                               const char* what) {
    if (face.empty() || face.front() >= m.dart_count()) throw Error(std::string(what) + ": stale site");
    DartId d = face.front();
    for (DartId expect : face) {
        if (d != expect) throw Error(std::string(what) + ": stale site");
        d = face_next(m, d);
    }
    if (d != face.front()) throw Error(std::string(what) + ": stale site");
}

}  // namespace detail

// Deletes the curl crossing of a monogon; the through-strand's external
// darts are spliced into one edge.  A component left crossing-free becomes
// a trivial circle.
inline DoodleMap apply_h1_minus(const DoodleMap& m, const ReductionSite& site) {
    if (site.kind != ReductionSite::Kind::monogon) throw Error("apply_h1_minus: not a monogon site");
    detail::check_site_current(m, site.face, "apply_h1_minus");
    std::vector<bool> dead(m.crossing_count(), false);
    dead[owner(site.face.front())] = true;
    return detail::rebuild_without(m, dead, {});
}

// Erases a bigon: both corner crossings are deleted and each strand
// continues past the erased region.
inline DoodleMap apply_h2_minus(const DoodleMap& m, const ReductionSite& site) {
    if (site.kind != ReductionSite::Kind::bigon) throw Error("apply_h2_minus: not a bigon site");
    detail::check_site_current(m, site.face, "apply_h2_minus");
    if (owner(site.face[0]) == owner(site.face[1]))
        throw Error("apply_h2_minus: bigon corners coincide");
    std::vector<bool> dead(m.crossing_count(), false);
    dead[owner(site.face[0])] = true;
    dead[owner(site.face[1])] = true;
    return detail::rebuild_without(m, dead, {});
}

// A place where an expansion can act: either next to a dart or on a
// crossing-free circle component.
struct ArcRef {
    DartId dart = kNoDart;
    std::size_t circle = static_cast<std::size_t>(-1);

    static ArcRef at_dart(DartId d) { return ArcRef{d, static_cast<std::size_t>(-1)}; }
    static ArcRef at_circle(std::size_t index) { return ArcRef{kNoDart, index}; }
    bool is_circle() const { return dart == kNoDart; }
};

namespace detail {

inline void check_arc(const DoodleMap& m, const ArcRef& a, const char* what) {
    if (a.is_circle()) {
        if (a.circle >= m.components().size() || !m.components()[a.circle].is_circle())
            throw Error(std::string(what) + ": not a circle component");
    } else if (a.dart >= m.dart_count()) {
        throw Error(std::string(what) + ": dart out of range");
    }
}

}  // namespace detail

// Generates a curl next to the given arc.  chirality selects which side the
// monogon appears on.
inline DoodleMap apply_h1_plus(const DoodleMap& m, const ArcRef& pos, int chirality = 0) {
    detail::check_arc(m, pos, "apply_h1_plus");
    const std::uint32_t n = m.crossing_count();
    const DartId x0 = make_dart(n, 0), x1 = make_dart(n, 1), x2 = make_dart(n, 2),
                 x3 = make_dart(n, 3);
    std::vector<DartId> p = m.pairing();
    p.resize(p.size() + 4, kNoDart);
    std::vector<Component> table = m.components();

    if (pos.is_circle()) {
        // Materialize the circle as a figure-eight curl.
        if (chirality == 0) {
            p[x0] = x1; p[x1] = x0; p[x2] = x3; p[x3] = x2;
        } else {
            p[x0] = x3; p[x3] = x0; p[x1] = x2; p[x2] = x1;
        }
        table[pos.circle] = Component::strand(x0);
    } else {
        const DartId d = pos.dart;
        const DartId old = p[d];
        p[d] = x0; p[x0] = d;
        if (chirality == 0) {
            p[x1] = x2; p[x2] = x1;
            p[x3] = old; p[old] = x3;
        } else {
            p[x2] = x3; p[x3] = x2;
            p[x1] = old; p[old] = x1;
        }
    }
    return DoodleMap::with_components(n + 1, std::move(p), std::move(table), m.mode());
}

// Pushes two arcs bordering a common region across each other, creating a
// bigon.  Dart arcs must lie on a common face and belong to distinct edges;
// circle arcs may be combined with anything (the circle is carried onto the
// target surface first, which the encoding performs silently).
inline DoodleMap apply_h2_plus(const DoodleMap& m, const ArcRef& a, const ArcRef& b) {
    detail::check_arc(m, a, "apply_h2_plus");
    detail::check_arc(m, b, "apply_h2_plus");
    const ArcRef& first = (a.is_circle() && !b.is_circle()) ? b : a;
    const ArcRef& second = (a.is_circle() && !b.is_circle()) ? a : b;

    const std::uint32_t n = m.crossing_count();
    auto P = [&](std::uint32_t s) { return make_dart(n, s); };
    auto Q = [&](std::uint32_t s) { return make_dart(n + 1, s); };
    std::vector<DartId> p = m.pairing();
    p.resize(p.size() + 8, kNoDart);
    std::vector<Component> table = m.components();
    auto link = [&](DartId x, DartId y) { p[x] = y; p[y] = x; };

    if (!first.is_circle() && !second.is_circle()) {
        const DartId d1 = first.dart, d2 = second.dart;
        if (d1 == d2 || m.pair(d1) == d2)
            throw Error("apply_h2_plus: arcs must be distinct edges");
        // Same face check.
        bool common = false;
        DartId e = d1;
        do {
            if (e == d2) { common = true; break; }
            e = face_next(m, e);
        } while (e != d1);
        if (!common) throw Error("apply_h2_plus: darts not on a common face");
        const DartId a1 = m.pair(d1), a2 = m.pair(d2);
        link(d1, P(2));
        link(P(0), Q(0));
        link(P(1), a2);
        link(P(3), Q(1));
        link(Q(2), a1);
        link(Q(3), d2);
    } else if (!first.is_circle() && second.is_circle()) {
        const DartId d = first.dart;
        const DartId old = m.pair(d);
        link(P(0), Q(0));
        link(P(2), Q(2));
        link(Q(3), d);
        link(Q(1), P(3));
        link(P(1), old);
        table[second.circle] = Component::strand(P(0));
    } else {
        if (first.circle == second.circle)
            throw Error("apply_h2_plus: need two distinct circles");
        link(P(0), Q(0));
        link(P(2), Q(2));
        link(P(3), Q(1));
        link(P(1), Q(3));
        table[first.circle] = Component::strand(P(0));
        table[second.circle] = Component::strand(P(1));
    }
    return DoodleMap::with_components(n + 2, std::move(p), std::move(table), m.mode());
}

enum class ReduceStrategy : std::uint8_t { first, random, greedy_bigon_first };

struct ReduceStep {
    ReductionSite::Kind kind;
    std::vector<std::uint32_t> crossings;  // ids at the time of the move
};

struct ReduceResult {
    DoodleMap map;
    std::vector<ReduceStep> trace;
};

// Applies collapse moves until no monogon or bigon remains.  The result is
// the unique minimal diagram of the doodle; its canonical code does not
// depend on the strategy.  Terminates: every step removes crossings.
inline ReduceResult reduce(const DoodleMap& m, ReduceStrategy strategy = ReduceStrategy::first,
                           std::uint64_t seed = 0) {
    ReduceResult r{m, {}};
    std::mt19937_64 rng(seed);
    for (;;) {
        auto sites = find_sites(r.map);
        if (sites.empty()) break;
        std::size_t pick = 0;
        switch (strategy) {
            case ReduceStrategy::first:
                break;
            case ReduceStrategy::random:
                pick = rng() % sites.size();
                break;
            case ReduceStrategy::greedy_bigon_first:
                for (std::size_t i = 0; i < sites.size(); ++i)
                    if (sites[i].kind == ReductionSite::Kind::bigon) {
                        pick = i;
                        break;
                    }
                break;
        }
        const ReductionSite& s = sites[pick];
        r.trace.push_back({s.kind, s.crossings()});
        r.map = s.kind == ReductionSite::Kind::monogon ? apply_h1_minus(r.map, s)
                                                       : apply_h2_minus(r.map, s);
    }
    return r;
}

inline DoodleMap reduced(const DoodleMap& m) { return reduce(m).map; }

// ---------------------------------------------------------------------------
// The +-1 construction.

struct PlusOneSite {
    std::vector<DartId> face;  // face orbit
    DartId e1 = kNoDart;       // two disjoint edges of the face, as the darts
    DartId e2 = kNoDart;       // of the face orbit
};

// Removes the interiors of the two edges and joins the dangling ends with
// two diagonal arcs crossing at a new point.  With face boundary order
// a1,b1,...,a2,b2 the new arcs run a1-X-a2 and b1-X-b2.
inline DoodleMap plus_one(const DoodleMap& m, const PlusOneSite& site) {
    detail::check_site_current(m, site.face, "plus_one");
    if (site.face.size() < 4) throw Error("plus_one: face degree < 4");
    bool has1 = false, has2 = false;
    for (DartId d : site.face) {
        has1 |= d == site.e1;
        has2 |= d == site.e2;
    }
    if (!has1 || !has2 || site.e1 == site.e2)
        throw Error("plus_one: edges not on the face");
    const DartId d1 = site.e1, d2 = site.e2;
    const DartId h1 = m.pair(d1), h2 = m.pair(d2);
    const std::uint32_t ends[4] = {owner(d1), owner(h1), owner(d2), owner(h2)};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (ends[i] == ends[j]) throw Error("plus_one: edges share an endpoint");

    const std::uint32_t n = m.crossing_count();
    std::vector<DartId> p = m.pairing();
    p.resize(p.size() + 4, kNoDart);
    auto link = [&](DartId x, DartId y) { p[x] = y; p[y] = x; };
    link(d1, make_dart(n, 0));
    link(h1, make_dart(n, 1));
    link(d2, make_dart(n, 2));
    link(h2, make_dart(n, 3));
    // Strands may merge, split or reverse; rebuild the table.
    return DoodleMap::from_pairing(n + 1, std::move(p), m.trivial_circle_count(), m.mode());
}

// Every way to apply plus_one to the map, for tests and search.
inline std::vector<PlusOneSite> all_plus_one_sites(const DoodleMap& m) {
    std::vector<PlusOneSite> sites;
    for (const Face& f : trace_faces(m)) {
        if (f.degree() < 4) continue;
        for (std::size_t i = 0; i < f.darts.size(); ++i) {
            for (std::size_t j = i + 1; j < f.darts.size(); ++j) {
                DartId d1 = f.darts[i], d2 = f.darts[j];
                std::uint32_t ends[4] = {owner(d1), owner(m.pair(d1)), owner(d2),
                                         owner(m.pair(d2))};
                bool ok = true;
                for (int u = 0; u < 4 && ok; ++u)
                    for (int v = u + 1; v < 4; ++v)
                        if (ends[u] == ends[v]) { ok = false; break; }
                if (ok) sites.push_back({f.darts, d1, d2});
            }
        }
    }
    return sites;
}

struct MinusOneSite {
    std::uint32_t crossing = 0;
    int smoothing = 0;  // 0: rejoin arms (0,1),(2,3); 1: rejoin (1,2),(3,0)
};

// Un-crosses X by the chosen smoothing.  Strand stubs are re-paired; loop
// chains that close up entirely through X become trivial circles.
inline DoodleMap apply_minus_one(const DoodleMap& m, const MinusOneSite& site) {
    const std::uint32_t X = site.crossing;
    if (X >= m.crossing_count()) throw Error("apply_minus_one: no such crossing");
    auto joint = [&](DartId d) {
        return make_dart(X, site.smoothing == 0 ? slot(d) ^ 1u : slot(d) ^ 3u);
    };
    auto at_x = [&](DartId d) { return owner(d) == X; };

    const std::uint32_t n = m.crossing_count();
    auto remap = [&](DartId d) {
        return owner(d) > X ? make_dart(owner(d) - 1, slot(d)) : d;
    };
    std::vector<DartId> p(static_cast<std::size_t>(n - 1) * 4, kNoDart);
    for (DartId d = 0; d < m.dart_count(); ++d) {
        if (at_x(d)) continue;
        DartId w = m.pair(d);
        while (at_x(w)) w = m.pair(joint(w));
        p[remap(d)] = remap(w);
    }
    // Count circles closing up through X: cycles of pair(joint(.)) that stay
    // on X's darts come in direction pairs.
    std::uint32_t cycles = 0;
    bool visited[4] = {false, false, false, false};
    for (std::uint32_t s = 0; s < 4; ++s) {
        if (visited[s]) continue;
        DartId cur = make_dart(X, s);
        bool cycle = true;
        std::vector<std::uint32_t> chain;
        for (;;) {
            if (visited[slot(cur)] && slot(cur) != s) { cycle = false; break; }
            chain.push_back(slot(cur));
            DartId nxt = m.pair(joint(cur));
            if (!at_x(nxt)) { cycle = false; break; }
            if (nxt == make_dart(X, s)) break;
            cur = nxt;
            if (chain.size() > 4) { cycle = false; break; }
        }
        for (auto cs : chain) visited[cs] = true;
        if (cycle) ++cycles;
    }
    return DoodleMap::from_pairing(n - 1, std::move(p),
                                   m.trivial_circle_count() + cycles / 2, m.mode());
}

// Valid -1 sites: un-crossing X must merge two distinct diagonal faces and
// the corresponding plus_one must reproduce the input (the round trip is
// the definitive test).  The diagonal-face degree conditions are a fast
// necessary filter.
inline std::vector<MinusOneSite> minus_one_sites(const DoodleMap& m) {
    std::vector<MinusOneSite> out;
    if (m.crossing_count() == 0) return out;
    auto faces = trace_faces(m);
    std::vector<std::uint32_t> face_of(m.dart_count(), 0);
    for (std::uint32_t i = 0; i < faces.size(); ++i)
        for (DartId d : faces[i].darts) face_of[d] = i;

    const CanonicalCode self = canonical_code(m, kUnorientedUnordered);

    for (std::uint32_t X = 0; X < m.crossing_count(); ++X) {
        const DartId x[4] = {make_dart(X, 0), make_dart(X, 1), make_dart(X, 2), make_dart(X, 3)};
        // Arms pairing back into X can never be +1 arcs.
        bool loop_arm = false;
        for (int s = 0; s < 4; ++s) loop_arm |= owner(m.pair(x[s])) == X;
        if (loop_arm) continue;
        {
            bool dup = false;
            for (int u = 0; u < 4; ++u)
                for (int v = u + 1; v < 4; ++v)
                    if (owner(m.pair(x[u])) == owner(m.pair(x[v]))) dup = true;
            if (dup) continue;
        }
        for (int choice = 0; choice < 2; ++choice) {
            // Faces beside the would-be restored edges, and the pair that
            // would merge.
            std::uint32_t s0 = face_of[x[choice]], s2 = face_of[x[choice + 2]];
            std::uint32_t m1 = face_of[x[(choice + 1) & 3]], m2 = face_of[x[(choice + 3) & 3]];
            if (m1 == m2) continue;
            if (s0 != s2) {
                if (faces[s0].degree() <= 3 || faces[s2].degree() <= 3) continue;
            } else {
                if (faces[s0].degree() <= 5) continue;
            }
            MinusOneSite cand{X, choice};
            DoodleMap D = apply_minus_one(m, cand);
            auto remap = [&](DartId d) {
                return owner(d) > X ? make_dart(owner(d) - 1, slot(d)) : d;
            };
            DartId nd1 = remap(m.pair(x[choice]));
            DartId nd2 = remap(m.pair(x[choice + 2]));
            // The merged face must contain both stub darts.
            std::vector<DartId> orbit;
            DartId e = nd1;
            bool found = false;
            do {
                orbit.push_back(e);
                if (e == nd2) found = true;
                e = face_next(D, e);
            } while (e != nd1);
            if (!found || orbit.size() < 4) continue;
            // Normalize orbit to least-dart start for the site contract.
            std::size_t lo = 0;
            for (std::size_t i = 1; i < orbit.size(); ++i)
                if (orbit[i] < orbit[lo]) lo = i;
            std::rotate(orbit.begin(), orbit.begin() + lo, orbit.end());
            PlusOneSite ps{orbit, nd1, nd2};
            try {
                DoodleMap back = plus_one(D, ps);
                if (canonical_code(back, kUnorientedUnordered) == self) out.push_back(cand);
            } catch (const Error&) {
            }
        }
    }
    return out;
}

// A minimal diagram without ancestors.
inline bool is_fundamental(const DoodleMap& m) {
    return find_sites(m).empty() && minus_one_sites(m).empty();
}

// ---------------------------------------------------------------------------
// Randomized expansion, for confluence experiments.

// Applies one random H1+/H2+ move.
inline DoodleMap random_expansion(const DoodleMap& m, std::mt19937_64& rng) {
    auto random_arc = [&]() -> ArcRef {
        std::vector<std::size_t> circles;
        for (std::size_t i = 0; i < m.components().size(); ++i)
            if (m.components()[i].is_circle()) circles.push_back(i);
        std::uint64_t total = m.dart_count() + circles.size();
        std::uint64_t k = rng() % total;
        if (k < m.dart_count()) return ArcRef::at_dart(static_cast<DartId>(k));
        return ArcRef::at_circle(circles[k - m.dart_count()]);
    };

    if (rng() % 2 == 0) {
        return apply_h1_plus(m, random_arc(), static_cast<int>(rng() % 2));
    }
    for (int attempt = 0; attempt < 32; ++attempt) {
        ArcRef a = random_arc(), b = random_arc();
        if (a.is_circle() && b.is_circle() && a.circle == b.circle) continue;
        if (!a.is_circle() && !b.is_circle()) {
            if (a.dart == b.dart || m.pair(a.dart) == b.dart) continue;
            bool common = false;
            DartId e = a.dart;
            do {
                if (e == b.dart) { common = true; break; }
                e = face_next(m, e);
            } while (e != a.dart);
            if (!common) continue;
        }
        return apply_h2_plus(m, a, b);
    }
    return apply_h1_plus(m, random_arc(), static_cast<int>(rng() % 2));
}

inline DoodleMap random_expansion_sequence(const DoodleMap& m, std::mt19937_64& rng,
                                           std::size_t length) {
    DoodleMap cur = m;
    for (std::size_t i = 0; i < length; ++i) cur = random_expansion(cur, rng);
    return cur;
}

}  // namespace doodle
