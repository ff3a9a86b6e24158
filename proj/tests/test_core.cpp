#include <catch2/catch_amalgamated.hpp>

#include "doodle/faces.hpp"
#include "doodle/map.hpp"

using namespace doodle;

namespace {

// 1 crossing, loop edges on opposite slots: longitude and meridian of the
// torus.
DoodleMap hopf_map() {
    return DoodleMap::from_pairing(1, {2, 3, 0, 1});
}

// 1 crossing, loop edges on adjacent slots: a curl.
DoodleMap curl_map() {
    return DoodleMap::from_pairing(1, {1, 0, 3, 2});
}

}  // namespace

TEST_CASE("dart arithmetic") {
    DartId d = make_dart(5, 1);
    CHECK(owner(d) == 5);
    CHECK(slot(d) == 1);
    CHECK(slot(rot(d)) == 2);
    CHECK(slot(rot_back(d)) == 0);
    CHECK(slot(opposite(d)) == 3);
    CHECK(rot(make_dart(2, 3)) == make_dart(2, 0));
    CHECK(opposite(opposite(d)) == d);
}

TEST_CASE("validate accepts well-formed maps") {
    CHECK(validate(hopf_map()).empty());
    CHECK(validate(curl_map()).empty());
    CHECK(validate(DoodleMap()).empty());
    CHECK(validate(DoodleMap::from_pairing(0, {}, 3)).empty());
}

TEST_CASE("validate reports fixed points") {
    auto m = DoodleMap::with_components(1, {0, 3, 2, 1}, {Component::strand(0)});
    auto bad = validate(m);
    REQUIRE_FALSE(bad.empty());
    CHECK(bad.front().find("fixed point") != std::string::npos);
}

TEST_CASE("validate reports a broken involution") {
    auto m = DoodleMap::with_components(1, {2, 3, 1, 0}, {Component::strand(0)});
    CHECK_FALSE(validate(m).empty());
}

TEST_CASE("validate reports component table problems") {
    // Hopf has two strands; list only one.
    auto m = DoodleMap::with_components(1, {2, 3, 0, 1}, {Component::strand(0)});
    auto bad = validate(m);
    REQUIRE_FALSE(bad.empty());
    CHECK(bad.front().find("missing") != std::string::npos);
}

TEST_CASE("hopf: one square face on the torus") {
    auto m = hopf_map();
    CHECK(m.components().size() == 2);
    auto [faces, fv] = face_trace(m);
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].degree() == 4);
    CHECK(fv.vertices == 1);
    CHECK(fv.edges == 2);
    CHECK(fv.total_genus == 1);
    auto g = genus(m);
    REQUIRE(g.per_component.size() == 1);
    CHECK(g.per_component[0] == 1);
}

TEST_CASE("curl: two monogons and a repeated-corner bigon on the sphere") {
    auto m = curl_map();
    CHECK(m.components().size() == 1);
    auto [faces, fv] = face_trace(m);
    CHECK(faces.size() == 3);
    CHECK(fv.face_counts[1] == 2);
    CHECK(fv.face_counts[2] == 1);
    CHECK(fv.total_genus == 0);
}

TEST_CASE("trivial circles are genus-0 spheres") {
    auto m = DoodleMap::from_pairing(0, {}, 1);
    auto g = genus(m);
    REQUIRE(g.per_component.size() == 1);
    CHECK(g.per_component[0] == 0);
    CHECK(g.total == 0);
    CHECK(level(m) == -2);
}

TEST_CASE("disjoint union adds genus per component") {
    auto m = DoodleMap::disjoint_union(hopf_map(), curl_map());
    auto g = genus(m);
    REQUIRE(g.per_component.size() == 2);
    CHECK(g.per_component[0] == 1);
    CHECK(g.per_component[1] == 0);
    CHECK(g.total == 1);
}

TEST_CASE("face orbits partition darts and sum of degrees is 4V") {
    for (const auto& m : {hopf_map(), curl_map(), DoodleMap::disjoint_union(hopf_map(), hopf_map())}) {
        auto [faces, fv] = face_trace(m);
        std::size_t total = 0;
        std::vector<bool> seen(m.dart_count(), false);
        for (const auto& f : faces) {
            total += f.degree();
            for (DartId d : f.darts) {
                CHECK_FALSE(seen[d]);
                seen[d] = true;
            }
        }
        CHECK(total == 4u * m.crossing_count());
    }
}

TEST_CASE("mirror is an involution and preserves genus") {
    for (const auto& m : {hopf_map(), curl_map()}) {
        auto mm = mirror(mirror(m));
        CHECK(mm.pairing() == m.pairing());
        CHECK(genus(mirror(m)).total == genus(m).total);
    }
}

TEST_CASE("check_identities on hopf") {
    auto r = check_identities(hopf_map());
    REQUIRE(r.applicable);
    CHECK(r.i1.pass);
    CHECK(r.i2.pass);
    // 1 - 6 + 6 = 1 = F_4
    CHECK(r.i3.lhs == 1);
    CHECK(r.i3.rhs == 1);
    CHECK(r.i3.pass);
}

TEST_CASE("check_identities refuses non-minimal and disconnected input") {
    CHECK_FALSE(check_identities(curl_map()).applicable);
    CHECK_FALSE(check_identities(DoodleMap::from_pairing(0, {}, 1)).applicable);
    CHECK_FALSE(check_identities(DoodleMap::disjoint_union(hopf_map(), hopf_map())).applicable);
}

TEST_CASE("remove_component of hopf leaves a trivial circle") {
    auto m = hopf_map();
    auto r0 = remove_component(m, 0);
    CHECK(validate(r0).empty());
    CHECK(r0.crossing_count() == 0);
    CHECK(r0.trivial_circle_count() == 1);
    auto r1 = remove_component(m, 1);
    CHECK(r1.trivial_circle_count() == 1);
}

TEST_CASE("remove_component bounds check") {
    CHECK_THROWS_AS(remove_component(hopf_map(), 2), Error);
}

TEST_CASE("level: hopf sits above two circles") {
    CHECK(level(hopf_map()) == 1);   // 1 crossing - chi(torus)=0
    CHECK(level(curl_map()) == -1);  // 1 - 2
}
