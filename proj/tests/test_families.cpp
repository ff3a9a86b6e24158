#include <catch2/catch_amalgamated.hpp>

#include "doodle/equality.hpp"
#include "doodle/families.hpp"
#include "doodle/moves.hpp"

using namespace doodle;

namespace {
std::uint32_t face_count(const FaceVector& fv, std::size_t degree) {
    auto it = fv.face_counts.find(degree);
    return it == fv.face_counts.end() ? 0 : it->second;
}
}  // namespace

TEST_CASE("borromean family: faces, genus, minimality") {
    for (std::uint32_t n = 3; n <= 12; ++n) {
        auto m = borromean(n);
        REQUIRE(validate(m).empty());
        CHECK(m.crossing_count() == 2 * n);
        auto [faces, fv] = face_trace(m);
        CHECK(fv.total_genus == 0);
        CHECK(is_connected(m));
        // 2n triangles plus two n-gons.
        std::uint32_t tri = 2 * n + (n == 3 ? 2 : 0);
        CHECK(face_count(fv, 3) == tri);
        if (n != 3) CHECK(face_count(fv, n) == 2);
        CHECK(find_sites(m).empty());
        CHECK(m.components().size() == (n % 3 == 0 ? 3 : 1));
        CHECK(check_identities(m).all_pass());
    }
    CHECK_THROWS_AS(borromean(2), Error);
}

TEST_CASE("gyro and ortho: faces, genus, component counts") {
    for (std::uint32_t n = 3; n <= 10; ++n) {
        for (bool g : {true, false}) {
            auto m = g ? gyro(n) : ortho(n);
            REQUIRE(validate(m).empty());
            CHECK(m.crossing_count() == 4 * n);
            auto [faces, fv] = face_trace(m);
            CHECK(fv.total_genus == 0);
            CHECK(is_connected(m));
            std::uint32_t tri = 2 * n + (n == 3 ? 2 : 0);
            std::uint32_t quad = 2 * n + (n == 4 ? 2 : 0);
            CHECK(face_count(fv, 3) == tri);
            CHECK(face_count(fv, 4) == quad);
            if (n > 4) CHECK(face_count(fv, n) == 2);
            CHECK(find_sites(m).empty());
            CHECK(check_identities(m).all_pass());
        }
        CHECK(gyro(n).components().size() == (n % 3 == 0 ? 4u : 2u));
        CHECK(ortho(n).components().size() == n + 1);
    }
}

TEST_CASE("gyro and ortho are different doodles") {
    CHECK_FALSE(doodle_equal(gyro(3), ortho(3)));
}

TEST_CASE("removing any gyro(3) component leaves the Borromean doodle") {
    auto m = gyro(3);
    REQUIRE(m.components().size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        auto r = remove_component(m, i);
        CHECK(validate(r).empty());
        CHECK(doodle_equal(r, borromean(3)));
    }
}

TEST_CASE("removing ortho(3)'s central 2n-gon leaves the trivial 3-circle doodle") {
    auto m = ortho(3);
    auto idx = central_component_index(m, 3);
    auto r = remove_component(m, idx);
    CHECK(validate(r).empty());
    CHECK(doodle_equal(r, trivial(3)));
    auto reducedr = reduced(r);
    CHECK(reducedr.crossing_count() == 0);
    CHECK(reducedr.trivial_circle_count() == 3);
}

TEST_CASE("removing a non-central ortho(3) component is not trivial") {
    auto m = ortho(3);
    auto central = central_component_index(m, 3);
    bool any_nontrivial = false;
    for (std::size_t i = 0; i < m.components().size(); ++i) {
        if (i == central) continue;
        any_nontrivial |= !is_trivial_doodle(remove_component(m, i));
    }
    CHECK(any_nontrivial);
}

TEST_CASE("remove_component keeps maps valid on all family maps up to n=10") {
    for (std::uint32_t n = 3; n <= 10; ++n) {
        for (auto m : {borromean(n), gyro(n), ortho(n)}) {
            for (std::size_t i = 0; i < m.components().size(); ++i)
                CHECK(validate(remove_component(m, i)).empty());
        }
    }
}

TEST_CASE("hopf and trivial constructors") {
    CHECK(genus(hopf()).total == 1);
    CHECK(trivial(3).trivial_circle_count() == 3);
    CHECK(validate(trivial(0)).empty());
}

TEST_CASE("fixture: unknown name is an error") {
    CHECK_THROWS_AS(fixture("nope", "."), Error);
}
