#include <catch2/catch_amalgamated.hpp>

#include "doodle/doodle.hpp"

using namespace doodle;

#ifndef DOODLE_FIXTURE_DIR
#define DOODLE_FIXTURE_DIR "data/fixtures"
#endif

namespace {
const std::string kDir = DOODLE_FIXTURE_DIR;
CanonicalCode code(const DoodleMap& m) { return canonical_code(m, kUnorientedUnordered); }
}  // namespace

TEST_CASE("every named fixture loads and parses") {
    for (const auto& name : fixture_names()) {
        auto doc = fixture(name, kDir);
        auto m = parse_pd(doc);
        CHECK(validate(m).empty());
    }
}

TEST_CASE("d3.1 is a minimal 3-crossing diagram appearing in census(3)") {
    auto m = parse_pd(fixture("d3.1", kDir));
    CHECK(m.crossing_count() == 3);
    CHECK(find_sites(m).empty());
    auto r = census(3, {}, {}, 2);
    REQUIRE(r.complete);
    bool found = false;
    for (const auto& rec : r.records) found |= rec.code == code(m).hex();
    CHECK(found);
}

TEST_CASE("the 19 d4 fixtures are minimal, one-component, pairwise unequal") {
    std::vector<std::string> codes;
    for (int i = 1; i <= 19; ++i) {
        auto m = parse_pd(fixture("d4." + std::to_string(i), kDir));
        CHECK(m.crossing_count() == 4);
        CHECK(m.components().size() == 1);
        CHECK(find_sites(m).empty());
        codes.push_back(code(m).hex());
    }
    for (std::size_t i = 0; i < codes.size(); ++i)
        for (std::size_t j = i + 1; j < codes.size(); ++j) CHECK(codes[i] != codes[j]);

    // They are exactly the one-component classes of census(4).
    CensusFilters f;
    f.components = 1;
    auto r = census(4, f, {}, 2);
    REQUIRE(r.complete);
    REQUIRE(r.records.size() == 19);
    std::sort(codes.begin(), codes.end());
    for (std::size_t i = 0; i < 19; ++i) CHECK(codes[i] == r.records[i].code);
}

TEST_CASE("pairwise doodle-inequality via the virtual equality API") {
    // Spot-check the full decision procedure on a few fixture pairs.
    auto a = fixture("d4.1", kDir), b = fixture("d4.2", kDir), c = fixture("d4.19", kDir);
    CHECK_FALSE(virtual_doodle_equal(a, b));
    CHECK_FALSE(virtual_doodle_equal(b, c));
    CHECK(virtual_doodle_equal(a, a));
}

TEST_CASE("kishino: non-trivial flat doodle of genus 2 with a 2-virtual drawing") {
    auto doc = fixture("kishino", kDir);
    CHECK(doc.virtual_count() == 2);
    CHECK(doc.real_count() == 4);
    auto m = parse_pd(doc);
    auto r = reduced(m);
    CHECK(r.crossing_count() >= 1);
    CHECK(genus(r).total <= 2);
    CHECK(genus(r).total == 2);
    CHECK_FALSE(is_trivial_doodle(m));
    CHECK_FALSE(virtual_doodle_equal(doc, planarize(trivial(1)).document));
}

TEST_CASE("fig19: 8 crossings, one component, torus") {
    auto m = parse_pd(fixture("fig19", kDir));
    auto r = reduced(m);
    CHECK(r.crossing_count() == 8);
    CHECK(r.components().size() == 1);
    CHECK(genus(r).total == 1);
    CHECK(find_sites(m).empty());
}

TEST_CASE("fig20: genus 1 with a 2-virtual-crossing drawing") {
    auto doc = fixture("fig20", kDir);
    CHECK(doc.virtual_count() == 2);
    auto m = parse_pd(doc);
    CHECK(m.crossing_count() == 2);
    CHECK(m.components().size() == 3);
    CHECK(find_sites(m).empty());
    CHECK(virtual_area_number(doc) == 1);
}

TEST_CASE("fixtures are detour-invariant under programmatic VR moves") {
    int counter = 0;
    for (const auto& name : {std::string("d4.1"), std::string("kishino"), std::string("fig20")}) {
        auto doc = fixture(name, kDir);
        auto kinked = vr1_insert(doc, doc.nodes.front().labels.front(), ++counter);
        CHECK(gauss_data_equal(doc, kinked));
        auto pushed =
            vr2_insert(doc, doc.nodes.front().labels[0], doc.nodes.front().labels[1], ++counter);
        CHECK(gauss_data_equal(doc, pushed));
    }
}

TEST_CASE("fixture round-trips through the planarizer") {
    for (const auto& name : fixture_names()) {
        auto m = parse_pd(fixture(name, kDir));
        auto r = planarize(m);
        CHECK(code(parse_pd(r.document)) == code(m));
    }
}
