#include <catch2/catch_amalgamated.hpp>

#include "doodle/enumeration.hpp"
#include "doodle/families.hpp"
#include "doodle/virtualization.hpp"

using namespace doodle;

namespace {

CanonicalCode code(const DoodleMap& m) { return canonical_code(m, kUnorientedUnordered); }

// Treat virtual nodes as real vertices: the drawing combinatorics itself.
PdDocument promote_virtual(const PdDocument& doc) {
    PdDocument out = doc;
    for (auto& n : out.nodes)
        if (n.kind == PdNode::Kind::virtual_) n.kind = PdNode::Kind::real;
    return out;
}

// The emitted drawing must be genus 0 component-by-component.
void check_planar_drawing(const PdDocument& doc) {
    auto drawing = parse_pd(promote_virtual(doc));
    for (int g : genus(drawing).per_component) CHECK(g == 0);
}

}  // namespace

TEST_CASE("planarize B_3: no virtual crossings needed") {
    auto r = planarize(borromean(3));
    CHECK(r.virtual_crossings == 0);
    CHECK(code(parse_pd(r.document)) == code(borromean(3)));
    check_planar_drawing(r.document);
}

TEST_CASE("planar families never need virtual crossings") {
    for (const auto& m : {borromean(4), borromean(5), gyro(3), ortho(3), ortho(4)}) {
        auto r = planarize(m);
        CHECK(r.virtual_crossings == 0);
        CHECK(code(parse_pd(r.document)) == code(m));
        check_planar_drawing(r.document);
    }
}

TEST_CASE("planarize hopf: at least one virtual crossing, round trip holds") {
    auto r = planarize(hopf());
    CHECK(r.virtual_crossings >= 1);
    CHECK(code(parse_pd(r.document)) == code(hopf()));
    check_planar_drawing(r.document);
    CHECK(virtual_area_number(r.document) == 1);
}

TEST_CASE("planarize trivial circle emits O") {
    auto r = planarize(trivial(1));
    REQUIRE(r.document.nodes.size() == 1);
    CHECK(r.document.nodes[0].kind == PdNode::Kind::loop);
    auto back = parse_pd(r.document);
    CHECK(back.trivial_circle_count() == 1);
}

TEST_CASE("round trip across the small census, all genera") {
    for (std::uint32_t n = 1; n <= 4; ++n) {
        auto c = census(n, {}, {}, 2);
        REQUIRE(c.complete);
        for (const auto& rec : c.records) {
            auto m = rec.map();
            auto r = planarize(m);
            CHECK(code(parse_pd(r.document)) == code(m));
            check_planar_drawing(r.document);
            CHECK(virtual_area_number(r.document) == rec.genus);
            if (rec.genus == 0) CHECK(r.virtual_crossings == 0);
        }
    }
}

TEST_CASE("round trip for disjoint unions and circles") {
    auto m = DoodleMap::disjoint_union(DoodleMap::disjoint_union(hopf(), borromean(3)),
                                       trivial(2));
    auto r = planarize(m);
    CHECK(code(parse_pd(r.document)) == code(m));
    check_planar_drawing(r.document);
}

TEST_CASE("different seeds give detour-equivalent planarizations") {
    for (const auto& m : {hopf(), borromean(3), borromean(4)}) {
        auto r0 = planarize(m, 0);
        for (std::uint64_t s = 1; s <= 3; ++s) {
            auto rs = planarize(m, s);
            CHECK(gauss_data_equal(r0.document, rs.document));
        }
    }
    // A genus-2 one-component example from the census.
    CensusFilters f;
    f.genus = 2;
    f.components = 1;
    auto c = census(4, f);
    REQUIRE(c.complete);
    REQUIRE_FALSE(c.records.empty());
    auto m = c.records.front().map();
    for (std::uint64_t s = 1; s <= 3; ++s)
        CHECK(gauss_data_equal(planarize(m, 0).document, planarize(m, s).document));
}

TEST_CASE("gauss_data_equal is detour-blind but kink-sensitive") {
    auto doc = planarize(borromean(3)).document;
    auto kinked = vr1_insert(doc, doc.nodes.front().labels.front(), 1);
    CHECK(gauss_data_equal(doc, kinked));
    auto pushed = vr2_insert(doc, doc.nodes.front().labels[0], doc.nodes.front().labels[1], 2);
    CHECK(gauss_data_equal(doc, pushed));
    // A real curl changes the Gauss data even though the doodle is the same.
    auto curl = PdDocument::parse("X(a,a,b,b)\n");
    auto circle = PdDocument::parse("O(a)\n");
    CHECK_FALSE(gauss_data_equal(curl, circle));
    CHECK(virtual_doodle_equal(curl, circle));
}

TEST_CASE("virtual_doodle_equal decides the full move equivalence") {
    auto b3 = planarize(borromean(3)).document;
    // Insert a real kink: the strand loops once with a real crossing.
    PdDocument kinked = b3;
    std::string target = kinked.nodes.front().labels.front();
    bool first = true;
    for (auto& node : kinked.nodes) {
        for (auto& l : node.labels)
            if (l == target && first) {
                l = "kk";
                first = false;
                break;
            }
        if (!first) break;
    }
    PdNode curl;
    curl.kind = PdNode::Kind::real;
    curl.labels = {"kk", "ll", "ll", target};
    kinked.nodes.push_back(curl);
    CHECK_FALSE(gauss_data_equal(b3, kinked));
    CHECK(virtual_doodle_equal(b3, kinked));
    CHECK_FALSE(virtual_doodle_equal(b3, planarize(borromean(4)).document));
}

TEST_CASE("va of a planar doodle's drawing is 0 even with gratuitous kinks") {
    auto doc = planarize(borromean(3)).document;
    auto kinked = vr1_insert(doc, doc.nodes.front().labels.front(), 7);
    CHECK(virtual_area_number(kinked) == 0);
}
