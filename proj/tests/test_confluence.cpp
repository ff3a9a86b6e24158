#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "doodle/confluence.hpp"
#include "doodle/families.hpp"

using namespace doodle;

namespace {
LeveledGraph chain3() {
    LeveledGraph g;
    auto a = g.add_node("A", 2), b = g.add_node("B", 1), c = g.add_node("C", 0);
    g.add_edge(a, b);
    g.add_edge(b, c);
    return g;
}

LeveledGraph diamond() {
    LeveledGraph g;
    auto a = g.add_node("A", 2);
    auto x = g.add_node("X", 1), y = g.add_node("Y", 1);
    auto v = g.add_node("V", 0);
    g.add_edge(a, x);
    g.add_edge(a, y);
    g.add_edge(x, v);
    g.add_edge(y, v);
    return g;
}
}  // namespace

TEST_CASE("fdpp holds for integer-leveled graphs") {
    CHECK(check_fdpp(chain3()));
    CHECK(check_fdpp(diamond()));
    CHECK(check_fdpp(LeveledGraph{}));
}

TEST_CASE("edges may not join equal levels") {
    LeveledGraph g;
    auto a = g.add_node("a", 1), b = g.add_node("b", 1);
    CHECK_THROWS_AS(g.add_edge(a, b), Error);
}

TEST_CASE("roots and descend") {
    auto g = chain3();
    auto r = roots(g);
    REQUIRE(r.size() == 1);
    CHECK(g.node(r[0]).name == "C");
    CHECK(g.node(descend(g, *g.find("A"))).name == "C");
    CHECK(g.node(descend(g, *g.find("A"), DescendStrategy::random, 3)).name == "C");

    auto d = diamond();
    auto dr = roots(d);
    REQUIRE(dr.size() == 1);
    CHECK(d.node(dr[0]).name == "V");
}

TEST_CASE("urp and ldc on the diamond and the counterexample") {
    CHECK(check_urp(diamond()));
    CHECK(check_ldc(diamond()));
    auto bad = non_ldc_counterexample();
    CHECK(roots(bad).size() == 2);
    CHECK_FALSE(check_urp(bad));
    CHECK_FALSE(check_ldc(bad));
}

TEST_CASE("ldc implies urp on random graphs") {
    std::mt19937_64 rng(99);
    int ldc_hits = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_leveled_graph(rng);
        REQUIRE(check_fdpp(g));
        if (check_ldc(g)) {
            ++ldc_hits;
            CHECK(check_urp(g));
        }
    }
    CHECK(ldc_hits > 0);  // the property was actually exercised
}

TEST_CASE("serialization round-trips") {
    auto g = diamond();
    auto text = g.serialize();
    auto h = LeveledGraph::deserialize(text);
    CHECK(h.size() == g.size());
    CHECK(h.serialize() == text);
    CHECK_THROWS_AS(LeveledGraph::deserialize("edge a b\n"), ParseError);
}

TEST_CASE("doodle subgraph of a curl is a two-node chain") {
    auto curl = DoodleMap::from_pairing(1, {1, 0, 3, 2});
    auto sub = doodle_subgraph(curl);
    CHECK(sub.graph.size() == 2);
    auto r = roots(sub.graph);
    REQUIRE(r.size() == 1);
    CHECK(sub.maps[r[0]].crossing_count() == 0);
    CHECK(sub.maps[r[0]].trivial_circle_count() == 1);
}

TEST_CASE("doodle subgraphs from random expansions have a unique root") {
    std::mt19937_64 rng(2718);
    for (const auto& seed : {trivial(1), hopf(), borromean(3)}) {
        for (int trial = 0; trial < 5; ++trial) {
            auto expanded = random_expansion_sequence(seed, rng, 3);
            auto sub = doodle_subgraph(expanded);
            CHECK(check_fdpp(sub.graph));
            auto r = roots(sub.graph);
            REQUIRE(r.size() == 1);
            CHECK(canonical_code(sub.maps[r[0]], kUnorientedUnordered) ==
                  canonical_code(seed, kUnorientedUnordered));
            CHECK(check_urp(sub.graph));
        }
    }
}

TEST_CASE("two circles crossing in a double bigon descend to two circles") {
    auto m = apply_h2_plus(trivial(2), ArcRef::at_circle(0), ArcRef::at_circle(1));
    auto sub = doodle_subgraph(m);
    auto r = roots(sub.graph);
    REQUIRE(r.size() == 1);
    CHECK(sub.maps[r[0]].crossing_count() == 0);
    CHECK(sub.maps[r[0]].trivial_circle_count() == 2);
}

TEST_CASE("check_ldc reports an exceeded search budget") {
    std::mt19937_64 rng(4);
    auto g = random_leveled_graph(rng, 12, 0.8);
    CHECK_THROWS_AS(check_ldc(g, 1), Error);
}

TEST_CASE("doodle subgraph respects the node budget") {
    std::mt19937_64 rng(1);
    auto big = random_expansion_sequence(borromean(3), rng, 6);
    CHECK_THROWS_AS(doodle_subgraph(big, 2), Error);
}
