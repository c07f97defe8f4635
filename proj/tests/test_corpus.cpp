#include <doctest.h>

#include "resgraph/calculus.hpp"
#include "resgraph/corpus.hpp"
#include "resgraph/definiteness.hpp"
#include "resgraph/error.hpp"
#include "resgraph/symmetry.hpp"
#include "resgraph/topology.hpp"

using namespace resgraph;

TEST_CASE("the required entries exist") {
    for (const char* name : {"A1", "A8", "D4", "E6", "E7", "E8", "nonmin-313", "chain-232",
                             "genus1-star", "double-edge-35", "triangle"}) {
        CHECK(corpus_get(name).name == name);
    }
    CHECK(corpus_get("A2").graph.vertex_count() == 2);
    CHECK(corpus_get("E8").graph.vertex_count() == 8);
    CHECK(corpus_get("nonmin-313").graph.vertices[1].weight == -1);
    CHECK_THROWS_AS(corpus_get("no-such-entry"), Error);
}

TEST_CASE("every entry except the triangle is negative definite") {
    for (const CorpusEntry& entry : corpus_entries()) {
        const bool expected = entry.name != "triangle";
        CHECK_MESSAGE(is_negative_definite(entry.graph).negative_definite == expected,
                      "unexpected verdict on ", entry.name);
    }
}

TEST_CASE("expected-value tables agree with live computation") {
    for (const CorpusEntry& entry : corpus_entries()) {
        for (const auto& [key, value] : entry.expected) {
            if (key == "negative_definite") {
                CHECK(is_negative_definite(entry.graph).negative_definite ==
                      (value == "true"));
            } else if (key == "autos_order") {
                CHECK_MESSAGE(std::to_string(automorphisms(entry.graph).size()) == value,
                              "autos_order mismatch on ", entry.name);
            } else if (key == "essential_count") {
                CHECK(std::to_string(essential_vertices(entry.graph).size()) == value);
            } else if (key == "trivial_arrows") {
                CHECK(std::to_string(trivial_arrows(entry.graph).arrows.size()) == value);
            } else if (key == "simple_loops") {
                CHECK(std::to_string(enumerate_simple_loops(entry.graph).size()) == value);
            } else if (key == "girth") {
                const auto girth = girth_nontrivial(entry.graph);
                CHECK((girth ? std::to_string(*girth) : "infinite") == value);
            } else if (key == "simple") {
                CHECK(is_simple(entry.graph) == (value == "true"));
            } else {
                FAIL("unknown expected key '", key, "' on ", entry.name);
            }
        }
    }
}

TEST_CASE("random generator: deterministic, bounded, negative definite") {
    const WeightedGraph tiny = random_negative_definite(0, 1);
    CHECK(tiny.vertex_count() == 1);
    CHECK(tiny.vertices[0].weight <= -2);

    for (std::uint64_t seed : {std::uint64_t{1}, std::uint64_t{7}, std::uint64_t{42}}) {
        const WeightedGraph a = random_negative_definite(seed, 6);
        const WeightedGraph b = random_negative_definite(seed, 6);
        CHECK(same_graph(a, b));
    }

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const WeightedGraph g = random_negative_definite(seed, 6);
        CHECK(g.vertex_count() <= 6);
        CHECK(is_negative_definite(g).negative_definite);
    }
}
