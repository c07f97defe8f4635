#include <doctest.h>

#include "resgraph/corpus.hpp"
#include "resgraph/covering.hpp"
#include "resgraph/error.hpp"
#include "resgraph/symmetry.hpp"
#include "support/oracles.hpp"

using namespace resgraph;

namespace {

const WeightedGraph& triangle() { return corpus_get("triangle").graph; }

Loop triangle_loop() { return enumerate_simple_loops(triangle()).at(0); }

} // namespace

TEST_CASE("the degree-2 cyclic cover of the triangle is the hexagon") {
    const GraphCovering c = cyclic_cover_along_loop(triangle(), triangle_loop(), 2);
    CHECK(c.degree == 2);
    CHECK(c.total.vertex_count() == 6);
    CHECK(c.total.edge_count() == 6);
    CHECK(girth_nontrivial(c.total) == 6);
    CHECK(verify_covering(c).ok);

    const GraphCovering c3 = cyclic_cover_along_loop(triangle(), triangle_loop(), 3);
    CHECK(c3.total.vertex_count() == 9);
    CHECK(girth_nontrivial(c3.total) == 9);
    CHECK(verify_covering(c3).ok);
}

TEST_CASE("every base vertex has exactly degree preimages") {
    const GraphCovering c = cyclic_cover_along_loop(triangle(), triangle_loop(), 4);
    for (const Vertex& b : triangle().vertices) {
        int count = 0;
        for (const auto& [total_id, base_id] : c.vertex_map)
            if (base_id == b.id) ++count;
        CHECK(count == 4);
    }
}

TEST_CASE("identity covering absorbs in fiber products") {
    const GraphCovering c = cyclic_cover_along_loop(triangle(), triangle_loop(), 2);
    const GraphCovering p = fiber_product(c, identity_covering(triangle()));
    CHECK(p.degree == c.degree);
    CHECK(verify_covering(p).ok);
    CHECK(are_isomorphic(p.total, c.total).has_value());
}

TEST_CASE("fiber product of two degree-2 covers has degree 4") {
    const GraphCovering c = cyclic_cover_along_loop(triangle(), triangle_loop(), 2);
    const GraphCovering p = fiber_product(c, c);
    CHECK(p.degree == 4);
    CHECK(p.total.vertex_count() == 12);
    CHECK(verify_covering(p).ok);
    // the self-product splits; each component is itself a covering
    const auto components = connected_components(p.total);
    CHECK(components.size() == 2);
    for (const auto& comp : components) {
        const GraphCovering piece = extract_component(p, comp.front());
        CHECK(verify_covering(piece).ok);
        CHECK(piece.degree == 2);
    }
}

TEST_CASE("fiber products require one common base") {
    const GraphCovering c = cyclic_cover_along_loop(triangle(), triangle_loop(), 2);
    const WeightedGraph& other = corpus_get("cycle3-w3").graph;
    const GraphCovering d = cyclic_cover_along_loop(other, enumerate_simple_loops(other).at(0), 2);
    CHECK_THROWS_AS(fiber_product(c, d), Error);
}

TEST_CASE("girth cover of a tree is the identity") {
    const GraphCovering c = girth_cover(corpus_get("E8").graph, 5);
    CHECK(c.degree == 1);
    CHECK(same_graph(c.total, corpus_get("E8").graph));
    CHECK(verify_covering(c).ok);
}

TEST_CASE("girth cover pushes the girth above the bound") {
    for (int m : {2, 3, 5}) {
        const GraphCovering c = girth_cover(triangle(), m);
        CHECK(verify_covering(c).ok);
        const auto girth = girth_nontrivial(c.total);
        REQUIRE(girth.has_value());
        CHECK(*girth >= m);
    }
    const GraphCovering full = girth_cover_full(triangle(), 5);
    CHECK(full.degree == 5); // one simple loop: no product needed
}

TEST_CASE("girth cover over two-loop graphs multiplies degrees") {
    const WeightedGraph& g = corpus_get("dumbbell").graph;
    const GraphCovering full = girth_cover_full(g, 2);
    CHECK(full.degree == 4); // two simple loops, degree 2 each
    CHECK(verify_covering(full).ok);
    const GraphCovering comp = girth_cover(g, 2);
    CHECK(verify_covering(comp).ok);
    const auto girth = girth_nontrivial(comp.total);
    REQUIRE(girth.has_value());
    CHECK(*girth >= 2);
}

TEST_CASE("first Betti number scales with the degree on connected coverings") {
    auto b1 = [](const WeightedGraph& g) { return first_betti(g); };
    for (int m : {2, 3, 5}) {
        const GraphCovering c = cyclic_cover_along_loop(triangle(), triangle_loop(), m);
        REQUIRE(is_connected(c.total));
        CHECK(b1(c.total) - 1 == m * (b1(c.base) - 1));
    }
    for (const char* name : {"dumbbell", "twin-triangles"}) {
        const WeightedGraph& g = corpus_get(name).graph;
        const GraphCovering comp = girth_cover(g, 3);
        REQUIRE(is_connected(comp.total));
        CHECK(b1(comp.total) - 1 == comp.degree * (b1(comp.base) - 1));
    }
}

TEST_CASE("verify_covering pinpoints a broken star bijection") {
    // a fold: the 4-path zig-zags over the single base edge, so interior
    // vertices carry two edges with one image
    const WeightedGraph& a2 = corpus_get("A2").graph;
    GraphCovering bogus;
    bogus.base = a2;
    bogus.degree = 2;
    bogus.total = WeightedGraph::make(
        {{"a1@1", 0, -2}, {"a2@1", 0, -2}, {"a1@2", 0, -2}, {"a2@2", 0, -2}},
        {{0, 1}, {1, 2}, {2, 3}});
    bogus.vertex_map = {{"a1@1", "a1"}, {"a2@1", "a2"}, {"a1@2", "a1"}, {"a2@2", "a2"}};
    bogus.edge_map = {0, 0, 0};
    const CoveringCheck check = verify_covering(bogus);
    CHECK_FALSE(check.ok);
    CHECK(check.violation.find("star bijection") != std::string::npos);
}

TEST_CASE("verify_covering flags non-uniform fibers") {
    const WeightedGraph& a2 = corpus_get("A2").graph;
    GraphCovering bogus = identity_covering(a2);
    bogus.degree = 2;
    const CoveringCheck check = verify_covering(bogus);
    CHECK_FALSE(check.ok);
    CHECK(check.violation.find("fiber size") != std::string::npos);
}
