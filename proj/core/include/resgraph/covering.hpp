#pragma once

#include <map>
#include <string>
#include <vector>

#include "resgraph/graph.hpp"
#include "resgraph/topology.hpp"

namespace resgraph {

/// Map of graphs whose realization (balls for vertices, intervals for
/// edges) is a finite topological covering: genus and weight are
/// preserved, edges map endpoint-compatibly, the edge map restricts to a
/// bijection on every vertex star, and every base vertex has exactly
/// `degree` preimages. The total graph of a fiber product may be
/// disconnected; every other constructor here yields a connected total.
struct GraphCovering {
    WeightedGraph total;
    WeightedGraph base;
    std::map<std::string, std::string> vertex_map; // total id -> base id
    std::vector<int> edge_map;                     // total edge index -> base edge index
    int degree = 1;
};

GraphCovering identity_covering(const WeightedGraph& g);

/// Degree-m cover built from m disjoint copies of g with the copies of the
/// loop's last edge rewired cyclically across copies: copy j's last edge
/// runs from the loop's last vertex in copy j to its first vertex in copy
/// j+1 (wrapping around). Requires a simple graph and one of its simple
/// loops; the total is connected.
GraphCovering cyclic_cover_along_loop(const WeightedGraph& g, const Loop& l, int degree);

/// Covering whose total vertices are pairs with equal base image and whose
/// edges pair up over each base edge. Degree multiplies; the total may be
/// disconnected. Both factors must cover the same base graph.
GraphCovering fiber_product(const GraphCovering& a, const GraphCovering& b);

/// The connected component of the given total vertex, as a covering in its
/// own right (components of coverings are coverings).
GraphCovering extract_component(const GraphCovering& c, int total_vertex_index = 0);

/// Iterated fiber product of one degree-m cyclic cover per simple loop;
/// the identity covering when g is a tree. Pre-extraction: degree is
/// m^(number of simple loops) and the total may be disconnected.
GraphCovering girth_cover_full(const WeightedGraph& g, int min_girth);

/// Connected component of girth_cover_full with the run-time guarantee
/// that every non-trivial loop of the total has at least min_girth
/// vertices; throws postcondition if the check ever failed.
GraphCovering girth_cover(const WeightedGraph& g, int min_girth);

struct CoveringCheck {
    bool ok = true;
    std::string violation; // first violated clause, empty when ok
};

/// Checks every covering invariant and reports the first violation.
CoveringCheck verify_covering(const GraphCovering& c);

} // namespace resgraph
