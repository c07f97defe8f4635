#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resgraph/graph.hpp"

namespace resgraph {

/// Cyclic walk: edge edges[i] joins vertices[i] to vertices[(i+1) % r].
/// Vertices and edges are indices into the host graph. A loop may repeat
/// vertices and edges; a simple loop repeats neither.
struct Loop {
    std::vector<int> vertices;
    std::vector<int> edges;

    int length() const { return static_cast<int>(vertices.size()); }

    friend bool operator==(const Loop&, const Loop&) = default;
};

/// Throws when the sequence is not a closed walk of g.
void validate_loop(const WeightedGraph& g, const Loop& l);

bool is_simple_loop(const WeightedGraph& g, const Loop& l);

/// Lexicographically least vertex sequence over all rotations and the two
/// orientations. Only meaningful in simple graphs (edges are recomputed
/// from consecutive vertices).
Loop canonical_form(const WeightedGraph& g, const Loop& l);

struct Subdivision {
    std::string u, v;        // endpoints of the subdivided edge
    std::string new_vertex;  // the inserted (-1) vertex
};

struct SimplifyResult {
    WeightedGraph graph;
    std::vector<Subdivision> log;
};

/// Subdivide one edge of each parallel family until the graph is simple.
/// Preserves the negative-definiteness verdict and, under the identity
/// correspondence on surviving ids, the essential-vertex set.
SimplifyResult simplify_to_simple(const WeightedGraph& g);

/// All simple loops of a simple graph, duplicate-free, each in canonical
/// form, ordered by (length, vertex sequence). Empty iff g is a tree.
std::vector<Loop> enumerate_simple_loops(const WeightedGraph& g);

/// True iff cancelling immediate backtracks reduces the cyclic edge word
/// to nothing, i.e. the loop is null-homotopic in the realization.
bool is_trivial_loop(const WeightedGraph& g, const Loop& l);

/// Containment of a simple loop s in a loop l: for some alignment of s
/// (rotation and orientation) there are cyclically increasing positions in
/// l traversing s's edges in order, such that the detour between
/// consecutive selected edges is a null-homotopic closed walk, and no
/// contiguous null-homotopic closed sub-walk of l covers all selected
/// positions. The last clause rules out selections sitting inside a
/// collapsible part of l (in particular, trivial loops contain nothing);
/// the wrap-around remainder is otherwise unconstrained, so a loop winding
/// k times around s contains it.
bool loop_contains(const WeightedGraph& g, const Loop& l, const Loop& s);

/// Minimum vertex count over simple loops; nullopt ("infinite") for trees.
/// Every non-trivial loop contains a simple loop, so this bounds the
/// length of every non-trivial loop from below.
std::optional<int> girth_nontrivial(const WeightedGraph& g);

} // namespace resgraph
