#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace resgraph {

/// One exceptional curve: an opaque label, a genus weight and a
/// self-intersection weight.
struct Vertex {
    std::string id;
    int genus = 0;
    int weight = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Undirected edge, stored as indices into the owning graph's vertex list.
/// Parallel edges are repeated entries; input order is preserved.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Dual graph of a good resolution: doubly weighted, connected, without
/// self-loops, parallel edges allowed. Construct through make() (or
/// make_from_ids) so the invariants are enforced. make_disconnected skips
/// only the connectivity check; covering totals built by fiber products
/// may have several components and are the one legitimate use.
struct WeightedGraph {
    std::string name;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    const Vertex& vertex(int i) const { return vertices[i]; }
    std::optional<int> index_of(std::string_view id) const;
    /// index_of or an invalid_graph error naming the id.
    int require_index(std::string_view id) const;

    /// Number of edge endpoints at i (parallel edges counted).
    int degree(int i) const;
    /// Number of edges joining i and j.
    int multiplicity(int i, int j) const;
    /// Sorted distinct neighbor indices of i.
    std::vector<int> neighbors(int i) const;

    static WeightedGraph make(std::vector<Vertex> vertices, std::vector<Edge> edges,
                              std::string name = "");
    static WeightedGraph make_from_ids(
        std::vector<Vertex> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges,
        std::string name = "");
    static WeightedGraph make_disconnected(std::vector<Vertex> vertices, std::vector<Edge> edges,
                                           std::string name = "");
};

/// Structural equality ignoring the name field.
bool same_graph(const WeightedGraph& a, const WeightedGraph& b);

bool is_connected(const WeightedGraph& g);

/// True iff no pair of vertices is joined by two or more edges.
bool is_simple(const WeightedGraph& g);

/// Vertex indices grouped by connected component, components ordered by
/// their smallest vertex index.
std::vector<std::vector<int>> connected_components(const WeightedGraph& g);

/// Edges - vertices + components: the rank of the cycle space.
int first_betti(const WeightedGraph& g);

/// Smallest "<prefix><k>" (k >= 1) not already used as a vertex id in g.
std::string fresh_id(const WeightedGraph& g, const std::string& prefix);

} // namespace resgraph
