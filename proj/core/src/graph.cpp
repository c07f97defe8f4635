#include "resgraph/graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "resgraph/error.hpp"

namespace resgraph {

std::optional<int> WeightedGraph::index_of(std::string_view id) const {
    for (int i = 0; i < vertex_count(); ++i) {
        if (vertices[i].id == id) return i;
    }
    return std::nullopt;
}

int WeightedGraph::require_index(std::string_view id) const {
    auto i = index_of(id);
    if (!i) fail(Errc::invalid_graph, "no vertex with id '" + std::string(id) + "'");
    return *i;
}

int WeightedGraph::degree(int i) const {
    int d = 0;
    for (const Edge& e : edges) {
        if (e.u == i) ++d;
        if (e.v == i) ++d;
    }
    return d;
}

int WeightedGraph::multiplicity(int i, int j) const {
    if (i == j) return 0;
    int m = 0;
    for (const Edge& e : edges) {
        if ((e.u == i && e.v == j) || (e.u == j && e.v == i)) ++m;
    }
    return m;
}

std::vector<int> WeightedGraph::neighbors(int i) const {
    std::set<int> out;
    for (const Edge& e : edges) {
        if (e.u == i) out.insert(e.v);
        if (e.v == i) out.insert(e.u);
    }
    return {out.begin(), out.end()};
}

namespace {

void validate_shape(const WeightedGraph& g) {
    if (g.vertices.empty()) fail(Errc::invalid_graph, "empty graph: at least one vertex required");
    std::unordered_set<std::string> seen;
    for (const Vertex& v : g.vertices) {
        if (v.id.empty()) fail(Errc::invalid_graph, "empty vertex id");
        if (!seen.insert(v.id).second)
            fail(Errc::invalid_graph, "duplicate id '" + v.id + "'");
        if (v.genus < 0)
            fail(Errc::invalid_graph, "negative genus on vertex '" + v.id + "'");
    }
    const int n = g.vertex_count();
    for (const Edge& e : g.edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            fail(Errc::invalid_graph, "dangling edge: endpoint index out of range");
        if (e.u == e.v)
            fail(Errc::invalid_graph, "self-loop at vertex '" + g.vertices[e.u].id + "'");
    }
}

} // namespace

WeightedGraph WeightedGraph::make(std::vector<Vertex> vertices, std::vector<Edge> edges,
                                  std::string name) {
    WeightedGraph g{std::move(name), std::move(vertices), std::move(edges)};
    validate_shape(g);
    if (!is_connected(g)) fail(Errc::invalid_graph, "disconnected graph");
    return g;
}

WeightedGraph WeightedGraph::make_from_ids(
    std::vector<Vertex> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges, std::string name) {
    WeightedGraph lookup{"", vertices, {}};
    std::vector<Edge> idx;
    idx.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = lookup.index_of(a);
        auto ib = lookup.index_of(b);
        if (!ia || !ib)
            fail(Errc::invalid_graph,
                 "dangling edge [" + a + ", " + b + "]: unknown vertex id");
        idx.push_back({*ia, *ib});
    }
    return make(std::move(vertices), std::move(idx), std::move(name));
}

WeightedGraph WeightedGraph::make_disconnected(std::vector<Vertex> vertices,
                                               std::vector<Edge> edges, std::string name) {
    WeightedGraph g{std::move(name), std::move(vertices), std::move(edges)};
    validate_shape(g);
    return g;
}

bool same_graph(const WeightedGraph& a, const WeightedGraph& b) {
    return a.vertices == b.vertices && a.edges == b.edges;
}

std::vector<std::vector<int>> connected_components(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        std::vector<int> members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (int y : adj[x]) {
                if (comp[y] < 0) {
                    comp[y] = comp[s];
                    stack.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const WeightedGraph& g) {
    return connected_components(g).size() == 1;
}

bool is_simple(const WeightedGraph& g) {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges) {
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert({key.first, key.second}).second) return false;
    }
    return true;
}

int first_betti(const WeightedGraph& g) {
    return g.edge_count() - g.vertex_count() +
           static_cast<int>(connected_components(g).size());
}

std::string fresh_id(const WeightedGraph& g, const std::string& prefix) {
    for (int k = 1;; ++k) {
        std::string candidate = prefix + std::to_string(k);
        if (!g.index_of(candidate)) return candidate;
    }
}

} // namespace resgraph
