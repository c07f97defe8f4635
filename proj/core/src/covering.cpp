#include "resgraph/covering.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "resgraph/error.hpp"

namespace resgraph {

GraphCovering identity_covering(const WeightedGraph& g) {
    GraphCovering c{g, g, {}, {}, 1};
    for (const Vertex& v : g.vertices) c.vertex_map[v.id] = v.id;
    c.edge_map.resize(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) c.edge_map[i] = i;
    return c;
}

GraphCovering cyclic_cover_along_loop(const WeightedGraph& g, const Loop& l, int degree) {
    if (!is_simple(g)) fail(Errc::not_simple, "cyclic covers require a simple base graph");
    if (!is_simple_loop(g, l))
        fail(Errc::not_simple_loop, "cyclic covers are built along a simple loop of the base");
    if (degree < 2) fail(Errc::invalid_graph, "covering degree must be at least 2");

    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int r = l.length();
    const int rewired = l.edges[r - 1]; // joins l.vertices[r-1] back to l.vertices[0]

    GraphCovering c;
    c.base = g;
    c.degree = degree;

    std::vector<Vertex> vs;
    vs.reserve(static_cast<size_t>(n) * degree);
    for (int j = 0; j < degree; ++j) {
        for (int i = 0; i < n; ++i) {
            const Vertex& v = g.vertices[i];
            std::string id = v.id + "@" + std::to_string(j + 1);
            c.vertex_map[id] = v.id;
            vs.push_back({std::move(id), v.genus, v.weight});
        }
    }

    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(m) * degree);
    c.edge_map.reserve(static_cast<size_t>(m) * degree);
    for (int j = 0; j < degree; ++j) {
        for (int e = 0; e < m; ++e) {
            if (e == rewired) {
                const int from = j * n + l.vertices[r - 1];
                const int to = ((j + 1) % degree) * n + l.vertices[0];
                es.push_back({from, to});
            } else {
                es.push_back({j * n + g.edges[e].u, j * n + g.edges[e].v});
            }
            c.edge_map.push_back(e);
        }
    }

    c.total = WeightedGraph::make(std::move(vs), std::move(es), "");
    return c;
}

GraphCovering fiber_product(const GraphCovering& a, const GraphCovering& b) {
    if (!same_graph(a.base, b.base))
        fail(Errc::base_mismatch, "fiber products require coverings of one base graph");
    const WeightedGraph& base = a.base;

    GraphCovering c;
    c.base = base;
    c.degree = a.degree * b.degree;

    std::map<std::pair<int, int>, int> pair_index;
    std::vector<Vertex> vs;
    for (int xi = 0; xi < a.total.vertex_count(); ++xi) {
        const Vertex& x = a.total.vertices[xi];
        const std::string& bx = a.vertex_map.at(x.id);
        for (int yi = 0; yi < b.total.vertex_count(); ++yi) {
            const Vertex& y = b.total.vertices[yi];
            if (b.vertex_map.at(y.id) != bx) continue;
            std::string id = "(" + x.id + "|" + y.id + ")";
            c.vertex_map[id] = bx;
            pair_index[{xi, yi}] = static_cast<int>(vs.size());
            vs.push_back({std::move(id), x.genus, x.weight});
        }
    }

    // orient a total edge to run p -> q like its base edge
    auto oriented = [](const GraphCovering& cov, int edge_index, const std::string& p_id) {
        const Edge& e = cov.total.edges[edge_index];
        const std::string& iu = cov.total.vertices[e.u].id;
        if (cov.vertex_map.at(iu) == p_id) return std::make_pair(e.u, e.v);
        return std::make_pair(e.v, e.u);
    };

    std::vector<Edge> es;
    for (int da = 0; da < a.total.edge_count(); ++da) {
        const int be = a.edge_map[da];
        const std::string& p_id = base.vertices[base.edges[be].u].id;
        const auto [xp, xq] = oriented(a, da, p_id);
        for (int db = 0; db < b.total.edge_count(); ++db) {
            if (b.edge_map[db] != be) continue;
            const auto [yp, yq] = oriented(b, db, p_id);
            es.push_back({pair_index.at({xp, yp}), pair_index.at({xq, yq})});
            c.edge_map.push_back(be);
        }
    }

    c.total = WeightedGraph::make_disconnected(std::move(vs), std::move(es), "");
    return c;
}

GraphCovering extract_component(const GraphCovering& c, int total_vertex_index) {
    const auto components = connected_components(c.total);
    const std::vector<int>* chosen = nullptr;
    for (const auto& comp : components) {
        if (std::binary_search(comp.begin(), comp.end(), total_vertex_index)) {
            chosen = &comp;
            break;
        }
    }
    if (!chosen) fail(Errc::invalid_graph, "component seed vertex out of range");

    std::vector<int> remap(c.total.vertex_count(), -1);
    std::vector<Vertex> vs;
    vs.reserve(chosen->size());
    for (int idx : *chosen) {
        remap[idx] = static_cast<int>(vs.size());
        vs.push_back(c.total.vertices[idx]);
    }

    GraphCovering out;
    out.base = c.base;
    std::vector<Edge> es;
    for (int e = 0; e < c.total.edge_count(); ++e) {
        const Edge& edge = c.total.edges[e];
        if (remap[edge.u] < 0) continue; // both endpoints share a component
        es.push_back({remap[edge.u], remap[edge.v]});
        out.edge_map.push_back(c.edge_map[e]);
    }
    out.total = WeightedGraph::make(std::move(vs), std::move(es), "");
    for (const Vertex& v : out.total.vertices) out.vertex_map[v.id] = c.vertex_map.at(v.id);

    const std::string& first_base_id = c.base.vertices[0].id;
    out.degree = 0;
    for (const auto& [total_id, base_id] : out.vertex_map)
        if (base_id == first_base_id) ++out.degree;
    return out;
}

GraphCovering girth_cover_full(const WeightedGraph& g, int min_girth) {
    if (!is_simple(g)) fail(Errc::not_simple, "girth covers require a simple base graph");
    if (min_girth < 2) fail(Errc::invalid_graph, "girth bound must be at least 2");
    const std::vector<Loop> loops = enumerate_simple_loops(g);
    if (loops.empty()) return identity_covering(g);
    GraphCovering out = cyclic_cover_along_loop(g, loops[0], min_girth);
    for (size_t i = 1; i < loops.size(); ++i)
        out = fiber_product(out, cyclic_cover_along_loop(g, loops[i], min_girth));
    return out;
}

GraphCovering girth_cover(const WeightedGraph& g, int min_girth) {
    GraphCovering component = extract_component(girth_cover_full(g, min_girth), 0);
    const CoveringCheck check = verify_covering(component);
    if (!check.ok)
        fail(Errc::postcondition, "girth cover is not a covering: " + check.violation);
    const std::optional<int> girth = girth_nontrivial(component.total);
    if (girth && *girth < min_girth)
        fail(Errc::postcondition,
             "girth cover has a non-trivial loop with " + std::to_string(*girth) +
                 " vertices, below the requested " + std::to_string(min_girth));
    return component;
}

CoveringCheck verify_covering(const GraphCovering& c) {
    auto violated = [](std::string why) { return CoveringCheck{false, std::move(why)}; };

    for (const Vertex& x : c.total.vertices) {
        auto it = c.vertex_map.find(x.id);
        if (it == c.vertex_map.end())
            return violated("vertex_map misses total vertex '" + x.id + "'");
        auto bi = c.base.index_of(it->second);
        if (!bi) return violated("vertex_map sends '" + x.id + "' to an unknown base vertex");
        const Vertex& b = c.base.vertices[*bi];
        if (b.weight != x.weight)
            return violated("weight not preserved at total vertex '" + x.id + "'");
        if (b.genus != x.genus)
            return violated("genus not preserved at total vertex '" + x.id + "'");
    }

    if (static_cast<int>(c.edge_map.size()) != c.total.edge_count())
        return violated("edge_map length differs from the total edge count");
    for (int d = 0; d < c.total.edge_count(); ++d) {
        const int be = c.edge_map[d];
        if (be < 0 || be >= c.base.edge_count())
            return violated("edge_map entry " + std::to_string(d) + " out of range");
        const Edge& t = c.total.edges[d];
        const Edge& b = c.base.edges[be];
        const std::string& iu = c.vertex_map.at(c.total.vertices[t.u].id);
        const std::string& iv = c.vertex_map.at(c.total.vertices[t.v].id);
        const std::string& bu = c.base.vertices[b.u].id;
        const std::string& bv = c.base.vertices[b.v].id;
        const bool compatible = (iu == bu && iv == bv) || (iu == bv && iv == bu);
        if (!compatible)
            return violated("edge endpoints incompatible at total edge " + std::to_string(d));
    }

    for (int x = 0; x < c.total.vertex_count(); ++x) {
        std::vector<int> images;
        for (int d = 0; d < c.total.edge_count(); ++d) {
            if (c.total.edges[d].u == x || c.total.edges[d].v == x)
                images.push_back(c.edge_map[d]);
        }
        const int bx = *c.base.index_of(c.vertex_map.at(c.total.vertices[x].id));
        std::vector<int> star;
        for (int e = 0; e < c.base.edge_count(); ++e) {
            if (c.base.edges[e].u == bx || c.base.edges[e].v == bx) star.push_back(e);
        }
        std::sort(images.begin(), images.end());
        // a bijection onto the base star: same edges, none taken twice
        if (images != star ||
            std::adjacent_find(images.begin(), images.end()) != images.end())
            return violated("star bijection violated at total vertex '" +
                            c.total.vertices[x].id + "'");
    }

    std::map<std::string, int> fiber;
    for (const auto& [total_id, base_id] : c.vertex_map) fiber[base_id] += 1;
    for (const Vertex& b : c.base.vertices) {
        if (fiber[b.id] != c.degree)
            return violated("fiber size at base vertex '" + b.id + "' is " +
                            std::to_string(fiber[b.id]) + ", expected " +
                            std::to_string(c.degree));
    }

    return {};
}

} // namespace resgraph
