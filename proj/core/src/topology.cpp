#include "resgraph/topology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "resgraph/calculus.hpp"
#include "resgraph/error.hpp"

namespace resgraph {

void validate_loop(const WeightedGraph& g, const Loop& l) {
    const int r = l.length();
    if (r == 0 || static_cast<int>(l.edges.size()) != r)
        fail(Errc::invalid_graph, "loop must alternate r vertices with r edges, r >= 1");
    for (int i = 0; i < r; ++i) {
        const int vi = l.vertices[i];
        const int vj = l.vertices[(i + 1) % r];
        if (vi < 0 || vi >= g.vertex_count())
            fail(Errc::invalid_graph, "loop vertex index out of range");
        const int ei = l.edges[i];
        if (ei < 0 || ei >= g.edge_count())
            fail(Errc::invalid_graph, "loop edge index out of range");
        const Edge& e = g.edges[ei];
        const bool joins = (e.u == vi && e.v == vj) || (e.u == vj && e.v == vi);
        if (!joins)
            fail(Errc::invalid_graph,
                 "loop edge " + std::to_string(ei) + " does not join the stated vertices");
    }
}

bool is_simple_loop(const WeightedGraph& g, const Loop& l) {
    validate_loop(g, l);
    std::set<int> vs(l.vertices.begin(), l.vertices.end());
    std::set<int> es(l.edges.begin(), l.edges.end());
    return vs.size() == l.vertices.size() && es.size() == l.edges.size();
}

namespace {

Loop rotate(const Loop& l, int k) {
    const int r = l.length();
    Loop out;
    out.vertices.reserve(r);
    out.edges.reserve(r);
    for (int i = 0; i < r; ++i) {
        out.vertices.push_back(l.vertices[(i + k) % r]);
        out.edges.push_back(l.edges[(i + k) % r]);
    }
    return out;
}

Loop reverse(const Loop& l) {
    const int r = l.length();
    Loop out;
    out.vertices.reserve(r);
    out.edges.reserve(r);
    // visits v0, v_{r-1}, ..., v_1; edge i of the reversal is e_{r-1-i}
    for (int i = 0; i < r; ++i) {
        out.vertices.push_back(l.vertices[(r - i) % r]);
        out.edges.push_back(l.edges[r - 1 - i]);
    }
    return out;
}

bool loop_less(const Loop& a, const Loop& b) {
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.edges < b.edges;
}

} // namespace

Loop canonical_form(const WeightedGraph& g, const Loop& l) {
    validate_loop(g, l);
    const int r = l.length();
    Loop best = l;
    const Loop rev = reverse(l);
    for (int k = 0; k < r; ++k) {
        for (const Loop* base : {&l, &rev}) {
            Loop candidate = rotate(*base, k);
            if (loop_less(candidate, best)) best = std::move(candidate);
        }
    }
    return best;
}

SimplifyResult simplify_to_simple(const WeightedGraph& g) {
    SimplifyResult out{g, {}};
    for (;;) {
        int doubled = -1;
        for (int i = 0; i < out.graph.edge_count() && doubled < 0; ++i) {
            const Edge& e = out.graph.edges[i];
            if (out.graph.multiplicity(e.u, e.v) >= 2) doubled = i;
        }
        if (doubled < 0) break;
        const Edge e = out.graph.edges[doubled];
        Subdivision s{out.graph.vertices[e.u].id, out.graph.vertices[e.v].id, ""};
        BlowUp b = blow_up_edge(out.graph, doubled);
        s.new_vertex = b.new_vertex;
        out.graph = std::move(b.graph);
        out.log.push_back(std::move(s));
    }
    return out;
}

namespace {

void require_simple(const WeightedGraph& g) {
    if (!is_simple(g))
        fail(Errc::not_simple, "operation requires a graph without parallel edges");
}

std::vector<std::vector<std::pair<int, int>>> adjacency(const WeightedGraph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges[i];
        adj[e.u].push_back({e.v, i});
        adj[e.v].push_back({e.u, i});
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

} // namespace

std::vector<Loop> enumerate_simple_loops(const WeightedGraph& g) {
    require_simple(g);
    const auto adj = adjacency(g);
    const int n = g.vertex_count();

    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::vector<Loop> out;

    std::vector<int> path_v, path_e;
    std::vector<bool> on_path(n, false);

    auto dfs = [&](auto&& self, int root, int current) -> void {
        for (const auto& [w, ei] : adj[current]) {
            if (w == root && path_v.size() >= 3) {
                // each cycle found once per orientation; keep one direction
                if (path_v[1] < path_v.back()) {
                    Loop l;
                    l.vertices = path_v;
                    l.edges = path_e;
                    l.edges.push_back(ei);
                    l = canonical_form(g, l);
                    if (seen.insert({l.vertices, l.edges}).second) out.push_back(std::move(l));
                }
            }
            if (w > root && !on_path[w]) {
                on_path[w] = true;
                path_v.push_back(w);
                path_e.push_back(ei);
                self(self, root, w);
                path_e.pop_back();
                path_v.pop_back();
                on_path[w] = false;
            }
        }
    };

    for (int s = 0; s < n; ++s) {
        path_v = {s};
        path_e.clear();
        std::fill(on_path.begin(), on_path.end(), false);
        on_path[s] = true;
        dfs(dfs, s, s);
    }

    std::sort(out.begin(), out.end(), [](const Loop& a, const Loop& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return loop_less(a, b);
    });
    return out;
}

namespace {

// Free reduction of a linear edge word. In a walk, two consecutive uses of
// one edge are always inverse traversals, so cancelling equal neighbors is
// exactly free reduction.
std::vector<int> reduce_word(const std::vector<int>& word) {
    std::vector<int> stack;
    for (int e : word) {
        if (!stack.empty() && stack.back() == e) {
            stack.pop_back();
        } else {
            stack.push_back(e);
        }
    }
    return stack;
}

bool reduces_to_nothing(const std::vector<int>& word) { return reduce_word(word).empty(); }

} // namespace

bool is_trivial_loop(const WeightedGraph& g, const Loop& l) {
    require_simple(g);
    validate_loop(g, l);
    std::vector<int> word = reduce_word(l.edges);
    // cyclic reduction
    while (word.size() >= 2 && word.front() == word.back()) {
        word.erase(word.begin());
        word.pop_back();
    }
    return word.empty();
}

namespace {

// Closed contiguous sub-walks of l that reduce to nothing, as (start, len)
// position intervals. Used by the last containment clause.
std::vector<std::pair<int, int>> trivial_intervals(const WeightedGraph&, const Loop& l) {
    const int r = l.length();
    std::vector<std::pair<int, int>> out;
    for (int start = 0; start < r; ++start) {
        std::vector<int> word;
        for (int len = 1; len <= r; ++len) {
            word.push_back(l.edges[(start + len - 1) % r]);
            const int end_vertex = l.vertices[(start + len) % r];
            if (end_vertex != l.vertices[start]) continue; // not closed
            if (reduces_to_nothing(word)) out.push_back({start, len});
            if (len == r) break; // the whole loop; longer windows repeat it
        }
    }
    return out;
}

bool interval_covers(const std::pair<int, int>& interval, const std::vector<int>& positions,
                     int r) {
    for (int q : positions) {
        const int offset = ((q - interval.first) % r + r) % r;
        if (offset >= interval.second) return false;
    }
    return true;
}

} // namespace

bool loop_contains(const WeightedGraph& g, const Loop& l, const Loop& s) {
    require_simple(g);
    validate_loop(g, l);
    if (!is_simple_loop(g, s))
        fail(Errc::not_simple_loop, "containment is defined against a simple loop");

    const int r = l.length();
    const int k = s.length();
    if (k > r) return false;

    const auto trivials = trivial_intervals(g, l);

    // directed traversal of l: edge i goes l.vertices[i] -> l.vertices[i+1]
    auto l_from = [&](int i) { return l.vertices[i % r]; };
    auto l_to = [&](int i) { return l.vertices[(i + 1) % r]; };
    auto l_edge = [&](int i) { return l.edges[i % r]; };

    // detour between consecutive selected absolute positions (exclusive)
    auto gap_trivial = [&](int a, int b) {
        std::vector<int> word;
        for (int t = a + 1; t < b; ++t) word.push_back(l_edge(t));
        return reduces_to_nothing(word);
    };

    for (const Loop& variant : {s, reverse(s)}) {
        for (int rot = 0; rot < k; ++rot) {
            const Loop a = rotate(variant, rot);
            // a.edges[i] traverses a.vertices[i] -> a.vertices[i+1]
            for (int anchor = 0; anchor < r; ++anchor) {
                if (l_edge(anchor) != a.edges[0] || l_from(anchor) != a.vertices[0] ||
                    l_to(anchor) != a.vertices[1 % k])
                    continue;
                std::vector<int> chosen{anchor};
                auto extend = [&](auto&& self, int i, int prev) -> bool {
                    if (i == k) {
                        std::vector<int> absolute;
                        absolute.reserve(k);
                        for (int q : chosen) absolute.push_back(q % r);
                        for (const auto& interval : trivials)
                            if (interval_covers(interval, absolute, r)) return false;
                        return true;
                    }
                    for (int pos = prev + 1; pos < anchor + r; ++pos) {
                        if (l_edge(pos) != a.edges[i] || l_from(pos) != a.vertices[i] ||
                            l_to(pos) != a.vertices[(i + 1) % k])
                            continue;
                        if (!gap_trivial(prev, pos)) continue;
                        chosen.push_back(pos);
                        if (self(self, i + 1, pos)) return true;
                        chosen.pop_back();
                    }
                    return false;
                };
                if (extend(extend, 1, anchor)) return true;
            }
        }
    }
    return false;
}

std::optional<int> girth_nontrivial(const WeightedGraph& g) {
    require_simple(g);
    const auto adj = adjacency(g);
    const int n = g.vertex_count();
    std::optional<int> best;

    // shortest cycle through each edge: delete it, BFS between its ends
    for (int skip = 0; skip < g.edge_count(); ++skip) {
        const Edge& e = g.edges[skip];
        std::vector<int> dist(n, -1);
        std::deque<int> queue{e.u};
        dist[e.u] = 0;
        while (!queue.empty() && dist[e.v] < 0) {
            const int x = queue.front();
            queue.pop_front();
            for (const auto& [y, ei] : adj[x]) {
                if (ei == skip || dist[y] >= 0) continue;
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
        if (dist[e.v] >= 0) {
            const int cycle = dist[e.v] + 1;
            if (!best || cycle < *best) best = cycle;
        }
    }
    return best;
}

} // namespace resgraph
