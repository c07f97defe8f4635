#include "resgraph/calculus.hpp"

#include <algorithm>
#include <sstream>

#include "resgraph/definiteness.hpp"
#include "resgraph/error.hpp"

namespace resgraph {

namespace {

enum class Contractibility { ok, wrong_vertex, too_many_branches, self_tangency };

// Eligible: rational, self-intersection -1, at most two edge endpoints,
// and (if two) they lead to distinct neighbors. Contracting a branch
// point or a doubled edge would leave the simple-normal-crossings graph
// category, so those are refused rather than approximated.
Contractibility classify(const WeightedGraph& g, int i) {
    if (g.vertices[i].genus != 0 || g.vertices[i].weight != -1)
        return Contractibility::wrong_vertex;
    std::vector<int> ends;
    for (const Edge& e : g.edges) {
        if (e.u == i) ends.push_back(e.v);
        if (e.v == i) ends.push_back(e.u);
    }
    if (ends.size() > 2) return Contractibility::too_many_branches;
    if (ends.size() == 2 && ends[0] == ends[1]) return Contractibility::self_tangency;
    return Contractibility::ok;
}

std::optional<WeightedGraph> contract(const WeightedGraph& g, int i) {
    std::vector<int> ends;
    for (const Edge& e : g.edges) {
        if (e.u == i) ends.push_back(e.v);
        if (e.v == i) ends.push_back(e.u);
    }
    if (ends.empty()) return std::nullopt; // the graph was this single vertex

    std::vector<Vertex> vs;
    vs.reserve(g.vertices.size() - 1);
    std::vector<int> remap(g.vertices.size(), -1);
    for (int k = 0; k < g.vertex_count(); ++k) {
        if (k == i) continue;
        remap[k] = static_cast<int>(vs.size());
        vs.push_back(g.vertices[k]);
    }
    for (int n : ends) vs[remap[n]].weight += 1;

    std::vector<Edge> es;
    es.reserve(g.edges.size());
    for (const Edge& e : g.edges) {
        if (e.u == i || e.v == i) continue;
        es.push_back({remap[e.u], remap[e.v]});
    }
    if (ends.size() == 2) es.push_back({remap[ends[0]], remap[ends[1]]});
    return WeightedGraph::make(std::move(vs), std::move(es), g.name);
}

} // namespace

std::optional<WeightedGraph> blow_down(const WeightedGraph& g, std::string_view v) {
    const int i = g.require_index(v);
    switch (classify(g, i)) {
        case Contractibility::wrong_vertex:
        case Contractibility::too_many_branches:
            fail(Errc::not_contractible,
                 "vertex '" + std::string(v) +
                     "' is not a rational (-1)-vertex of valence at most 2");
        case Contractibility::self_tangency:
            fail(Errc::self_tangency,
                 "both edges at '" + std::string(v) +
                     "' attach to one neighbor; contraction would leave the graph category");
        case Contractibility::ok:
            break;
    }
    return contract(g, i);
}

BlowUp blow_up_free(const WeightedGraph& g, std::string_view v) {
    const int i = g.require_index(v);
    WeightedGraph out = g;
    const std::string id = fresh_id(g, "e");
    out.vertices[i].weight -= 1;
    out.vertices.push_back({id, 0, -1});
    out.edges.push_back({i, out.vertex_count() - 1});
    return {std::move(out), id};
}

BlowUp blow_up_edge(const WeightedGraph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.edge_count())
        fail(Errc::invalid_graph, "edge index " + std::to_string(edge_index) + " out of range");
    WeightedGraph out = g;
    const Edge e = out.edges[edge_index];
    const std::string id = fresh_id(g, "e");
    out.vertices[e.u].weight -= 1;
    out.vertices[e.v].weight -= 1;
    out.vertices.push_back({id, 0, -1});
    const int mid = out.vertex_count() - 1;
    out.edges[edge_index] = {e.u, mid};
    out.edges.push_back({mid, e.v});
    return {std::move(out), id};
}

namespace {

std::optional<int> first_eligible(const WeightedGraph& g) {
    for (int i = 0; i < g.vertex_count(); ++i)
        if (classify(g, i) == Contractibility::ok) return i;
    return std::nullopt;
}

bool has_blocked_unit_vertex(const WeightedGraph& g) {
    for (int i = 0; i < g.vertex_count(); ++i) {
        auto c = classify(g, i);
        if (c == Contractibility::too_many_branches || c == Contractibility::self_tangency)
            return true;
    }
    return false;
}

std::set<std::string> carrier_ids(const WeightedGraph& g, int i) {
    std::set<std::string> out;
    for (const Edge& e : g.edges) {
        if (e.u == i) out.insert(g.vertices[e.v].id);
        if (e.v == i) out.insert(g.vertices[e.u].id);
    }
    return out;
}

} // namespace

ContractionTrace minimalize(const WeightedGraph& g) {
    if (!is_negative_definite(g).negative_definite)
        fail(Errc::not_negative_definite,
             "minimalization requires a negative definite graph");

    ContractionTrace trace;
    std::optional<WeightedGraph> current = g;
    while (current) {
        auto i = first_eligible(*current);
        if (!i) {
            trace.representable = !has_blocked_unit_vertex(*current);
            break;
        }
        ContractionStep step;
        step.contracted = current->vertices[*i].id;
        step.carrier = carrier_ids(*current, *i);
        current = contract(*current, *i);
        step.snapshot = current;
        trace.steps.push_back(std::move(step));
    }
    trace.final_graph = current;

    // Resolve carriers to survivors: walk the steps backwards, splicing in
    // the already-resolved carrier of anything contracted later.
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        std::set<std::string> resolved;
        for (const std::string& id : it->carrier) {
            auto later = trace.carrier_map.find(id);
            if (later == trace.carrier_map.end()) {
                resolved.insert(id);
            } else {
                resolved.insert(later->second.begin(), later->second.end());
            }
        }
        trace.carrier_map[it->contracted] = std::move(resolved);
    }
    return trace;
}

std::set<std::string> essential_vertices(const WeightedGraph& g) {
    ContractionTrace trace = minimalize(g);
    if (!trace.representable)
        fail(Errc::undecidable,
             "a (-1) rational vertex of valence >= 3 (or with a doubled edge) remains; "
             "the minimal model is not representable as a weighted graph");
    std::set<std::string> out;
    if (trace.final_graph) {
        for (const Vertex& v : trace.final_graph->vertices) out.insert(v.id);
    }
    return out;
}

namespace {

struct ArrowSearch {
    TrivialArrowSet result;
    std::set<std::string> seen;

    static std::string state_key(const WeightedGraph& g,
                                 const std::map<std::string, std::set<std::string>>& carriers) {
        std::ostringstream os;
        for (const Vertex& v : g.vertices) os << v.id << ':' << v.weight << ';';
        std::vector<std::pair<std::string, std::string>> es;
        for (const Edge& e : g.edges) {
            auto a = g.vertices[e.u].id;
            auto b = g.vertices[e.v].id;
            if (b < a) std::swap(a, b);
            es.emplace_back(a, b);
        }
        std::sort(es.begin(), es.end());
        os << '|';
        for (const auto& [a, b] : es) os << a << '-' << b << ';';
        os << '|';
        for (const auto& [v, c] : carriers) {
            os << v << "->";
            for (const auto& u : c) os << u << ',';
            os << ';';
        }
        return os.str();
    }

    void record(const std::map<std::string, std::set<std::string>>& carriers,
                const std::vector<std::string>& order) {
        for (const auto& [head, carrier] : carriers) {
            for (const std::string& tail : carrier) {
                auto arrow = std::make_pair(tail, head);
                if (result.arrows.insert(arrow).second) result.witness[arrow] = order;
            }
        }
    }

    void explore(const std::optional<WeightedGraph>& g,
                 std::map<std::string, std::set<std::string>> carriers,
                 std::vector<std::string> order) {
        record(carriers, order);
        if (!g) return;
        if (!seen.insert(state_key(*g, carriers)).second) return;
        for (int i = 0; i < g->vertex_count(); ++i) {
            if (classify(*g, i) != Contractibility::ok) continue;
            const std::string id = g->vertices[i].id;
            const std::set<std::string> neighbors = carrier_ids(*g, i);
            auto next_carriers = carriers;
            for (auto& [v, c] : next_carriers) {
                if (c.erase(id) > 0) c.insert(neighbors.begin(), neighbors.end());
            }
            next_carriers[id] = neighbors;
            auto next_order = order;
            next_order.push_back(id);
            explore(contract(*g, i), std::move(next_carriers), std::move(next_order));
        }
    }
};

} // namespace

TrivialArrowSet trivial_arrows(const WeightedGraph& g, int search_limit) {
    if (g.vertex_count() > search_limit)
        fail(Errc::search_limit,
             "graph has " + std::to_string(g.vertex_count()) +
                 " vertices, above the contraction-order search limit of " +
                 std::to_string(search_limit));
    if (!is_negative_definite(g).negative_definite)
        fail(Errc::not_negative_definite,
             "the contraction calculus requires a negative definite graph");
    ArrowSearch search;
    search.explore(g, {}, {});
    return std::move(search.result);
}

WeightPadding pad_weight_decrease(const WeightedGraph& reference, const WeightedGraph& decreased,
                                  const std::map<std::string, std::string>& matching) {
    const int n = reference.vertex_count();
    if (decreased.vertex_count() != n || static_cast<int>(matching.size()) != n)
        fail(Errc::not_a_weight_decrease, "matching is not a bijection between the vertex sets");

    std::vector<int> image(n, -1);
    std::set<int> hit;
    for (const auto& [from, to] : matching) {
        auto i = reference.index_of(from);
        auto j = decreased.index_of(to);
        if (!i || !j)
            fail(Errc::not_a_weight_decrease, "matching names unknown vertex '" + from + "' or '" + to + "'");
        image[*i] = *j;
        hit.insert(*j);
    }
    if (static_cast<int>(hit.size()) != n)
        fail(Errc::not_a_weight_decrease, "matching is not injective");

    for (int i = 0; i < n; ++i) {
        const Vertex& a = reference.vertices[i];
        const Vertex& b = decreased.vertices[image[i]];
        if (a.genus != b.genus)
            fail(Errc::not_a_weight_decrease, "genus differs at vertex '" + a.id + "'");
        if (b.weight > a.weight)
            fail(Errc::not_a_weight_decrease, "weight increased at vertex '" + a.id + "'");
        for (int j = 0; j < n; ++j) {
            if (reference.multiplicity(i, j) != decreased.multiplicity(image[i], image[j]))
                fail(Errc::not_a_weight_decrease,
                     "underlying graphs differ between '" + a.id + "' and '" +
                         reference.vertices[j].id + "'");
        }
    }

    WeightPadding out{decreased, {}};
    for (int i = 0; i < n; ++i) {
        const int units = reference.vertices[i].weight - decreased.vertices[image[i]].weight;
        for (int k = 0; k < units; ++k) {
            const std::string id = fresh_id(out.graph, "e");
            out.graph.vertices.push_back({id, 0, -1});
            out.graph.edges.push_back({image[i], out.graph.vertex_count() - 1});
            out.added.push_back(id);
        }
    }
    return out;
}

} // namespace resgraph
