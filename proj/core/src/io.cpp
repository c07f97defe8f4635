#include "resgraph/io.hpp"

#include <json.hpp>

#include "resgraph/error.hpp"

namespace resgraph {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(Errc::parse_error, "malformed JSON document");
    return doc;
}

void reject_unknown_fields(const json& object, std::initializer_list<const char*> allowed,
                           const std::string& where) {
    for (const auto& [key, _] : object.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (key == a) known = true;
        if (!known) fail(Errc::parse_error, where + ": unknown field '" + key + "'");
    }
}

int require_int(const json& object, const char* field, const std::string& where) {
    if (!object.contains(field) || !object[field].is_number_integer())
        fail(Errc::parse_error, where + ": field '" + std::string(field) + "' must be an integer");
    return object[field].get<int>();
}

std::string require_string(const json& object, const char* field, const std::string& where) {
    if (!object.contains(field) || !object[field].is_string())
        fail(Errc::parse_error, where + ": field '" + std::string(field) + "' must be a string");
    return object[field].get<std::string>();
}

struct GraphParts {
    std::string name;
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
};

GraphParts graph_parts(const json& doc, const std::string& where) {
    if (!doc.is_object()) fail(Errc::parse_error, where + ": expected an object");
    reject_unknown_fields(doc, {"name", "vertices", "edges"}, where);
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        fail(Errc::parse_error, where + ": field 'vertices' must be an array");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        fail(Errc::parse_error, where + ": field 'edges' must be an array");

    GraphParts parts;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) fail(Errc::parse_error, where + ": 'name' must be a string");
        parts.name = doc["name"].get<std::string>();
    }

    int vi = 0;
    for (const json& v : doc["vertices"]) {
        const std::string at = where + ": vertices[" + std::to_string(vi++) + "]";
        if (!v.is_object()) fail(Errc::parse_error, at + " must be an object");
        reject_unknown_fields(v, {"id", "genus", "weight"}, at);
        Vertex vertex;
        vertex.id = require_string(v, "id", at);
        vertex.genus = require_int(v, "genus", at);
        vertex.weight = require_int(v, "weight", at);
        parts.vertices.push_back(std::move(vertex));
    }

    int ei = 0;
    for (const json& e : doc["edges"]) {
        const std::string at = where + ": edges[" + std::to_string(ei++) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            fail(Errc::parse_error, at + " must be a pair of vertex ids");
        parts.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return parts;
}

std::vector<Edge> index_edges(const std::vector<Vertex>& vertices,
                              const std::vector<std::pair<std::string, std::string>>& edges,
                              const std::string& where) {
    const WeightedGraph lookup{"", vertices, {}};
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto u = lookup.index_of(a);
        auto v = lookup.index_of(b);
        if (!u || !v)
            fail(Errc::invalid_graph, where + ": dangling edge [" + a + ", " + b + "]");
        out.push_back({*u, *v});
    }
    return out;
}

json graph_to_json(const WeightedGraph& g) {
    json doc = json::object();
    if (!g.name.empty()) doc["name"] = g.name;
    doc["vertices"] = json::array();
    for (const Vertex& v : g.vertices)
        doc["vertices"].push_back({{"id", v.id}, {"genus", v.genus}, {"weight", v.weight}});
    doc["edges"] = json::array();
    for (const Edge& e : g.edges)
        doc["edges"].push_back({g.vertices[e.u].id, g.vertices[e.v].id});
    return doc;
}

} // namespace

WeightedGraph parse_graph(const std::string& text) {
    GraphParts parts = graph_parts(parse_json(text), "graph");
    return WeightedGraph::make_from_ids(std::move(parts.vertices), parts.edges,
                                        std::move(parts.name));
}

std::string serialize_graph(const WeightedGraph& g, int indent) {
    return graph_to_json(g).dump(indent);
}

GraphCovering parse_covering(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) fail(Errc::parse_error, "covering: expected an object");
    reject_unknown_fields(doc, {"base", "total", "vertex_map", "edge_map", "degree"}, "covering");
    for (const char* field : {"base", "total", "vertex_map", "edge_map", "degree"})
        if (!doc.contains(field))
            fail(Errc::parse_error, "covering: missing field '" + std::string(field) + "'");

    GraphCovering c;
    {
        GraphParts parts = graph_parts(doc["base"], "covering.base");
        c.base = WeightedGraph::make_from_ids(std::move(parts.vertices), parts.edges,
                                              std::move(parts.name));
    }
    {
        // totals of fiber products may be disconnected; keep the other checks
        GraphParts parts = graph_parts(doc["total"], "covering.total");
        std::vector<Edge> edges = index_edges(parts.vertices, parts.edges, "covering.total");
        c.total = WeightedGraph::make_disconnected(std::move(parts.vertices), std::move(edges),
                                                   std::move(parts.name));
    }

    if (!doc["vertex_map"].is_object())
        fail(Errc::parse_error, "covering: 'vertex_map' must be an object");
    for (const auto& [from, to] : doc["vertex_map"].items()) {
        if (!to.is_string()) fail(Errc::parse_error, "covering: vertex_map values must be strings");
        c.vertex_map[from] = to.get<std::string>();
    }

    if (!doc["edge_map"].is_array())
        fail(Errc::parse_error, "covering: 'edge_map' must be an array");
    for (const json& e : doc["edge_map"]) {
        if (!e.is_number_integer())
            fail(Errc::parse_error, "covering: edge_map entries must be integers");
        c.edge_map.push_back(e.get<int>());
    }

    if (!doc["degree"].is_number_integer() || doc["degree"].get<int>() < 1)
        fail(Errc::parse_error, "covering: 'degree' must be a positive integer");
    c.degree = doc["degree"].get<int>();

    const CoveringCheck check = verify_covering(c);
    if (!check.ok) fail(Errc::invalid_graph, "covering document invalid: " + check.violation);
    return c;
}

std::string serialize_covering(const GraphCovering& c, int indent) {
    json doc = json::object();
    doc["base"] = graph_to_json(c.base);
    doc["total"] = graph_to_json(c.total);
    doc["vertex_map"] = json::object();
    for (const auto& [from, to] : c.vertex_map) doc["vertex_map"][from] = to;
    doc["edge_map"] = c.edge_map;
    doc["degree"] = c.degree;
    return doc.dump(indent);
}

KnownArrowSet parse_known_arrows(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) fail(Errc::parse_error, "known arrows: expected an object");
    reject_unknown_fields(doc, {"graph", "arrows"}, "known arrows");
    KnownArrowSet out;
    if (doc.contains("graph")) {
        if (!doc["graph"].is_string())
            fail(Errc::parse_error, "known arrows: 'graph' must be a string");
        out.graph_name = doc["graph"].get<std::string>();
    }
    if (!doc.contains("arrows") || !doc["arrows"].is_array())
        fail(Errc::parse_error, "known arrows: field 'arrows' must be an array");
    int i = 0;
    for (const json& a : doc["arrows"]) {
        const std::string at = "known arrows: arrows[" + std::to_string(i++) + "]";
        if (!a.is_object()) fail(Errc::parse_error, at + " must be an object");
        reject_unknown_fields(a, {"tail", "head", "provenance"}, at);
        KnownArrow arrow;
        arrow.tail = require_string(a, "tail", at);
        arrow.head = require_string(a, "head", at);
        if (a.contains("provenance")) arrow.provenance = require_string(a, "provenance", at);
        out.arrows.push_back(std::move(arrow));
    }
    return out;
}

std::string serialize_known_arrows(const KnownArrowSet& k, int indent) {
    json doc = json::object();
    doc["graph"] = k.graph_name;
    doc["arrows"] = json::array();
    for (const KnownArrow& a : k.arrows) {
        json entry = {{"tail", a.tail}, {"head", a.head}};
        if (!a.provenance.empty()) entry["provenance"] = a.provenance;
        doc["arrows"].push_back(std::move(entry));
    }
    return doc.dump(indent);
}

std::string input_digest(std::string_view bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[hash & 0xf];
        hash >>= 4;
    }
    return out;
}

} // namespace resgraph
