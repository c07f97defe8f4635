#pragma once

#include <string>
#include <string_view>

#include "resgraph/constraints.hpp"
#include "resgraph/covering.hpp"
#include "resgraph/graph.hpp"

namespace resgraph {

/// Strict parse of the graph document
///   {"name"?: str, "vertices": [{"id","genus","weight"}...], "edges": [[id,id]...]}
/// Unknown fields, duplicate ids, self-loops, dangling edges, negative
/// genus and disconnected graphs are all rejected with named errors.
WeightedGraph parse_graph(const std::string& text);
std::string serialize_graph(const WeightedGraph& g, int indent = 2);

/// Covering document: {"base": graph, "total": graph, "vertex_map": {id: id},
/// "edge_map": [int...], "degree": int}. Parsing re-verifies the covering
/// invariants and rejects documents that fail them.
GraphCovering parse_covering(const std::string& text);
std::string serialize_covering(const GraphCovering& c, int indent = 2);

/// Known-arrow document: {"graph": str, "arrows": [{"tail","head","provenance"?}...]}.
KnownArrowSet parse_known_arrows(const std::string& text);
std::string serialize_known_arrows(const KnownArrowSet& k, int indent = 2);

/// FNV-1a 64-bit digest of the raw input bytes, as 16 hex digits.
std::string input_digest(std::string_view bytes);

} // namespace resgraph
