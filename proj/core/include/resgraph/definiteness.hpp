#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resgraph/graph.hpp"

namespace resgraph {

/// Symmetric intersection matrix of a graph: self-intersection weights on
/// the diagonal, edge multiplicities off it. Row order equals vertex order.
struct IncidenceMatrix {
    int order = 0;
    std::vector<std::vector<long long>> entries;
    std::vector<std::string> vertex_order;
};

IncidenceMatrix incidence_matrix(const WeightedGraph& g);

/// Sylvester-criterion outcome. On success minor_signs holds the sign of
/// every leading principal minor (they alternate -,+,-,...). On failure
/// failed_index is the first 1-based k whose minor sign differs from
/// (-1)^k and failed_sign its actual sign (0 counts as a failure);
/// minor_signs then holds the signs up to and including k.
struct DefinitenessCertificate {
    bool negative_definite = false;
    std::vector<int> minor_signs;
    std::optional<int> failed_index;
    std::optional<int> failed_sign;
};

/// Exact integer verdict via fraction-free elimination; no floating point.
DefinitenessCertificate check_negative_definite(const IncidenceMatrix& m);
DefinitenessCertificate is_negative_definite(const WeightedGraph& g);

} // namespace resgraph
