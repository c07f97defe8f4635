#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resgraph/graph.hpp"

namespace resgraph {

/// One blow-down: the contracted vertex, its neighbors at contraction time
/// (the carrier its image point lands on, at most two of them), and the
/// graph after the step (nullopt once nothing remains).
struct ContractionStep {
    std::string contracted;
    std::set<std::string> carrier;
    std::optional<WeightedGraph> snapshot;
};

struct ContractionTrace {
    std::vector<ContractionStep> steps;
    /// Graph after all steps; nullopt marks the smooth-point case.
    std::optional<WeightedGraph> final_graph;
    /// Contracted vertex -> surviving vertices its image point lies on,
    /// obtained by substituting later-contracted carriers by their own.
    std::map<std::string, std::set<std::string>> carrier_map;
    /// False when a rational (-1) vertex remained whose contraction would
    /// leave the weighted-graph category (valence >= 3, or both edges to a
    /// single neighbor); the trace stops there.
    bool representable = true;
};

/// Contract a rational (-1)-vertex of valence <= 2. Neighbors gain one
/// unit of weight per incidence; a valence-2 contraction joins the two
/// neighbors by a new edge. Returns nullopt when the graph was that
/// single vertex (smooth point).
std::optional<WeightedGraph> blow_down(const WeightedGraph& g, std::string_view v);

struct BlowUp {
    WeightedGraph graph;
    std::string new_vertex;
};

/// Attach a fresh rational (-1) leaf to v and drop v's weight by one;
/// blowing the leaf back down recovers the input.
BlowUp blow_up_free(const WeightedGraph& g, std::string_view v);

/// Subdivide edge e through a fresh rational (-1) vertex, dropping both
/// endpoint weights by one.
BlowUp blow_up_edge(const WeightedGraph& g, int edge_index);

/// Repeatedly blow down the first eligible vertex in input order until
/// none remains. Requires a negative definite input.
ContractionTrace minimalize(const WeightedGraph& g);

/// Vertices of g surviving minimalization. Throws undecidable when the
/// trace stops non-representable.
std::set<std::string> essential_vertices(const WeightedGraph& g);

/// Ordered pairs (tail, head): some admissible contraction order collapses
/// head onto the still-present tail. witness records one such order per
/// arrow (the contracted vertices, in order).
struct TrivialArrowSet {
    std::set<std::pair<std::string, std::string>> arrows;
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> witness;
};

inline constexpr int kDefaultArrowSearchLimit = 10;

/// Exhaustive search over all admissible contraction orders, including
/// the ones that stop early. Requires a negative definite input.
TrivialArrowSet trivial_arrows(const WeightedGraph& g,
                               int search_limit = kDefaultArrowSearchLimit);

struct WeightPadding {
    WeightedGraph graph;
    std::vector<std::string> added; // ids of the attached (-1) leaves
};

/// Given decreased = same underlying graph as reference with vertexwise
/// smaller-or-equal weights (under matching: reference id -> decreased id),
/// attach one rational (-1) leaf per missing unit of weight. Blowing all
/// added leaves down recovers the reference weights.
WeightPadding pad_weight_decrease(const WeightedGraph& reference, const WeightedGraph& decreased,
                                  const std::map<std::string, std::string>& matching);

} // namespace resgraph
