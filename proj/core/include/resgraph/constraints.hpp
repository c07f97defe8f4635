#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "resgraph/calculus.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/symmetry.hpp"

namespace resgraph {

/// What the combinatorial rules say about one ordered vertex pair (u, v),
/// read as a candidate arc adjacency from u to v.
///
///   trivial   — a contraction order collapses v onto u; the adjacency holds.
///   forbidden — a rule excludes the adjacency.
///   possible  — no rule applies either way; nothing stronger is claimed.
enum class ArrowVerdict { trivial, forbidden, possible };

struct ArrowStatus {
    ArrowVerdict verdict = ArrowVerdict::possible;
    std::vector<std::string> justifications; // rule name + parameters, one per firing rule
};

/// Constraints every realizable adjacency digraph satisfies when restricted
/// to essential vertices. They filter whole-digraph enumeration and are
/// never applied to individual pair statuses.
struct StructuralConstraints {
    bool irreflexive = true;
    bool no_two_cycles = true;
    bool acyclic = true;
};

using ArrowKey = std::pair<std::string, std::string>; // (tail, head)

struct ConstraintReport {
    WeightedGraph graph;
    std::set<std::string> essential;
    std::map<ArrowKey, ArrowStatus> statuses; // every ordered pair of distinct vertices
    std::set<std::string> certified_in_image;
    StructuralConstraints structural;
};

struct ConstraintOptions {
    int automorphism_limit = kDefaultSearchLimit;
    int arrow_limit = kDefaultArrowSearchLimit;
};

/// Apply every proven rule to a negative definite graph:
///   - contraction orders mark arrows trivial;
///   - a pair with no connecting path running through rational vertices
///     (the tail excepted) is forbidden, so arrows into a positive-genus
///     vertex are always forbidden;
///   - an automorphism moving an essential vertex forbids the arrow from
///     that vertex to its image;
///   - everything else stays possible.
/// A pair that would be both trivial and forbidden is an internal
/// inconsistency and throws.
ConstraintReport derive_constraints(const WeightedGraph& g, const ConstraintOptions& = {});

/// certified_in_image recomputed from the statuses: essential vertices all
/// of whose incoming arrows are forbidden or trivial.
std::set<std::string> recompute_certified(const ConstraintReport& r);

struct CertifyResult {
    std::set<std::string> certified;
    /// True iff every non-trivial status is forbidden, i.e. the adjacency
    /// digraph provably contains only the trivial arrows.
    bool bijectivity_certified = false;
};

CertifyResult certify(const WeightedGraph& g, const ConstraintOptions& = {});

/// A user- or transfer-asserted genuine adjacency, with its provenance.
struct KnownArrow {
    std::string tail, head;
    std::string provenance;
};

struct KnownArrowSet {
    std::string graph_name;
    std::vector<KnownArrow> arrows;
};

void validate_known_arrows(const WeightedGraph& g, const KnownArrowSet& known);

/// Push known arrows of a subgraph onto a negative definite supergraph
/// through an embedding (small id -> big id, weight/genus exact, edge
/// multiplicities up to inclusion). Transferred arrows are cross-checked
/// against derive_constraints on the target; asserting a forbidden arrow
/// throws inconsistency.
KnownArrowSet transfer_subgraph(const WeightedGraph& small, const WeightedGraph& big,
                                const std::map<std::string, std::string>& embedding,
                                const KnownArrowSet& known, const ConstraintOptions& = {});

/// Pull known arrows back from a weight-decreased copy g2 onto the
/// original negative definite g1 (matching: g1 id -> g2 id). The padded
/// witness graph from pad_weight_decrease is recorded in the provenance.
/// Same cross-check as transfer_subgraph.
KnownArrowSet transfer_weight_decrease(const WeightedGraph& g1, const WeightedGraph& g2,
                                       const std::map<std::string, std::string>& matching,
                                       const KnownArrowSet& known_on_g2,
                                       const ConstraintOptions& = {});

enum class ExtremalClause { definiteness_breaks, trivial_arrows_increase, none };

struct ExtremalWitness {
    std::string vertex;
    ExtremalClause clause;
    std::string detail;
};

struct ExtremalResult {
    bool extremal = false;
    std::vector<ExtremalWitness> witnesses; // one per vertex, in vertex order
};

/// A rational, loop-free, negative definite graph is extremal when raising
/// any single weight by one either breaks definiteness or strictly grows
/// the trivial-arrow count.
ExtremalResult is_extremal(const WeightedGraph& g, const ConstraintOptions& = {});

/// All assignments of the possible pairs consistent with the structural
/// constraints: the essential restriction stays irreflexive, 2-cycle-free
/// and acyclic, and compositions through a candidate arrow must close.
/// The trivial-arrows-only digraph is always element zero.
std::vector<std::set<ArrowKey>> enumerate_consistent_digraphs(const ConstraintReport& r,
                                                              int cap = 20);

} // namespace resgraph
