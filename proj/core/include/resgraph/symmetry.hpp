#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resgraph/graph.hpp"

namespace resgraph {

/// Default cap on the vertex count for the permutation searches below.
inline constexpr int kDefaultSearchLimit = 12;

/// Complete list of weighted-graph automorphisms (permutations preserving
/// genus, weight and edge multiplicity between every pair), as vertex-index
/// permutations in lexicographic order. perm[i] is the image of vertex i.
/// Throws search_limit when the graph has more than search_limit vertices.
std::vector<std::vector<int>> automorphisms(const WeightedGraph& g,
                                            int search_limit = kDefaultSearchLimit);

/// Lexicographically least genus/weight/multiplicity preserving bijection
/// from g1's vertices to g2's (as an index map), if one exists.
std::optional<std::vector<int>> are_isomorphic(const WeightedGraph& g1, const WeightedGraph& g2,
                                               int search_limit = kDefaultSearchLimit);

/// Lexicographically least injection of small into big preserving genus and
/// weight exactly and edge multiplicities up to inclusion
/// (mult_small(a,b) <= mult_big(f a, f b)), if one exists.
std::optional<std::vector<int>> find_embedding(const WeightedGraph& small,
                                               const WeightedGraph& big,
                                               int search_limit = kDefaultSearchLimit);

/// True iff the orbit of vertex 0 under the given automorphisms is everything.
bool acts_transitively(const WeightedGraph& g, const std::vector<std::vector<int>>& autos);

/// Convenience: index permutation/injection rendered as an id -> id map.
std::map<std::string, std::string> as_id_map(const WeightedGraph& from, const WeightedGraph& to,
                                             const std::vector<int>& mapping);

} // namespace resgraph
