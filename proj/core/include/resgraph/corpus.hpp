#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "resgraph/graph.hpp"

namespace resgraph {

/// Named reference graph with literature context and a table of expected
/// operation results that the test suites re-check against live
/// computation.
struct CorpusEntry {
    std::string name;
    WeightedGraph graph;
    std::string notes;
    std::map<std::string, std::string> expected;
};

const std::vector<CorpusEntry>& corpus_entries();
std::vector<std::string> corpus_names();
const CorpusEntry& corpus_get(std::string_view name); // throws unknown_corpus

/// Deterministic generator of negative definite graphs: a random tree with
/// weights in [-5, -2], retried until the definiteness check passes, with
/// an all-(-2) chain as the bounded-rejection fallback.
WeightedGraph random_negative_definite(std::uint64_t seed, int max_vertices);

} // namespace resgraph
