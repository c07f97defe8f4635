#pragma once

#include <stdexcept>
#include <string>

namespace resgraph {

/// Every failure the library can signal, by kind. Callers (the CLI in
/// particular) dispatch on the kind rather than on message text.
enum class Errc {
    invalid_graph,         // type invariant violated (self-loop, dangling edge, ...)
    parse_error,           // malformed input document
    unknown_corpus,        // no corpus entry with that name
    not_contractible,      // blow-down target is not a (-1) rational vertex of valence <= 2
    self_tangency,         // valence-2 blow-down with both edges to one neighbor
    not_negative_definite, // operation requires a negative definite graph
    undecidable,           // minimal model not representable as a weighted graph
    search_limit,          // graph exceeds a configured search cap; raise the limit
    too_many_possible,     // enumeration cap exceeded
    not_simple,            // operation requires a simple graph
    not_simple_loop,       // loop argument is not a simple loop of the graph
    base_mismatch,         // fiber product of coverings over different bases
    not_an_embedding,      // claimed subgraph inclusion does not hold
    not_a_weight_decrease, // claimed weight decrease does not hold
    positive_genus,        // operation requires all-rational vertices
    has_loop,              // operation requires a loop-free graph
    inconsistency,         // internal consistency guard fired (must never happen)
    postcondition,         // run-time postcondition check failed (must never happen)
    usage,                 // bad command-line usage
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace resgraph
