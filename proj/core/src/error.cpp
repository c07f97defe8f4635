#include "resgraph/error.hpp"

namespace resgraph {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::invalid_graph: return "invalid graph";
        case Errc::parse_error: return "parse error";
        case Errc::unknown_corpus: return "unknown corpus entry";
        case Errc::not_contractible: return "not contractible";
        case Errc::self_tangency: return "self-tangency unsupported";
        case Errc::not_negative_definite: return "not negative definite";
        case Errc::undecidable: return "undecidable by this calculus";
        case Errc::search_limit: return "search limit exceeded";
        case Errc::too_many_possible: return "too many possible pairs";
        case Errc::not_simple: return "graph not simple";
        case Errc::not_simple_loop: return "not a simple loop of the graph";
        case Errc::base_mismatch: return "base mismatch";
        case Errc::not_an_embedding: return "not an embedding";
        case Errc::not_a_weight_decrease: return "not a weight decrease";
        case Errc::positive_genus: return "has positive genus vertex";
        case Errc::has_loop: return "has loop";
        case Errc::inconsistency: return "internal inconsistency";
        case Errc::postcondition: return "postcondition violated";
        case Errc::usage: return "usage error";
    }
    return "unknown error";
}

} // namespace resgraph
