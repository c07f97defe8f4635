#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "resgraph/constraints.hpp"
#include "resgraph/corpus.hpp"
#include "resgraph/covering.hpp"
#include "resgraph/definiteness.hpp"
#include "resgraph/error.hpp"
#include "resgraph/io.hpp"
#include "resgraph/symmetry.hpp"
#include "resgraph/topology.hpp"
#include "resgraph/version.hpp"

namespace {

using json = nlohmann::json;
using namespace resgraph;

struct Options {
    bool json_mode = false;
    std::uint64_t seed = 0; // reserved for generator-backed workflows
    int limit = 0;          // 0 = module defaults
    std::string command_echo;
    std::string digest;
};

ConstraintOptions constraint_options(const Options& opts) {
    ConstraintOptions c;
    if (opts.limit > 0) {
        c.automorphism_limit = opts.limit;
        c.arrow_limit = opts.limit;
    }
    return c;
}

void emit(const Options& opts, const json& result, const std::string& text) {
    if (opts.json_mode) {
        json report;
        report["version"] = std::string(kVersion);
        report["command"] = opts.command_echo;
        report["input_digest"] = opts.digest;
        report["result"] = result;
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::not_negative_definite:
        case Errc::undecidable:
        case Errc::not_simple:
        case Errc::not_simple_loop:
        case Errc::positive_genus:
        case Errc::has_loop:
            return 1; // negative mathematical verdict about a well-formed input
        default:
            return 2;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::usage, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inputs are file paths or corpus:NAME references.
WeightedGraph load_graph(Options& opts, const std::string& ref) {
    if (ref.starts_with("corpus:")) {
        const CorpusEntry& entry = corpus_get(ref.substr(7));
        opts.digest = input_digest(serialize_graph(entry.graph));
        return entry.graph;
    }
    const std::string text = read_file(ref);
    opts.digest = input_digest(text);
    return parse_graph(text);
}

json graph_doc(const WeightedGraph& g) { return json::parse(serialize_graph(g)); }
json covering_doc(const GraphCovering& c) { return json::parse(serialize_covering(c)); }

const char* verdict_name(ArrowVerdict v) {
    switch (v) {
        case ArrowVerdict::trivial: return "Trivial";
        case ArrowVerdict::forbidden: return "Forbidden";
        case ArrowVerdict::possible: return "Possible";
    }
    return "?";
}

const char* clause_name(ExtremalClause c) {
    switch (c) {
        case ExtremalClause::definiteness_breaks: return "definiteness-breaks";
        case ExtremalClause::trivial_arrows_increase: return "trivial-arrows-increase";
        case ExtremalClause::none: return "none";
    }
    return "?";
}

int run_check(Options& opts, const std::string& input) {
    const WeightedGraph g = load_graph(opts, input);
    const DefinitenessCertificate cert = is_negative_definite(g);
    json result;
    result["negative_definite"] = cert.negative_definite;
    result["minor_signs"] = cert.minor_signs;
    if (cert.failed_index) {
        result["failed_index"] = *cert.failed_index;
        result["failed_sign"] = *cert.failed_sign;
    }
    std::ostringstream text;
    if (cert.negative_definite) {
        text << "negative definite: yes (" << cert.minor_signs.size()
             << " leading minors alternate in sign)\n";
    } else {
        text << "negative definite: no (minor " << *cert.failed_index << " has sign "
             << *cert.failed_sign << ")\n";
    }
    emit(opts, result, text.str());
    return cert.negative_definite ? 0 : 1;
}

int run_minimalize(Options& opts, const std::string& input) {
    const WeightedGraph g = load_graph(opts, input);
    const ContractionTrace trace = minimalize(g);
    json result;
    result["steps"] = json::array();
    for (const ContractionStep& s : trace.steps)
        result["steps"].push_back({{"vertex", s.contracted}, {"carrier", s.carrier}});
    result["smooth_point"] = !trace.final_graph.has_value();
    result["final"] = trace.final_graph ? graph_doc(*trace.final_graph) : json(nullptr);
    result["representable"] = trace.representable;
    result["carrier_map"] = json::object();
    for (const auto& [v, carrier] : trace.carrier_map) result["carrier_map"][v] = carrier;

    std::ostringstream text;
    for (const ContractionStep& s : trace.steps) {
        text << "contract " << s.contracted << " onto {";
        bool first = true;
        for (const auto& c : s.carrier) {
            if (!first) text << ", ";
            text << c;
            first = false;
        }
        text << "}\n";
    }
    if (!trace.final_graph) {
        text << "final: smooth point\n";
    } else {
        text << "final: " << trace.final_graph->vertex_count() << " vertices, "
             << trace.final_graph->edge_count() << " edges\n";
    }
    if (!trace.representable)
        text << "warning: minimal model not graph-representable; contraction stopped\n";
    emit(opts, result, text.str());
    return 0;
}

int run_essentials(Options& opts, const std::string& input) {
    const WeightedGraph g = load_graph(opts, input);
    const std::set<std::string> essential = essential_vertices(g);
    json result;
    result["essential"] = essential;
    std::ostringstream text;
    text << "essential vertices (" << essential.size() << "):";
    for (const auto& v : essential) text << " " << v;
    text << "\n";
    emit(opts, result, text.str());
    return 0;
}

int run_trivial_arrows(Options& opts, const std::string& input) {
    const WeightedGraph g = load_graph(opts, input);
    const TrivialArrowSet arrows = trivial_arrows(g, constraint_options(opts).arrow_limit);
    json result;
    result["arrows"] = json::array();
    std::ostringstream text;
    text << arrows.arrows.size() << " trivial arrow(s)\n";
    for (const auto& [tail, head] : arrows.arrows) {
        result["arrows"].push_back(
            {{"tail", tail}, {"head", head}, {"witness_order", arrows.witness.at({tail, head})}});
        text << "  " << tail << " -> " << head << "\n";
    }
    emit(opts, result, text.str());
    return 0;
}

int run_autos(Options& opts, const std::string& input) {
    const WeightedGraph g = load_graph(opts, input);
    const auto autos = automorphisms(g, constraint_options(opts).automorphism_limit);
    json result;
    result["order"] = autos.size();
    result["automorphisms"] = json::array();
    for (const auto& p : autos) {
        json entry = json::object();
        for (const auto& [from, to] : as_id_map(g, g, p)) entry[from] = to;
        result["automorphisms"].push_back(std::move(entry));
    }
    result["vertex_transitive"] = acts_transitively(g, autos);
    std::ostringstream text;
    text << "automorphism group order " << autos.size()
         << (acts_transitively(g, autos) ? " (vertex-transitive)" : "") << "\n";
    emit(opts, result, text.str());
    return 0;
}

int run_loops(Options& opts, const std::string& input) {
    const WeightedGraph g = load_graph(opts, input);
    const auto loops = enumerate_simple_loops(g);
    json result;
    result["loops"] = json::array();
    std::ostringstream text;
    text << loops.size() << " simple loop(s)\n";
    for (const Loop& l : loops) {
        json ids = json::array();
        text << " ";
        for (int v : l.vertices) {
            ids.push_back(g.vertices[v].id);
            text << " " << g.vertices[v].id;
        }
        text << "\n";
        result["loops"].push_back(std::move(ids));
    }
    emit(opts, result, text.str());
    return 0;
}

int run_girth(Options& opts, const std::string& input) {
    const WeightedGraph g = load_graph(opts, input);
    const std::optional<int> girth = girth_nontrivial(g);
    json result;
    result["girth"] = girth ? json(*girth) : json("infinite");
    emit(opts, result,
         girth ? "girth of non-trivial loops: " + std::to_string(*girth) + "\n"
               : "girth of non-trivial loops: infinite (tree)\n");
    return 0;
}

int run_cover(Options& opts, const std::string& input, int loop_index, int degree) {
    const WeightedGraph g = load_graph(opts, input);
    const auto loops = enumerate_simple_loops(g);
    if (loop_index < 0 || loop_index >= static_cast<int>(loops.size()))
        fail(Errc::usage, "loop index " + std::to_string(loop_index) +
                              " out of range; the graph has " + std::to_string(loops.size()) +
                              " simple loop(s)");
    const GraphCovering c = cyclic_cover_along_loop(g, loops[loop_index], degree);
    const CoveringCheck check = verify_covering(c);
    if (!check.ok) fail(Errc::postcondition, check.violation);
    json result = covering_doc(c);
    std::ostringstream text;
    text << "degree-" << degree << " cyclic cover: total has " << c.total.vertex_count()
         << " vertices, " << c.total.edge_count() << " edges\n";
    emit(opts, result, text.str());
    return 0;
}

int run_indice_cover(Options& opts, const std::string& input, int degree) {
    const WeightedGraph g = load_graph(opts, input);
    const GraphCovering c = girth_cover(g, degree);
    json result = covering_doc(c);
    const std::optional<int> girth = girth_nontrivial(c.total);
    result["girth"] = girth ? json(*girth) : json("infinite");
    std::ostringstream text;
    text << "degree-" << c.degree << " cover with non-trivial-loop girth "
         << (girth ? std::to_string(*girth) : "infinite") << "; total has "
         << c.total.vertex_count() << " vertices\n";
    emit(opts, result, text.str());
    return 0;
}

int run_fiber_product(Options& opts, const std::string& input1, const std::string& input2) {
    const std::string text1 = read_file(input1);
    const std::string text2 = read_file(input2);
    opts.digest = input_digest(text1 + text2);
    const GraphCovering a = parse_covering(text1);
    const GraphCovering b = parse_covering(text2);
    const GraphCovering c = fiber_product(a, b);
    json result = covering_doc(c);
    std::ostringstream text;
    text << "fiber product: degree " << c.degree << ", total has " << c.total.vertex_count()
         << " vertices in " << connected_components(c.total).size() << " component(s)\n";
    emit(opts, result, text.str());
    return 0;
}

int run_constraints(Options& opts, const std::string& input) {
    const WeightedGraph g = load_graph(opts, input);
    const ConstraintReport report = derive_constraints(g, constraint_options(opts));
    json result;
    result["essential"] = report.essential;
    result["certified_in_image"] = report.certified_in_image;
    result["structural"] = {{"irreflexive", report.structural.irreflexive},
                            {"no_two_cycles", report.structural.no_two_cycles},
                            {"acyclic", report.structural.acyclic}};
    result["statuses"] = json::array();
    std::ostringstream text;
    for (const auto& [key, status] : report.statuses) {
        result["statuses"].push_back({{"tail", key.first},
                                      {"head", key.second},
                                      {"status", verdict_name(status.verdict)},
                                      {"justifications", status.justifications}});
        text << key.first << " -> " << key.second << ": " << verdict_name(status.verdict);
        for (const auto& j : status.justifications) text << "  [" << j << "]";
        text << "\n";
    }
    text << "certified in image:";
    for (const auto& v : report.certified_in_image) text << " " << v;
    text << "\n";
    emit(opts, result, text.str());
    return 0;
}

int run_certify(Options& opts, const std::string& input) {
    const WeightedGraph g = load_graph(opts, input);
    const CertifyResult r = certify(g, constraint_options(opts));
    json result;
    result["certified"] = r.certified;
    result["bijectivity_certified"] = r.bijectivity_certified;
    std::ostringstream text;
    text << "certified in image (" << r.certified.size() << "):";
    for (const auto& v : r.certified) text << " " << v;
    text << "\n";
    text << (r.bijectivity_certified ? "Nash bijectivity certified\n"
                                     : "Nash bijectivity not certified\n");
    emit(opts, result, text.str());
    return r.bijectivity_certified ? 0 : 1;
}

int run_extremal(Options& opts, const std::string& input) {
    const WeightedGraph g = load_graph(opts, input);
    const ExtremalResult r = is_extremal(g, constraint_options(opts));
    json result;
    result["extremal"] = r.extremal;
    result["witnesses"] = json::array();
    std::ostringstream text;
    text << (r.extremal ? "extremal\n" : "not extremal\n");
    for (const ExtremalWitness& w : r.witnesses) {
        result["witnesses"].push_back(
            {{"vertex", w.vertex}, {"clause", clause_name(w.clause)}, {"detail", w.detail}});
        text << "  " << w.vertex << ": " << clause_name(w.clause) << " (" << w.detail << ")\n";
    }
    emit(opts, result, text.str());
    return r.extremal ? 0 : 1;
}

int run_compare(Options& opts, const std::string& mode, const std::string& input1,
                const std::string& input2, const std::string& known_path) {
    const WeightedGraph g1 = load_graph(opts, input1);
    const WeightedGraph g2 = load_graph(opts, input2);
    KnownArrowSet known;
    if (!known_path.empty()) known = parse_known_arrows(read_file(known_path));

    json result;
    result["mode"] = mode;
    std::ostringstream text;
    KnownArrowSet transferred;

    if (mode == "subgraph") {
        // g1 is the subgraph, g2 the containing graph
        auto embedding = find_embedding(g1, g2, constraint_options(opts).automorphism_limit);
        if (!embedding)
            fail(Errc::not_an_embedding,
                 "no weight/genus/edge preserving injection of '" + input1 + "' into '" +
                     input2 + "'");
        const auto mapping = as_id_map(g1, g2, *embedding);
        transferred = transfer_subgraph(g1, g2, mapping, known, constraint_options(opts));
        result["mapping"] = json(mapping);
        text << "embedding found:";
        for (const auto& [from, to] : mapping) text << " " << from << "->" << to;
        text << "\n";
    } else if (mode == "weights") {
        // g1 has the higher weights, g2 the decreased ones; match by id
        std::map<std::string, std::string> matching;
        for (const Vertex& v : g1.vertices) {
            if (!g2.index_of(v.id))
                fail(Errc::not_a_weight_decrease,
                     "vertex '" + v.id + "' has no counterpart; weight comparison matches by id");
            matching[v.id] = v.id;
        }
        const WeightPadding padding = pad_weight_decrease(g1, g2, matching);
        transferred = transfer_weight_decrease(g1, g2, matching, known, constraint_options(opts));
        result["witness"] = graph_doc(padding.graph);
        result["witness_added"] = padding.added;
        text << "weight decrease verified; padded witness adds " << padding.added.size()
             << " unit leaves\n";
    } else {
        fail(Errc::usage, "unknown compare mode '" + mode + "' (use subgraph or weights)");
    }

    result["arrows"] = json::array();
    for (const KnownArrow& a : transferred.arrows) {
        result["arrows"].push_back(
            {{"tail", a.tail}, {"head", a.head}, {"provenance", a.provenance}});
        text << "  " << a.tail << " -> " << a.head << " [" << a.provenance << "]\n";
    }
    text << transferred.arrows.size() << " arrow(s) transferred\n";
    emit(opts, result, text.str());
    return 0;
}

int run_corpus_list(Options& opts) {
    json result;
    result["entries"] = json::array();
    std::ostringstream text;
    for (const CorpusEntry& e : corpus_entries()) {
        result["entries"].push_back({{"name", e.name},
                                     {"vertices", e.graph.vertex_count()},
                                     {"edges", e.graph.edge_count()},
                                     {"notes", e.notes}});
        text << e.name << " (" << e.graph.vertex_count() << " vertices): " << e.notes << "\n";
    }
    opts.digest = input_digest("corpus");
    emit(opts, result, text.str());
    return 0;
}

int run_corpus_show(Options& opts, const std::string& name) {
    const CorpusEntry& e = corpus_get(name);
    opts.digest = input_digest(serialize_graph(e.graph));
    json result;
    result["graph"] = graph_doc(e.graph);
    result["notes"] = e.notes;
    result["expected"] = json(e.expected);
    std::ostringstream text;
    text << serialize_graph(e.graph) << "\n";
    emit(opts, result, text.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial calculus of weighted resolution graphs"};
    app.require_subcommand(1);

    Options opts;
    app.add_flag("--json", opts.json_mode, "emit a machine-readable report");
    app.add_option("--seed", opts.seed, "seed for randomized generators (reserved)");
    app.add_option("--limit", opts.limit,
                   "vertex cap for permutation and contraction-order searches");

    std::string input, input2, known_path, mode, corpus_name;
    int loop_index = 0, degree = 2;

    auto add_input = [&input](CLI::App* cmd) {
        cmd->add_option("input", input, "graph file or corpus:NAME")->required();
    };
    // let --json/--seed/--limit appear after the subcommand too
    app.fallthrough();

    auto* cmd_check = app.add_subcommand("check", "negative-definiteness verdict");
    add_input(cmd_check);
    auto* cmd_minimalize = app.add_subcommand("minimalize", "contract to the minimal model");
    add_input(cmd_minimalize);
    auto* cmd_essentials = app.add_subcommand("essentials", "vertices surviving minimalization");
    add_input(cmd_essentials);
    auto* cmd_arrows = app.add_subcommand("trivial-arrows", "arrows forced by contraction orders");
    add_input(cmd_arrows);
    auto* cmd_autos = app.add_subcommand("autos", "weighted-graph automorphism group");
    add_input(cmd_autos);
    auto* cmd_loops = app.add_subcommand("loops", "simple loops of a simple graph");
    add_input(cmd_loops);
    auto* cmd_cover = app.add_subcommand("cover", "cyclic cover along one simple loop");
    add_input(cmd_cover);
    cmd_cover->add_option("--loop", loop_index, "simple loop index (see loops)")->required();
    cmd_cover->add_option("--degree", degree, "covering degree (>= 2)")->required();
    auto* cmd_indice = app.add_subcommand(
        "indice-cover", "cover whose non-trivial loops have at least DEGREE vertices");
    add_input(cmd_indice);
    cmd_indice->add_option("--degree", degree, "lower bound for non-trivial-loop length")
        ->required();
    auto* cmd_fiber = app.add_subcommand("fiber-product", "fiber product of two coverings");
    cmd_fiber->add_option("covering1", input, "covering file")->required();
    cmd_fiber->add_option("covering2", input2, "covering file")->required();
    auto* cmd_girth = app.add_subcommand("girth", "minimum vertex count of non-trivial loops");
    add_input(cmd_girth);
    auto* cmd_constraints =
        app.add_subcommand("constraints", "arrow statuses from every applicable rule");
    add_input(cmd_constraints);
    auto* cmd_certify = app.add_subcommand("certify", "vertices certified in the Nash image");
    add_input(cmd_certify);
    auto* cmd_extremal = app.add_subcommand("extremal", "extremality with per-vertex witnesses");
    add_input(cmd_extremal);
    auto* cmd_compare = app.add_subcommand("compare", "transfer known arrows between graphs");
    cmd_compare->add_option("--mode", mode, "subgraph | weights")->required();
    cmd_compare->add_option("input1", input, "graph file or corpus:NAME")->required();
    cmd_compare->add_option("input2", input2, "graph file or corpus:NAME")->required();
    cmd_compare->add_option("--known", known_path, "known-arrow file to transfer");
    auto* cmd_corpus = app.add_subcommand("corpus", "built-in reference graphs");
    cmd_corpus->require_subcommand(1);
    auto* cmd_corpus_list = cmd_corpus->add_subcommand("list", "list corpus entries");
    auto* cmd_corpus_show = cmd_corpus->add_subcommand("show", "print one corpus entry");
    cmd_corpus_show->add_option("name", corpus_name, "entry name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    {
        std::ostringstream echo;
        for (int i = 1; i < argc; ++i) {
            if (i > 1) echo << ' ';
            echo << argv[i];
        }
        opts.command_echo = echo.str();
    }

    try {
        if (app.got_subcommand(cmd_check)) return run_check(opts, input);
        if (app.got_subcommand(cmd_minimalize)) return run_minimalize(opts, input);
        if (app.got_subcommand(cmd_essentials)) return run_essentials(opts, input);
        if (app.got_subcommand(cmd_arrows)) return run_trivial_arrows(opts, input);
        if (app.got_subcommand(cmd_autos)) return run_autos(opts, input);
        if (app.got_subcommand(cmd_loops)) return run_loops(opts, input);
        if (app.got_subcommand(cmd_cover)) return run_cover(opts, input, loop_index, degree);
        if (app.got_subcommand(cmd_indice)) return run_indice_cover(opts, input, degree);
        if (app.got_subcommand(cmd_fiber)) return run_fiber_product(opts, input, input2);
        if (app.got_subcommand(cmd_girth)) return run_girth(opts, input);
        if (app.got_subcommand(cmd_constraints)) return run_constraints(opts, input);
        if (app.got_subcommand(cmd_certify)) return run_certify(opts, input);
        if (app.got_subcommand(cmd_extremal)) return run_extremal(opts, input);
        if (app.got_subcommand(cmd_compare))
            return run_compare(opts, mode, input, input2, known_path);
        if (app.got_subcommand(cmd_corpus)) {
            if (cmd_corpus->got_subcommand(cmd_corpus_list)) return run_corpus_list(opts);
            if (cmd_corpus->got_subcommand(cmd_corpus_show))
                return run_corpus_show(opts, corpus_name);
        }
    } catch (const Error& e) {
        const int rc = exit_code_for(e.code());
        json result;
        result["error"] = {{"kind", errc_name(e.code())}, {"message", e.what()}};
        emit(opts, result, std::string("error: ") + errc_name(e.code()) + ": " + e.what() + "\n");
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
