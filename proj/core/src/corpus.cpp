#include "resgraph/corpus.hpp"

#include <random>

#include "resgraph/definiteness.hpp"
#include "resgraph/error.hpp"

namespace resgraph {

namespace {

WeightedGraph chain(const std::string& prefix, const std::vector<int>& weights,
                    std::string name) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (size_t i = 0; i < weights.size(); ++i) {
        vs.push_back({prefix + std::to_string(i + 1), 0, weights[i]});
        if (i > 0) es.push_back({static_cast<int>(i - 1), static_cast<int>(i)});
    }
    return WeightedGraph::make(std::move(vs), std::move(es), std::move(name));
}

// Star-shaped tree: a center with legs of the given lengths, all vertices
// rational of weight -2. Legs (1,1,1) give D4; (1,2,2), (1,2,3), (1,2,4)
// give E6, E7, E8.
WeightedGraph t_tree(const std::vector<int>& legs, std::string name) {
    std::vector<Vertex> vs{{"c", 0, -2}};
    std::vector<Edge> es;
    int leg_no = 0;
    for (int len : legs) {
        ++leg_no;
        int prev = 0;
        for (int k = 1; k <= len; ++k) {
            vs.push_back({"l" + std::to_string(leg_no) + "v" + std::to_string(k), 0, -2});
            es.push_back({prev, static_cast<int>(vs.size()) - 1});
            prev = static_cast<int>(vs.size()) - 1;
        }
    }
    return WeightedGraph::make(std::move(vs), std::move(es), std::move(name));
}

std::vector<CorpusEntry> build_entries() {
    std::vector<CorpusEntry> out;

    for (int n = 1; n <= 8; ++n) {
        const std::string name = "A" + std::to_string(n);
        out.push_back({name, chain("a", std::vector<int>(n, -2), name),
                       "rational double point: chain of " + std::to_string(n) +
                           " (-2)-curves",
                       {{"negative_definite", "true"}}});
    }

    out.push_back({"D4", t_tree({1, 1, 1}, "D4"),
                   "rational double point: three (-2)-legs on a (-2)-center",
                   {{"negative_definite", "true"}, {"autos_order", "6"}}});
    out.push_back({"E6", t_tree({1, 2, 2}, "E6"), "rational double point",
                   {{"negative_definite", "true"}, {"autos_order", "2"}}});
    out.push_back({"E7", t_tree({1, 2, 3}, "E7"), "rational double point",
                   {{"negative_definite", "true"}, {"autos_order", "1"}}});
    out.push_back({"E8", t_tree({1, 2, 4}, "E8"), "rational double point",
                   {{"negative_definite", "true"},
                    {"autos_order", "1"},
                    {"essential_count", "8"},
                    {"trivial_arrows", "0"}}});

    out.push_back({"chain-232", chain("a", {-2, -3, -2}, "chain-232"),
                   "cyclic quotient singularity chain",
                   {{"negative_definite", "true"}}});
    out.push_back({"chain-343", chain("a", {-3, -4, -3}, "chain-343"),
                   "cyclic quotient singularity chain",
                   {{"negative_definite", "true"}}});
    out.push_back({"chain-25", chain("a", {-2, -5}, "chain-25"),
                   "cyclic quotient singularity chain, asymmetric weights",
                   {{"negative_definite", "true"}}});

    out.push_back({"nonmin-313", chain("a", {-3, -1, -3}, "nonmin-313"),
                   "non-minimal chain: the middle (-1)-curve contracts onto both neighbors",
                   {{"negative_definite", "true"},
                    {"essential_count", "2"},
                    {"trivial_arrows", "2"}}});

    {
        std::vector<Vertex> vs{{"c", 1, -2}, {"p", 0, -2}, {"q", 0, -2}};
        std::vector<Edge> es{{0, 1}, {0, 2}};
        out.push_back({"genus1-star",
                       WeightedGraph::make(std::move(vs), std::move(es), "genus1-star"),
                       "genus-1 center with two rational (-2) leaves",
                       {{"negative_definite", "true"}}});
    }
    out.push_back({"genus2-vertex",
                   WeightedGraph::make({{"g", 2, -3}}, {}, "genus2-vertex"),
                   "single genus-2 curve",
                   {{"negative_definite", "true"}}});

    {
        std::vector<Vertex> vs{{"a", 0, -3}, {"b", 0, -5}};
        std::vector<Edge> es{{0, 1}, {0, 1}};
        out.push_back({"double-edge-35",
                       WeightedGraph::make(std::move(vs), std::move(es), "double-edge-35"),
                       "two curves meeting twice (tacnodal configuration)",
                       {{"negative_definite", "true"}, {"simple", "false"}}});
    }

    {
        std::vector<Vertex> vs{{"x", 0, -2}, {"y", 0, -2}, {"z", 0, -2}};
        std::vector<Edge> es{{0, 1}, {1, 2}, {0, 2}};
        out.push_back({"triangle",
                       WeightedGraph::make(std::move(vs), std::move(es), "triangle"),
                       "cycle of three (-2)-curves; degenerate intersection form, kept "
                       "for covering-space tests",
                       {{"negative_definite", "false"}, {"simple_loops", "1"},
                        {"girth", "3"}}});
    }
    {
        std::vector<Vertex> vs{{"x", 0, -3}, {"y", 0, -3}, {"z", 0, -3}};
        std::vector<Edge> es{{0, 1}, {1, 2}, {0, 2}};
        out.push_back({"cycle3-w3",
                       WeightedGraph::make(std::move(vs), std::move(es), "cycle3-w3"),
                       "cycle of three (-3)-curves: negative definite and vertex-transitive",
                       {{"negative_definite", "true"}, {"autos_order", "6"},
                        {"simple_loops", "1"}}});
    }
    {
        // two triangles joined by a bridge: exactly two simple loops
        std::vector<Vertex> vs{{"a", 0, -3}, {"b", 0, -3}, {"c", 0, -3},
                               {"d", 0, -3}, {"e", 0, -3}, {"f", 0, -3}};
        std::vector<Edge> es{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}};
        out.push_back({"dumbbell",
                       WeightedGraph::make(std::move(vs), std::move(es), "dumbbell"),
                       "two disjoint cycles joined by a bridge",
                       {{"negative_definite", "true"}, {"simple_loops", "2"}}});
    }
    {
        // two triangles sharing an edge: three simple loops
        std::vector<Vertex> vs{{"a", 0, -4}, {"b", 0, -4}, {"c", 0, -4}, {"d", 0, -4}};
        std::vector<Edge> es{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}};
        out.push_back({"twin-triangles",
                       WeightedGraph::make(std::move(vs), std::move(es), "twin-triangles"),
                       "two cycles sharing an edge",
                       {{"negative_definite", "true"}, {"simple_loops", "3"}}});
    }
    {
        std::vector<Vertex> vs{{"c", 0, -2}, {"p", 0, -3}, {"q", 0, -3}, {"r", 0, -3}};
        std::vector<Edge> es{{0, 1}, {0, 2}, {0, 3}};
        out.push_back({"star-333",
                       WeightedGraph::make(std::move(vs), std::move(es), "star-333"),
                       "(-2)-center with three identical (-3) leaves",
                       {{"negative_definite", "true"}, {"autos_order", "6"}}});
    }

    return out;
}

} // namespace

const std::vector<CorpusEntry>& corpus_entries() {
    static const std::vector<CorpusEntry> entries = build_entries();
    return entries;
}

std::vector<std::string> corpus_names() {
    std::vector<std::string> out;
    for (const CorpusEntry& e : corpus_entries()) out.push_back(e.name);
    return out;
}

const CorpusEntry& corpus_get(std::string_view name) {
    for (const CorpusEntry& e : corpus_entries())
        if (e.name == name) return e;
    fail(Errc::unknown_corpus, "unknown corpus entry '" + std::string(name) + "'");
}

WeightedGraph random_negative_definite(std::uint64_t seed, int max_vertices) {
    if (max_vertices < 1) fail(Errc::invalid_graph, "max_vertices must be at least 1");
    std::mt19937_64 rng(seed);
    auto pick = [&rng](int lo, int hi) { // inclusive, stable across platforms
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    for (int attempt = 0; attempt < 32; ++attempt) {
        const int n = pick(1, max_vertices);
        std::vector<Vertex> vs;
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i) {
            vs.push_back({"v" + std::to_string(i + 1), 0, -pick(2, 5)});
            if (i > 0) es.push_back({pick(0, i - 1), i}); // random attachment tree
        }
        // occasionally close one cycle, with heavier endpoint weights
        if (n >= 3 && pick(0, 3) == 0) {
            const int a = pick(0, n - 2);
            const int b = pick(a + 1, n - 1);
            WeightedGraph probe{"", vs, es};
            if (probe.multiplicity(a, b) == 0) {
                es.push_back({a, b});
                vs[a].weight -= 2;
                vs[b].weight -= 2;
            }
        }
        WeightedGraph g = WeightedGraph::make(std::move(vs), std::move(es), "");
        if (is_negative_definite(g).negative_definite) return g;
    }
    return chain("v", std::vector<int>(max_vertices, -2), "");
}

} // namespace resgraph
