#include <doctest.h>

#include <algorithm>

#include "resgraph/constraints.hpp"
#include "resgraph/corpus.hpp"
#include "resgraph/definiteness.hpp"
#include "resgraph/error.hpp"

using namespace resgraph;

namespace {

ArrowVerdict verdict(const ConstraintReport& r, const std::string& tail,
                     const std::string& head) {
    return r.statuses.at({tail, head}).verdict;
}

} // namespace

TEST_CASE("A2: the swap forbids both directions and certifies both vertices") {
    const ConstraintReport r = derive_constraints(corpus_get("A2").graph);
    CHECK(verdict(r, "a1", "a2") == ArrowVerdict::forbidden);
    CHECK(verdict(r, "a2", "a1") == ArrowVerdict::forbidden);
    CHECK(r.certified_in_image == std::set<std::string>{"a1", "a2"});
    const CertifyResult c = certify(corpus_get("A2").graph);
    CHECK(c.bijectivity_certified);
}

TEST_CASE("genus-1 center: rationality certifies the center, symmetry kills leaf pairs") {
    const ConstraintReport r = derive_constraints(corpus_get("genus1-star").graph);
    CHECK(verdict(r, "p", "c") == ArrowVerdict::forbidden);
    CHECK(verdict(r, "q", "c") == ArrowVerdict::forbidden);
    CHECK(verdict(r, "p", "q") == ArrowVerdict::forbidden);
    CHECK(verdict(r, "q", "p") == ArrowVerdict::forbidden);
    CHECK(verdict(r, "c", "p") == ArrowVerdict::possible);
    CHECK(verdict(r, "c", "q") == ArrowVerdict::possible);
    CHECK(r.certified_in_image == std::set<std::string>{"c"});
    // the leaf pair is forbidden by both rules, each cited once
    const auto& both = r.statuses.at({"p", "q"}).justifications;
    CHECK(both.size() == 2);
}

TEST_CASE("non-minimal chain: trivial arrows into the middle, symmetry across the ends") {
    const ConstraintReport r = derive_constraints(corpus_get("nonmin-313").graph);
    CHECK(verdict(r, "a1", "a2") == ArrowVerdict::trivial);
    CHECK(verdict(r, "a3", "a2") == ArrowVerdict::trivial);
    CHECK(verdict(r, "a1", "a3") == ArrowVerdict::forbidden);
    CHECK(verdict(r, "a3", "a1") == ArrowVerdict::forbidden);
    CHECK(r.essential == std::set<std::string>{"a1", "a3"});
}

TEST_CASE("statuses cover every ordered pair exactly once") {
    for (const char* name : {"A4", "D4", "nonmin-313", "genus1-star"}) {
        const WeightedGraph& g = corpus_get(name).graph;
        const ConstraintReport r = derive_constraints(g);
        const size_t n = static_cast<size_t>(g.vertex_count());
        CHECK(r.statuses.size() == n * (n - 1));
    }
}

TEST_CASE("no pair is both trivial and forbidden anywhere in the corpus") {
    for (const CorpusEntry& entry : corpus_entries()) {
        if (!is_negative_definite(entry.graph).negative_definite) continue;
        // derive_constraints aborts on any internal conflict
        CHECK_NOTHROW(derive_constraints(entry.graph));
    }
}

TEST_CASE("the symmetry rule fires for every automorphism image of an essential vertex") {
    for (const char* name : {"A3", "D4", "star-333", "cycle3-w3"}) {
        const WeightedGraph& g = corpus_get(name).graph;
        const ConstraintReport r = derive_constraints(g);
        for (const auto& perm : automorphisms(g)) {
            for (int u = 0; u < g.vertex_count(); ++u) {
                if (perm[u] == u || !r.essential.contains(g.vertices[u].id)) continue;
                CHECK(verdict(r, g.vertices[u].id, g.vertices[perm[u]].id) ==
                      ArrowVerdict::forbidden);
            }
        }
    }
}

TEST_CASE("vertex-transitive graphs get full bijectivity certificates") {
    for (const char* name : {"A1", "A2", "cycle3-w3"}) {
        const WeightedGraph& g = corpus_get(name).graph;
        REQUIRE(acts_transitively(g, automorphisms(g)));
        CHECK(certify(g).bijectivity_certified);
    }
}

TEST_CASE("positive-genus vertices are always certified") {
    const CertifyResult star = certify(corpus_get("genus1-star").graph);
    CHECK(star.certified.contains("c"));
    const CertifyResult single = certify(corpus_get("genus2-vertex").graph);
    CHECK(single.certified.contains("g"));
    CHECK(single.bijectivity_certified); // no pairs at all
}

TEST_CASE("certification is monotone: weakening forbidden statuses never grows the set") {
    for (const char* name : {"A3", "D4", "genus1-star", "star-333"}) {
        ConstraintReport r = derive_constraints(corpus_get(name).graph);
        const std::set<std::string> certified = recompute_certified(r);
        for (const auto& [key, status] : r.statuses) {
            if (status.verdict != ArrowVerdict::forbidden) continue;
            ConstraintReport weakened = r;
            weakened.statuses.at(key).verdict = ArrowVerdict::possible;
            const std::set<std::string> fewer = recompute_certified(weakened);
            CHECK(std::includes(certified.begin(), certified.end(), fewer.begin(), fewer.end()));
        }
    }
}

TEST_CASE("relabeling a graph relabels its report") {
    const WeightedGraph& g = corpus_get("chain-232").graph;
    std::vector<Vertex> vs(g.vertices.rbegin(), g.vertices.rend());
    const int n = g.vertex_count();
    std::vector<Edge> es;
    for (const Edge& e : g.edges) es.push_back({n - 1 - e.u, n - 1 - e.v});
    const WeightedGraph h = WeightedGraph::make(std::move(vs), std::move(es));
    const ConstraintReport rg = derive_constraints(g);
    const ConstraintReport rh = derive_constraints(h);
    for (const auto& [key, status] : rg.statuses)
        CHECK(status.verdict == rh.statuses.at(key).verdict); // ids unchanged, order reversed
    CHECK(rg.certified_in_image == rh.certified_in_image);
}

TEST_CASE("subgraph transfer maps arrows through the embedding") {
    const WeightedGraph& a2 = corpus_get("A2").graph;
    const WeightedGraph& a3 = corpus_get("A3").graph;
    const std::map<std::string, std::string> embedding{{"a1", "a1"}, {"a2", "a2"}};

    const KnownArrowSet empty{"A2", {}};
    CHECK(transfer_subgraph(a2, a3, embedding, empty).arrows.empty());

    // arrows landing on possible pairs of the target transfer cleanly
    const KnownArrowSet one{"A2", {{"a1", "a2", "hypothesis"}}};
    // A3's (a1,a2) pair is possible (the end swap does not move a1 to a2)
    const ConstraintReport r3 = derive_constraints(a3);
    REQUIRE(r3.statuses.at({"a1", "a2"}).verdict == ArrowVerdict::possible);
    const KnownArrowSet moved = transfer_subgraph(a2, a3, embedding, one);
    REQUIRE(moved.arrows.size() == 1);
    CHECK(moved.arrows[0].tail == "a1");
    CHECK(moved.arrows[0].head == "a2");
    CHECK(moved.arrows[0].provenance.find("subgraph transfer") != std::string::npos);
}

TEST_CASE("subgraph transfer rejects non-embeddings") {
    const WeightedGraph& a2 = corpus_get("A2").graph;
    const WeightedGraph& chain25 = corpus_get("chain-25").graph; // weights differ
    CHECK_THROWS_AS(
        transfer_subgraph(a2, chain25, {{"a1", "a1"}, {"a2", "a2"}}, KnownArrowSet{}),
        Error);
}

TEST_CASE("transfer refuses to assert an arrow the target forbids") {
    // both directions between A2's vertices are forbidden by the swap
    const WeightedGraph& a2 = corpus_get("A2").graph;
    const WeightedGraph a2dec =
        WeightedGraph::make({{"a1", 0, -2}, {"a2", 0, -4}}, {{0, 1}}, "A2-dec");
    const KnownArrowSet bad{"A2-dec", {{"a1", "a2", "unsound input"}}};
    try {
        transfer_weight_decrease(a2, a2dec, {{"a1", "a1"}, {"a2", "a2"}}, bad);
        FAIL("expected the cross-check to fire");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::inconsistency);
    }
}

TEST_CASE("weight-decrease transfer pulls arrows back and records the padding") {
    const WeightedGraph g1 =
        WeightedGraph::make({{"a", 0, -2}, {"b", 0, -3}}, {{0, 1}}, "chain23");
    const WeightedGraph g2 =
        WeightedGraph::make({{"a", 0, -2}, {"b", 0, -5}}, {{0, 1}}, "chain25");
    const std::map<std::string, std::string> matching{{"a", "a"}, {"b", "b"}};

    CHECK(transfer_weight_decrease(g1, g2, matching, KnownArrowSet{}).arrows.empty());

    const KnownArrowSet identical =
        transfer_weight_decrease(g1, g1, matching, KnownArrowSet{"", {{"a", "b", "x"}}});
    REQUIRE(identical.arrows.size() == 1);
    CHECK(identical.arrows[0].tail == "a");

    const KnownArrowSet pulled =
        transfer_weight_decrease(g1, g2, matching, KnownArrowSet{"", {{"a", "b", "x"}}});
    REQUIRE(pulled.arrows.size() == 1);
    CHECK(pulled.arrows[0].provenance.find("2 unit leaves") != std::string::npos);
}

TEST_CASE("extremality of the three smallest cases") {
    const ExtremalResult single2 = is_extremal(corpus_get("A1").graph);
    CHECK_FALSE(single2.extremal);
    REQUIRE(single2.witnesses.size() == 1);
    CHECK(single2.witnesses[0].clause == ExtremalClause::none);

    const ExtremalResult single1 = is_extremal(WeightedGraph::make({{"v", 0, -1}}, {}));
    CHECK(single1.extremal);
    CHECK(single1.witnesses[0].clause == ExtremalClause::definiteness_breaks);

    const ExtremalResult a2 = is_extremal(corpus_get("A2").graph);
    CHECK(a2.extremal);
    REQUIRE(a2.witnesses.size() == 2);
    CHECK(a2.witnesses[0].clause == ExtremalClause::trivial_arrows_increase);
    CHECK(a2.witnesses[1].clause == ExtremalClause::trivial_arrows_increase);
}

TEST_CASE("extremality preconditions are named individually") {
    auto code = [](const WeightedGraph& g) {
        try {
            is_extremal(g);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::usage;
    };
    CHECK(code(corpus_get("genus1-star").graph) == Errc::positive_genus);
    CHECK(code(corpus_get("cycle3-w3").graph) == Errc::has_loop);
    CHECK(code(corpus_get("double-edge-35").graph) == Errc::has_loop);
    const WeightedGraph indefinite = WeightedGraph::make({{"v", 0, 1}}, {});
    CHECK(code(indefinite) == Errc::not_negative_definite);
}

TEST_CASE("digraph enumeration honors the structural constraints") {
    // no possible pairs: exactly the trivial digraph
    const ConstraintReport a2 = derive_constraints(corpus_get("A2").graph);
    const auto only = enumerate_consistent_digraphs(a2);
    REQUIRE(only.size() == 1);
    CHECK(only[0].empty());

    // one possible pair: include it or not
    ConstraintReport one = a2;
    one.statuses.at({"a1", "a2"}).verdict = ArrowVerdict::possible;
    CHECK(enumerate_consistent_digraphs(one).size() == 2);

    // an opposite possible pair: the 2-cycle is excluded
    ConstraintReport both = one;
    both.statuses.at({"a2", "a1"}).verdict = ArrowVerdict::possible;
    const auto three = enumerate_consistent_digraphs(both);
    CHECK(three.size() == 3);
    for (const auto& digraph : three)
        CHECK_FALSE(digraph.contains({"a1", "a2"}) && digraph.contains({"a2", "a1"}));

    // the trivial digraph is always element zero
    const ConstraintReport nm = derive_constraints(corpus_get("nonmin-313").graph);
    const auto digraphs = enumerate_consistent_digraphs(nm);
    REQUIRE(!digraphs.empty());
    CHECK(digraphs[0] == std::set<ArrowKey>{{"a1", "a2"}, {"a3", "a2"}});

    // the cap is enforced
    CHECK_THROWS_AS(enumerate_consistent_digraphs(nm, 0), Error);
}

TEST_CASE("candidate digraphs must close compositions through candidate arrows") {
    // essential chain with one trivial arrow (b, m) and possible (a, b):
    // choosing (a, b) forces (a, m) as well
    const WeightedGraph g = WeightedGraph::make(
        {{"a", 0, -2}, {"b", 0, -3}, {"m", 0, -2}, {"x", 0, -1}, {"y", 0, -7}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    // build a synthetic report directly
    ConstraintReport r;
    r.graph = g;
    r.essential = {"a", "b", "y"};
    for (const Vertex& u : g.vertices)
        for (const Vertex& v : g.vertices)
            if (u.id != v.id) r.statuses[{u.id, v.id}] = {ArrowVerdict::forbidden, {}};
    r.statuses.at({"b", "m"}) = {ArrowVerdict::trivial, {}};
    r.statuses.at({"a", "b"}) = {ArrowVerdict::possible, {}};
    r.statuses.at({"a", "m"}) = {ArrowVerdict::possible, {}};

    const auto digraphs = enumerate_consistent_digraphs(r);
    // subsets: {}, {(a,b)} -> must include (a,m): rejected, {(a,m)}, {(a,b),(a,m)}
    CHECK(digraphs.size() == 3);
    for (const auto& d : digraphs)
        if (d.contains({"a", "b"})) CHECK(d.contains({"a", "m"}));
}
