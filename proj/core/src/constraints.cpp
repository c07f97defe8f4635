#include "resgraph/constraints.hpp"

#include <algorithm>
#include <sstream>

#include "resgraph/definiteness.hpp"
#include "resgraph/error.hpp"
#include "resgraph/topology.hpp"

namespace resgraph {

namespace {

std::string cycle_notation(const WeightedGraph& g, const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> done(n, false);
    std::ostringstream os;
    for (int i = 0; i < n; ++i) {
        if (done[i] || perm[i] == i) continue;
        os << '(';
        int j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = true;
            if (!first) os << ' ';
            os << g.vertices[j].id;
            first = false;
            j = perm[j];
        }
        os << ')';
    }
    std::string s = os.str();
    return s.empty() ? "identity" : s;
}

std::string order_text(const std::vector<std::string>& order) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < order.size(); ++i) {
        if (i) os << ", ";
        os << order[i];
    }
    os << ']';
    return os.str();
}

// Vertices reachable from start by walking onto rational vertices only.
// The start itself may have positive genus; every later step must not.
std::vector<bool> rational_reach(const WeightedGraph& g, int start) {
    std::vector<bool> reached(g.vertex_count(), false);
    std::vector<int> stack{start};
    std::vector<bool> visited(g.vertex_count(), false);
    visited[start] = true;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : g.neighbors(x)) {
            if (visited[y] || g.vertices[y].genus != 0) continue;
            visited[y] = true;
            reached[y] = true;
            stack.push_back(y);
        }
    }
    return reached;
}

} // namespace

ConstraintReport derive_constraints(const WeightedGraph& g, const ConstraintOptions& opts) {
    if (!is_negative_definite(g).negative_definite)
        fail(Errc::not_negative_definite, "constraint derivation requires a negative definite graph");

    ConstraintReport report;
    report.graph = g;
    report.essential = essential_vertices(g);

    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) report.statuses[{g.vertices[u].id, g.vertices[v].id}] = {};

    // contraction orders first: they decide the trivial arrows
    const TrivialArrowSet trivial = trivial_arrows(g, opts.arrow_limit);
    for (const auto& arrow : trivial.arrows) {
        ArrowStatus& st = report.statuses.at(arrow);
        st.verdict = ArrowVerdict::trivial;
        st.justifications.push_back("trivial-arrow: contraction order " +
                                    order_text(trivial.witness.at(arrow)));
    }

    // no connecting path through rational vertices forbids the pair
    for (int u = 0; u < n; ++u) {
        const std::vector<bool> reached = rational_reach(g, u);
        for (int v = 0; v < n; ++v) {
            if (u == v || reached[v]) continue;
            ArrowStatus& st = report.statuses.at({g.vertices[u].id, g.vertices[v].id});
            if (st.verdict == ArrowVerdict::trivial)
                fail(Errc::inconsistency,
                     "trivial arrow (" + g.vertices[u].id + ", " + g.vertices[v].id +
                         ") has no rational path; the calculus contradicts itself");
            st.verdict = ArrowVerdict::forbidden;
            st.justifications.push_back(
                "rational-path: every path from '" + g.vertices[u].id + "' to '" +
                g.vertices[v].id + "' passes a positive-genus vertex");
        }
    }

    // an automorphism moving an essential vertex forbids the arrow to its image
    const auto autos = automorphisms(g, opts.automorphism_limit);
    for (const auto& perm : autos) {
        for (int u = 0; u < n; ++u) {
            if (perm[u] == u) continue;
            if (!report.essential.contains(g.vertices[u].id)) continue;
            ArrowStatus& st = report.statuses.at({g.vertices[u].id, g.vertices[perm[u]].id});
            if (st.verdict == ArrowVerdict::trivial)
                fail(Errc::inconsistency,
                     "trivial arrow (" + g.vertices[u].id + ", " + g.vertices[perm[u]].id +
                         ") contradicts the symmetry rule");
            st.verdict = ArrowVerdict::forbidden;
            const std::string just =
                "automorphism-symmetry: " + cycle_notation(g, perm) + " moves '" +
                g.vertices[u].id + "' to '" + g.vertices[perm[u]].id + "'";
            // one citation per rule and pair is enough
            if (std::none_of(st.justifications.begin(), st.justifications.end(),
                             [](const std::string& j) { return j.starts_with("automorphism"); }))
                st.justifications.push_back(just);
        }
    }

    report.certified_in_image = recompute_certified(report);
    return report;
}

std::set<std::string> recompute_certified(const ConstraintReport& r) {
    std::set<std::string> out;
    for (const std::string& v : r.essential) {
        bool clean = true;
        for (const Vertex& u : r.graph.vertices) {
            if (u.id == v) continue;
            if (r.statuses.at({u.id, v}).verdict == ArrowVerdict::possible) {
                clean = false;
                break;
            }
        }
        if (clean) out.insert(v);
    }
    return out;
}

CertifyResult certify(const WeightedGraph& g, const ConstraintOptions& opts) {
    const ConstraintReport report = derive_constraints(g, opts);
    CertifyResult out;
    out.certified = report.certified_in_image;
    out.bijectivity_certified =
        std::all_of(report.statuses.begin(), report.statuses.end(), [](const auto& kv) {
            return kv.second.verdict != ArrowVerdict::possible;
        });
    return out;
}

void validate_known_arrows(const WeightedGraph& g, const KnownArrowSet& known) {
    for (const KnownArrow& a : known.arrows) {
        if (!g.index_of(a.tail))
            fail(Errc::invalid_graph, "known arrow tail '" + a.tail + "' is not a vertex");
        if (!g.index_of(a.head))
            fail(Errc::invalid_graph, "known arrow head '" + a.head + "' is not a vertex");
        if (a.tail == a.head)
            fail(Errc::invalid_graph, "known arrow (" + a.tail + ", " + a.head + ") is a loop");
    }
}

namespace {

void cross_check_against_target(const WeightedGraph& target, const KnownArrowSet& transferred,
                                const ConstraintOptions& opts) {
    const ConstraintReport report = derive_constraints(target, opts);
    for (const KnownArrow& a : transferred.arrows) {
        if (report.statuses.at({a.tail, a.head}).verdict == ArrowVerdict::forbidden)
            fail(Errc::inconsistency,
                 "transferred arrow (" + a.tail + ", " + a.head +
                     ") is forbidden on the target graph; the input data contradicts the rules");
    }
}

} // namespace

KnownArrowSet transfer_subgraph(const WeightedGraph& small, const WeightedGraph& big,
                                const std::map<std::string, std::string>& embedding,
                                const KnownArrowSet& known, const ConstraintOptions& opts) {
    if (!is_negative_definite(big).negative_definite)
        fail(Errc::not_negative_definite, "the containing graph must be negative definite");
    validate_known_arrows(small, known);

    const int n = small.vertex_count();
    if (static_cast<int>(embedding.size()) != n)
        fail(Errc::not_an_embedding, "embedding must name every vertex of the subgraph");
    std::vector<int> image(n, -1);
    std::set<int> hit;
    for (const auto& [from, to] : embedding) {
        auto i = small.index_of(from);
        auto j = big.index_of(to);
        if (!i || !j)
            fail(Errc::not_an_embedding,
                 "embedding names unknown vertex '" + from + "' or '" + to + "'");
        image[*i] = *j;
        hit.insert(*j);
    }
    if (static_cast<int>(hit.size()) != n) fail(Errc::not_an_embedding, "embedding is not injective");
    for (int i = 0; i < n; ++i) {
        const Vertex& a = small.vertices[i];
        const Vertex& b = big.vertices[image[i]];
        if (a.genus != b.genus || a.weight != b.weight)
            fail(Errc::not_an_embedding, "weights or genus differ at vertex '" + a.id + "'");
        for (int j = i + 1; j < n; ++j) {
            if (small.multiplicity(i, j) > big.multiplicity(image[i], image[j]))
                fail(Errc::not_an_embedding,
                     "edge between '" + a.id + "' and '" + small.vertices[j].id +
                         "' is missing in the containing graph");
        }
    }

    KnownArrowSet out;
    out.graph_name = big.name;
    for (const KnownArrow& a : known.arrows) {
        KnownArrow t;
        t.tail = embedding.at(a.tail);
        t.head = embedding.at(a.head);
        t.provenance = "subgraph transfer";
        if (!a.provenance.empty()) t.provenance += " of: " + a.provenance;
        out.arrows.push_back(std::move(t));
    }
    cross_check_against_target(big, out, opts);
    return out;
}

KnownArrowSet transfer_weight_decrease(const WeightedGraph& g1, const WeightedGraph& g2,
                                       const std::map<std::string, std::string>& matching,
                                       const KnownArrowSet& known_on_g2,
                                       const ConstraintOptions& opts) {
    if (!is_negative_definite(g1).negative_definite)
        fail(Errc::not_negative_definite, "the higher-weight graph must be negative definite");
    const WeightPadding padding = pad_weight_decrease(g1, g2, matching);
    validate_known_arrows(g2, known_on_g2);

    std::map<std::string, std::string> inverse;
    for (const auto& [from, to] : matching) inverse[to] = from;

    KnownArrowSet out;
    out.graph_name = g1.name;
    for (const KnownArrow& a : known_on_g2.arrows) {
        KnownArrow t;
        t.tail = inverse.at(a.tail);
        t.head = inverse.at(a.head);
        t.provenance = "weight-decrease transfer; padded witness adds " +
                       std::to_string(padding.added.size()) + " unit leaves";
        if (!a.provenance.empty()) t.provenance += "; of: " + a.provenance;
        out.arrows.push_back(std::move(t));
    }
    cross_check_against_target(g1, out, opts);
    return out;
}

ExtremalResult is_extremal(const WeightedGraph& g, const ConstraintOptions& opts) {
    for (const Vertex& v : g.vertices)
        if (v.genus != 0)
            fail(Errc::positive_genus, "vertex '" + v.id + "' has positive genus");
    if (first_betti(g) != 0) fail(Errc::has_loop, "the graph has a loop");
    if (!is_negative_definite(g).negative_definite)
        fail(Errc::not_negative_definite, "extremality is defined for negative definite graphs");

    const size_t base_count = trivial_arrows(g, opts.arrow_limit).arrows.size();

    ExtremalResult out;
    out.extremal = true;
    for (int i = 0; i < g.vertex_count(); ++i) {
        WeightedGraph bumped = g;
        bumped.vertices[i].weight += 1;
        ExtremalWitness w;
        w.vertex = g.vertices[i].id;
        const DefinitenessCertificate cert = is_negative_definite(bumped);
        if (!cert.negative_definite) {
            w.clause = ExtremalClause::definiteness_breaks;
            w.detail = "weight +1 breaks definiteness (minor " +
                       std::to_string(*cert.failed_index) + " fails)";
        } else {
            const size_t bumped_count = trivial_arrows(bumped, opts.arrow_limit).arrows.size();
            if (bumped_count > base_count) {
                w.clause = ExtremalClause::trivial_arrows_increase;
                w.detail = "trivial arrows grow from " + std::to_string(base_count) + " to " +
                           std::to_string(bumped_count);
            } else {
                w.clause = ExtremalClause::none;
                w.detail = "still definite with " + std::to_string(bumped_count) +
                           " trivial arrows (was " + std::to_string(base_count) + ")";
                out.extremal = false;
            }
        }
        out.witnesses.push_back(std::move(w));
    }
    return out;
}

namespace {

bool essential_restriction_ok(const std::set<ArrowKey>& digraph,
                              const std::set<std::string>& essential) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [tail, head] : digraph) {
        if (!essential.contains(tail) || !essential.contains(head)) continue;
        if (digraph.contains({head, tail})) return false; // 2-cycle
        adj[tail].push_back(head);
    }
    // acyclicity by DFS coloring
    std::map<std::string, int> color; // 0 new, 1 active, 2 done
    auto dfs = [&](auto&& self, const std::string& x) -> bool {
        color[x] = 1;
        for (const std::string& y : adj[x]) {
            if (color[y] == 1) return false;
            if (color[y] == 0 && !self(self, y)) return false;
        }
        color[x] = 2;
        return true;
    };
    for (const auto& [x, _] : adj) {
        if (color[x] == 0 && !dfs(dfs, x)) return false;
    }
    return true;
}

// Adjacency is a closure inclusion, so it composes. Compositions that use
// at least one candidate (non-trivial) arrow must already be in the
// digraph; compositions purely of trivial arrows are left to the calculus.
bool closed_through_candidates(const std::set<ArrowKey>& digraph,
                               const std::set<ArrowKey>& candidates) {
    for (const auto& [x, y1] : digraph) {
        for (const auto& [y2, z] : digraph) {
            if (y1 != y2 || x == z) continue;
            const bool uses_candidate =
                candidates.contains({x, y1}) || candidates.contains({y2, z});
            if (uses_candidate && !digraph.contains({x, z})) return false;
        }
    }
    return true;
}

} // namespace

std::vector<std::set<ArrowKey>> enumerate_consistent_digraphs(const ConstraintReport& r,
                                                              int cap) {
    std::vector<ArrowKey> possible;
    std::set<ArrowKey> trivial;
    for (const auto& [key, status] : r.statuses) {
        if (status.verdict == ArrowVerdict::possible) possible.push_back(key);
        if (status.verdict == ArrowVerdict::trivial) trivial.insert(key);
    }
    if (static_cast<int>(possible.size()) > cap)
        fail(Errc::too_many_possible,
             std::to_string(possible.size()) + " possible pairs exceed the cap of " +
                 std::to_string(cap));

    std::vector<std::set<ArrowKey>> out;
    const size_t subsets = size_t{1} << possible.size();
    for (size_t mask = 0; mask < subsets; ++mask) {
        std::set<ArrowKey> digraph = trivial;
        std::set<ArrowKey> chosen;
        for (size_t b = 0; b < possible.size(); ++b) {
            if (mask & (size_t{1} << b)) {
                digraph.insert(possible[b]);
                chosen.insert(possible[b]);
            }
        }
        if (!essential_restriction_ok(digraph, r.essential)) continue;
        if (!closed_through_candidates(digraph, chosen)) continue;
        out.push_back(std::move(digraph));
    }
    return out;
}

} // namespace resgraph
