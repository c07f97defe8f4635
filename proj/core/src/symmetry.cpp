#include "resgraph/symmetry.hpp"

#include <algorithm>

#include "resgraph/error.hpp"

namespace resgraph {

namespace {

struct MatchContext {
    const WeightedGraph& from;
    const WeightedGraph& to;
    bool exact_multiplicity; // false: mult(from) <= mult(to) suffices
};

bool vertex_compatible(const MatchContext& ctx, int i, int j) {
    const Vertex& a = ctx.from.vertices[i];
    const Vertex& b = ctx.to.vertices[j];
    if (a.genus != b.genus || a.weight != b.weight) return false;
    if (ctx.exact_multiplicity) return ctx.from.degree(i) == ctx.to.degree(j);
    return ctx.from.degree(i) <= ctx.to.degree(j);
}

bool edges_compatible(const MatchContext& ctx, const std::vector<int>& image, int i, int j) {
    for (int k = 0; k < i; ++k) {
        const int m_from = ctx.from.multiplicity(k, i);
        const int m_to = ctx.to.multiplicity(image[k], j);
        if (ctx.exact_multiplicity ? m_from != m_to : m_from > m_to) return false;
    }
    return true;
}

// Backtracking over images of vertex 0, 1, ... in increasing candidate
// order, so matches come out in lexicographic order. Returns false from
// the visitor to stop the search.
template <typename Visitor>
void search_mappings(const MatchContext& ctx, Visitor&& visit) {
    const int n = ctx.from.vertex_count();
    const int m = ctx.to.vertex_count();
    std::vector<int> image;
    image.reserve(n);
    std::vector<bool> used(m, false);
    bool stop = false;

    auto rec = [&](auto&& self, int i) -> void {
        if (stop) return;
        if (i == n) {
            if (!visit(image)) stop = true;
            return;
        }
        for (int j = 0; j < m && !stop; ++j) {
            if (used[j]) continue;
            if (!vertex_compatible(ctx, i, j)) continue;
            if (!edges_compatible(ctx, image, i, j)) continue;
            used[j] = true;
            image.push_back(j);
            self(self, i + 1);
            image.pop_back();
            used[j] = false;
        }
    };
    rec(rec, 0);
}

void check_limit(const WeightedGraph& g, int search_limit) {
    if (g.vertex_count() > search_limit)
        fail(Errc::search_limit,
             "graph has " + std::to_string(g.vertex_count()) +
                 " vertices, above the search limit of " + std::to_string(search_limit) +
                 "; raise the limit to proceed");
}

} // namespace

std::vector<std::vector<int>> automorphisms(const WeightedGraph& g, int search_limit) {
    check_limit(g, search_limit);
    std::vector<std::vector<int>> out;
    MatchContext ctx{g, g, true};
    search_mappings(ctx, [&](const std::vector<int>& image) {
        out.push_back(image);
        return true;
    });
    return out;
}

std::optional<std::vector<int>> are_isomorphic(const WeightedGraph& g1, const WeightedGraph& g2,
                                               int search_limit) {
    check_limit(g1, search_limit);
    check_limit(g2, search_limit);
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    std::optional<std::vector<int>> found;
    MatchContext ctx{g1, g2, true};
    search_mappings(ctx, [&](const std::vector<int>& image) {
        found = image;
        return false; // first hit is the lexicographically least
    });
    return found;
}

std::optional<std::vector<int>> find_embedding(const WeightedGraph& small,
                                               const WeightedGraph& big, int search_limit) {
    check_limit(small, search_limit);
    check_limit(big, search_limit);
    if (small.vertex_count() > big.vertex_count()) return std::nullopt;
    std::optional<std::vector<int>> found;
    MatchContext ctx{small, big, false};
    search_mappings(ctx, [&](const std::vector<int>& image) {
        found = image;
        return false;
    });
    return found;
}

bool acts_transitively(const WeightedGraph& g, const std::vector<std::vector<int>>& autos) {
    const int n = g.vertex_count();
    std::vector<bool> in_orbit(n, false);
    in_orbit[0] = true;
    // closure of {0} under the given permutations
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& p : autos) {
            for (int i = 0; i < n; ++i) {
                if (in_orbit[i] && !in_orbit[p[i]]) {
                    in_orbit[p[i]] = true;
                    grew = true;
                }
            }
        }
    }
    return std::all_of(in_orbit.begin(), in_orbit.end(), [](bool b) { return b; });
}

std::map<std::string, std::string> as_id_map(const WeightedGraph& from, const WeightedGraph& to,
                                             const std::vector<int>& mapping) {
    std::map<std::string, std::string> out;
    for (int i = 0; i < static_cast<int>(mapping.size()); ++i)
        out[from.vertices[i].id] = to.vertices[mapping[i]].id;
    return out;
}

} // namespace resgraph
