#pragma once

// Closed-form lower bounds on k(G) and the diamond-free plane-graph formula.
// Bounds are reported raw and may be negative.

#include <compnum/cliques.hpp>
#include <compnum/ecc.hpp>
#include <compnum/graph.hpp>
#include <compnum/realizer.hpp>

#include <array>
#include <optional>
#include <vector>

namespace compnum {

/// theta_e - n + 2
inline int opsut_bound(const Graph & g) { return theta_e(g) - g.order() + 2; }

/// theta_e - n + p, for p the predator index or a lower bound on it.
inline int predator_bound(const Graph & g, int p) { return theta_e(g) - g.order() + p; }

/// For 1 <= k <= theta: (least |union| over any theta-k+1 cover cliques) - theta + k.
/// Taking the least union over all subsets makes the bound hold whatever
/// labelling of the cover the accompanying digraph induces.
inline int union_tail_bound(const CliqueCover & cover, int k)
{
    const int theta = cover.size();
    if (k < 1 || k > theta)
        throw PreconditionError("union_tail_bound: k must lie in 1..theta");
    if (theta > 24)
        throw PreconditionError("union_tail_bound: subset enumeration limited to 24 cliques");
    const int pick = theta - k + 1;
    int least = kMaxVertices + 1;
    std::vector<int> idx(static_cast<std::size_t>(pick));
    auto recurse = [&](auto && self, int depth, int from, VertexSet acc) -> void {
        if (depth == pick) {
            least = std::min(least, acc.size());
            return;
        }
        for (int i = from; i <= theta - (pick - depth); ++i)
            self(self, depth + 1, i + 1, acc | cover.cliques[static_cast<std::size_t>(i)]);
    };
    recurse(recurse, 0, 0, VertexSet{});
    return least - theta + k;
}

struct UnionTail {
    int k = 0;
    int value = 0;
    std::vector<int> per_k; // per_k[k-1]
};

/// Best union-tail bound over k; ties go to the smallest k.
inline UnionTail best_union_tail(const CliqueCover & cover)
{
    UnionTail out;
    for (int k = 1; k <= cover.size(); ++k) {
        int b = union_tail_bound(cover, k);
        out.per_k.push_back(b);
        if (k == 1 || b > out.value) {
            out.k = k;
            out.value = b;
        }
    }
    return out;
}

/// Counts (c_2, c_3, c_4) of maximal cliques by size; isolated vertices are not counted.
inline std::array<int, 3> clique_census(const Graph & g)
{
    std::array<int, 3> c{0, 0, 0};
    for (auto q : edge_maximal_cliques(g)) {
        if (q.size() >= 5)
            throw PreconditionError("clique_census: maximal clique of size >= 5, graph cannot be planar");
        ++c[static_cast<std::size_t>(q.size() - 2)];
    }
    return c;
}

struct PlanarFormula {
    int faces = 0;
    int k_formula = 0;
    std::array<int, 3> census{};
    int theta_e = 0;
    /// theta_e == |E| - 2 c_3 - 5 c_4
    bool theta_identity = false;
    std::optional<int> exact_k;
    /// k_formula == exact_k, when the exact value is available.
    std::optional<bool> consistent;
};

/// Planarity is the caller's promise; only connectivity, diamond-freeness and
/// |E| <= 3n - 6 are checked. Without `exact_k`, k(G) is computed when n <= 10.
inline PlanarFormula planar_formula_check(const Graph & g, int p, std::optional<int> exact_k = std::nullopt)
{
    const int n = g.order(), m = g.edge_count();
    if (n == 0 || !g.is_connected())
        throw PreconditionError("planar_formula_check: graph is not connected");
    if (auto d = is_diamond_free(g); !d.diamond_free)
        throw PreconditionError("planar_formula_check: graph contains a diamond");
    if (n >= 3 && m > 3 * n - 6)
        throw PreconditionError("planar_formula_check: more than 3n - 6 edges, cannot be planar");

    PlanarFormula out;
    out.census = clique_census(g);
    out.faces = m - n + 2;
    out.k_formula = out.faces + p - 2 * out.census[1] - 5 * out.census[2] - 2;
    out.theta_e = theta_e(g);
    out.theta_identity = out.theta_e == m - 2 * out.census[1] - 5 * out.census[2];
    out.exact_k = exact_k;
    if (!out.exact_k && n <= 10)
        out.exact_k = competition_number(g).k;
    if (out.exact_k)
        out.consistent = out.k_formula == *out.exact_k;
    return out;
}

struct BoundsReport {
    int n = 0;
    int edges = 0;
    int theta_e = 0;
    int opsut = 0;
    std::optional<int> exact_k;
    std::optional<int> exact_p;
    std::optional<int> predator_bound; // theta_e - n + p with the exact p
    std::optional<UnionTail> union_tail;
    std::optional<std::array<int, 3>> census;
    std::optional<PlanarFormula> planar;
    /// Every maximal clique occupies an edge; then k = theta_e - n + p.
    bool occupied_condition = false;
    std::optional<bool> occupied_equality;
};

/// Gathers every bound. Exact k and p come from the search when n <= `exact_limit`.
inline BoundsReport bounds_report(const Graph & g, int exact_limit = 10)
{
    BoundsReport r;
    r.n = g.order();
    r.edges = g.edge_count();
    auto cover = min_edge_clique_cover(g);
    r.theta_e = cover.size();
    r.opsut = r.theta_e - r.n + 2;
    if (r.n <= exact_limit) {
        auto ex = exact_indices(g);
        r.exact_k = ex.k;
        r.exact_p = ex.p;
        r.predator_bound = r.theta_e - r.n + ex.p;
    }
    if (cover.size() > 0 && cover.size() <= 24)
        r.union_tail = best_union_tail(cover);
    try {
        r.census = clique_census(g);
    } catch (const PreconditionError &) {
    }
    r.occupied_condition = r.edges > 0 && every_clique_occupies_an_edge(g);
    if (r.occupied_condition && r.predator_bound)
        r.occupied_equality = *r.exact_k == *r.predator_bound;
    if (r.exact_p) {
        try {
            r.planar = planar_formula_check(g, *r.exact_p, r.exact_k);
        } catch (const PreconditionError &) {
        }
    }
    return r;
}

} // namespace compnum
