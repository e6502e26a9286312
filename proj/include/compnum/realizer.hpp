#pragma once

// Exact competition number k(G) and primary predator index p(G).
//
// Search model. Put the k added isolates at the bottom of an acyclic order and
// the vertices of G above them as u_1 < ... < u_n. Every in-neighbourhood of
// size >= 2 is a clique of G lying strictly above its sink, and the union of
// these cliques covers E(G). Isolates never send arcs (their prey would have a
// singleton in-neighbourhood) and singleton in-neighbourhoods are never kept,
// since they only add prey. Call u_j the lowest vertex of a clique; a family of
// cliques fits the order iff, for every j, at most k + j - 1 cliques have
// their lowest vertex among u_1..u_j (sinks are then dealt out greedily).
//
// The search places vertices bottom-up. When u is placed, its still-uncovered
// edges to higher vertices must be covered by new cliques whose lowest vertex
// is u. Those cliques can be taken maximal in the graph induced on u and the
// unplaced vertices, and irredundant with respect to u's edges: a redundant one
// can move up to its next-lowest vertex, which never tightens the budget.
// Layers are keyed by (placed set, covered edges among unplaced vertices) and
// keep the smallest clique count, which is the prey count of the witness.

#include <compnum/cliques.hpp>
#include <compnum/ecc.hpp>
#include <compnum/graph.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace compnum {

struct SinkAssignment {
    Clique clique;
    Vertex sink = -1;
};

/// Acyclic digraph whose competition graph is G plus `k` isolates (indices n..n+k-1).
struct Realization {
    Digraph digraph;
    int k = 0;
    AcyclicLabeling labeling;
    int prey_count = 0;
    int predator_count = 0;
    std::vector<SinkAssignment> sink_map;
};

/// Checks C(D) = G + I_k and acyclicity, then fills in the derived fields.
inline Realization make_realization(const Graph & g, Digraph d, std::vector<SinkAssignment> sinks = {})
{
    if (d.order() < g.order())
        throw Error("realization: digraph has fewer vertices than the graph");
    const int k = d.order() - g.order();
    if (!(competition_graph(d) == add_isolated(g, k)))
        throw Error("realization: competition graph mismatch");
    auto labeling = acyclic_labeling(d);
    if (!std::holds_alternative<AcyclicLabeling>(labeling))
        throw Error("realization: digraph has a directed cycle");
    Realization r;
    r.k = k;
    r.labeling = std::get<AcyclicLabeling>(labeling);
    r.prey_count = d.prey().size();
    r.predator_count = d.order() - r.prey_count;
    r.digraph = std::move(d);
    r.sink_map = std::move(sinks);
    return r;
}

inline bool verifies(const Graph & g, const Realization & r)
{
    return r.digraph.order() == g.order() + r.k && competition_graph(r.digraph) == add_isolated(g, r.k) &&
           r.labeling.is_valid_for(r.digraph) && r.prey_count == r.digraph.prey().size() &&
           r.prey_count + r.predator_count == r.digraph.order();
}

namespace detail {
    class OrderlySearch {
    public:
        struct Plan {
            int prey = 0;
            std::vector<Vertex> order;              // bottom-up
            std::vector<std::vector<Clique>> chosen; // cliques whose lowest vertex is order[j]
        };

        explicit OrderlySearch(const Graph & g) : g_(g)
        {
            auto edges = g.edges();
            if (edges.size() > 64)
                throw PreconditionError("exact search supports at most 64 edges");
            id_.assign(static_cast<std::size_t>(g.order() * g.order()), -1);
            incident_.assign(static_cast<std::size_t>(g.order()), 0);
            for (std::size_t e = 0; e < edges.size(); ++e) {
                auto [u, v] = edges[e];
                id_[static_cast<std::size_t>(u * g.order() + v)] = id_[static_cast<std::size_t>(v * g.order() + u)] =
                    static_cast<int>(e);
                incident_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << e;
                incident_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << e;
            }
            all_ = edges.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges.size()) - 1;
        }

        std::optional<Plan> solve(int k) const
        {
            const int n = g_.order();
            using Key = std::pair<std::uint64_t, std::uint64_t>;
            struct Node {
                int prey;
                Key parent;
                Vertex placed;
                std::vector<Clique> chosen;
            };
            std::vector<std::map<Key, Node>> layers(static_cast<std::size_t>(n) + 1);
            layers[0].emplace(Key{0, 0}, Node{0, Key{0, 0}, -1, {}});

            for (int j = 0; j < n; ++j) {
                for (const auto & [key, node] : layers[static_cast<std::size_t>(j)]) {
                    VertexSet rest = g_.vertices() - VertexSet(key.first);
                    const int budget = k + j - node.prey;
                    for (Vertex u : rest) {
                        VertexSet above = rest.without(u);
                        VertexSet need;
                        for (Vertex w : g_.neighbors(u) & above)
                            if (!((key.second >> edge_id(u, w)) & 1U))
                                need.insert(w);
                        std::uint64_t keep = inside(above);
                        for (auto & choice : clique_choices(u, g_.neighbors(u) & above, need, budget)) {
                            std::uint64_t cov = key.second;
                            for (Clique c : choice)
                                cov |= inside(c);
                            Key next{key.first | (std::uint64_t{1} << u), cov & keep};
                            int prey = node.prey + static_cast<int>(choice.size());
                            auto & layer = layers[static_cast<std::size_t>(j) + 1];
                            auto it = layer.find(next);
                            if (it == layer.end())
                                layer.emplace(next, Node{prey, key, u, choice});
                            else if (prey < it->second.prey)
                                it->second = Node{prey, key, u, choice};
                        }
                    }
                }
            }

            Key done{g_.vertices().bits(), 0};
            auto & last = layers[static_cast<std::size_t>(n)];
            auto it = last.find(done);
            if (it == last.end())
                return std::nullopt;
            Plan plan;
            plan.prey = it->second.prey;
            Key key = done;
            for (int j = n; j > 0; --j) {
                const Node & node = layers[static_cast<std::size_t>(j)].at(key);
                plan.order.push_back(node.placed);
                plan.chosen.push_back(node.chosen);
                key = node.parent;
            }
            std::reverse(plan.order.begin(), plan.order.end());
            std::reverse(plan.chosen.begin(), plan.chosen.end());
            return plan;
        }

    private:
        int edge_id(Vertex u, Vertex v) const { return id_[static_cast<std::size_t>(u * g_.order() + v)]; }

        std::uint64_t inside(VertexSet s) const
        {
            std::uint64_t m = all_;
            for (Vertex v : g_.vertices() - s)
                m &= ~incident_[static_cast<std::size_t>(v)];
            return m;
        }

        // Irredundant families of cliques {u} + Q, Q maximal in G[nbrs], covering `need`.
        std::vector<std::vector<Clique>> clique_choices(Vertex u, VertexSet nbrs, VertexSet need, int budget) const
        {
            std::vector<std::vector<Clique>> out;
            if (need.empty()) {
                out.emplace_back();
                return out;
            }
            if (budget <= 0)
                return out;
            auto tops = maximal_cliques(g_, nbrs);
            std::set<std::vector<std::uint64_t>> seen;
            std::vector<Clique> chosen;
            auto recurse = [&](auto && self, VertexSet open) -> void {
                if (open.empty()) {
                    for (std::size_t i = 0; i < chosen.size(); ++i) {
                        VertexSet others;
                        for (std::size_t j = 0; j < chosen.size(); ++j)
                            if (j != i)
                                others |= chosen[j];
                        if ((chosen[i] & need).is_subset_of(others))
                            return;
                    }
                    std::vector<std::uint64_t> bits;
                    for (Clique c : chosen)
                        bits.push_back(c.bits());
                    std::sort(bits.begin(), bits.end());
                    if (seen.insert(bits).second) {
                        auto family = chosen;
                        sort_canonically(family);
                        out.push_back(std::move(family));
                    }
                    return;
                }
                if (static_cast<int>(chosen.size()) >= budget)
                    return;
                Vertex w = open.front();
                for (Clique q : tops)
                    if (q.contains(w)) {
                        chosen.push_back(q.with(u));
                        self(self, open - q);
                        chosen.pop_back();
                    }
            };
            recurse(recurse, need);
            return out;
        }

        const Graph & g_;
        std::vector<int> id_;
        std::vector<std::uint64_t> incident_;
        std::uint64_t all_ = 0;
    };

    // Sinks are dealt in order: the isolates, then u_1, u_2, ...; clique number i
    // (ordered by lowest vertex) gets sink number i, which lies strictly below it.
    inline Realization realize_plan(const Graph & g, int k, const OrderlySearch::Plan & plan)
    {
        const int n = g.order();
        std::vector<Vertex> sinks;
        for (int i = 0; i < k; ++i)
            sinks.push_back(n + i);
        sinks.insert(sinks.end(), plan.order.begin(), plan.order.end());
        Digraph d(n + k);
        std::vector<SinkAssignment> map;
        std::size_t next = 0;
        for (const auto & step : plan.chosen)
            for (Clique c : step) {
                Vertex s = sinks.at(next++);
                for (Vertex v : c)
                    d.add_arc(v, s);
                map.push_back({c, s});
            }
        return make_realization(g, std::move(d), std::move(map));
    }

    inline Realization arcless_realization(const Graph & g, int k) { return make_realization(g, Digraph(g.order() + k)); }
}

/// A witness realizing G + I_k with the fewest prey, or nothing when k is too small.
inline std::optional<Realization> realizable_with(const Graph & g, int k)
{
    if (k < 0)
        throw PreconditionError("realizable_with: negative isolate count");
    if (g.edge_count() == 0)
        return detail::arcless_realization(g, k);
    auto plan = detail::OrderlySearch(g).solve(k);
    if (!plan)
        return std::nullopt;
    return detail::realize_plan(g, k, *plan);
}

/// Largest in-degree-0 count over realizations of G + I_k, for any feasible k.
/// Only at k = k(G) is this the primary predator index.
inline std::optional<int> max_predators_with(const Graph & g, int k)
{
    auto r = realizable_with(g, k);
    if (!r)
        return std::nullopt;
    return r->predator_count;
}

struct SearchOptions {
    /// Start the ascent at k = 0 instead of at the theta_e - n + 2 bound.
    bool start_from_zero = false;
};

struct ExactIndices {
    int k = 0;
    int p = 0;
    /// Fewest vertices of nonzero in-degree at k = k(G).
    int min_prey = 0;
    Realization witness;
};

inline ExactIndices exact_indices(const Graph & g, SearchOptions opts = {})
{
    const int n = g.order();
    ExactIndices out;
    if (g.edge_count() == 0) {
        out.witness = detail::arcless_realization(g, 0);
        out.p = n;
        return out;
    }
    detail::OrderlySearch search(g);
    auto maximal = edge_maximal_cliques(g);
    // every maximal clique on its own isolate always works, as does one isolate per edge
    const int ceiling = std::min(g.edge_count(), static_cast<int>(maximal.size()));
    int k = 0;
    if (!opts.start_from_zero && n >= 2)
        k = std::max(0, theta_e(g) - n + 2);
    for (; k <= ceiling; ++k)
        if (auto plan = search.solve(k)) {
            out.k = k;
            out.witness = detail::realize_plan(g, k, *plan);
            out.min_prey = plan->prey;
            out.p = n + k - plan->prey;
            return out;
        }
    throw std::logic_error("exact search found no realization below the trivial upper bound");
}

struct CompetitionNumber {
    int k = 0;
    Realization witness;
};

inline CompetitionNumber competition_number(const Graph & g, SearchOptions opts = {})
{
    auto r = exact_indices(g, opts);
    return {r.k, std::move(r.witness)};
}

struct PredatorIndex {
    int p = 0;
    int k = 0;
    Realization witness;
};

inline PredatorIndex primary_predator_index(const Graph & g, SearchOptions opts = {})
{
    auto r = exact_indices(g, opts);
    return {r.p, r.k, std::move(r.witness)};
}

inline int min_prey_count(const Graph & g, SearchOptions opts = {}) { return exact_indices(g, opts).min_prey; }

} // namespace compnum
