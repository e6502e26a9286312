#pragma once

// Exact minimum edge clique cover by branch and bound over maximal cliques.

#include <compnum/cliques.hpp>
#include <compnum/graph.hpp>

#include <algorithm>
#include <vector>

namespace compnum {

struct CliqueCover {
    std::vector<Clique> cliques;
    bool covers_all_edges = false;
    bool all_maximal = false;
    /// Set only by the exact search, which exhausted every smaller cover.
    bool is_minimum = false;

    int size() const { return static_cast<int>(cliques.size()); }
};

inline bool covers_all_edges(const Graph & g, const std::vector<Clique> & cliques)
{
    for (auto [u, v] : g.edges())
        if (std::none_of(cliques.begin(), cliques.end(), [&](Clique c) { return c.contains(u) && c.contains(v); }))
            return false;
    return true;
}

/// Fills in the coverage and maximality flags for a caller-supplied list.
inline CliqueCover describe_cover(const Graph & g, std::vector<Clique> cliques)
{
    CliqueCover c;
    c.covers_all_edges = covers_all_edges(g, cliques) &&
                         std::all_of(cliques.begin(), cliques.end(), [&](Clique k) { return g.is_clique(k); });
    c.all_maximal = std::all_of(cliques.begin(), cliques.end(), [&](Clique k) { return is_maximal_clique(g, k); });
    c.cliques = std::move(cliques);
    return c;
}

namespace detail {
    class CoverSearch {
    public:
        explicit CoverSearch(const Graph & g) : candidates_(edge_maximal_cliques(g)), edges_(g.edges())
        {
            containing_.resize(edges_.size());
            for (std::size_t e = 0; e < edges_.size(); ++e)
                for (std::size_t c = 0; c < candidates_.size(); ++c)
                    if (candidates_[c].contains(edges_[e].u) && candidates_[c].contains(edges_[e].v))
                        containing_[e].push_back(static_cast<int>(c));
            covered_.assign(edges_.size(), 0);
            for (std::size_t c = 0; c < candidates_.size(); ++c)
                best_.push_back(static_cast<int>(c));
        }

        std::vector<Clique> run()
        {
            search();
            std::vector<Clique> out;
            for (int c : best_)
                out.push_back(candidates_[static_cast<std::size_t>(c)]);
            return out;
        }

    private:
        void toggle(int c, int delta)
        {
            for (std::size_t e = 0; e < edges_.size(); ++e)
                if (candidates_[static_cast<std::size_t>(c)].contains(edges_[e].u) &&
                    candidates_[static_cast<std::size_t>(c)].contains(edges_[e].v))
                    covered_[e] += delta;
        }

        // Uncovered edges no two of which share a candidate clique; each needs its own clique.
        int lower_bound() const
        {
            std::vector<bool> used(candidates_.size(), false);
            int lb = 0;
            for (std::size_t e = 0; e < edges_.size(); ++e) {
                if (covered_[e] > 0)
                    continue;
                const auto & cs = containing_[e];
                if (std::any_of(cs.begin(), cs.end(), [&](int c) { return used[static_cast<std::size_t>(c)]; }))
                    continue;
                ++lb;
                for (int c : cs)
                    used[static_cast<std::size_t>(c)] = true;
            }
            return lb;
        }

        void search()
        {
            auto open = std::find(covered_.begin(), covered_.end(), 0);
            if (open == covered_.end()) {
                auto sorted = chosen_;
                std::sort(sorted.begin(), sorted.end());
                if (sorted.size() < best_.size() || (sorted.size() == best_.size() && sorted < best_))
                    best_ = std::move(sorted);
                return;
            }
            // ties are explored so the lexicographically least optimum wins
            if (chosen_.size() + static_cast<std::size_t>(lower_bound()) > best_.size())
                return;
            for (int c : containing_[static_cast<std::size_t>(open - covered_.begin())]) {
                chosen_.push_back(c);
                toggle(c, +1);
                search();
                toggle(c, -1);
                chosen_.pop_back();
            }
        }

        std::vector<Clique> candidates_;
        std::vector<Edge> edges_;
        std::vector<std::vector<int>> containing_;
        std::vector<int> covered_;
        std::vector<int> chosen_;
        std::vector<int> best_;
    };
}

/// A minimum edge clique cover made of maximal cliques, listed in canonical
/// order; among optima the lexicographically least by canonical clique index.
inline CliqueCover min_edge_clique_cover(const Graph & g)
{
    auto cover = describe_cover(g, detail::CoverSearch(g).run());
    cover.is_minimum = true;
    return cover;
}

inline int theta_e(const Graph & g) { return min_edge_clique_cover(g).size(); }

/// Grows each clique greedily by the smallest-index vertex adjacent to all of
/// it. Cardinality is kept unless `dedup` is set.
inline CliqueCover expand_to_maximal(const Graph & g, const CliqueCover & cover, bool dedup = false)
{
    if (!covers_all_edges(g, cover.cliques) ||
        !std::all_of(cover.cliques.begin(), cover.cliques.end(), [&](Clique c) { return g.is_clique(c); }))
        throw PreconditionError("expand_to_maximal: input is not an edge clique cover");
    std::vector<Clique> grown;
    for (Clique c : cover.cliques) {
        for (bool changed = true; changed;) {
            changed = false;
            for (Vertex v : g.vertices() - c)
                if (c.is_subset_of(g.neighbors(v))) {
                    c.insert(v);
                    changed = true;
                    break;
                }
        }
        if (!dedup || std::find(grown.begin(), grown.end(), c) == grown.end())
            grown.push_back(c);
    }
    auto out = describe_cover(g, std::move(grown));
    out.is_minimum = cover.is_minimum && out.size() == cover.size();
    return out;
}

} // namespace compnum
