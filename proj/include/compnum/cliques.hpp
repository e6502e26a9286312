#pragma once

// Maximal cliques and the structural predicates the constructions rely on:
// perfect elimination orderings, diamonds, occupied edges, simplicial vertices.

#include <compnum/graph.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <variant>
#include <vector>

namespace compnum {

using Clique = VertexSet;

inline void sort_canonically(std::vector<Clique> & cliques)
{
    std::sort(cliques.begin(), cliques.end(), lex_less);
}

namespace detail {
    template <typename Emit>
    void bron_kerbosch(const Graph & g, VertexSet r, VertexSet p, VertexSet x, Emit & emit)
    {
        if (p.empty()) {
            if (x.empty())
                emit(r);
            return;
        }
        Vertex pivot = -1;
        int best = -1;
        for (Vertex u : p | x) {
            int c = (p & g.neighbors(u)).size();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        for (Vertex v : p - g.neighbors(pivot)) {
            bron_kerbosch(g, r.with(v), p & g.neighbors(v), x & g.neighbors(v), emit);
            p.erase(v);
            x.insert(v);
        }
    }
}

/// Inclusion-maximal cliques of G[within], each exactly once, in canonical order.
/// Isolated vertices appear as singleton cliques.
inline std::vector<Clique> maximal_cliques(const Graph & g, VertexSet within)
{
    std::vector<Clique> out;
    auto emit = [&](VertexSet c) {
        if (!c.empty())
            out.push_back(c);
    };
    detail::bron_kerbosch(g, VertexSet{}, within, VertexSet{}, emit);
    sort_canonically(out);
    return out;
}

inline std::vector<Clique> maximal_cliques(const Graph & g) { return maximal_cliques(g, g.vertices()); }

/// Maximal cliques with at least one edge; these are the candidates for edge clique covers.
inline std::vector<Clique> edge_maximal_cliques(const Graph & g)
{
    auto all = maximal_cliques(g);
    std::erase_if(all, [](Clique c) { return c.size() < 2; });
    return all;
}

inline bool is_maximal_clique(const Graph & g, Clique c)
{
    if (c.empty() || !g.is_clique(c))
        return false;
    for (Vertex v : g.vertices() - c)
        if (c.is_subset_of(g.neighbors(v)))
            return false;
    return true;
}

struct DiamondCheck {
    bool diamond_free = true;
    std::optional<VertexSet> witness;
};

/// Scans all 4-subsets; four vertices spanning exactly five edges induce a diamond.
inline DiamondCheck find_diamond_by_scan(const Graph & g)
{
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    int e = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(a, d) + g.adjacent(b, c) +
                            g.adjacent(b, d) + g.adjacent(c, d);
                    if (e == 5)
                        return {false, VertexSet{a, b, c, d}};
                }
    return {};
}

/// Diamond-free iff no edge lies in two maximal cliques.
inline DiamondCheck find_diamond_by_cliques(const Graph & g)
{
    auto cliques = edge_maximal_cliques(g);
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t j = i + 1; j < cliques.size(); ++j) {
            auto shared = cliques[i] & cliques[j];
            if (shared.size() < 2)
                continue;
            // some a in C_i \ C_j misses some b in C_j, else C_j + a is a clique
            for (Vertex a : cliques[i] - cliques[j]) {
                auto missed = cliques[j] - g.neighbors(a);
                if (!missed.empty()) {
                    auto uv = shared.members();
                    return {false, VertexSet{uv[0], uv[1], a, missed.front()}};
                }
            }
        }
    return {};
}

inline DiamondCheck is_diamond_free(const Graph & g)
{
    return g.order() <= 32 ? find_diamond_by_scan(g) : find_diamond_by_cliques(g);
}

inline bool is_induced_diamond(const Graph & g, VertexSet four)
{
    if (four.size() != 4)
        return false;
    int e = 0;
    for (Vertex u : four)
        e += (g.neighbors(u) & four).size();
    return e / 2 == 5;
}

/// Edges inside `c` that no other maximal clique covers. `c` must be maximal.
inline std::vector<Edge> occupied_edges(const Graph & g, Clique c)
{
    if (!is_maximal_clique(g, c))
        throw PreconditionError("occupied_edges: clique is not maximal");
    auto others = maximal_cliques(g);
    std::vector<Edge> out;
    for (Vertex u : c)
        for (Vertex v : c)
            if (u < v) {
                bool shared = std::any_of(others.begin(), others.end(), [&](Clique o) {
                    return o != c && o.contains(u) && o.contains(v);
                });
                if (!shared)
                    out.push_back({u, v});
            }
    return out;
}

struct OccupiedViolation {
    Clique clique;
    Vertex vertex = -1; // -1: the clique owns no occupied edge at all
};

/// Checks that every vertex of every maximal clique (with an edge) is an end of
/// an edge occupied by that clique. Returns the first offending pair.
inline std::optional<OccupiedViolation> occupied_vertex_violation(const Graph & g)
{
    for (auto c : edge_maximal_cliques(g)) {
        VertexSet touched;
        for (auto [u, v] : occupied_edges(g, c)) {
            touched.insert(u);
            touched.insert(v);
        }
        if (touched != c)
            return OccupiedViolation{c, (c - touched).front()};
    }
    return std::nullopt;
}

/// Whether every maximal clique (with an edge) occupies at least one edge.
inline bool every_clique_occupies_an_edge(const Graph & g)
{
    for (auto c : edge_maximal_cliques(g))
        if (occupied_edges(g, c).empty())
            return false;
    return true;
}

inline VertexSet simplicial_vertices(const Graph & g)
{
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.is_clique(g.neighbors(v)))
            out.insert(v);
    return out;
}

struct EliminationOrdering {
    std::vector<Vertex> order;
};

/// An induced cycle of length at least four, in cyclic order.
struct Hole {
    std::vector<Vertex> cycle;
};

/// Each vertex's later neighbours must form a clique.
inline bool is_perfect_elimination_ordering(const Graph & g, const std::vector<Vertex> & order)
{
    if (static_cast<int>(order.size()) != g.order() || VertexSet::from(order) != g.vertices())
        return false;
    VertexSet later = g.vertices();
    for (Vertex v : order) {
        later.erase(v);
        if (!g.is_clique(g.neighbors(v) & later))
            return false;
    }
    return true;
}

namespace detail {
    inline std::vector<Vertex> shortest_path(const Graph & g, VertexSet allowed, Vertex from, Vertex to)
    {
        std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
        VertexSet seen{from};
        std::vector<Vertex> queue{from};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            if (x == to) {
                std::vector<Vertex> path;
                for (Vertex y = to; y != -1; y = parent[static_cast<std::size_t>(y)])
                    path.push_back(y);
                std::reverse(path.begin(), path.end());
                return path;
            }
            for (Vertex y : (g.neighbors(x) & allowed) - seen) {
                seen.insert(y);
                parent[static_cast<std::size_t>(y)] = x;
                queue.push_back(y);
            }
        }
        return {};
    }

    // v with non-adjacent neighbours x, y: a shortest x-y path avoiding the
    // rest of N[v] closes an induced cycle through v.
    inline std::optional<Hole> find_hole(const Graph & g)
    {
        for (Vertex v = 0; v < g.order(); ++v)
            for (Vertex x : g.neighbors(v))
                for (Vertex y : g.neighbors(v)) {
                    if (y <= x || g.adjacent(x, y))
                        continue;
                    auto allowed = (g.vertices() - g.closed_neighborhood(v)).with(x).with(y);
                    auto path = shortest_path(g, allowed, x, y);
                    if (!path.empty()) {
                        Hole h;
                        h.cycle.push_back(v);
                        h.cycle.insert(h.cycle.end(), path.begin(), path.end());
                        return h;
                    }
                }
        return std::nullopt;
    }
}

/// Maximum cardinality search (ties to the smallest index); the reversed visit
/// order is checked as a perfect elimination ordering. A failed check yields a hole.
inline std::variant<EliminationOrdering, Hole> chordality(const Graph & g)
{
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    VertexSet visited;
    std::vector<Vertex> visit;
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v : g.vertices() - visited)
            if (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)])
                pick = v;
        visit.push_back(pick);
        visited.insert(pick);
        for (Vertex u : g.neighbors(pick) - visited)
            ++weight[static_cast<std::size_t>(u)];
    }
    std::reverse(visit.begin(), visit.end());
    if (is_perfect_elimination_ordering(g, visit))
        return EliminationOrdering{std::move(visit)};
    if (auto hole = detail::find_hole(g))
        return *hole;
    throw std::logic_error("chordality: ordering check failed but no hole was found");
}

inline bool is_chordal(const Graph & g) { return std::holds_alternative<EliminationOrdering>(chordality(g)); }

} // namespace compnum
