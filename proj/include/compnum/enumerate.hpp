#pragma once

// Brute-force canonical forms and exhaustive enumeration of small graphs.

#include <compnum/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace compnum {

/// Largest order accepted by the permutation-based canonical form.
inline constexpr int kMaxCanonicalOrder = 10;

namespace detail {
    // Bit t (most significant first) is the t-th pair of the graph6 column order
    // (0,1), (0,2), (1,2), (0,3), ...
    inline std::uint64_t pair_code(int n, const auto & adjacent)
    {
        std::uint64_t code = 0;
        for (Vertex v = 1; v < n; ++v)
            for (Vertex u = 0; u < v; ++u)
                code = (code << 1) | (adjacent(u, v) ? 1U : 0U);
        return code;
    }
}

/// Adjacency code of G itself.
inline std::uint64_t adjacency_code(const Graph & g)
{
    return detail::pair_code(g.order(), [&](Vertex u, Vertex v) { return g.adjacent(u, v); });
}

inline Graph graph_from_code(int n, std::uint64_t code)
{
    Graph g(n);
    int bit = n * (n - 1) / 2;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if ((code >> --bit) & 1U)
                g.add_edge(u, v);
    return g;
}

/// Least adjacency code over all vertex permutations.
inline std::uint64_t canonical_code(const Graph & g)
{
    const int n = g.order();
    if (n > kMaxCanonicalOrder)
        throw PreconditionError("canonical form limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        auto code = detail::pair_code(n, [&](Vertex u, Vertex v) {
            return g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        });
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline Graph canonical_form(const Graph & g) { return graph_from_code(g.order(), canonical_code(g)); }

inline bool isomorphic(const Graph & a, const Graph & b)
{
    return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b);
}

/// One canonical representative per isomorphism class on n <= 6 vertices,
/// ascending by canonical code.
inline std::vector<Graph> enumerate_small_graphs(int n, bool connected_only = false)
{
    if (n < 0 || n > 6)
        throw PreconditionError("enumerate_small_graphs: n must be in 0..6; feed larger orders as graph6");
    const int pairs = n * (n - 1) / 2;
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::vector<Graph> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        Graph g = graph_from_code(n, code);
        std::iota(perm.begin(), perm.end(), 0);
        bool least = true;
        do {
            auto other = detail::pair_code(n, [&](Vertex u, Vertex v) {
                return g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
            });
            least = other >= code;
        } while (least && std::next_permutation(perm.begin(), perm.end()));
        if (least && (!connected_only || g.is_connected()))
            out.push_back(std::move(g));
    }
    return out;
}

} // namespace compnum
