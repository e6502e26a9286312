#pragma once

// Core graph and digraph model. Vertices are dense indices 0..n-1 and
// adjacency is kept as one 64-bit row per vertex, so every structure here
// is limited to kMaxVertices vertices.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace compnum {

using Vertex = int;

inline constexpr int kMaxVertices = 64;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A set of vertices packed into one machine word.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex *;
        using reference = Vertex;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        Vertex operator*() const { return std::countr_zero(rest_); }
        iterator & operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator &) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs)
    {
        for (Vertex v : vs)
            insert(v);
    }

    static VertexSet first(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    template <typename Range>
    static VertexSet from(const Range & vs)
    {
        VertexSet s;
        for (Vertex v : vs)
            s.insert(v);
        return s;
    }

    std::uint64_t bits() const { return bits_; }
    bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    Vertex front() const { return std::countr_zero(bits_); }
    bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    std::vector<Vertex> members() const { return {begin(), end()}; }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    VertexSet with(Vertex v) const
    {
        auto s = *this;
        s.insert(v);
        return s;
    }
    VertexSet without(Vertex v) const
    {
        auto s = *this;
        s.erase(v);
        return s;
    }

    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    VertexSet & operator&=(VertexSet o)
    {
        bits_ &= o.bits_;
        return *this;
    }
    VertexSet & operator|=(VertexSet o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet & operator-=(VertexSet o)
    {
        bits_ &= ~o.bits_;
        return *this;
    }
    friend bool operator==(VertexSet, VertexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted member lists, the canonical order for cliques.
inline bool lex_less(VertexSet a, VertexSet b)
{
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
        if (*ia != *ib)
            return *ia < *ib;
    return ia == a.end() && ib != b.end();
}

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge &) const = default;
};

struct Arc {
    Vertex from = 0;
    Vertex to = 0;

    auto operator<=>(const Arc &) const = default;
};

namespace detail {
    inline void check_order(int n)
    {
        if (n < 0 || n > kMaxVertices)
            throw PreconditionError("vertex count " + std::to_string(n) + " outside 0.." +
                                    std::to_string(kMaxVertices));
    }
}

/// Simple undirected graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_((detail::check_order(n), static_cast<std::size_t>(n))) {}

    int order() const { return n_; }
    int edge_count() const
    {
        int twice = 0;
        for (auto r : rows_)
            twice += std::popcount(r);
        return twice / 2;
    }
    VertexSet vertices() const { return VertexSet::first(n_); }

    bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
    VertexSet neighbors(Vertex v) const { return VertexSet(rows_[v]); }
    VertexSet closed_neighborhood(Vertex v) const { return neighbors(v).with(v); }
    int degree(Vertex v) const { return std::popcount(rows_[v]); }

    /// Adds the edge uv; returns false when it was already present.
    bool add_edge(Vertex u, Vertex v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw PreconditionError("self-loop at vertex " + std::to_string(u));
        if (adjacent(u, v))
            return false;
        rows_[u] |= std::uint64_t{1} << v;
        rows_[v] |= std::uint64_t{1} << u;
        return true;
    }

    void remove_edge(Vertex u, Vertex v)
    {
        rows_[u] &= ~(std::uint64_t{1} << v);
        rows_[v] &= ~(std::uint64_t{1} << u);
    }

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : VertexSet(rows_[u] & ~((std::uint64_t{2} << u) - 1)))
                out.push_back({u, v});
        return out;
    }

    bool is_clique(VertexSet s) const
    {
        for (Vertex v : s)
            if (!(s.without(v)).is_subset_of(neighbors(v)))
                return false;
        return true;
    }

    VertexSet isolated_vertices() const
    {
        VertexSet s;
        for (Vertex v = 0; v < n_; ++v)
            if (rows_[v] == 0)
                s.insert(v);
        return s;
    }

    bool is_connected() const
    {
        if (n_ == 0)
            return true;
        VertexSet seen{0}, frontier{0};
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier)
                next |= neighbors(v);
            frontier = next - seen;
            seen |= next;
        }
        return seen == vertices();
    }

    const std::vector<std::string> & labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels)
    {
        if (!labels.empty() && static_cast<int>(labels.size()) != n_)
            throw PreconditionError("label count does not match vertex count");
        labels_ = std::move(labels);
    }
    std::string label(Vertex v) const
    {
        return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
    }

    /// Equality ignores display labels.
    friend bool operator==(const Graph & a, const Graph & b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    void check_vertex(Vertex v) const
    {
        if (v < 0 || v >= n_)
            throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<std::string> labels_;
};

/// Simple directed graph: no self-arcs, no parallel arcs.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n)
        : n_(n), out_((detail::check_order(n), static_cast<std::size_t>(n))), in_(static_cast<std::size_t>(n))
    {
    }

    int order() const { return n_; }
    int arc_count() const
    {
        int c = 0;
        for (auto r : out_)
            c += std::popcount(r);
        return c;
    }

    bool has_arc(Vertex u, Vertex v) const { return (out_[u] >> v) & 1U; }
    VertexSet out_neighbors(Vertex v) const { return VertexSet(out_[v]); }
    VertexSet in_neighbors(Vertex v) const { return VertexSet(in_[v]); }
    int in_degree(Vertex v) const { return std::popcount(in_[v]); }
    int out_degree(Vertex v) const { return std::popcount(out_[v]); }

    /// Adds the arc (u,v); returns false when it was already present.
    bool add_arc(Vertex u, Vertex v)
    {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw PreconditionError("arc endpoint out of range");
        if (u == v)
            throw PreconditionError("self-arc at vertex " + std::to_string(u));
        if (has_arc(u, v))
            return false;
        out_[u] |= std::uint64_t{1} << v;
        in_[v] |= std::uint64_t{1} << u;
        return true;
    }

    void remove_arc(Vertex u, Vertex v)
    {
        out_[u] &= ~(std::uint64_t{1} << v);
        in_[v] &= ~(std::uint64_t{1} << u);
    }

    /// Arcs in lexicographic order.
    std::vector<Arc> arcs() const
    {
        std::vector<Arc> out;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : out_neighbors(u))
                out.push_back({u, v});
        return out;
    }

    /// Vertices of nonzero in-degree.
    VertexSet prey() const
    {
        VertexSet s;
        for (Vertex v = 0; v < n_; ++v)
            if (in_[v] != 0)
                s.insert(v);
        return s;
    }

    friend bool operator==(const Digraph & a, const Digraph & b) { return a.n_ == b.n_ && a.out_ == b.out_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> out_;
    std::vector<std::uint64_t> in_;
};

/// Bijection vertex -> 1..n, strictly decreasing along every arc.
class AcyclicLabeling {
public:
    AcyclicLabeling() = default;
    explicit AcyclicLabeling(std::vector<int> labels) : labels_(std::move(labels)) {}

    int operator()(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<int> & labels() const { return labels_; }

    bool is_valid_for(const Digraph & d) const
    {
        if (size() != d.order())
            return false;
        std::vector<bool> used(labels_.size() + 1, false);
        for (int l : labels_) {
            if (l < 1 || l > size() || used[static_cast<std::size_t>(l)])
                return false;
            used[static_cast<std::size_t>(l)] = true;
        }
        for (auto [u, v] : d.arcs())
            if ((*this)(u) <= (*this)(v))
                return false;
        return true;
    }

private:
    std::vector<int> labels_;
};

/// A directed cycle, listed in arc order; the last vertex points back to the first.
struct DirectedCycle {
    std::vector<Vertex> vertices;
};

/// Graph on V(D) with xy an edge iff x and y share an out-neighbour.
inline Graph competition_graph(const Digraph & d)
{
    Graph g(d.order());
    for (Vertex z = 0; z < d.order(); ++z) {
        auto preds = d.in_neighbors(z);
        for (Vertex x : preds)
            for (Vertex y : preds)
                if (x < y)
                    g.add_edge(x, y);
    }
    return g;
}

/// Labels sinks first: repeatedly the smallest-index vertex whose out-neighbours
/// are all labelled gets the next label. Returns a directed cycle when stuck.
inline std::variant<AcyclicLabeling, DirectedCycle> acyclic_labeling(const Digraph & d)
{
    const int n = d.order();
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    VertexSet done;
    for (int next = 1; next <= n; ++next) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n && pick < 0; ++v)
            if (!done.contains(v) && d.out_neighbors(v).is_subset_of(done))
                pick = v;
        if (pick < 0) {
            // every remaining vertex has an out-arc into the remainder
            std::vector<int> seen_at(static_cast<std::size_t>(n), -1);
            std::vector<Vertex> walk;
            Vertex v = (VertexSet::first(n) - done).front();
            while (seen_at[static_cast<std::size_t>(v)] < 0) {
                seen_at[static_cast<std::size_t>(v)] = static_cast<int>(walk.size());
                walk.push_back(v);
                v = (d.out_neighbors(v) - done).front();
            }
            return DirectedCycle{{walk.begin() + seen_at[static_cast<std::size_t>(v)], walk.end()}};
        }
        labels[static_cast<std::size_t>(pick)] = next;
        done.insert(pick);
    }
    return AcyclicLabeling(std::move(labels));
}

inline bool is_acyclic(const Digraph & d)
{
    return std::holds_alternative<AcyclicLabeling>(acyclic_labeling(d));
}

/// G together with k isolated vertices appended after the existing indices.
inline Graph add_isolated(const Graph & g, int k)
{
    Graph out(g.order() + k);
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    if (!g.labels().empty()) {
        auto labels = g.labels();
        for (int i = 0; i < k; ++i)
            labels.push_back("a" + std::to_string(i + 1));
        out.set_labels(std::move(labels));
    }
    return out;
}

inline Graph induced_subgraph(const Graph & g, VertexSet keep, std::vector<Vertex> * original = nullptr)
{
    auto members = keep.members();
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        index[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
    Graph out(static_cast<int>(members.size()));
    for (auto [u, v] : g.edges())
        if (keep.contains(u) && keep.contains(v))
            out.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    if (original)
        *original = std::move(members);
    return out;
}

// Named families used by tests, fixtures and the CLI.

inline Graph complete_graph(int n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n)
{
    Graph g = path_graph(n);
    if (n >= 3)
        g.add_edge(n - 1, 0);
    return g;
}

/// K_{1,leaves} with the centre at index 0.
inline Graph star_graph(int leaves)
{
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

/// K4 minus the edge 2-3.
inline Graph diamond_graph()
{
    Graph g = complete_graph(4);
    g.remove_edge(2, 3);
    return g;
}

} // namespace compnum
