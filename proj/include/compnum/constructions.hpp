#pragma once

// Builders that turn the structural theorems into digraphs, and verifiers for
// effective competition covers and the Hall-matching certificate. Every builder
// re-checks its output; none of them trusts the construction.

#include <compnum/cliques.hpp>
#include <compnum/ecc.hpp>
#include <compnum/graph.hpp>
#include <compnum/matching.hpp>
#include <compnum/realizer.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace compnum {

struct NamedCheck {
    std::string name;
    std::string failure_message;
    bool passed = false;
};

/// Outcome of checking (G, cover, D) against the definition of an effective
/// competition cover. `sinks[i]` is the sink of `cover.cliques[i]`.
struct EffectiveCoverCertificate {
    CliqueCover cover;
    std::optional<Realization> realization;
    std::vector<Vertex> sinks;
    std::vector<NamedCheck> checks;

    bool valid() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const NamedCheck & c) { return c.passed; });
    }

    /// Message of the first failed check.
    std::optional<std::string> failure() const
    {
        for (const auto & c : checks)
            if (!c.passed)
                return c.failure_message;
        return std::nullopt;
    }

    bool passed(const std::string & name) const
    {
        for (const auto & c : checks)
            if (c.name == name)
                return c.passed;
        return false;
    }
};

/// `known_k` skips the exact k(G) computation when the caller already has it.
inline EffectiveCoverCertificate verify_effective_cover(const Graph & g, std::vector<Clique> cliques, const Digraph & d,
                                                        std::optional<int> known_k = std::nullopt)
{
    EffectiveCoverCertificate cert;
    const int n = g.order();
    const int theta = theta_e(g);
    cert.cover = describe_cover(g, std::move(cliques));
    cert.cover.is_minimum = cert.cover.covers_all_edges && cert.cover.size() == theta;

    const bool sized = d.order() >= n;
    const int k = d.order() - n;
    const bool graph_ok = sized && competition_graph(d) == add_isolated(g, k);
    const bool acyclic = is_acyclic(d);
    bool k_ok = false;
    if (sized) {
        int kg = known_k ? *known_k : competition_number(g).k;
        k_ok = k == kg;
    }
    const bool prey_ok = d.prey().size() == theta;

    // one distinct prey vertex per clique, common to all of its members
    bool sinks_ok = false;
    if (sized && cert.cover.size() > 0) {
        auto prey = d.prey().members();
        BipartiteMatcher m(cert.cover.size(), static_cast<int>(prey.size()));
        for (int i = 0; i < cert.cover.size(); ++i) {
            VertexSet common = VertexSet::first(d.order());
            for (Vertex v : cert.cover.cliques[static_cast<std::size_t>(i)])
                common &= v < d.order() ? d.out_neighbors(v) : VertexSet{};
            for (std::size_t j = 0; j < prey.size(); ++j)
                if (common.contains(prey[j]))
                    m.add_edge(i, static_cast<int>(j));
        }
        if (m.solve() == cert.cover.size()) {
            sinks_ok = true;
            for (int i = 0; i < cert.cover.size(); ++i)
                cert.sinks.push_back(prey[static_cast<std::size_t>(m.mate_of_left(i))]);
        }
    }

    cert.checks = {
        {"edge_cover", "cover not an edge clique cover", cert.cover.covers_all_edges},
        {"minimum", "cover not minimum", cert.cover.is_minimum},
        {"maximal", "clique not maximal", cert.cover.all_maximal},
        {"competition_graph", "competition graph mismatch", graph_ok},
        {"k_minimum", "isolate count differs from k(G)", k_ok},
        {"acyclic", "digraph not acyclic", acyclic},
        {"prey_count", "prey count differs from theta_e", prey_ok},
        {"distinct_sinks", "no distinct common out-neighbour per clique", sinks_ok},
    };
    if (graph_ok && acyclic) {
        std::vector<SinkAssignment> map;
        for (std::size_t i = 0; i < cert.sinks.size(); ++i)
            map.push_back({cert.cover.cliques[i], cert.sinks[i]});
        cert.realization = make_realization(g, d, std::move(map));
    }
    return cert;
}

struct HallCertificate {
    /// Common out-neighbours of pairs inside each clique.
    std::vector<VertexSet> sets;
    /// Distinct matched vertex per clique.
    std::vector<Vertex> matched;
};

/// Builds the clique/common-out-neighbour bipartite graph and a matching that
/// saturates the cliques. Such a matching always exists for a minimum cover; a
/// missing one is a bug and throws std::logic_error.
inline HallCertificate hall_certificate(const Graph & g, const CliqueCover & cover, const Digraph & d)
{
    const int n = g.order();
    if (!covers_all_edges(g, cover.cliques) ||
        !std::all_of(cover.cliques.begin(), cover.cliques.end(), [&](Clique c) { return is_maximal_clique(g, c); }))
        throw PreconditionError("hall_certificate: cover must consist of maximal cliques covering every edge");
    if (cover.size() != theta_e(g))
        throw PreconditionError("hall_certificate: cover is not minimum");
    if (d.order() < n || !(competition_graph(d) == add_isolated(g, d.order() - n)))
        throw PreconditionError("hall_certificate: digraph does not realize the graph");

    HallCertificate cert;
    BipartiteMatcher m(cover.size(), d.order());
    for (int i = 0; i < cover.size(); ++i) {
        VertexSet a;
        Clique c = cover.cliques[static_cast<std::size_t>(i)];
        for (Vertex x : c)
            for (Vertex y : c)
                if (x < y)
                    a |= d.out_neighbors(x) & d.out_neighbors(y);
        if (a.empty())
            throw std::logic_error("hall_certificate: clique without a common out-neighbour of an edge");
        for (Vertex w : a)
            m.add_edge(i, w);
        cert.sets.push_back(a);
    }
    if (m.solve() != cover.size())
        throw std::logic_error("hall_certificate: no matching saturates the cover");
    for (int i = 0; i < cover.size(); ++i) {
        Vertex w = m.mate_of_left(i);
        if (d.in_degree(w) < 2)
            throw std::logic_error("hall_certificate: matched vertex has in-degree below two");
        cert.matched.push_back(w);
    }
    return cert;
}

struct ChordalBuild {
    std::vector<Vertex> peo;
    /// Cliques ordered by their PEO position tuples; cliques[i] is the closed
    /// later-neighbourhood of the vertex at position first_positions[i].
    CliqueCover cover;
    std::vector<int> first_positions; // 1-based
    Realization realization;          // the extra vertex is index n
    EffectiveCoverCertificate certificate;
};

/// One extra vertex v0 suffices: each cover clique sends arcs to the vertex just
/// before its first PEO position (v0 for position 1).
inline ChordalBuild chordal_realizer(const Graph & g)
{
    const int n = g.order();
    if (g.edge_count() == 0)
        throw PreconditionError("chordal_realizer: graph has no edge");
    if (!g.isolated_vertices().empty())
        throw PreconditionError("chordal_realizer: isolated vertices present");
    auto result = chordality(g);
    if (auto hole = std::get_if<Hole>(&result)) {
        std::string cyc;
        for (Vertex v : hole->cycle)
            cyc += (cyc.empty() ? "" : " ") + std::to_string(v);
        throw PreconditionError("chordal_realizer: not chordal, hole " + cyc);
    }

    ChordalBuild out;
    out.peo = std::get<EliminationOrdering>(result).order;
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pos[static_cast<std::size_t>(out.peo[static_cast<std::size_t>(i)])] = i + 1;

    auto cover = min_edge_clique_cover(g);
    auto tuple = [&](Clique c) {
        std::vector<int> t;
        for (Vertex v : c)
            t.push_back(pos[static_cast<std::size_t>(v)]);
        std::sort(t.begin(), t.end());
        return t;
    };
    std::sort(cover.cliques.begin(), cover.cliques.end(), [&](Clique a, Clique b) { return tuple(a) < tuple(b); });
    out.cover = cover;

    Digraph d(n + 1);
    std::vector<SinkAssignment> sinks;
    for (Clique c : cover.cliques) {
        int first = tuple(c).front();
        Vertex head = out.peo[static_cast<std::size_t>(first - 1)];
        VertexSet later;
        for (int i = first; i <= n; ++i)
            later.insert(out.peo[static_cast<std::size_t>(i - 1)]);
        if (c != (g.neighbors(head) & later).with(head))
            throw std::logic_error("chordal_realizer: cover clique is not a closed later-neighbourhood");
        Vertex target = first == 1 ? n : out.peo[static_cast<std::size_t>(first - 2)];
        for (Vertex v : c)
            d.add_arc(v, target);
        out.first_positions.push_back(first);
        sinks.push_back({c, target});
    }
    if (out.first_positions.front() != 1)
        throw std::logic_error("chordal_realizer: first clique does not start at position 1");

    out.realization = make_realization(g, d, sinks);
    out.certificate = verify_effective_cover(g, cover.cliques, d, 1);
    if (!out.certificate.valid())
        throw std::logic_error("chordal_realizer: built digraph fails verification: " + *out.certificate.failure());
    return out;
}

/// Redirects each maximal clique's arcs to the lowest-labelled common
/// out-neighbour (in `r`) of the ends of any edge it occupies.
inline Realization rebuild_star(const Graph & g, const Realization & r)
{
    if (g.edge_count() == 0)
        throw PreconditionError("rebuild_star: graph has no edge");
    if (auto bad = occupied_vertex_violation(g)) {
        std::string members;
        for (Vertex v : bad->clique)
            members += (members.empty() ? "" : ",") + std::to_string(v);
        throw PreconditionError("rebuild_star: vertex " + std::to_string(bad->vertex) + " of clique {" + members +
                                "} is on no edge occupied by it");
    }
    if (!verifies(g, r))
        throw PreconditionError("rebuild_star: input realization fails verification");

    const Digraph & d = r.digraph;
    Digraph star(d.order());
    std::vector<SinkAssignment> sinks;
    VertexSet used;
    for (Clique c : edge_maximal_cliques(g)) {
        VertexSet candidates;
        for (auto [u, v] : occupied_edges(g, c))
            candidates |= d.out_neighbors(u) & d.out_neighbors(v);
        if (candidates.empty())
            throw PreconditionError("rebuild_star: an occupied edge has no common out-neighbour");
        Vertex x = *std::min_element(candidates.begin(), candidates.end(),
                                     [&](Vertex a, Vertex b) { return r.labeling(a) < r.labeling(b); });
        if (used.contains(x))
            throw std::logic_error("rebuild_star: two cliques chose the same sink");
        used.insert(x);
        for (Vertex v : c)
            star.add_arc(v, x);
        sinks.push_back({c, x});
    }
    if (!r.labeling.is_valid_for(star))
        throw std::logic_error("rebuild_star: original labeling is not acyclic for the rebuilt digraph");
    auto out = make_realization(g, std::move(star), std::move(sinks));
    if (out.prey_count != theta_e(g))
        throw std::logic_error("rebuild_star: prey count differs from theta_e");
    return out;
}

struct SimplicialBuild {
    /// Cover cliques relabelled C_1..C_theta.
    std::vector<Clique> labeled;
    std::optional<Realization> realization;
    /// Why the literal construction was rejected, when it was.
    std::string failure;
};

/// Realization with k(G) isolates from a sub-family F of a minimum cover whose
/// covered edges leave enough simplicial vertices. `family` indexes `cover`.
inline SimplicialBuild simplicial_family_realizer(const Graph & g, const CliqueCover & cover,
                                                  const std::vector<int> & family,
                                                  std::optional<int> known_k = std::nullopt)
{
    const int n = g.order();
    if (g.edge_count() == 0 || !g.isolated_vertices().empty())
        throw PreconditionError("simplicial_family_realizer: need at least one edge and no isolated vertex");
    const int theta = theta_e(g);
    if (cover.size() != theta || !covers_all_edges(g, cover.cliques) ||
        !std::all_of(cover.cliques.begin(), cover.cliques.end(), [&](Clique c) { return is_maximal_clique(g, c); }))
        throw PreconditionError("simplicial_family_realizer: cover must be minimum and all-maximal");
    const int k = known_k ? *known_k : competition_number(g).k;

    std::vector<bool> in_family(static_cast<std::size_t>(cover.size()), false);
    for (int i : family) {
        if (i < 0 || i >= cover.size() || in_family[static_cast<std::size_t>(i)])
            throw PreconditionError("simplicial_family_realizer: bad family index");
        in_family[static_cast<std::size_t>(i)] = true;
    }
    if (static_cast<int>(family.size()) != theta - k + 1)
        throw PreconditionError("simplicial_family_realizer: family must have theta_e - k + 1 cliques");

    Graph h(n);
    for (int i : family) {
        Clique c = cover.cliques[static_cast<std::size_t>(i)];
        for (Vertex u : c)
            for (Vertex v : c)
                if (u < v)
                    h.add_edge(u, v);
    }
    const VertexSet simp = simplicial_vertices(h) - h.isolated_vertices();
    if (simp.size() < theta - k)
        throw PreconditionError("simplicial_family_realizer: too few simplicial vertices in the family's graph");

    std::vector<int> ranked(family.begin(), family.end());
    std::stable_sort(ranked.begin(), ranked.end());
    std::stable_sort(ranked.begin(), ranked.end(), [&](int a, int b) {
        return (cover.cliques[static_cast<std::size_t>(a)] & simp).size() >
               (cover.cliques[static_cast<std::size_t>(b)] & simp).size();
    });
    SimplicialBuild out;
    for (int i = 0; i < cover.size(); ++i)
        if (!in_family[static_cast<std::size_t>(i)])
            out.labeled.push_back(cover.cliques[static_cast<std::size_t>(i)]);
    for (int i : ranked)
        out.labeled.push_back(cover.cliques[static_cast<std::size_t>(i)]);

    Digraph d(n + k);
    std::vector<SinkAssignment> sinks;
    for (int i = 0; i < k; ++i) {
        for (Vertex v : out.labeled[static_cast<std::size_t>(i)])
            d.add_arc(v, n + i);
        sinks.push_back({out.labeled[static_cast<std::size_t>(i)], n + i});
    }
    VertexSet used, earlier = out.labeled[static_cast<std::size_t>(k - 1)];
    for (int i = k; i < theta; ++i) {
        Clique c = out.labeled[static_cast<std::size_t>(i)];
        VertexSet pool = (simp & earlier) - used;
        if (pool.empty()) {
            out.failure = "no fresh simplicial vertex for clique C_" + std::to_string(i + 1);
            return out;
        }
        Vertex s = pool.front();
        if (c.contains(s)) {
            out.failure = "chosen sink lies inside clique C_" + std::to_string(i + 1);
            return out;
        }
        used.insert(s);
        for (Vertex v : c)
            d.add_arc(v, s);
        sinks.push_back({c, s});
        earlier |= c;
    }
    try {
        out.realization = make_realization(g, std::move(d), std::move(sinks));
    } catch (const Error & e) {
        out.failure = e.what();
    }
    return out;
}

} // namespace compnum
