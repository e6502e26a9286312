#pragma once

// Shared graphs for the test suites.

#include <compnum/graph.hpp>

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using compnum::Digraph;
using compnum::Graph;

// Nine-vertex food web: v1..v9 are indices 0..8, the isolated prey v0 is index 9.
inline constexpr int kWebOrder = 9;

inline std::vector<std::pair<int, int>> web_edges()
{
    // pairs of labels 1..9
    return {{9, 8}, {8, 7}, {7, 6}, {9, 6}, {9, 5}, {9, 4}, {6, 5}, {6, 4},
            {5, 4}, {5, 3}, {4, 3}, {9, 2}, {9, 1}, {4, 2}, {4, 1}, {2, 1}};
}

inline std::vector<std::pair<int, int>> web_arcs()
{
    // (predator label, prey label); label 0 is the extra isolate
    return {{9, 7}, {8, 7}, {8, 6}, {7, 6}, {7, 5}, {6, 5}, {9, 3}, {6, 3}, {5, 3},
            {4, 3}, {5, 2}, {4, 2}, {3, 2}, {9, 0}, {4, 0}, {2, 0}, {1, 0}};
}

inline int web_index(int label) { return label == 0 ? kWebOrder : label - 1; }

inline Graph web_graph()
{
    Graph g(kWebOrder);
    std::vector<std::string> labels;
    for (int i = 1; i <= kWebOrder; ++i)
        labels.push_back("v" + std::to_string(i));
    g.set_labels(labels);
    for (auto [a, b] : web_edges())
        g.add_edge(web_index(a), web_index(b));
    return g;
}

inline Digraph web_digraph()
{
    Digraph d(kWebOrder + 1);
    for (auto [a, b] : web_arcs())
        d.add_arc(web_index(a), web_index(b));
    return d;
}

/// The food web's minimum cover in the order the construction labels it.
inline std::vector<compnum::VertexSet> web_cover()
{
    auto set = [](std::initializer_list<int> labels) {
        compnum::VertexSet s;
        for (int l : labels)
            s.insert(web_index(l));
        return s;
    };
    return {set({9, 8}), set({8, 7}), set({7, 6}), set({9, 6, 5, 4}), set({5, 4, 3}), set({9, 4, 2, 1})};
}

inline Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

/// Two triangles sharing vertex 0.
inline Graph bowtie() { return from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

} // namespace fixtures
