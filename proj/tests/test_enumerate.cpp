#include <compnum/enumerate.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace compnum;

TEST(Enumerate, ClassCounts)
{
    const int all[] = {1, 1, 2, 4, 11, 34, 156};
    const int connected[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(static_cast<int>(enumerate_small_graphs(n).size()), all[n]) << n;
        EXPECT_EQ(static_cast<int>(enumerate_small_graphs(n, true).size()), connected[n]) << n;
    }
    EXPECT_THROW(enumerate_small_graphs(7), PreconditionError);
}

TEST(Enumerate, EveryLabelledGraphHasExactlyOneRepresentative)
{
    for (int n = 1; n <= 5; ++n) {
        auto reps = enumerate_small_graphs(n);
        std::vector<std::uint64_t> codes;
        for (const auto & g : reps)
            codes.push_back(canonical_code(g));
        ASSERT_TRUE(std::is_sorted(codes.begin(), codes.end()));
        for (const auto & g : oracle::all_labelled_graphs(n)) {
            int matches = 0;
            for (const auto & r : reps)
                matches += isomorphic(g, r);
            ASSERT_EQ(matches, 1);
        }
    }
}

TEST(Canonical, InvariantUnderRelabelling)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 8;
        auto g = oracle::random_graph(rng, n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        for (auto [u, v] : g.edges())
            h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        ASSERT_EQ(canonical_code(g), canonical_code(h));
        ASSERT_TRUE(isomorphic(g, h));
        ASSERT_EQ(graph_from_code(n, adjacency_code(g)), g);
    }
}

TEST(Canonical, DistinguishesNonIsomorphicGraphs)
{
    EXPECT_FALSE(isomorphic(path_graph(4), star_graph(3)));
    EXPECT_FALSE(isomorphic(cycle_graph(4), path_graph(4)));
    EXPECT_FALSE(isomorphic(Graph(3), Graph(4)));
}
