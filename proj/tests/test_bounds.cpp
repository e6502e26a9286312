#include <compnum/bounds.hpp>
#include <compnum/enumerate.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace compnum;

TEST(Opsut, Examples)
{
    EXPECT_EQ(opsut_bound(fixtures::web_graph()), -1);
    EXPECT_EQ(opsut_bound(cycle_graph(4)), 2);
    EXPECT_EQ(opsut_bound(complete_graph(3)), 0);
}

TEST(PredatorBound, Examples)
{
    EXPECT_EQ(predator_bound(fixtures::web_graph(), 4), 1);
    EXPECT_EQ(predator_bound(cycle_graph(4), 2), 2);
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(predator_bound(Graph(n), n), 0);
}

TEST(UnionTail, CycleExamples)
{
    auto cover = min_edge_clique_cover(cycle_graph(4));
    EXPECT_EQ(union_tail_bound(cover, 3), 2);
    EXPECT_EQ(union_tail_bound(cover, 4), 2);
    EXPECT_EQ(union_tail_bound(cover, 1), 4 - 4 + 1);
    EXPECT_THROW(union_tail_bound(cover, 0), PreconditionError);
    EXPECT_THROW(union_tail_bound(cover, 5), PreconditionError);
    auto best = best_union_tail(cover);
    EXPECT_EQ(best.value, 2);
    EXPECT_EQ(best.per_k.size(), 4U);
}

TEST(UnionTail, KOneUsesEveryCoveredVertex)
{
    for (const auto & g : enumerate_small_graphs(6, true)) {
        auto cover = min_edge_clique_cover(g);
        if (cover.size() == 0)
            continue;
        ASSERT_EQ(union_tail_bound(cover, 1), g.order() - cover.size() + 1);
    }
}

TEST(Census, Examples)
{
    EXPECT_EQ(clique_census(cycle_graph(4)), (std::array<int, 3>{4, 0, 0}));
    EXPECT_EQ(clique_census(complete_graph(4)), (std::array<int, 3>{0, 0, 1}));
    EXPECT_EQ(clique_census(fixtures::bowtie()), (std::array<int, 3>{0, 2, 0}));
    EXPECT_EQ(clique_census(Graph(3)), (std::array<int, 3>{0, 0, 0}));
    EXPECT_THROW(clique_census(complete_graph(5)), PreconditionError);
}

TEST(PlanarFormula, Examples)
{
    auto one = planar_formula_check(Graph(1), 1);
    EXPECT_EQ(one.faces, 1);
    EXPECT_EQ(one.k_formula, 0);
    EXPECT_EQ(one.consistent, true);

    auto c4 = planar_formula_check(cycle_graph(4), 2);
    EXPECT_EQ(c4.faces, 2);
    EXPECT_EQ(c4.k_formula, 2);
    EXPECT_EQ(c4.consistent, true);
    EXPECT_TRUE(c4.theta_identity);

    auto p4 = planar_formula_check(path_graph(4), 2);
    EXPECT_EQ(p4.faces, 1);
    EXPECT_EQ(p4.k_formula, 1);
    EXPECT_EQ(p4.consistent, true);
}

TEST(PlanarFormula, Preconditions)
{
    EXPECT_THROW(planar_formula_check(Graph(2), 2), PreconditionError);
    EXPECT_THROW(planar_formula_check(diamond_graph(), 2), PreconditionError);
    // K_{5,5} is triangle-free with 25 > 3 * 10 - 6 edges.
    Graph k55(10);
    for (int u = 0; u < 5; ++u)
        for (int v = 5; v < 10; ++v)
            k55.add_edge(u, v);
    EXPECT_THROW(planar_formula_check(k55, 2), PreconditionError);
}

TEST(PlanarFormula, HoldsOnSmallDiamondFreeGraphs)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto & g : enumerate_small_graphs(n, true)) {
            if (!oracle::diamond_free(g) || (n >= 3 && g.edge_count() > 3 * n - 6))
                continue;
            bool small_cliques = true;
            for (auto c : maximal_cliques(g))
                small_cliques = small_cliques && c.size() <= 4;
            if (!small_cliques)
                continue;
            auto ex = exact_indices(g);
            auto pf = planar_formula_check(g, ex.p, ex.k);
            ASSERT_TRUE(pf.theta_identity);
            ASSERT_EQ(pf.k_formula, ex.k);
            auto census = clique_census(g);
            ASSERT_EQ(census[0] + census[1] + census[2], theta_e(g));
        }
}

TEST(Bounds, OrderingOnAllSmallGraphs)
{
    for (int n = 2; n <= 6; ++n)
        for (const auto & g : enumerate_small_graphs(n)) {
            auto r = bounds_report(g);
            ASSERT_TRUE(r.exact_k && r.exact_p && r.predator_bound);
            ASSERT_LE(r.opsut, *r.predator_bound);
            ASSERT_LE(*r.predator_bound, *r.exact_k);
            if (r.occupied_condition) {
                ASSERT_EQ(r.occupied_equality, true);
            }
            if (g.edge_count() > 0 && (oracle::diamond_free(g) || !oracle::has_hole(g)) &&
                g.isolated_vertices().empty()) {
                ASSERT_EQ(*r.predator_bound, *r.exact_k);
                ASSERT_LE(r.union_tail->value, *r.exact_p);
            }
        }
}

TEST(Bounds, FoodWebReport)
{
    auto r = bounds_report(fixtures::web_graph());
    EXPECT_EQ(r.theta_e, 6);
    EXPECT_EQ(r.opsut, -1);
    EXPECT_EQ(r.exact_k, 1);
    EXPECT_EQ(r.exact_p, 4);
    EXPECT_EQ(r.predator_bound, 1);
    EXPECT_TRUE(r.occupied_condition);
    EXPECT_FALSE(r.planar); // the graph has a diamond
}
