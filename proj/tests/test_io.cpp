#include <compnum/io.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace compnum;

TEST(Graph6, SmallEncodings)
{
    EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
    EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
    EXPECT_EQ(parse_graph6(">>graph6<<Bw"), complete_graph(3));
    EXPECT_EQ(parse_graph6("?").order(), 0);
    EXPECT_EQ(serialize_graph6(complete_graph(2)), "A_");
    EXPECT_EQ(serialize_graph6(complete_graph(3)), "Bw");
    EXPECT_EQ(serialize_graph6(Graph(1)), "@");
}

TEST(Graph6, ToleratesTrailingNewline) { EXPECT_EQ(parse_graph6("Bw\n"), complete_graph(3)); }

TEST(Graph6, FoodWebRoundTrip)
{
    auto g = fixtures::web_graph();
    auto text = serialize_graph6(g);
    auto back = parse_graph6(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.order(), 9);
    EXPECT_EQ(back.edge_count(), 16);
}

TEST(Graph6, LargeOrderUsesExtendedHeader)
{
    Graph g(63);
    g.add_edge(0, 62);
    auto text = serialize_graph6(g);
    EXPECT_EQ(text[0], '~');
    EXPECT_EQ(parse_graph6(text), g);
}

TEST(Graph6, Errors)
{
    EXPECT_THROW(parse_graph6(""), ParseError);
    EXPECT_THROW(parse_graph6(">>graph6<"), ParseError);
    EXPECT_THROW(parse_graph6("C"), ParseError);   // truncated payload
    EXPECT_THROW(parse_graph6("A\x7f"), ParseError); // out-of-range character
    EXPECT_THROW(parse_graph6("A_x"), ParseError); // trailing data
}

TEST(EdgeList, Basics)
{
    EXPECT_EQ(parse_edge_list("2 1\n0 1"), complete_graph(2));
    auto e = parse_edge_list("3 0");
    EXPECT_EQ(e.order(), 3);
    EXPECT_EQ(e.edge_count(), 0);
    EXPECT_EQ(parse_edge_list("# comment\n3 2\n0 1 # first\n\n1 2\n"), path_graph(3));
}

TEST(EdgeList, Errors)
{
    EXPECT_THROW(parse_edge_list("2 1\n0 2"), ParseError);
    EXPECT_THROW(parse_edge_list("2 2\n0 1\n1 0"), ParseError);
    EXPECT_THROW(parse_edge_list("2 1\n1 1"), ParseError);
    EXPECT_THROW(parse_edge_list("3 2\n0 1"), ParseError);
    EXPECT_THROW(parse_edge_list("x"), ParseError);
    EXPECT_THROW(parse_edge_list("2 1\n0 > 1"), ParseError);
}

TEST(ArcList, FoodWebArcs)
{
    std::string text = "10 17\n";
    for (auto [a, b] : fixtures::web_arcs())
        text += std::to_string(fixtures::web_index(a)) + " > " + std::to_string(fixtures::web_index(b)) + "\n";
    auto d = parse_arc_list(text);
    EXPECT_EQ(d.order(), 10);
    EXPECT_EQ(d.arc_count(), 17);
    EXPECT_EQ(d.arcs(), fixtures::web_digraph().arcs());
    EXPECT_EQ(parse_arc_list(serialize_arc_list(d)).arcs(), d.arcs());
}

TEST(ArcList, Errors)
{
    EXPECT_THROW(parse_arc_list("2 1\n0 1"), ParseError);
    EXPECT_NO_THROW(parse_arc_list("2 1\n0 1", true));
    EXPECT_THROW(parse_arc_list("2 2\n0 > 1\n0 > 1"), ParseError);
    EXPECT_THROW(parse_arc_list("2 1\n0 > 0"), ParseError);
}

TEST(RoundTrip, RandomGraphs)
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 2000; ++trial) {
        auto g = oracle::random_graph(rng, trial % 8, 0.5);
        auto g6 = serialize_graph6(g);
        ASSERT_EQ(parse_graph6(g6), g);
        ASSERT_EQ(serialize_graph6(parse_graph6(g6)), g6);
        auto el = serialize_edge_list(g);
        ASSERT_EQ(parse_edge_list(el), g);
        ASSERT_EQ(serialize_edge_list(parse_edge_list(el)), el);
    }
}
