// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <compnum/compnum.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace compnum;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
    std::vector<std::string> notes;

    void require(bool ok, const std::string & what)
    {
        if (!ok) {
            if (passed)
                detail = what;
            passed = false;
            notes.push_back(what);
        }
    }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void run(int number, const std::string & title, double limit_seconds, const std::function<Outcome()> & body)
{
    auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception & e) {
        out.passed = false;
        out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        out.passed = false;
        out.detail += (out.detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (!out.passed)
        ++failures;
    std::printf("[%s] criterion %d: %s (%.3f s) %s\n", out.passed ? "PASS" : "FAIL", number, title.c_str(), secs,
                out.detail.c_str());
    for (std::size_t i = 0; i < out.notes.size() && i < 20; ++i)
        std::printf("    %s\n", out.notes[i].c_str());
    std::fflush(stdout);
}

std::string g6(const Graph & g) { return serialize_graph6(g); }

std::vector<Graph> graphs_up_to(int n, bool connected)
{
    std::vector<Graph> out;
    for (int i = 1; i <= n; ++i)
        for (auto & g : enumerate_small_graphs(i, connected))
            out.push_back(g);
    return out;
}

/// Trees up to `n` vertices, grown leaf by leaf and deduplicated by canonical code.
std::vector<Graph> trees_up_to(int n)
{
    std::vector<Graph> out{Graph(1)};
    std::vector<Graph> layer{Graph(1)};
    for (int size = 2; size <= n; ++size) {
        std::set<std::uint64_t> seen;
        std::vector<Graph> next;
        for (const auto & t : layer)
            for (Vertex v = 0; v < t.order(); ++v) {
                Graph grown(size);
                for (auto [a, b] : t.edges())
                    grown.add_edge(a, b);
                grown.add_edge(v, size - 1);
                if (seen.insert(canonical_code(grown)).second)
                    next.push_back(grown);
            }
        layer = next;
        out.insert(out.end(), next.begin(), next.end());
    }
    return out;
}

std::vector<std::pair<std::string, Graph>> planar_gallery()
{
    using fixtures::from_edges;
    return {
        {"bowtie", fixtures::bowtie()},
        {"K4", complete_graph(4)},
        {"paw", from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}})},
        {"K4 with pendant", from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}})},
        {"triangular prism", from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}})},
        {"friendship F3", from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {0, 5}, {0, 6}, {5, 6}})},
        {"K4 and triangle at a vertex",
         from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}})},
        {"net", from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}})},
        {"house", from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}})},
        {"two K4 at a vertex", from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {3, 6},
                                              {4, 5}, {4, 6}, {5, 6}})},
    };
}

Outcome food_web()
{
    Outcome o;
    auto g = fixtures::web_graph();
    auto d = fixtures::web_digraph();
    o.require(theta_e(g) == 6, "theta_e != 6");
    o.require(competition_graph(d) == add_isolated(g, 1), "C(D) != G + {v0}");
    auto ex = exact_indices(g);
    o.require(ex.k == 1, "k != 1");
    o.require(ex.p == 4, "p != 4");
    o.require(d.order() == ex.p + theta_e(g), "|V(D)| != p + theta_e");
    auto cert = verify_effective_cover(g, fixtures::web_cover(), d);
    o.require(cert.valid(), "certificate invalid: " + cert.failure().value_or(""));
    std::vector<Vertex> sinks;
    for (int l : {7, 6, 5, 3, 2, 0})
        sinks.push_back(fixtures::web_index(l));
    o.require(cert.sinks == sinks, "sink map differs from (v7,v6,v5,v3,v2,v0)");
    std::ostringstream s;
    s << "theta_e=6 k=" << ex.k << " p=" << ex.p << " sinks=(v7,v6,v5,v3,v2,v0)";
    if (o.passed)
        o.detail = s.str();
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    int cases = 0;
    for (int n = 1; n <= 4; ++n)
        for (const auto & g : oracle::all_labelled_graphs(n))
            for (int k = 0; k <= 2; ++k) {
                ++cases;
                auto ref = dag_oracle(g, k);
                auto got = realizable_with(g, k);
                auto pred = max_predators_with(g, k);
                std::string tag = g6(g) + " k=" + std::to_string(k);
                o.require(ref.realizable == got.has_value(), tag + ": decision differs");
                if (got)
                    o.require(verifies(g, *got), tag + ": witness fails verification");
                if (ref.realizable)
                    o.require(pred && *pred == ref.max_predators, tag + ": predator count differs");
            }
    if (o.passed)
        o.detail = std::to_string(cases) + " (graph, k) pairs agree";
    return o;
}

Outcome theorem_sweep()
{
    Outcome o;
    auto graphs = graphs_up_to(6, true);
    SweepOptions opts;
    opts.checks = checks::kBounds;
    auto report = sweep(graphs, opts);
    for (const auto & rec : report.records) {
        if (!rec.error.empty())
            o.require(false, rec.graph6 + ": " + rec.error);
        for (const auto & [name, ok] : rec.checks)
            o.require(ok, rec.graph6 + ": " + name);
    }
    // Hall certificates also for the constructed realizations.
    int extra = 0;
    for (const auto & g : graphs) {
        if (g.edge_count() == 0)
            continue;
        auto cover = min_edge_clique_cover(g);
        if (is_chordal(g)) {
            auto b = chordal_realizer(g);
            o.require(static_cast<int>(hall_certificate(g, cover, b.realization.digraph).matched.size()) ==
                          cover.size(),
                      g6(g) + ": hall on chordal build");
            ++extra;
        }
        if (!occupied_vertex_violation(g)) {
            auto s = rebuild_star(g, exact_indices(g).witness);
            o.require(static_cast<int>(hall_certificate(g, cover, s.digraph).matched.size()) == cover.size(),
                      g6(g) + ": hall on rebuilt digraph");
            ++extra;
        }
    }
    int n6 = 0;
    for (const auto & g : graphs)
        n6 += g.order() == 6;
    o.require(n6 == 112, "expected 112 connected classes on 6 vertices");
    if (o.passed)
        o.detail = std::to_string(graphs.size()) + " connected graphs (" + std::to_string(n6) +
                   " on 6 vertices), 0 violations; " + std::to_string(extra) + " extra Hall certificates";
    return o;
}

Outcome effective_equality()
{
    Outcome o;
    int chordal = 0, diamond_free = 0;
    for (const auto & g : graphs_up_to(6, true)) {
        if (g.edge_count() == 0)
            continue;
        const bool is_ch = !oracle::has_hole(g);
        const bool is_df = oracle::diamond_free(g);
        if (!is_ch && !is_df)
            continue;
        auto ex = exact_indices(g, {true});
        const int theta = theta_e(g), n = g.order();
        const std::string tag = g6(g);
        if (is_ch) {
            ++chordal;
            auto b = chordal_realizer(g);
            o.require(b.certificate.valid(), tag + ": chordal certificate");
            o.require(b.realization.prey_count == theta, tag + ": chordal prey != theta_e");
            o.require(ex.k == 1, tag + ": chordal k != 1");
        }
        if (is_df) {
            ++diamond_free;
            auto s = rebuild_star(g, ex.witness);
            auto cert = verify_effective_cover(g, edge_maximal_cliques(g), s.digraph, ex.k);
            o.require(cert.valid(), tag + ": rebuilt certificate " + cert.failure().value_or(""));
        }
        o.require(ex.k == theta - n + ex.p, tag + ": k != theta_e - n + p");
        o.require(ex.min_prey == theta, tag + ": min prey != theta_e");
    }
    if (o.passed)
        o.detail = std::to_string(chordal) + " chordal, " + std::to_string(diamond_free) + " diamond-free; 0 violations";
    return o;
}

Outcome planar_formula()
{
    Outcome o;
    std::vector<std::pair<std::string, Graph>> cases;
    for (int n = 4; n <= 8; ++n)
        cases.emplace_back("C" + std::to_string(n), cycle_graph(n));
    for (auto & t : trees_up_to(7))
        cases.emplace_back("tree " + g6(t), t);
    auto gallery = planar_gallery();
    cases.insert(cases.end(), gallery.begin(), gallery.end());
    int trees = 0;
    for (const auto & [name, g] : cases) {
        trees += name.rfind("tree", 0) == 0;
        auto ex = exact_indices(g);
        auto pf = planar_formula_check(g, ex.p, ex.k);
        o.require(pf.theta_identity, name + ": theta_e != |E| - 2c3 - 5c4");
        o.require(pf.k_formula == ex.k, name + ": formula gives " + std::to_string(pf.k_formula) + ", exact k " +
                                             std::to_string(ex.k));
    }
    o.require(trees == 1 + 1 + 1 + 2 + 3 + 6 + 11, "tree count");
    if (o.passed)
        o.detail = "5 cycles, " + std::to_string(trees) + " trees, " + std::to_string(gallery.size()) +
                   " hand-built graphs";
    return o;
}

Outcome conjecture_probe()
{
    Outcome o;
    auto graphs = graphs_up_to(6, false);
    SweepOptions opts;
    opts.checks = checks::kConjecture;
    auto report = sweep(graphs, opts);
    auto summary = sweep_json(report)["summary"];
    o.detail = std::to_string(report.summary.conjecture_equal) + "/" + std::to_string(report.summary.conjecture_tested) +
               " graphs satisfy k = theta_e - n + p; " + std::to_string(report.summary.counterexamples.size()) +
               " counterexamples";
    for (const auto & c : summary["counterexamples"])
        o.notes.push_back("counterexample " + c.dump());
    for (const auto & rec : report.records)
        if (!rec.error.empty()) {
            o.passed = false;
            o.notes.push_back(rec.graph6 + ": " + rec.error);
        }
    return o;
}

Outcome round_trips()
{
    Outcome o;
    std::mt19937_64 rng(20240501);
    std::uniform_int_distribution<int> order(0, 7);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    const int trials = 10000;
    for (int i = 0; i < trials; ++i) {
        auto g = oracle::random_graph(rng, order(rng), density(rng));
        auto a = serialize_graph6(g);
        auto b = serialize_edge_list(g);
        o.require(parse_graph6(a) == g && serialize_graph6(parse_graph6(a)) == a, "graph6 round trip " + a);
        o.require(parse_edge_list(b) == g && serialize_edge_list(parse_edge_list(b)) == b, "edge list round trip " + a);
    }
    if (o.passed)
        o.detail = std::to_string(trials) + " random graphs, both formats";
    return o;
}

} // namespace

int main()
{
    run(1, "food-web fixture", 1.0, food_web);
    run(2, "realizer agrees with DAG enumeration, n <= 4, k <= 2", 300.0, oracle_equivalence);
    run(3, "theorem sweep over connected graphs, n <= 6", 1800.0, theorem_sweep);
    run(4, "effective-cover equality on chordal and diamond-free graphs", 0, effective_equality);
    run(5, "plane-graph formula", 0, planar_formula);
    run(6, "conjecture probe over all graphs, n <= 6 (tally only)", 0, conjecture_probe);
    run(7, "graph6 and edge-list round trips", 0, round_trips);
    std::printf("%s: %d criterion failure(s)\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
