// compnum: command-line front end for the competition-number library.

#include <compnum/compnum.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

using namespace compnum;

namespace {

std::string read_source(const std::string & path)
{
    if (path == "-" || path.empty()) {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string trim(std::string s)
{
    auto issp = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!s.empty() && issp(s.back()))
        s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && issp(s[i]))
        ++i;
    return s.substr(i);
}

/// "edges" when the first content line is a two-number header, else "g6".
std::string detect_format(const std::string & text)
{
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        std::istringstream h(line);
        long long a = 0, b = 0;
        std::string extra;
        return (h >> a >> b) && !(h >> extra) ? "edges" : "g6";
    }
    return "g6";
}

Graph read_graph(const std::string & path, std::string format)
{
    auto text = read_source(path);
    if (format == "auto")
        format = detect_format(text);
    if (format == "edges")
        return parse_edge_list(text);
    if (format == "g6")
        return parse_graph6(trim(text));
    throw Error("a graph cannot be read in format " + format);
}

Digraph read_digraph(const std::string & path) { return parse_arc_list(read_source(path), true); }

json edges_json(const Graph & g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", edges}, {"graph6", serialize_graph6(g)}};
}

void print(const json & j) { std::cout << j.dump(2) << '\n'; }

std::string arcs_text(const Digraph & d) { return serialize_arc_list(d); }

std::string cliques_text(const std::vector<Clique> & cs)
{
    std::string out;
    for (Clique c : cs) {
        std::string line;
        for (Vertex v : c)
            line += (line.empty() ? "" : " ") + std::to_string(v);
        out += line + '\n';
    }
    return out;
}

unsigned parse_checks(const std::string & s)
{
    if (s == "all")
        return checks::kAll;
    if (s == "bounds" || s == "thm5")
        return checks::kBounds;
    if (s == "effective")
        return checks::kEffective;
    if (s == "planar")
        return checks::kPlanar;
    if (s == "conjecture")
        return checks::kConjecture;
    throw Error("unknown check selection " + s);
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Competition numbers, edge clique covers and predator indices of small graphs"};
    app.require_subcommand(1);

    std::string in = "-", format = "auto", graph_path, cover_path, digraph_path, out_path, check_sel = "all";
    bool as_json = false, witness = false, connected = false;
    int k = -1, n = -1, p = -1;

    auto graph_input = [&](CLI::App * sub) {
        sub->add_option("--in", in, "input file, or - for stdin")->capture_default_str();
        sub->add_option("--format", format, "g6, edges or auto")
            ->check(CLI::IsMember({"auto", "g6", "edges"}))
            ->capture_default_str();
        sub->add_flag("--json", as_json, "print JSON");
    };

    auto * compete = app.add_subcommand("compete", "competition graph of a digraph");
    compete->add_option("--in", in, "arc list file, or - for stdin")->capture_default_str();
    compete->add_option("--format", format, "arcs (\"u > v\") or edges (\"u v\" read as u -> v)")
        ->check(CLI::IsMember({"auto", "arcs", "edges", "g6"}));
    compete->add_flag("--json", as_json, "print JSON");

    auto * theta = app.add_subcommand("theta", "edge clique cover number");
    graph_input(theta);
    theta->add_flag("--witness", witness, "also list a minimum cover");
    auto * cover = app.add_subcommand("cover", "a minimum edge clique cover of maximal cliques");
    graph_input(cover);
    cover->add_flag("--witness", witness, "accepted for symmetry; the cover is always listed");
    auto * knumber = app.add_subcommand("knumber", "competition number");
    graph_input(knumber);
    knumber->add_flag("--witness", witness, "include a witness digraph");
    auto * pindex = app.add_subcommand("pindex", "primary predator index");
    graph_input(pindex);
    pindex->add_flag("--witness", witness, "include a witness digraph");
    auto * realize = app.add_subcommand("realize", "decide realizability with k extra isolates");
    graph_input(realize);
    realize->add_option("--k", k, "number of isolated vertices")->required()->check(CLI::NonNegativeNumber);
    auto * chordal = app.add_subcommand("chordal-build", "one-extra-vertex realization of a chordal graph");
    graph_input(chordal);
    auto * star = app.add_subcommand("rebuild-star", "sink-per-clique realization for occupied-edge graphs");
    graph_input(star);
    star->add_option("--digraph", digraph_path, "realizing arc list; default is the exact witness");
    auto * verify = app.add_subcommand("verify-effective", "check an effective competition cover");
    verify->add_option("--graph", graph_path, "graph file")->required();
    verify->add_option("--cover", cover_path, "cover JSON (as printed by cover --json)")->required();
    verify->add_option("--digraph", digraph_path, "arc list")->required();
    verify->add_option("--format", format, "graph format")->check(CLI::IsMember({"auto", "g6", "edges"}));
    auto * hall = app.add_subcommand("hall-cert", "matching of cover cliques to distinct common prey");
    hall->add_option("--graph", graph_path, "graph file")->required();
    hall->add_option("--digraph", digraph_path, "arc list; default is the exact witness");
    hall->add_option("--format", format, "graph format")->check(CLI::IsMember({"auto", "g6", "edges"}));
    auto * bounds = app.add_subcommand("bounds", "lower bounds and exact values");
    graph_input(bounds);
    auto * planar = app.add_subcommand("planar-check", "plane-graph formula for a caller-asserted planar graph");
    graph_input(planar);
    planar->add_option("--p", p, "predator index; default is the exact value")->check(CLI::NonNegativeNumber);
    auto * sweep_cmd = app.add_subcommand("sweep", "check the theorems over many graphs");
    auto * n_opt = sweep_cmd->add_option("--n", n, "all graphs on 1..n vertices (n <= 6)")->check(CLI::Range(1, 6));
    sweep_cmd->add_option("--in", in, "graph6 stream, one graph per line")->excludes(n_opt);
    sweep_cmd->add_flag("--connected", connected, "connected graphs only");
    sweep_cmd->add_option("--checks", check_sel, "all, bounds (alias thm5), effective, planar or conjecture")
        ->check(CLI::IsMember({"all", "bounds", "thm5", "effective", "planar", "conjecture"}))
        ->capture_default_str();
    sweep_cmd->add_option("--out", out_path, "write the full JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compete->parsed()) {
            if (format == "g6")
                throw Error("compete reads a digraph: use --format arcs or edges");
            auto d = read_digraph(in);
            auto g = competition_graph(d);
            if (as_json)
                print(edges_json(g));
            else
                std::cout << serialize_edge_list(g);
            return 0;
        }
        if (theta->parsed() || cover->parsed()) {
            auto g = read_graph(in, format);
            auto c = min_edge_clique_cover(g);
            if (as_json)
                print(cover_json(c));
            else if (theta->parsed()) {
                std::cout << c.size() << '\n';
                if (witness)
                    std::cout << cliques_text(c.cliques);
            } else
                std::cout << cliques_text(c.cliques);
            return 0;
        }
        if (knumber->parsed() || pindex->parsed()) {
            auto g = read_graph(in, format);
            auto ex = exact_indices(g);
            if (as_json)
                print(indices_json(ex, witness));
            else {
                std::cout << (knumber->parsed() ? ex.k : ex.p) << '\n';
                if (witness)
                    std::cout << arcs_text(ex.witness.digraph);
            }
            return 0;
        }
        if (realize->parsed()) {
            auto g = read_graph(in, format);
            auto r = realizable_with(g, k);
            if (as_json) {
                json j{{"k", k}, {"realizable", r.has_value()}};
                if (r) {
                    j["max_predators"] = *max_predators_with(g, k);
                    j["witness"] = realization_json(*r);
                }
                print(j);
            } else if (r)
                std::cout << arcs_text(r->digraph);
            else
                std::cout << "not realizable with k = " << k << '\n';
            return 0;
        }
        if (chordal->parsed()) {
            auto g = read_graph(in, format);
            auto b = chordal_realizer(g);
            if (as_json)
                print({{"peo", b.peo},
                       {"cover", cover_json(b.cover)},
                       {"first_positions", b.first_positions},
                       {"realization", realization_json(b.realization)},
                       {"certificate", certificate_json(b.certificate)}});
            else
                std::cout << arcs_text(b.realization.digraph);
            return 0;
        }
        if (star->parsed()) {
            auto g = read_graph(in, format);
            auto base = digraph_path.empty() ? exact_indices(g).witness : make_realization(g, read_digraph(digraph_path));
            auto r = rebuild_star(g, base);
            if (as_json)
                print(realization_json(r));
            else
                std::cout << arcs_text(r.digraph);
            return 0;
        }
        if (verify->parsed()) {
            auto g = read_graph(graph_path, format);
            auto cliques = cliques_from_json(json::parse(read_source(cover_path)));
            auto cert = verify_effective_cover(g, cliques, read_digraph(digraph_path));
            print(certificate_json(cert));
            return cert.valid() ? 0 : 1;
        }
        if (hall->parsed()) {
            auto g = read_graph(graph_path, format);
            auto d = digraph_path.empty() ? exact_indices(g).witness.digraph : read_digraph(digraph_path);
            print(hall_json(hall_certificate(g, min_edge_clique_cover(g), d)));
            return 0;
        }
        if (bounds->parsed()) {
            auto g = read_graph(in, format);
            auto j = bounds_json(bounds_report(g));
            if (as_json)
                print(j);
            else
                for (auto & [key, value] : j.items())
                    std::cout << key << ": " << value.dump() << '\n';
            return 0;
        }
        if (planar->parsed()) {
            auto g = read_graph(in, format);
            auto pf = planar_formula_check(g, p >= 0 ? p : exact_indices(g).p);
            json j{{"faces", pf.faces},
                   {"k_formula", pf.k_formula},
                   {"theta_e", pf.theta_e},
                   {"theta_identity", pf.theta_identity},
                   {"census", {{"c2", pf.census[0]}, {"c3", pf.census[1]}, {"c4", pf.census[2]}}}};
            if (pf.exact_k)
                j["k"] = *pf.exact_k;
            if (pf.consistent)
                j["consistent"] = *pf.consistent;
            if (as_json)
                print(j);
            else
                for (auto & [key, value] : j.items())
                    std::cout << key << ": " << value.dump() << '\n';
            return pf.consistent.value_or(true) && pf.theta_identity ? 0 : 2;
        }
        if (sweep_cmd->parsed()) {
            std::vector<Graph> graphs;
            if (n > 0) {
                for (int i = 1; i <= n; ++i)
                    for (auto & g : enumerate_small_graphs(i, connected))
                        graphs.push_back(std::move(g));
            } else {
                std::istringstream lines(read_source(in));
                for (std::string line; std::getline(lines, line);) {
                    line = trim(line);
                    if (line.empty())
                        continue;
                    auto g = parse_graph6(line);
                    if (!connected || g.is_connected())
                        graphs.push_back(std::move(g));
                }
            }
            SweepOptions opts;
            opts.checks = parse_checks(check_sel);
            auto report = sweep(graphs, opts);
            auto j = sweep_json(report);
            if (!out_path.empty()) {
                std::ofstream out(out_path, std::ios::binary);
                if (!out)
                    throw Error("cannot write " + out_path);
                out << j.dump(2) << '\n';
            }
            print(j["summary"]);
            return report.exit_code();
        }
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
