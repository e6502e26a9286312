#pragma once

// Text formats: graph6, and a plain edge list ("n m" then m lines "u v", or
// "u > v" for arcs).

#include <compnum/graph.hpp>

#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

namespace compnum {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline Graph parse_graph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.starts_with(kGraph6Header))
        text.remove_prefix(kGraph6Header.size());
    else if (text.starts_with(">>"))
        throw ParseError("graph6: malformed header");

    std::size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= text.size())
            throw ParseError("graph6: truncated input");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: character out of range at offset " + std::to_string(pos - 1));
        return c - 63;
    };

    long long n = 0;
    if (text.empty())
        throw ParseError("graph6: empty input");
    if (text[0] != '~')
        n = take();
    else {
        ++pos;
        int width = 3;
        if (pos < text.size() && text[pos] == '~') {
            ++pos;
            width = 6;
        }
        for (int i = 0; i < width; ++i)
            n = (n << 6) | take();
    }
    if (n > kMaxVertices)
        throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds the supported maximum");

    const long long bits = n * (n - 1) / 2;
    const long long chars = (bits + 5) / 6;
    if (static_cast<long long>(text.size() - pos) < chars)
        throw ParseError("graph6: truncated bit payload");
    if (static_cast<long long>(text.size() - pos) > chars)
        throw ParseError("graph6: trailing characters after payload");

    Graph g(static_cast<int>(n));
    int word = 0, left = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) {
            if (left == 0) {
                word = take();
                left = 6;
            }
            --left;
            if ((word >> left) & 1)
                g.add_edge(u, v);
        }
    return g;
}

inline std::string serialize_graph6(const Graph & g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62)
        out.push_back(static_cast<char>(n + 63));
    else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int word = 0, filled = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) {
            word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + 63));
                word = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((word << (6 - filled)) + 63));
    return out;
}

namespace detail {
    struct EdgeListLine {
        Vertex u;
        Vertex v;
        bool directed;
    };

    inline std::vector<std::string> content_lines(std::string_view text)
    {
        std::vector<std::string> lines;
        std::istringstream in{std::string(text)};
        for (std::string line; std::getline(in, line);) {
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            bool blank = true;
            for (char c : line)
                blank = blank && std::isspace(static_cast<unsigned char>(c));
            if (!blank)
                lines.push_back(line);
        }
        return lines;
    }

    inline std::pair<int, int> parse_header(const std::vector<std::string> & lines)
    {
        if (lines.empty())
            throw ParseError("edge list: missing header");
        std::istringstream h(lines[0]);
        long long n = -1, m = -1;
        std::string extra;
        if (!(h >> n >> m) || (h >> extra))
            throw ParseError("edge list: header must be \"n m\"");
        if (n < 0 || m < 0)
            throw ParseError("edge list: negative count in header");
        if (n > kMaxVertices)
            throw ParseError("edge list: " + std::to_string(n) + " vertices exceeds the supported maximum");
        if (static_cast<long long>(lines.size()) - 1 != m)
            throw ParseError("edge list: header announces " + std::to_string(m) + " lines, found " +
                             std::to_string(lines.size() - 1));
        return {static_cast<int>(n), static_cast<int>(m)};
    }

    inline EdgeListLine parse_pair(const std::string & line, int n, std::size_t lineno)
    {
        std::istringstream in(line);
        long long u = -1, v = -1;
        std::string mid, extra;
        bool directed = line.find('>') != std::string::npos;
        bool ok = directed ? static_cast<bool>(in >> u >> mid >> v) && mid == ">" : static_cast<bool>(in >> u >> v);
        if (!ok || (in >> extra))
            throw ParseError("edge list line " + std::to_string(lineno) + ": expected \"u v\" or \"u > v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list line " + std::to_string(lineno) + ": index out of range");
        if (u == v)
            throw ParseError("edge list line " + std::to_string(lineno) + ": self-loop");
        return {static_cast<Vertex>(u), static_cast<Vertex>(v), directed};
    }
}

inline Graph parse_edge_list(std::string_view text)
{
    auto lines = detail::content_lines(text);
    auto [n, m] = detail::parse_header(lines);
    Graph g(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto e = detail::parse_pair(lines[i], n, i + 1);
        if (e.directed)
            throw ParseError("edge list line " + std::to_string(i + 1) + ": arc in an undirected edge list");
        if (!g.add_edge(e.u, e.v))
            throw ParseError("edge list line " + std::to_string(i + 1) + ": duplicate edge");
    }
    return g;
}

/// Arc list: lines "u > v". With `plain_pairs_are_arcs`, lines "u v" are also read as u -> v.
inline Digraph parse_arc_list(std::string_view text, bool plain_pairs_are_arcs = false)
{
    auto lines = detail::content_lines(text);
    auto [n, m] = detail::parse_header(lines);
    Digraph d(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto e = detail::parse_pair(lines[i], n, i + 1);
        if (!e.directed && !plain_pairs_are_arcs)
            throw ParseError("arc list line " + std::to_string(i + 1) + ": expected \"u > v\"");
        if (!d.add_arc(e.u, e.v))
            throw ParseError("arc list line " + std::to_string(i + 1) + ": duplicate arc");
    }
    return d;
}

inline std::string serialize_edge_list(const Graph & g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

inline std::string serialize_arc_list(const Digraph & d)
{
    std::ostringstream out;
    out << d.order() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs())
        out << u << " > " << v << '\n';
    return out.str();
}

} // namespace compnum
