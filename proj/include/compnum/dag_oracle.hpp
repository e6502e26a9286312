#pragma once

// Independent oracle for tiny instances: enumerate every acyclic digraph on N
// vertices and record, per isomorphism class of competition graph, the largest
// number of in-degree-0 vertices. Every acyclic digraph is isomorphic to one
// whose arcs all point from a higher index to a lower one, so those suffice.

#include <compnum/enumerate.hpp>
#include <compnum/graph.hpp>

#include <map>
#include <mutex>

namespace compnum {

struct OracleAnswer {
    bool realizable = false;
    int max_predators = -1;
};

namespace detail {
    using OracleTable = std::map<std::uint64_t, int>;

    inline OracleTable build_oracle_table(int total)
    {
        std::vector<Arc> slots;
        for (Vertex u = 0; u < total; ++u)
            for (Vertex v = 0; v < u; ++v)
                slots.push_back({u, v});
        OracleTable table;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
            Digraph d(total);
            for (std::size_t i = 0; i < slots.size(); ++i)
                if ((mask >> i) & 1U)
                    d.add_arc(slots[i].from, slots[i].to);
            auto code = canonical_code(competition_graph(d));
            int predators = total - d.prey().size();
            auto [it, fresh] = table.emplace(code, predators);
            if (!fresh)
                it->second = std::max(it->second, predators);
        }
        return table;
    }

    inline const OracleTable & oracle_table(int total)
    {
        static std::mutex lock;
        static std::map<int, OracleTable> cache;
        std::lock_guard guard(lock);
        auto it = cache.find(total);
        if (it == cache.end())
            it = cache.emplace(total, build_oracle_table(total)).first;
        return it->second;
    }
}

/// Whether G + I_k is the competition graph of an acyclic digraph, and the
/// best in-degree-0 count, by full enumeration. Requires n + k <= cap.
inline OracleAnswer dag_oracle(const Graph & g, int k, int cap = 6)
{
    const int total = g.order() + k;
    if (k < 0)
        throw PreconditionError("dag_oracle: negative isolate count");
    if (total > cap)
        throw PreconditionError("dag_oracle: " + std::to_string(total) + " vertices exceeds cap " +
                                std::to_string(cap));
    const auto & table = detail::oracle_table(total);
    auto it = table.find(canonical_code(add_isolated(g, k)));
    if (it == table.end())
        return {};
    return {true, it->second};
}

} // namespace compnum
