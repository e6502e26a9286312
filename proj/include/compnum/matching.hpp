#pragma once

// Hopcroft-Karp maximum bipartite matching. Adjacency lists are scanned in
// insertion order, so results are deterministic.

#include <limits>
#include <queue>
#include <vector>

namespace compnum {

class BipartiteMatcher {
public:
    BipartiteMatcher(int left, int right)
        : adj_(static_cast<std::size_t>(left)), match_left_(static_cast<std::size_t>(left), -1),
          match_right_(static_cast<std::size_t>(right), -1), dist_(static_cast<std::size_t>(left))
    {
    }

    void add_edge(int l, int r) { adj_[static_cast<std::size_t>(l)].push_back(r); }

    int solve()
    {
        int size = 0;
        while (bfs())
            for (int l = 0; l < left(); ++l)
                if (match_left_[static_cast<std::size_t>(l)] < 0 && dfs(l))
                    ++size;
        return size;
    }

    /// Right vertex matched to `l`, or -1.
    int mate_of_left(int l) const { return match_left_[static_cast<std::size_t>(l)]; }
    int left() const { return static_cast<int>(adj_.size()); }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();

    bool bfs()
    {
        std::queue<int> q;
        bool reachable_free = false;
        for (int l = 0; l < left(); ++l) {
            dist_[static_cast<std::size_t>(l)] = match_left_[static_cast<std::size_t>(l)] < 0 ? 0 : kInf;
            if (dist_[static_cast<std::size_t>(l)] == 0)
                q.push(l);
        }
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (int r : adj_[static_cast<std::size_t>(l)]) {
                int next = match_right_[static_cast<std::size_t>(r)];
                if (next < 0)
                    reachable_free = true;
                else if (dist_[static_cast<std::size_t>(next)] == kInf) {
                    dist_[static_cast<std::size_t>(next)] = dist_[static_cast<std::size_t>(l)] + 1;
                    q.push(next);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(int l)
    {
        for (int r : adj_[static_cast<std::size_t>(l)]) {
            int next = match_right_[static_cast<std::size_t>(r)];
            if (next < 0 ||
                (dist_[static_cast<std::size_t>(next)] == dist_[static_cast<std::size_t>(l)] + 1 && dfs(next))) {
                match_left_[static_cast<std::size_t>(l)] = r;
                match_right_[static_cast<std::size_t>(r)] = l;
                return true;
            }
        }
        dist_[static_cast<std::size_t>(l)] = kInf;
        return false;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<int> match_left_;
    std::vector<int> match_right_;
    std::vector<int> dist_;
};

} // namespace compnum
