#include "treesq/matching.hpp"

#include <limits>
#include <queue>

namespace treesq {

namespace {
constexpr int kInf = std::numeric_limits<int>::max();
}

BipartiteMatching max_bipartite_matching(int nleft, int nright,
                                         const std::vector<std::vector<int>>& adj) {
    BipartiteMatching m;
    m.left_match.assign(static_cast<size_t>(nleft), -1);
    m.right_match.assign(static_cast<size_t>(nright), -1);
    std::vector<int> dist(static_cast<size_t>(nleft));

    auto bfs = [&]() -> bool {
        std::queue<int> q;
        for (int l = 0; l < nleft; ++l) {
            if (m.left_match[static_cast<size_t>(l)] == -1) {
                dist[static_cast<size_t>(l)] = 0;
                q.push(l);
            } else {
                dist[static_cast<size_t>(l)] = kInf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (int r : adj[static_cast<size_t>(l)]) {
                int l2 = m.right_match[static_cast<size_t>(r)];
                if (l2 == -1) {
                    found = true;
                } else if (dist[static_cast<size_t>(l2)] == kInf) {
                    dist[static_cast<size_t>(l2)] = dist[static_cast<size_t>(l)] + 1;
                    q.push(l2);
                }
            }
        }
        return found;
    };

    auto dfs = [&](auto&& self, int l) -> bool {
        for (int r : adj[static_cast<size_t>(l)]) {
            int l2 = m.right_match[static_cast<size_t>(r)];
            if (l2 == -1 ||
                (dist[static_cast<size_t>(l2)] == dist[static_cast<size_t>(l)] + 1 && self(self, l2))) {
                m.left_match[static_cast<size_t>(l)] = r;
                m.right_match[static_cast<size_t>(r)] = l;
                return true;
            }
        }
        dist[static_cast<size_t>(l)] = kInf;
        return false;
    };

    while (bfs()) {
        for (int l = 0; l < nleft; ++l)
            if (m.left_match[static_cast<size_t>(l)] == -1 && dfs(dfs, l)) ++m.size;
    }
    return m;
}

} // namespace treesq
