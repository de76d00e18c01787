#ifndef TREESQ_MATCHING_HPP
#define TREESQ_MATCHING_HPP

#include <vector>

namespace treesq {

struct BipartiteMatching {
    int size = 0;
    std::vector<int> left_match;  // left_match[l] = matched right vertex or -1
    std::vector<int> right_match; // right_match[r] = matched left vertex or -1
};

// Maximum matching via Hopcroft-Karp. Sides are 0-indexed; adj[l] lists the
// right vertices adjacent to left vertex l. Deterministic result.
BipartiteMatching max_bipartite_matching(int nleft, int nright,
                                         const std::vector<std::vector<int>>& adj);

} // namespace treesq

#endif
