#ifndef TREESQ_HOCHSTER_HPP
#define TREESQ_HOCHSTER_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "treesq/graph.hpp"

namespace treesq {

// Graded Betti table of S/I: entries (homological index i, internal degree j)
// -> rank, nonzero entries only. beta_{0,0} = 1 always.
struct BettiTable {
    int nvars = 0;
    std::map<std::pair<int, int>, long long> entries;

    long long at(int i, int j) const;
    int projdim() const; // max i with a nonzero entry
    int reg() const;     // max j - i over nonzero entries
    std::vector<long long> totals() const; // totals[i] = sum_j beta_{i,j}

    // Plain-text triangle: rows are homological index i, columns are j - i.
    std::string triangle_text() const;
};

inline constexpr int kHochsterCap = 12;

// Ground-truth graded Betti numbers of S/I(g) over the rationals: for every
// vertex subset W, beta_{|W|-d-1, |W|} picks up the rank of H~_d of the
// independence complex of the induced subgraph on W. Subsets whose induced
// subgraph has an isolated vertex are skipped (their complexes are cones,
// hence contractible).
BettiTable hochster_betti(const Graph& g, int max_vertices = kHochsterCap);

struct RegPdDepth {
    int reg = 0;
    int projdim = 0;
    int depth = 0;
};
RegPdDepth reg_pd_depth(const BettiTable& table, int nvars);

} // namespace treesq

#endif
