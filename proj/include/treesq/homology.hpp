#ifndef TREESQ_HOMOLOGY_HPP
#define TREESQ_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "treesq/graph.hpp"

namespace treesq {

inline constexpr int kIndependenceComplexCap = 16;
inline constexpr long long kFaceCap = 200000;

// Abstract simplicial complex on vertices 1..nvertices, faces stored as
// bitmasks (bit v = vertex v) grouped by cardinality: faces[k] holds the
// k-vertex faces, sorted; faces[0] is the empty face. Always closed under
// subsets by construction.
struct SimplicialComplex {
    int nvertices = 0;
    std::vector<std::vector<std::uint32_t>> faces;

    long long face_count() const;
    bool closed_under_subsets() const;
};

// Faces are exactly the independent sets of g (including the empty set and
// all singletons).
SimplicialComplex independence_complex(const Graph& g, int max_vertices = kIndependenceComplexCap);

// Ranks of reduced homology over the rationals, indexed from dimension -1:
// result[d+1] = rank of H~_d. Exact arithmetic only: fraction-free
// elimination in 64-bit integers with overflow detection, falling back to
// arbitrary precision when a minor overflows.
std::vector<long long> reduced_homology_ranks(const SimplicialComplex& c,
                                              long long face_cap = kFaceCap);

// Exact rank of an integer matrix over the rationals (test surface for the
// elimination kernel).
int matrix_rank_exact(std::vector<std::vector<long long>> m);

} // namespace treesq

#endif
