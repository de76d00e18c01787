#ifndef TREESQ_CHORDAL_HPP
#define TREESQ_CHORDAL_HPP

#include <optional>
#include <vector>

#include "treesq/graph.hpp"

namespace treesq {

// order[i] is the (i+1)-th eliminated vertex; for a perfect elimination
// order every vertex's later neighbors form a clique.
struct EliminationOrder {
    std::vector<int> order;
};

// Definitional simplicial check, independent of how the order was built.
bool is_simplicial_order(const Graph& g, const std::vector<int>& order);

// Maximum-cardinality search followed by the definitional re-check;
// nullopt exactly when g is not chordal.
std::optional<EliminationOrder> perfect_elimination_order(const Graph& g);

bool is_chordal(const Graph& g);
bool is_cochordal(const Graph& g);

// Two vertex-disjoint edges with no edges between their endpoints
// (an induced 2K_2). Lexicographically smallest witness.
struct GapWitness {
    Edge first, second;
};
std::optional<GapWitness> find_gap(const Graph& g);
bool is_gap_free(const Graph& g);

// Combinatorial criterion: the edge ideal of g resolves linearly iff the
// complement of g is chordal. Throws InvalidInputError on edgeless input
// (zero ideal).
bool has_linear_resolution(const Graph& g);

} // namespace treesq

#endif
