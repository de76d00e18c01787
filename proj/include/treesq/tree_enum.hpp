#ifndef TREESQ_TREE_ENUM_HPP
#define TREESQ_TREE_ENUM_HPP

#include <random>
#include <string>
#include <vector>

#include "treesq/graph.hpp"

namespace treesq {

inline constexpr int kTreeEnumCap = 12;

// Centers of a tree (one or two adjacent vertices), by leaf peeling.
std::vector<int> tree_centers(const Graph& t);

// Canonical level code of a rooted tree: "1" + sorted child codes + "0".
std::string rooted_code(const Graph& t, int root);

// Canonical code of a free tree: rooted at its center, the lexicographically
// smaller of the two rootings when there are two centers. Two trees share a
// code iff they are isomorphic.
std::string ahu_code(const Graph& t);

// Canonical representative of a code: vertices labeled 1..n in preorder.
Graph tree_from_code(const std::string& code);

struct CanonicalTree {
    int n = 0;
    std::string code;
    Graph representative;
};

// One representative per isomorphism class, sorted by code. 2 <= n <= 12.
std::vector<CanonicalTree> enumerate_trees(int n);

// Uniform labeled tree on n >= 2 vertices via a random Pruefer sequence.
Graph random_tree(int n, std::mt19937_64& rng);

} // namespace treesq

#endif
