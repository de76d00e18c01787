#ifndef TREESQ_GRAPH_HPP
#define TREESQ_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "treesq/bitset.hpp"

namespace treesq {

// Unordered edge {u, v}, stored with u < v. Vertices are 1-indexed.
using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 1..n.
// Internally keeps a sorted edge list plus dense bit-row adjacency
// (bit positions 1..n; bit 0 unused so indexing matches vertex labels).
class Graph {
public:
    Graph() = default; // graph on zero vertices (arises from empty induced subgraphs)

    // Validates: endpoints in 1..n, no self-loops, no duplicates.
    // Accepts pairs in either orientation and normalizes to u < v.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    // Neighbor set of v as a bitset over 1..n.
    const Bitset& neighbors(int v) const;
    std::vector<int> neighbor_list(int v) const;

    // Label-sensitive equality (isomorphism-insensitive comparison lives in graph_enum).
    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Bitset> adj_; // adj_[0] unused
};

// Exact hop counts between all vertex pairs; kUnreachable for disconnected pairs.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}

    int n() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<size_t>(u - 1) * n_ + (v - 1)]; }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
    // Max distance over all pairs; kUnreachable if some pair is disconnected.
    int diameter() const;

private:
    int n_ = 0;
    std::vector<int> d_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map; // vertex_map[new_v] = old_v, index 0 unused
};

// ---- elementary operations ----

inline constexpr int kDenseOpCap = 4096; // square/distances cap
inline constexpr int kCliqueCap = 64;    // clique enumeration cap

// Same vertices; edges of g plus all pairs at distance exactly 2.
Graph square(const Graph& g);
DistanceMatrix distances(const Graph& g);
Graph complement(const Graph& g);
// Keeps exactly the edges with both ends in w; vertices relabeled 1..|w|
// in ascending order of their old labels.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& w);
Graph add_edge(const Graph& g, int u, int v);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);

// All inclusion-maximal cliques, each sorted ascending, list sorted
// lexicographically. Bron-Kerbosch with pivoting.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, int max_vertices = kCliqueCap);

std::vector<int> free_vertices(const Graph& g); // degree-1 vertices
std::vector<int> cut_points(const Graph& g);    // by removal and component recount

// ---- standard constructions (1-indexed labelings) ----

Graph path_graph(int n);                 // edges {i, i+1}
Graph cycle_graph(int n);                // n >= 3
Graph complete_graph(int n);
Graph star_graph(int leaves);            // center 1, leaves 2..leaves+1
Graph empty_graph(int n);                // n vertices, no edges

} // namespace treesq

#endif
