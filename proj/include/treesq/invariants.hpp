#ifndef TREESQ_INVARIANTS_HPP
#define TREESQ_INVARIANTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treesq/graph.hpp"

namespace treesq {

inline constexpr int kMisCap = 64;
inline constexpr int kIndmatCap = 40;
inline constexpr int kDPrimeCap = 24;
inline constexpr int kBightCap = 24;

struct IndependentSetResult {
    int size = 0;
    std::vector<int> witness;
};
// Exact maximum independent set (branch and bound). Krull dimension of
// S/I(g) equals this size.
IndependentSetResult max_independent_set(const Graph& g, int max_vertices = kMisCap);

struct InducedMatchingResult {
    int size = 0;
    std::vector<Edge> witness;
};
// Largest set of pairwise disjoint edges with no edges between their
// endpoints. Exact search over the edge conflict graph.
InducedMatchingResult induced_matching_number(const Graph& g, int max_vertices = kIndmatCap);

// A family of vertex-disjoint star subgraphs with pairwise non-adjacent
// roots; each root keeps a nonempty flower set of its neighbors.
struct BouquetSet {
    std::vector<int> roots;
    std::map<int, std::vector<int>> flowers;

    int flower_count() const;
};
// Re-checks every invariant of the family against g.
bool validate_bouquets(const Graph& g, const BouquetSet& b);

struct DPrimeResult {
    int size = 0;
    BouquetSet witness;
};
// Maximum total flower count over such families. Search enumerates
// independent root sets; a root set is feasible iff a bipartite matching
// saturates it into its outside neighborhood, and then every outside
// neighbor becomes a flower.
DPrimeResult d_prime(const Graph& g, int max_vertices = kDPrimeCap);

// Flower count achievable with exactly this root set, or nullopt when no
// family with these roots exists.
std::optional<int> root_set_score(const Graph& g, const std::vector<int>& roots);

// Max size of a minimal vertex cover: n minus the smallest inclusion-maximal
// independent set.
int bight(const Graph& g, int max_vertices = kBightCap);

enum class Provenance { formula, search, oracle, theorem };
std::string to_string(Provenance p);

// All invariants of one graph, each value tagged with how it was obtained.
// projdim_si and depth use the S/I convention: depth + projdim_si = n.
struct InvariantReport {
    int n = 0, m = 0;
    int dim = 0, depth = 0, projdim_si = 0, reg = 0, bight = 0, indmat = 0, d_prime = 0;
    bool linear_resolution = false;
    Provenance dim_src{}, depth_src{}, pd_src{}, reg_src{}, bight_src{}, indmat_src{},
        dprime_src{};

    static std::string csv_header();
    std::string csv_row() const;
};

// Theorem-driven report for connected chordal graphs with at least one edge:
// projdim = d', reg = induced matching number, dim = max independent set,
// depth = n - projdim. Refuses non-chordal input (use the Betti oracle
// instead).
InvariantReport chordal_report(const Graph& g);

} // namespace treesq

#endif
