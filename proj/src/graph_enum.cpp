#include "treesq/graph_enum.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "treesq/errors.hpp"

namespace treesq {

namespace {

// Index of edge {u, v} (1 <= u < v <= n) among the C(n,2) vertex pairs.
int edge_index(int n, int u, int v) { return (u - 1) * n - (u - 1) * u / 2 + (v - u - 1); }

std::uint64_t edge_mask(const Graph& g) {
    std::uint64_t mask = 0;
    const int n = g.vertex_count();
    for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << edge_index(n, u, v);
    return mask;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (mask & (std::uint64_t{1} << edge_index(n, u, v))) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// Edge-index remap tables for all permutations of 1..n, built once per call.
struct PermTables {
    int n;
    int npairs;
    std::vector<std::array<std::int8_t, 28>> maps; // 28 = C(8,2)

    explicit PermTables(int n_) : n(n_), npairs(n_ * (n_ - 1) / 2) {
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            std::array<std::int8_t, 28> m{};
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v) {
                    int pu = perm[static_cast<size_t>(u - 1)], pv = perm[static_cast<size_t>(v - 1)];
                    if (pu > pv) std::swap(pu, pv);
                    m[static_cast<size_t>(edge_index(n, u, v))] =
                        static_cast<std::int8_t>(edge_index(n, pu, pv));
                }
            maps.push_back(m);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::uint64_t canonical(std::uint64_t mask) const {
        std::uint64_t best = ~std::uint64_t{0};
        for (const auto& m : maps) {
            std::uint64_t img = 0;
            for (std::uint64_t rest = mask; rest;) {
                int e = std::countr_zero(rest);
                rest &= rest - 1;
                img |= std::uint64_t{1} << m[static_cast<size_t>(e)];
            }
            if (img < best) best = img;
        }
        return best;
    }
};

} // namespace

std::uint64_t canonical_graph_key(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kGraphEnumCap)
        throw CapExceededError("canonical_graph_key: n = " + std::to_string(n) + " exceeds cap " +
                               std::to_string(kGraphEnumCap));
    if (n <= 1) return 0;
    return PermTables(n).canonical(edge_mask(g));
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_graph_key(a) == canonical_graph_key(b);
}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 1 || n > 7) throw InvalidInputError("enumerate_graphs: n must be in 1..7");
    std::vector<std::uint64_t> reps = {0}; // the one-vertex graph
    for (int k = 1; k < n; ++k) {
        PermTables tables(k + 1);
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> next;
        // Edges of the old graph keep their pair indices once re-embedded.
        std::vector<int> remap(static_cast<size_t>(k * (k - 1) / 2));
        for (int u = 1; u <= k; ++u)
            for (int v = u + 1; v <= k; ++v)
                remap[static_cast<size_t>(edge_index(k, u, v))] = edge_index(k + 1, u, v);
        for (std::uint64_t old_mask : reps) {
            std::uint64_t base = 0;
            for (std::uint64_t rest = old_mask; rest;) {
                int e = std::countr_zero(rest);
                rest &= rest - 1;
                base |= std::uint64_t{1} << remap[static_cast<size_t>(e)];
            }
            for (std::uint64_t attach = 0; attach < (std::uint64_t{1} << k); ++attach) {
                std::uint64_t mask = base;
                for (std::uint64_t rest = attach; rest;) {
                    int u = std::countr_zero(rest) + 1;
                    rest &= rest - 1;
                    mask |= std::uint64_t{1} << edge_index(k + 1, u, k + 1);
                }
                std::uint64_t canon = tables.canonical(mask);
                if (seen.insert(canon).second) next.push_back(canon);
            }
        }
        std::sort(next.begin(), next.end());
        reps = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (std::uint64_t mask : reps) out.push_back(graph_from_mask(n, mask));
    return out;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    std::vector<Graph> out;
    for (Graph& g : enumerate_graphs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

} // namespace treesq
