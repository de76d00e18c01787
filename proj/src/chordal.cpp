#include "treesq/chordal.hpp"

#include <algorithm>

#include "treesq/errors.hpp"

namespace treesq {

bool is_simplicial_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) return false;
    Bitset later(n + 1);
    for (int v = 1; v <= n; ++v) later.set(v);
    for (int v : order) {
        if (v < 1 || v > n || !later.test(v)) return false; // not a permutation
        later.reset(v);
        Bitset s = g.neighbors(v) & later;
        for (int u = s.find_first(); u >= 0; u = s.find_next(u)) {
            Bitset rest = s;
            rest.reset(u);
            if (!rest.is_subset_of(g.neighbors(u))) return false;
        }
    }
    return true;
}

std::optional<EliminationOrder> perfect_elimination_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(static_cast<size_t>(n) + 1, 0);
    std::vector<bool> picked(static_cast<size_t>(n) + 1, false);
    std::vector<int> order(static_cast<size_t>(n));
    // Maximum cardinality search; picks fill the order from the back.
    for (int pos = n - 1; pos >= 0; --pos) {
        int v = -1;
        for (int u = 1; u <= n; ++u)
            if (!picked[static_cast<size_t>(u)] && (v == -1 || weight[static_cast<size_t>(u)] > weight[static_cast<size_t>(v)]))
                v = u;
        picked[static_cast<size_t>(v)] = true;
        order[static_cast<size_t>(pos)] = v;
        const Bitset& nb = g.neighbors(v);
        for (int u = nb.find_first(); u >= 0; u = nb.find_next(u))
            if (!picked[static_cast<size_t>(u)]) ++weight[static_cast<size_t>(u)];
    }
    if (!is_simplicial_order(g, order)) return std::nullopt;
    return EliminationOrder{std::move(order)};
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

bool is_cochordal(const Graph& g) { return is_chordal(complement(g)); }

std::optional<GapWitness> find_gap(const Graph& g) {
    const auto& edges = g.edges();
    const size_t m = edges.size();
    for (size_t i = 0; i < m; ++i) {
        auto [a, b] = edges[i];
        for (size_t j = i + 1; j < m; ++j) {
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d))
                continue;
            return GapWitness{edges[i], edges[j]};
        }
    }
    return std::nullopt;
}

bool is_gap_free(const Graph& g) { return !find_gap(g).has_value(); }

bool has_linear_resolution(const Graph& g) {
    if (g.edge_count() == 0)
        throw InvalidInputError("has_linear_resolution: edgeless graph (zero ideal)");
    return is_cochordal(g);
}

} // namespace treesq
