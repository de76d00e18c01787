#include "treesq/hochster.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "treesq/errors.hpp"
#include "treesq/homology.hpp"

namespace treesq {

long long BettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

int BettiTable::projdim() const {
    int p = 0;
    for (const auto& [ij, v] : entries)
        if (v != 0) p = std::max(p, ij.first);
    return p;
}

int BettiTable::reg() const {
    int r = 0;
    for (const auto& [ij, v] : entries)
        if (v != 0) r = std::max(r, ij.second - ij.first);
    return r;
}

std::vector<long long> BettiTable::totals() const {
    std::vector<long long> t(static_cast<size_t>(projdim()) + 1, 0);
    for (const auto& [ij, v] : entries) t[static_cast<size_t>(ij.first)] += v;
    return t;
}

std::string BettiTable::triangle_text() const {
    const int pd = projdim();
    const int rg = reg();
    std::ostringstream out;
    out << "      ";
    for (int d = 0; d <= rg; ++d) out << '\t' << d;
    out << '\n';
    for (int i = 0; i <= pd; ++i) {
        out << "i=" << i << ':';
        for (int d = 0; d <= rg; ++d) {
            long long v = at(i, i + d);
            out << '\t';
            if (v)
                out << v;
            else
                out << '.';
        }
        out << '\n';
    }
    return out.str();
}

BettiTable hochster_betti(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw CapExceededError("hochster_betti: n = " + std::to_string(n) + " exceeds cap " +
                               std::to_string(max_vertices));
    std::vector<std::uint32_t> adj(static_cast<size_t>(n) + 1, 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= std::uint32_t{1} << v;
        adj[static_cast<size_t>(v)] |= std::uint32_t{1} << u;
    }
    // Subsets ordered by population count, then numeric value.
    std::vector<std::uint32_t> subsets;
    subsets.reserve(std::uint32_t{1} << n);
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << (n + 1)); s += 2) subsets.push_back(s);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });

    BettiTable table;
    table.nvars = n;
    for (std::uint32_t w : subsets) {
        bool has_isolated = false;
        for (std::uint32_t m = w; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if ((adj[static_cast<size_t>(v)] & w) == 0) {
                has_isolated = true;
                break;
            }
        }
        if (has_isolated) continue; // cone point: contractible complex
        std::vector<int> verts;
        for (std::uint32_t m = w; m; m &= m - 1) verts.push_back(std::countr_zero(m));
        auto sub = induced_subgraph(g, verts);
        auto ranks = reduced_homology_ranks(independence_complex(sub.graph));
        const int j = std::popcount(w);
        for (size_t k = 0; k < ranks.size(); ++k) {
            if (ranks[k] == 0) continue;
            int d = static_cast<int>(k) - 1;
            table.entries[{j - d - 1, j}] += ranks[k];
        }
    }
    return table;
}

RegPdDepth reg_pd_depth(const BettiTable& table, int nvars) {
    RegPdDepth out;
    out.reg = table.reg();
    out.projdim = table.projdim();
    out.depth = nvars - out.projdim;
    return out;
}

} // namespace treesq
