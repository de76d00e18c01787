#include "treesq/monomial_ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "treesq/errors.hpp"

namespace treesq {

MonomialIdeal2 edge_ideal(const Graph& g) {
    if (g.edge_count() == 0) throw InvalidInputError("edge_ideal: edgeless graph (zero ideal)");
    return MonomialIdeal2{g.vertex_count(), g.edges()};
}

VariableOrder VariableOrder::standard(int nvars) {
    VariableOrder v;
    v.rank.resize(static_cast<size_t>(nvars));
    std::iota(v.rank.begin(), v.rank.end(), 1);
    return v;
}

GeneratorOrder revlex_order(const MonomialIdeal2& ideal, const VariableOrder& vars) {
    const int n = ideal.nvars;
    if (static_cast<int>(vars.rank.size()) != n)
        throw InvalidInputError("revlex_order: variable order has wrong length");
    std::vector<int> pos(static_cast<size_t>(n) + 1, -1);
    for (int p = 0; p < n; ++p) {
        int v = vars.rank[static_cast<size_t>(p)];
        if (v < 1 || v > n || pos[static_cast<size_t>(v)] != -1)
            throw InvalidInputError("revlex_order: rank is not a permutation of 1..nvars");
        pos[static_cast<size_t>(v)] = p;
    }
    // For equal-degree squarefree monomials, u > v in revlex iff at the least
    // variable where the supports differ, u misses it. Descending revlex is
    // therefore ascending lexicographic order of (position of lesser variable,
    // position of greater variable).
    GeneratorOrder out;
    out.seq = ideal.gens;
    auto key = [&](const VarPair& g) {
        int p = pos[static_cast<size_t>(g.first)], q = pos[static_cast<size_t>(g.second)];
        if (p > q) std::swap(p, q);
        return std::pair<int, int>(q, p);
    };
    std::sort(out.seq.begin(), out.seq.end(),
              [&](const VarPair& a, const VarPair& b) { return key(a) < key(b); });
    return out;
}

namespace {

void check_order(const MonomialIdeal2& ideal, const GeneratorOrder& order) {
    std::vector<VarPair> sorted = order.seq;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != ideal.gens)
        throw InvalidInputError("generator order is not a permutation of the generators");
}

// Colon of <seq[0..count-1]> : <u>. Single variables from generators meeting
// u, leftover disjoint pairs that no such variable divides.
ColonResult colon_of_prefix(const std::vector<VarPair>& seq, size_t count, VarPair u) {
    std::vector<int> vars;
    std::vector<VarPair> pairs;
    for (size_t k = 0; k < count; ++k) {
        VarPair g = seq[k]; // distinct from u, so it shares at most one variable
        if (g.first == u.first || g.first == u.second)
            vars.push_back(g.second);
        else if (g.second == u.first || g.second == u.second)
            vars.push_back(g.first);
        else
            pairs.push_back(g);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    ColonResult res;
    for (int v : vars) res.gens.push_back({v});
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    bool all_degree_one = true;
    for (VarPair p : pairs) {
        if (std::binary_search(vars.begin(), vars.end(), p.first) ||
            std::binary_search(vars.begin(), vars.end(), p.second))
            continue; // dominated by a variable already in the colon
        res.gens.push_back({p.first, p.second});
        all_degree_one = false;
    }
    res.variables_only = all_degree_one;
    return res;
}

// True iff the colon of the prefix (given as adjacency of u to earlier
// generators) by u is generated by variables.
bool admissible(const std::vector<VarPair>& gens, std::uint32_t chosen_mask, int candidate) {
    VarPair u = gens[static_cast<size_t>(candidate)];
    // Variables contributed by chosen generators meeting u.
    std::vector<int> varlist;
    for (std::uint32_t m = chosen_mask; m; m &= m - 1) {
        int k = std::countr_zero(m);
        VarPair g = gens[static_cast<size_t>(k)];
        if (g.first == u.first || g.first == u.second)
            varlist.push_back(g.second);
        else if (g.second == u.first || g.second == u.second)
            varlist.push_back(g.first);
    }
    for (std::uint32_t m = chosen_mask; m; m &= m - 1) {
        int k = std::countr_zero(m);
        VarPair g = gens[static_cast<size_t>(k)];
        bool sf = (g.first == u.first || g.first == u.second);
        bool ss = (g.second == u.first || g.second == u.second);
        if (sf || ss) continue;
        bool dominated = false;
        for (int v : varlist)
            if (v == g.first || v == g.second) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

LinearQuotientCertificate build_certificate(const MonomialIdeal2& ideal, GeneratorOrder order) {
    LinearQuotientCertificate cert;
    cert.set_vars.resize(order.seq.size());
    cert.r.resize(order.seq.size());
    for (size_t i = 1; i < order.seq.size(); ++i) {
        ColonResult c = colon_of_prefix(order.seq, i, order.seq[i]);
        for (const auto& g : c.gens) cert.set_vars[i].push_back(g[0]);
        cert.r[i] = static_cast<int>(cert.set_vars[i].size());
    }
    cert.order = std::move(order);
    (void)ideal;
    return cert;
}

} // namespace

ColonResult colon_prefix(const MonomialIdeal2& ideal, const GeneratorOrder& order, int i) {
    check_order(ideal, order);
    const int N = static_cast<int>(order.seq.size());
    if (i < 2 || i > N)
        throw InvalidInputError("colon_prefix: index " + std::to_string(i) + " out of range 2.." +
                                std::to_string(N));
    return colon_of_prefix(order.seq, static_cast<size_t>(i - 1), order.seq[static_cast<size_t>(i - 1)]);
}

std::optional<LinearQuotientCertificate> verify_linear_quotients(const MonomialIdeal2& ideal,
                                                                 const GeneratorOrder& order) {
    check_order(ideal, order);
    for (size_t i = 1; i < order.seq.size(); ++i)
        if (!colon_of_prefix(order.seq, i, order.seq[i]).variables_only) return std::nullopt;
    return build_certificate(ideal, order);
}

namespace {

std::optional<GeneratorOrder> search_order(const MonomialIdeal2& ideal, int max_generators,
                                           bool backtrack) {
    const int N = ideal.generator_count();
    if (N > max_generators)
        throw CapExceededError("linear quotient search: " + std::to_string(N) +
                               " generators exceed cap " + std::to_string(max_generators));
    const std::vector<VarPair>& gens = ideal.gens; // sorted, so index order = lex order
    std::vector<int> prefix;
    prefix.reserve(static_cast<size_t>(N));
    std::unordered_set<std::uint32_t> failed;

    auto dfs = [&](auto&& self, std::uint32_t mask) -> bool {
        if (static_cast<int>(prefix.size()) == N) return true;
        if (failed.contains(mask)) return false;
        for (int c = 0; c < N; ++c) {
            if (mask & (std::uint32_t{1} << c)) continue;
            if (!admissible(gens, mask, c)) continue;
            prefix.push_back(c);
            if (self(self, mask | (std::uint32_t{1} << c))) return true;
            prefix.pop_back();
            if (!backtrack) return false; // greedy: commit to the first admissible extension
        }
        failed.insert(mask);
        return false;
    };

    if (!dfs(dfs, 0)) return std::nullopt;
    GeneratorOrder order;
    order.seq.reserve(static_cast<size_t>(N));
    for (int idx : prefix) order.seq.push_back(gens[static_cast<size_t>(idx)]);
    return order;
}

} // namespace

std::optional<LinearQuotientCertificate> search_linear_quotients(const MonomialIdeal2& ideal,
                                                                 int max_generators) {
    auto order = search_order(ideal, max_generators, /*backtrack=*/true);
    if (!order) return std::nullopt;
    return build_certificate(ideal, std::move(*order));
}

std::optional<LinearQuotientCertificate> greedy_linear_quotients(const MonomialIdeal2& ideal,
                                                                 int max_generators) {
    auto order = search_order(ideal, max_generators, /*backtrack=*/false);
    if (!order) return std::nullopt;
    return build_certificate(ideal, std::move(*order));
}

std::string LinearQuotientCertificate::to_text() const {
    std::ostringstream out;
    for (size_t i = 0; i < order.seq.size(); ++i) {
        out << "u_" << (i + 1) << " = (" << order.seq[i].first << ',' << order.seq[i].second
            << "); set = {";
        for (size_t k = 0; k < set_vars[i].size(); ++k) {
            if (k) out << ',';
            out << set_vars[i][k];
        }
        out << "}; r = " << r[i] << '\n';
    }
    return out.str();
}

BettiFromLq betti_from_lq(const LinearQuotientCertificate& cert) {
    BettiFromLq out;
    int rmax = 0;
    for (int rk : cert.r) rmax = std::max(rmax, rk);
    out.projdim = rmax;
    out.betti.assign(static_cast<size_t>(rmax) + 1, 0);
    for (int rk : cert.r) {
        long long c = 1; // C(rk, 0)
        out.betti[0] += c;
        for (int i = 1; i <= rk; ++i) {
            c = c * (rk - i + 1) / i; // exact at every step
            out.betti[static_cast<size_t>(i)] += c;
        }
    }
    return out;
}

} // namespace treesq
