#ifndef TREESQ_MONOMIAL_IDEAL_HPP
#define TREESQ_MONOMIAL_IDEAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treesq/graph.hpp"

namespace treesq {

// A pair of variable indices {a, b}, a < b, 1-indexed.
using VarPair = std::pair<int, int>;

// Squarefree monomial ideal generated in degree 2: ambient variable count
// plus the supports of its generators. Built from a graph it is exactly the
// edge ideal.
struct MonomialIdeal2 {
    int nvars = 0;
    std::vector<VarPair> gens; // sorted, distinct

    int generator_count() const { return static_cast<int>(gens.size()); }
};

// Throws on edgeless input (zero ideal).
MonomialIdeal2 edge_ideal(const Graph& g);

// A processing order u_1, u_2, ..., u_N of the generators.
struct GeneratorOrder {
    std::vector<VarPair> seq;
};

// rank[0] is the greatest variable, rank[nvars-1] the least.
struct VariableOrder {
    std::vector<int> rank;

    static VariableOrder standard(int nvars); // x_1 > x_2 > ... > x_n
};

// Generators sorted descending under the reverse lexicographic order induced
// by vars (u_1 is revlex-greatest). Total order on distinct squarefree
// degree-2 monomials.
GeneratorOrder revlex_order(const MonomialIdeal2& ideal, const VariableOrder& vars);

// Minimal monomial generating set of <u_1,...,u_{i-1}> : <u_i>, computed as
// the minimal elements of { u_k / gcd(u_k, u_i) : k < i }. Each generator is
// a sorted variable list of size 1 or 2. i is 1-based, 2 <= i <= N.
struct ColonResult {
    std::vector<std::vector<int>> gens;
    bool variables_only = false;
};
ColonResult colon_prefix(const MonomialIdeal2& ideal, const GeneratorOrder& order, int i);

// Witness that an order has linear quotients: per-generator colon variable
// sets and their sizes. set_vars[0] is empty, r[0] = 0.
struct LinearQuotientCertificate {
    GeneratorOrder order;
    std::vector<std::vector<int>> set_vars;
    std::vector<int> r;

    std::string to_text() const; // one line per generator, golden-file format
};

// Certificate iff every prefix colon ideal is generated by variables.
std::optional<LinearQuotientCertificate> verify_linear_quotients(const MonomialIdeal2& ideal,
                                                                 const GeneratorOrder& order);

inline constexpr int kLinearQuotientGenCap = 24;

// Backtracking over generator orders, smallest admissible extension first;
// failed prefixes are memoized by generator set. Finds an order with linear
// quotients iff one exists.
std::optional<LinearQuotientCertificate> search_linear_quotients(
    const MonomialIdeal2& ideal, int max_generators = kLinearQuotientGenCap);

// Greedy variant (always extend with the smallest admissible generator, no
// backtracking). Used to observe whether greedy ever stalls where the full
// search succeeds.
std::optional<LinearQuotientCertificate> greedy_linear_quotients(
    const MonomialIdeal2& ideal, int max_generators = kLinearQuotientGenCap);

// Total Betti numbers of the ideal itself from a linear-quotient certificate:
// beta_i(I) = sum_k C(r_k, i); projdim(I) = max r_k. Note the shift against
// tables for S/I: beta_i(I) = beta_{i+1}(S/I).
struct BettiFromLq {
    std::vector<long long> betti; // betti[i] = beta_i(I)
    int projdim = 0;              // projdim of I (not of S/I)
};
BettiFromLq betti_from_lq(const LinearQuotientCertificate& cert);

} // namespace treesq

#endif
