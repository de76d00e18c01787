#include "treesq/homology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include <gmpxx.h>

#include "treesq/errors.hpp"

namespace treesq {

long long SimplicialComplex::face_count() const {
    long long c = 0;
    for (const auto& level : faces) c += static_cast<long long>(level.size());
    return c;
}

bool SimplicialComplex::closed_under_subsets() const {
    if (faces.empty() || faces[0] != std::vector<std::uint32_t>{0}) return false;
    for (size_t k = 1; k < faces.size(); ++k) {
        for (std::uint32_t f : faces[k]) {
            for (std::uint32_t m = f; m; m &= m - 1) {
                std::uint32_t sub = f & ~(m & -m);
                if (!std::binary_search(faces[k - 1].begin(), faces[k - 1].end(), sub))
                    return false;
            }
        }
    }
    return true;
}

SimplicialComplex independence_complex(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw CapExceededError("independence_complex: n = " + std::to_string(n) + " exceeds cap " +
                               std::to_string(max_vertices));
    std::vector<std::uint32_t> adj(static_cast<size_t>(n) + 1, 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= std::uint32_t{1} << v;
        adj[static_cast<size_t>(v)] |= std::uint32_t{1} << u;
    }
    SimplicialComplex c;
    c.nvertices = n;
    c.faces.assign(static_cast<size_t>(n) + 1, {});
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << (n + 1)); s += 2) {
        bool independent = true;
        for (std::uint32_t m = s; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (adj[static_cast<size_t>(v)] & s) {
                independent = false;
                break;
            }
        }
        if (independent) c.faces[static_cast<size_t>(std::popcount(s))].push_back(s);
    }
    while (c.faces.size() > 1 && c.faces.back().empty()) c.faces.pop_back();
    for (auto& level : c.faces) std::sort(level.begin(), level.end());
    return c;
}

namespace {

struct OverflowSignal {};

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
}

// Fraction-free (Bareiss) elimination; divisions are exact. Throws
// OverflowSignal if any intermediate minor leaves the 64-bit range.
int rank_bareiss_i64(std::vector<std::vector<long long>>& m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    long long prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                m[i][j] = checked_sub(checked_mul(m[r][c], m[i][j]), checked_mul(m[i][c], m[r][j])) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

int rank_bareiss_mpz(const std::vector<std::vector<long long>>& src) {
    const size_t rows = src.size();
    const size_t cols = rows ? src[0].size() : 0;
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m[i][j] = src[i][j];
    mpz_class prev = 1, t, t2;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                t = m[r][c] * m[i][j];
                t2 = m[i][c] * m[r][j];
                t -= t2;
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

int matrix_rank_exact(std::vector<std::vector<long long>> m) {
    std::vector<std::vector<long long>> copy = m;
    try {
        return rank_bareiss_i64(copy);
    } catch (const OverflowSignal&) {
        return rank_bareiss_mpz(m);
    }
}

std::vector<long long> reduced_homology_ranks(const SimplicialComplex& c, long long face_cap) {
    if (c.faces.empty() || c.faces[0].empty())
        throw std::logic_error("reduced_homology_ranks: void complex is unreachable");
    if (c.face_count() > face_cap)
        throw CapExceededError("reduced_homology_ranks: " + std::to_string(c.face_count()) +
                               " faces exceed cap " + std::to_string(face_cap));
    const size_t levels = c.faces.size(); // faces[k]: k-vertex faces, dimension k-1
    // boundary_rank[k] = rank of the boundary map from k-vertex faces to
    // (k-1)-vertex faces; the k = 1 map sends every vertex to the empty face.
    std::vector<int> boundary_rank(levels + 1, 0);
    for (size_t k = 1; k < levels; ++k) {
        if (c.faces[k].empty()) break;
        if (k == 1) {
            boundary_rank[1] = 1;
            continue;
        }
        std::unordered_map<std::uint32_t, size_t> row_index;
        row_index.reserve(c.faces[k - 1].size());
        for (size_t i = 0; i < c.faces[k - 1].size(); ++i) row_index[c.faces[k - 1][i]] = i;
        std::vector<std::vector<long long>> mat(
            c.faces[k - 1].size(), std::vector<long long>(c.faces[k].size(), 0));
        for (size_t col = 0; col < c.faces[k].size(); ++col) {
            std::uint32_t f = c.faces[k][col];
            int sign = 1;
            for (std::uint32_t m = f; m; m &= m - 1) {
                std::uint32_t sub = f & ~(m & -m);
                mat[row_index.at(sub)][col] = sign;
                sign = -sign;
            }
        }
        boundary_rank[k] = matrix_rank_exact(std::move(mat));
    }
    std::vector<long long> ranks(levels);
    for (size_t k = 0; k < levels; ++k) {
        // H~_{k-1} = #(k-vertex faces) - rank d_k - rank d_{k+1}
        long long fk = static_cast<long long>(c.faces[k].size());
        long long next = (k + 1 < levels) ? boundary_rank[k + 1] : 0;
        ranks[k] = fk - boundary_rank[k] - next;
    }
    // Exactness self-check: reduced Euler characteristic both ways.
    long long chi_faces = 0, chi_ranks = 0;
    for (size_t k = 0; k < levels; ++k) {
        long long sgn = (k % 2 == 0) ? -1 : 1; // dimension k-1 carries (-1)^{k-1}
        chi_faces += sgn * static_cast<long long>(c.faces[k].size());
        chi_ranks += sgn * ranks[k];
    }
    if (chi_faces != chi_ranks)
        throw std::logic_error("reduced_homology_ranks: Euler characteristic mismatch");
    return ranks;
}

} // namespace treesq
