#include "treesq/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "treesq/chordal.hpp"
#include "treesq/errors.hpp"
#include "treesq/matching.hpp"

namespace treesq {

namespace {

// Branch-and-bound maximum independent set over bit-row adjacency.
// Deterministic: include-branch first, pivot = smallest max-degree vertex.
struct MisSearch {
    const std::vector<Bitset>& adj; // 1-indexed rows
    int best = -1;
    std::vector<int> best_set;
    std::vector<int> current;

    void run(Bitset candidates) {
        current.clear();
        best = -1;
        recurse(candidates);
    }

    void recurse(Bitset p) {
        int pcount = p.count();
        if (static_cast<int>(current.size()) + pcount <= best) return;
        if (pcount == 0) {
            best = static_cast<int>(current.size());
            best_set = current;
            return;
        }
        int pivot = -1, maxdeg = -1;
        for (int v = p.find_first(); v >= 0; v = p.find_next(v)) {
            int d = (p & adj[static_cast<size_t>(v)]).count();
            if (d > maxdeg) {
                maxdeg = d;
                pivot = v;
            }
        }
        if (maxdeg == 0) { // all remaining candidates are pairwise non-adjacent
            size_t mark = current.size();
            for (int v = p.find_first(); v >= 0; v = p.find_next(v)) current.push_back(v);
            if (static_cast<int>(current.size()) > best) {
                best = static_cast<int>(current.size());
                best_set = current;
            }
            current.resize(mark);
            return;
        }
        Bitset with = p;
        with -= adj[static_cast<size_t>(pivot)];
        with.reset(pivot);
        current.push_back(pivot);
        recurse(with);
        current.pop_back();
        p.reset(pivot);
        recurse(p);
    }
};

std::vector<Bitset> adjacency_rows(const Graph& g) {
    std::vector<Bitset> adj(static_cast<size_t>(g.vertex_count()) + 1, Bitset(g.vertex_count() + 1));
    for (auto [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)].set(v);
        adj[static_cast<size_t>(v)].set(u);
    }
    return adj;
}

} // namespace

IndependentSetResult max_independent_set(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw CapExceededError("max_independent_set: n = " + std::to_string(n) + " exceeds cap " +
                               std::to_string(max_vertices));
    std::vector<Bitset> adj = adjacency_rows(g);
    MisSearch search{adj};
    Bitset all(n + 1);
    for (int v = 1; v <= n; ++v) all.set(v);
    search.run(all);
    std::sort(search.best_set.begin(), search.best_set.end());
    return IndependentSetResult{search.best, std::move(search.best_set)};
}

InducedMatchingResult induced_matching_number(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw CapExceededError("induced_matching_number: n = " + std::to_string(n) +
                               " exceeds cap " + std::to_string(max_vertices));
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m == 0) return {};
    // Conflict graph over edges: two edges conflict when they share a vertex
    // or some edge of g joins their endpoints. An induced matching is an
    // independent set of this graph.
    std::vector<Bitset> conflict(static_cast<size_t>(m) + 1, Bitset(m + 1));
    for (int i = 1; i <= m; ++i) {
        auto [a, b] = edges[static_cast<size_t>(i - 1)];
        for (int j = i + 1; j <= m; ++j) {
            auto [c, d] = edges[static_cast<size_t>(j - 1)];
            bool clash = (a == c || a == d || b == c || b == d) || g.adjacent(a, c) ||
                         g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d);
            if (clash) {
                conflict[static_cast<size_t>(i)].set(j);
                conflict[static_cast<size_t>(j)].set(i);
            }
        }
    }
    MisSearch search{conflict};
    Bitset all(m + 1);
    for (int e = 1; e <= m; ++e) all.set(e);
    search.run(all);
    InducedMatchingResult res;
    res.size = search.best;
    std::sort(search.best_set.begin(), search.best_set.end());
    for (int e : search.best_set) res.witness.push_back(edges[static_cast<size_t>(e - 1)]);
    return res;
}

int BouquetSet::flower_count() const {
    int c = 0;
    for (const auto& [root, fl] : flowers) c += static_cast<int>(fl.size());
    return c;
}

bool validate_bouquets(const Graph& g, const BouquetSet& b) {
    Bitset used(g.vertex_count() + 1);
    for (int r : b.roots) {
        if (r < 1 || r > g.vertex_count() || used.test(r)) return false;
        used.set(r);
    }
    if (b.flowers.size() != b.roots.size()) return false;
    for (int r : b.roots) {
        auto it = b.flowers.find(r);
        if (it == b.flowers.end() || it->second.empty()) return false; // every bouquet needs a flower
        for (int z : it->second) {
            if (z < 1 || z > g.vertex_count() || used.test(z)) return false; // disjointness
            if (!g.adjacent(r, z)) return false;                             // stem must exist
            used.set(z);
        }
    }
    for (size_t i = 0; i < b.roots.size(); ++i)
        for (size_t j = i + 1; j < b.roots.size(); ++j)
            if (g.adjacent(b.roots[i], b.roots[j])) return false; // roots non-adjacent
    return true;
}

namespace {

// Outside neighborhood of the root set; flowers can only come from here.
Bitset flower_pool(const Graph& g, const std::vector<int>& roots) {
    Bitset pool(g.vertex_count() + 1);
    for (int r : roots) pool |= g.neighbors(r);
    for (int r : roots) pool.reset(r);
    return pool;
}

std::optional<BipartiteMatching> saturating_matching(const Graph& g, const std::vector<int>& roots,
                                                     const std::vector<int>& pool) {
    std::vector<std::vector<int>> adj(roots.size());
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = 0; j < pool.size(); ++j)
            if (g.adjacent(roots[i], pool[j])) adj[i].push_back(static_cast<int>(j));
    BipartiteMatching m = max_bipartite_matching(static_cast<int>(roots.size()),
                                                 static_cast<int>(pool.size()), adj);
    if (m.size != static_cast<int>(roots.size())) return std::nullopt;
    return m;
}

BouquetSet assemble_bouquets(const Graph& g, const std::vector<int>& roots,
                             const std::vector<int>& pool, const BipartiteMatching& m) {
    BouquetSet b;
    b.roots = roots;
    for (int r : roots) b.flowers[r] = {};
    std::vector<bool> assigned(pool.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        int j = m.left_match[i];
        b.flowers[roots[i]].push_back(pool[static_cast<size_t>(j)]);
        assigned[static_cast<size_t>(j)] = true;
    }
    for (size_t j = 0; j < pool.size(); ++j) {
        if (assigned[j]) continue;
        for (int r : roots)
            if (g.adjacent(r, pool[j])) { // attach to the smallest adjacent root
                b.flowers[r].push_back(pool[j]);
                break;
            }
    }
    for (auto& [r, fl] : b.flowers) std::sort(fl.begin(), fl.end());
    return b;
}

} // namespace

std::optional<int> root_set_score(const Graph& g, const std::vector<int>& roots) {
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (g.adjacent(roots[i], roots[j])) return std::nullopt;
    std::vector<int> pool = flower_pool(g, roots).to_vector();
    if (!roots.empty() && !saturating_matching(g, roots, pool)) return std::nullopt;
    return static_cast<int>(pool.size());
}

DPrimeResult d_prime(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw CapExceededError("d_prime: n = " + std::to_string(n) + " exceeds cap " +
                               std::to_string(max_vertices));
    DPrimeResult best; // empty family scores 0
    std::vector<int> roots;

    auto consider = [&](const std::vector<int>& r) {
        std::vector<int> pool = flower_pool(g, r).to_vector();
        if (static_cast<int>(pool.size()) <= best.size) return;
        auto m = saturating_matching(g, r, pool);
        if (!m) return;
        best.size = static_cast<int>(pool.size());
        best.witness = assemble_bouquets(g, r, pool, *m);
    };

    auto extend = [&](auto&& self, int from) -> void {
        // Any strict extension has at least one more root, so it can reach at
        // most n - |roots| - 1 flowers.
        if (n - static_cast<int>(roots.size()) - 1 <= best.size) return;
        for (int v = from; v <= n; ++v) {
            if (g.degree(v) == 0) continue; // a root needs a stem
            bool indep = true;
            for (int r : roots)
                if (g.adjacent(r, v)) {
                    indep = false;
                    break;
                }
            if (!indep) continue;
            roots.push_back(v);
            consider(roots);
            self(self, v + 1);
            roots.pop_back();
        }
    };
    extend(extend, 1);
    return best;
}

int bight(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw CapExceededError("bight: n = " + std::to_string(n) + " exceeds cap " +
                               std::to_string(max_vertices));
    if (n == 0) throw InvalidInputError("bight: empty graph");
    // Maximal independent sets of g = maximal cliques of the complement;
    // minimal vertex covers are their complements.
    auto mis = maximal_cliques(complement(g), max_vertices);
    int smallest = n;
    for (const auto& s : mis) smallest = std::min(smallest, static_cast<int>(s.size()));
    return n - smallest;
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::formula: return "formula";
        case Provenance::search: return "search";
        case Provenance::oracle: return "oracle";
        case Provenance::theorem: return "theorem";
    }
    return "?";
}

std::string InvariantReport::csv_header() {
    return "n,m,dim,depth,pd,reg,bight,indmat,dprime,linres,"
           "dim_src,depth_src,pd_src,reg_src,bight_src,indmat_src,dprime_src";
}

std::string InvariantReport::csv_row() const {
    std::ostringstream out;
    out << n << ',' << m << ',' << dim << ',' << depth << ',' << projdim_si << ',' << reg << ','
        << bight << ',' << indmat << ',' << d_prime << ',' << (linear_resolution ? 1 : 0) << ','
        << to_string(dim_src) << ',' << to_string(depth_src) << ',' << to_string(pd_src) << ','
        << to_string(reg_src) << ',' << to_string(bight_src) << ',' << to_string(indmat_src) << ','
        << to_string(dprime_src);
    return out.str();
}

InvariantReport chordal_report(const Graph& g) {
    if (g.edge_count() == 0) throw InvalidInputError("chordal_report: edgeless graph (zero ideal)");
    if (!is_connected(g)) throw InvalidInputError("chordal_report: graph must be connected");
    if (!is_chordal(g))
        throw InvalidInputError("chordal_report: graph is not chordal; use the Betti oracle");
    InvariantReport rep;
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    rep.dim = max_independent_set(g).size;
    rep.dim_src = Provenance::search;
    rep.indmat = induced_matching_number(g).size;
    rep.indmat_src = Provenance::search;
    rep.d_prime = d_prime(g).size;
    rep.dprime_src = Provenance::search;
    rep.projdim_si = rep.d_prime;
    rep.pd_src = Provenance::theorem;
    rep.reg = rep.indmat;
    rep.reg_src = Provenance::theorem;
    rep.depth = rep.n - rep.projdim_si;
    rep.depth_src = Provenance::theorem;
    rep.bight = bight(g);
    rep.bight_src = Provenance::search;
    if (rep.bight != rep.projdim_si)
        throw std::logic_error("chordal_report: bight != projdim on a chordal graph");
    rep.linear_resolution = (rep.reg == 1);
    return rep;
}

} // namespace treesq
