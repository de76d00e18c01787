#include "treesq/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "treesq/errors.hpp"

namespace treesq {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw InvalidInputError("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<size_t>(n) + 1, Bitset(n + 1));
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n)
            throw InvalidInputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} out of range 1.." + std::to_string(n));
        if (u == v) throw InvalidInputError("self-loop at vertex " + std::to_string(u));
        if (g.adj_[static_cast<size_t>(u)].test(v))
            throw InvalidInputError("duplicate edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
        g.adj_[static_cast<size_t>(u)].set(v);
        g.adj_[static_cast<size_t>(v)].set(u);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return false;
    return adj_[static_cast<size_t>(u)].test(v);
}

int Graph::degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }

const Bitset& Graph::neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

std::vector<int> Graph::neighbor_list(int v) const { return adj_[static_cast<size_t>(v)].to_vector(); }

int DistanceMatrix::diameter() const {
    int d = 0;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v) {
            int x = at(u, v);
            if (x == kUnreachable) return kUnreachable;
            d = std::max(d, x);
        }
    return d;
}

namespace {

void check_dense_cap(const Graph& g, const char* op) {
    if (g.vertex_count() > kDenseOpCap)
        throw CapExceededError(std::string(op) + ": n = " + std::to_string(g.vertex_count()) +
                               " exceeds cap " + std::to_string(kDenseOpCap));
}

} // namespace

Graph square(const Graph& g) {
    check_dense_cap(g, "square");
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u) {
        Bitset reach = g.neighbors(u);
        for (int w = g.neighbors(u).find_first(); w >= 0; w = g.neighbors(u).find_next(w))
            reach |= g.neighbors(w);
        reach.reset(u);
        for (int v = reach.find_next(u); v >= 0; v = reach.find_next(v)) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

DistanceMatrix distances(const Graph& g) {
    check_dense_cap(g, "distances");
    const int n = g.vertex_count();
    std::vector<int> d(static_cast<size_t>(n) * n, DistanceMatrix::kUnreachable);
    std::vector<int> queue(static_cast<size_t>(n));
    for (int s = 1; s <= n; ++s) {
        auto dist = [&](int v) -> int& { return d[static_cast<size_t>(s - 1) * n + (v - 1)]; };
        dist(s) = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            const Bitset& nb = g.neighbors(u);
            for (int v = nb.find_first(); v >= 0; v = nb.find_next(v)) {
                if (dist(v) == DistanceMatrix::kUnreachable) {
                    dist(v) = dist(u) + 1;
                    queue[tail++] = v;
                }
            }
        }
    }
    return DistanceMatrix(n, std::move(d));
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& w) {
    std::vector<int> verts = w;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() != w.size()) throw InvalidInputError("induced_subgraph: duplicate vertices");
    for (int v : verts)
        if (v < 1 || v > g.vertex_count())
            throw InvalidInputError("induced_subgraph: vertex " + std::to_string(v) +
                                    " out of range");
    std::vector<int> map(verts.size() + 1, 0);
    std::vector<int> inv(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (size_t i = 0; i < verts.size(); ++i) {
        map[i + 1] = verts[i];
        inv[static_cast<size_t>(verts[i])] = static_cast<int>(i + 1);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (inv[static_cast<size_t>(u)] && inv[static_cast<size_t>(v)])
            edges.emplace_back(inv[static_cast<size_t>(u)], inv[static_cast<size_t>(v)]);
    return InducedSubgraph{Graph::from_edges(static_cast<int>(verts.size()), edges), std::move(map)};
}

Graph add_edge(const Graph& g, int u, int v) {
    if (g.adjacent(u, v)) throw InvalidInputError("add_edge: edge already present");
    std::vector<Edge> edges = g.edges();
    edges.emplace_back(std::min(u, v), std::max(u, v));
    return Graph::from_edges(g.vertex_count(), edges);
}

namespace {

// Number of connected components among vertices not in `skip`.
int components_excluding(const Graph& g, const Bitset& skip) {
    const int n = g.vertex_count();
    Bitset seen(n + 1);
    int comps = 0;
    std::vector<int> stack;
    for (int s = 1; s <= n; ++s) {
        if (seen.test(s) || skip.test(s)) continue;
        ++comps;
        stack.push_back(s);
        seen.set(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            Bitset next = g.neighbors(u);
            next -= seen;
            next -= skip;
            for (int v = next.find_first(); v >= 0; v = next.find_next(v)) {
                seen.set(v);
                stack.push_back(v);
            }
        }
    }
    return comps;
}

} // namespace

int component_count(const Graph& g) { return components_excluding(g, Bitset(g.vertex_count() + 1)); }

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return component_count(g) == 1;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

bool is_complete(const Graph& g) {
    const long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

namespace {

void bron_kerbosch(const Graph& g, Bitset r, Bitset p, Bitset x,
                   std::vector<std::vector<int>>& out) {
    if (p.none() && x.none()) {
        out.push_back(r.to_vector());
        return;
    }
    // Pivot: vertex of P ∪ X with the most neighbors in P.
    Bitset px = p | x;
    int pivot = -1, best = -1;
    for (int u = px.find_first(); u >= 0; u = px.find_next(u)) {
        int c = (p & g.neighbors(u)).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    Bitset cand = p;
    if (pivot >= 0) cand -= g.neighbors(pivot);
    for (int v = cand.find_first(); v >= 0; v = cand.find_next(v)) {
        Bitset r2 = r;
        r2.set(v);
        bron_kerbosch(g, r2, p & g.neighbors(v), x & g.neighbors(v), out);
        p.reset(v);
        x.set(v);
    }
}

} // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw CapExceededError("maximal_cliques: n = " + std::to_string(n) + " exceeds cap " +
                               std::to_string(max_vertices));
    std::vector<std::vector<int>> out;
    if (n == 0) return out;
    Bitset p(n + 1);
    for (int v = 1; v <= n; ++v) p.set(v);
    bron_kerbosch(g, Bitset(n + 1), p, Bitset(n + 1), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> free_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

std::vector<int> cut_points(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> out;
    if (n == 0) return out;
    int base = component_count(g);
    for (int v = 1; v <= n; ++v) {
        Bitset skip(n + 1);
        skip.set(v);
        if (components_excluding(g, skip) > base) out.push_back(v);
    }
    return out;
}

Graph path_graph(int n) {
    if (n < 1) throw InvalidInputError("path_graph: n must be >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidInputError("cycle_graph: n must be >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw InvalidInputError("star_graph: need at least one leaf");
    std::vector<Edge> edges;
    for (int i = 2; i <= leaves + 1; ++i) edges.emplace_back(1, i);
    return Graph::from_edges(leaves + 1, edges);
}

Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

} // namespace treesq
