#include "treesq/tree_enum.hpp"

#include <algorithm>
#include <map>

#include "treesq/errors.hpp"

namespace treesq {

std::vector<int> tree_centers(const Graph& t) {
    if (!is_tree(t)) throw InvalidInputError("tree_centers: input is not a tree");
    const int n = t.vertex_count();
    std::vector<int> deg(static_cast<size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) deg[static_cast<size_t>(v)] = t.degree(v);
    std::vector<int> layer;
    std::vector<bool> removed(static_cast<size_t>(n) + 1, false);
    for (int v = 1; v <= n; ++v)
        if (deg[static_cast<size_t>(v)] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[static_cast<size_t>(v)] = true;
            --remaining;
            const Bitset& nb = t.neighbors(v);
            for (int u = nb.find_first(); u >= 0; u = nb.find_next(u))
                if (!removed[static_cast<size_t>(u)] && --deg[static_cast<size_t>(u)] == 1)
                    next.push_back(u);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 1; v <= n; ++v)
        if (!removed[static_cast<size_t>(v)]) centers.push_back(v);
    return centers;
}

namespace {

std::string rooted_code_rec(const Graph& t, int v, int parent) {
    std::vector<std::string> child_codes;
    const Bitset& nb = t.neighbors(v);
    for (int u = nb.find_first(); u >= 0; u = nb.find_next(u))
        if (u != parent) child_codes.push_back(rooted_code_rec(t, u, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string out = "1";
    for (const auto& c : child_codes) out += c;
    out += "0";
    return out;
}

} // namespace

std::string rooted_code(const Graph& t, int root) {
    if (!is_tree(t)) throw InvalidInputError("rooted_code: input is not a tree");
    return rooted_code_rec(t, root, 0);
}

std::string ahu_code(const Graph& t) {
    std::vector<int> centers = tree_centers(t);
    std::string best;
    for (int c : centers) {
        std::string code = rooted_code_rec(t, c, 0);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

Graph tree_from_code(const std::string& code) {
    if (code.size() < 2 || code.size() % 2 != 0)
        throw InvalidInputError("tree_from_code: malformed code");
    std::vector<Edge> edges;
    std::vector<int> stack;
    int next_label = 0;
    for (char ch : code) {
        if (ch == '1') {
            ++next_label;
            if (!stack.empty()) edges.emplace_back(stack.back(), next_label);
            stack.push_back(next_label);
        } else if (ch == '0') {
            if (stack.empty()) throw InvalidInputError("tree_from_code: unbalanced code");
            stack.pop_back();
        } else {
            throw InvalidInputError("tree_from_code: invalid character");
        }
    }
    if (!stack.empty()) throw InvalidInputError("tree_from_code: unbalanced code");
    return Graph::from_edges(next_label, edges);
}

std::vector<CanonicalTree> enumerate_trees(int n) {
    if (n < 2 || n > kTreeEnumCap)
        throw InvalidInputError("enumerate_trees: n must be in 2.." +
                                std::to_string(kTreeEnumCap));
    // Grow representatives level by level: every tree on k+1 vertices is a
    // tree on k vertices plus one leaf.
    std::map<std::string, Graph> reps;
    reps[ahu_code(Graph::from_edges(1, {}))] = Graph::from_edges(1, {});
    for (int k = 1; k < n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [code, g] : reps) {
            for (int v = 1; v <= k; ++v) {
                std::vector<Edge> edges = g.edges();
                edges.emplace_back(v, k + 1);
                Graph grown = Graph::from_edges(k + 1, edges);
                std::string grown_code = ahu_code(grown);
                if (!next.contains(grown_code)) next[grown_code] = grown;
            }
        }
        reps = std::move(next);
    }
    std::vector<CanonicalTree> out;
    out.reserve(reps.size());
    for (const auto& [code, g] : reps)
        out.push_back(CanonicalTree{n, code, tree_from_code(code)});
    return out;
}

Graph random_tree(int n, std::mt19937_64& rng) {
    if (n < 2) throw InvalidInputError("random_tree: n must be >= 2");
    if (n == 2) return Graph::from_edges(2, {{1, 2}});
    std::uniform_int_distribution<int> pick(1, n);
    std::vector<int> pruefer(static_cast<size_t>(n - 2));
    for (int& x : pruefer) x = pick(rng);
    std::vector<int> deg(static_cast<size_t>(n) + 1, 1);
    for (int x : pruefer) ++deg[static_cast<size_t>(x)];
    std::vector<Edge> edges;
    Bitset leaf(n + 1);
    for (int v = 1; v <= n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) leaf.set(v);
    for (int x : pruefer) {
        int v = leaf.find_first();
        leaf.reset(v);
        edges.emplace_back(std::min(v, x), std::max(v, x));
        if (--deg[static_cast<size_t>(x)] == 1) leaf.set(x);
    }
    int a = leaf.find_first();
    int b = leaf.find_next(a);
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

} // namespace treesq
