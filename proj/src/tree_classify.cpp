#include "treesq/tree_classify.hpp"

#include <algorithm>
#include <sstream>

#include "treesq/errors.hpp"
#include "treesq/matching.hpp"

namespace treesq {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::optional<PathClass> try_path(const Graph& t) {
    const int n = t.vertex_count();
    for (int v = 1; v <= n; ++v)
        if (t.degree(v) > 2) return std::nullopt;
    PathClass p;
    p.n = n;
    if (n == 1) {
        p.order = {1};
        return p;
    }
    int start = 0;
    for (int v = 1; v <= n && !start; ++v)
        if (t.degree(v) == 1) start = v;
    int prev = 0, cur = start;
    while (cur != 0) {
        p.order.push_back(cur);
        int next = 0;
        for (int w = t.neighbors(cur).find_first(); w >= 0; w = t.neighbors(cur).find_next(w))
            if (w != prev) next = w;
        prev = cur;
        cur = next;
    }
    return p;
}

std::optional<StarClass> try_star(const Graph& t) {
    const int n = t.vertex_count();
    for (int v = 1; v <= n; ++v)
        if (t.degree(v) == n - 1) return StarClass{n - 1, v};
    return std::nullopt;
}

std::optional<WhiskeredStarClass> try_whiskered_star(const Graph& t) {
    const int n = t.vertex_count();
    int center = 0;
    for (int v = 1; v <= n; ++v) {
        if (t.degree(v) >= 3) {
            if (center) return std::nullopt; // at most one branching vertex
            center = v;
        }
    }
    if (!center) return std::nullopt;
    WhiskeredStarClass w;
    w.center = center;
    for (int v = 1; v <= n; ++v) {
        if (v == center) continue;
        if (t.adjacent(center, v)) continue; // a spoke
        // Must be a whisker: a leaf hanging off some spoke.
        if (t.degree(v) != 1) return std::nullopt;
        int spoke = t.neighbor_list(v)[0];
        if (!t.adjacent(center, spoke)) return std::nullopt; // distance 2 from the center
        w.whisker_of_spoke[spoke] = v;
    }
    w.spokes = t.degree(center);
    w.whiskers = static_cast<int>(w.whisker_of_spoke.size());
    for (const auto& [spoke, whisker] : w.whisker_of_spoke) w.spoke_vertices.push_back(spoke);
    for (int v = t.neighbors(center).find_first(); v >= 0; v = t.neighbors(center).find_next(v))
        if (!w.whisker_of_spoke.contains(v)) w.spoke_vertices.push_back(v);
    return w;
}

std::optional<DoubleBroomClass> try_double_broom(const Graph& t) {
    const int n = t.vertex_count();
    std::vector<int> core_verts;
    for (int v = 1; v <= n; ++v)
        if (t.degree(v) >= 2) core_verts.push_back(v);
    if (core_verts.size() < 2) return std::nullopt;
    auto core = induced_subgraph(t, core_verts);
    if (!is_tree(core.graph)) return std::nullopt;
    for (int v = 1; v <= core.graph.vertex_count(); ++v)
        if (core.graph.degree(v) > 2) return std::nullopt;
    // Core is a path; walk it in original labels.
    auto path = try_path(core.graph);
    std::vector<int> walk;
    for (int v : path->order) walk.push_back(core.vertex_map[static_cast<size_t>(v)]);
    int head = walk.front(), tail = walk.back();
    DoubleBroomClass b;
    for (int v = 1; v <= n; ++v) {
        if (t.degree(v) != 1) continue;
        int anchor = t.neighbor_list(v)[0];
        if (anchor == head)
            b.left_leaves.push_back(v);
        else if (anchor == tail)
            b.right_leaves.push_back(v);
        else
            return std::nullopt; // pendant in the middle of the core
    }
    if (b.left_leaves.empty() || b.right_leaves.empty()) return std::nullopt;
    b.core = walk;
    b.pendants_left = static_cast<int>(b.left_leaves.size());
    b.pendants_right = static_cast<int>(b.right_leaves.size());
    b.core_length = static_cast<int>(walk.size());
    if (b.pendants_left > b.pendants_right) {
        std::swap(b.pendants_left, b.pendants_right);
        std::swap(b.left_leaves, b.right_leaves);
        std::reverse(b.core.begin(), b.core.end());
    }
    return b;
}

} // namespace

TreeClass classify_tree(const Graph& t) {
    if (!is_tree(t)) throw InvalidInputError("classify_tree: input is not a tree");
    if (auto p = try_path(t)) return *p;
    if (auto s = try_star(t)) return *s;
    if (auto w = try_whiskered_star(t)) return *w;
    if (auto b = try_double_broom(t)) return *b;
    return OtherClass{};
}

std::string tree_class_name(const TreeClass& c) {
    std::ostringstream out;
    if (auto p = std::get_if<PathClass>(&c))
        out << "Path(" << p->n << ")";
    else if (auto s = std::get_if<StarClass>(&c))
        out << "Star(" << s->leaves << ")";
    else if (auto w = std::get_if<WhiskeredStarClass>(&c))
        out << "PartiallyWhiskeredStar(" << w->spokes << "," << w->whiskers << ")";
    else if (auto b = std::get_if<DoubleBroomClass>(&c))
        out << "DoubleBroom(" << b->pendants_left << "," << b->core_length << ","
            << b->pendants_right << ")";
    else
        out << "Other";
    return out.str();
}

bool linear_resolution_by_classification(const Graph& t) {
    if (!is_tree(t)) throw InvalidInputError("linear_resolution_by_classification: not a tree");
    if (t.vertex_count() < 2)
        throw InvalidInputError("linear_resolution_by_classification: need at least 2 vertices");
    TreeClass c = classify_tree(t);
    if (auto p = std::get_if<PathClass>(&c)) return p->n <= 5;
    if (std::holds_alternative<StarClass>(c)) return true;
    if (std::holds_alternative<WhiskeredStarClass>(c)) return true;
    return false;
}

HararyRossResult harary_ross_check(const Graph& g) {
    if (is_complete(g) && g.vertex_count() >= 1)
        throw InvalidInputError(
            "harary_ross_check: complete graph; complete squares come exactly from stars");
    HararyRossResult res;
    const int n = g.vertex_count();
    auto cliques = maximal_cliques(g);
    const int q = static_cast<int>(cliques.size());
    std::vector<Bitset> cmask(static_cast<size_t>(q), Bitset(n + 1));
    for (int i = 0; i < q; ++i)
        for (int v : cliques[static_cast<size_t>(i)]) cmask[static_cast<size_t>(i)].set(v);
    std::vector<int> clique_count(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < q; ++i)
        for (int v : cliques[static_cast<size_t>(i)]) ++clique_count[static_cast<size_t>(v)];
    std::vector<int> multicliqual;
    for (int v = 1; v <= n; ++v)
        if (clique_count[static_cast<size_t>(v)] > 1) multicliqual.push_back(v);

    // (a) every vertex neighbourly (each neighbor shares a maximal clique) and connected
    bool a_holds = is_connected(g);
    for (auto [u, v] : g.edges()) {
        bool cocliqual = false;
        for (int i = 0; i < q && !cocliqual; ++i)
            cocliqual = cmask[static_cast<size_t>(i)].test(u) && cmask[static_cast<size_t>(i)].test(v);
        if (!cocliqual) a_holds = false;
    }
    res.verdicts.push_back({'a', a_holds, a_holds ? "connected, all vertices neighbourly"
                                                  : "not connected or a non-neighbourly vertex"});

    // Pairwise clique intersection sizes.
    std::vector<std::vector<int>> inter(static_cast<size_t>(q), std::vector<int>(static_cast<size_t>(q), 0));
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            inter[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                inter[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                    (cmask[static_cast<size_t>(i)] & cmask[static_cast<size_t>(j)]).count();

    // (b) cliques meeting at a single vertex x need a third clique sharing
    // x and exactly one further vertex with each of them
    bool b_holds = true;
    for (int i = 0; i < q && b_holds; ++i)
        for (int j = i + 1; j < q && b_holds; ++j) {
            if (inter[static_cast<size_t>(i)][static_cast<size_t>(j)] != 1) continue;
            Bitset common = cmask[static_cast<size_t>(i)] & cmask[static_cast<size_t>(j)];
            int x = common.find_first();
            bool found = false;
            for (int k = 0; k < q && !found; ++k) {
                if (k == i || k == j || !cmask[static_cast<size_t>(k)].test(x)) continue;
                found = inter[static_cast<size_t>(k)][static_cast<size_t>(i)] == 2 &&
                        inter[static_cast<size_t>(k)][static_cast<size_t>(j)] == 2;
            }
            if (!found) b_holds = false;
        }
    res.verdicts.push_back({'b', b_holds, ""});

    // (c) a bijection x <-> C(x) between multicliqual vertices and cliques,
    // with C(x) containing as many multicliqual vertices as there are
    // cliques through x. Existence tested as a perfect bipartite matching.
    std::vector<int> mc_in_clique(static_cast<size_t>(q), 0);
    for (int i = 0; i < q; ++i)
        for (int v : multicliqual)
            if (cmask[static_cast<size_t>(i)].test(v)) ++mc_in_clique[static_cast<size_t>(i)];
    bool c_holds = static_cast<int>(multicliqual.size()) == q;
    if (c_holds && q > 0) {
        std::vector<std::vector<int>> adj(multicliqual.size());
        for (size_t x = 0; x < multicliqual.size(); ++x)
            for (int i = 0; i < q; ++i)
                if (cmask[static_cast<size_t>(i)].test(multicliqual[x]) &&
                    mc_in_clique[static_cast<size_t>(i)] ==
                        clique_count[static_cast<size_t>(multicliqual[x])])
                    adj[x].push_back(i);
        auto m = max_bipartite_matching(static_cast<int>(multicliqual.size()), q, adj);
        c_holds = (m.size == q);
    }
    {
        std::ostringstream note;
        note << multicliqual.size() << " multicliqual vertices, " << q << " cliques";
        res.verdicts.push_back({'c', c_holds, note.str()});
    }

    // (d) no two cliques share more than two vertices
    bool d_holds = true;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (inter[static_cast<size_t>(i)][static_cast<size_t>(j)] > 2) d_holds = false;
    res.verdicts.push_back({'d', d_holds, ""});

    // (e) pairs of cliques meeting in exactly two vertices number one less
    // than the cliques
    int pairs2 = 0;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (inter[static_cast<size_t>(i)][static_cast<size_t>(j)] == 2) ++pairs2;
    bool e_holds = (pairs2 == q - 1);
    {
        std::ostringstream note;
        note << pairs2 << " two-vertex intersections vs " << q << " cliques";
        res.verdicts.push_back({'e', e_holds, note.str()});
    }

    res.accepted = a_holds && b_holds && c_holds && d_holds && e_holds;
    return res;
}

FormulaReport path_formulas(int n) {
    if (n < 3) throw InvalidInputError("path_formulas: n must be >= 3");
    FormulaReport r;
    r.dim = ceil_div(n, 3);
    r.d_prime = n - ceil_div(n, 5);
    r.projdim_si = *r.d_prime;
    r.depth = ceil_div(n, 5);
    r.bight = n - ceil_div(n, 5);
    r.indmat = ceil_div(n - 1, 4);
    r.reg = *r.indmat;
    r.linear_resolution = (n <= 5);
    return r;
}

FormulaReport double_broom_formulas(int n1, int k, int n2) {
    if (n1 < 2 || n2 < 2 || k < 2)
        throw InvalidInputError("double_broom_formulas: parameters must be >= 2");
    const int n = n1 + n2 + k - 2;
    FormulaReport r;
    if (k <= 3) {
        r.projdim_si = n - 1;
        r.depth = 1;
    } else if (k <= 8) {
        r.projdim_si = n - 2;
        r.depth = 2;
    } else {
        r.projdim_si = n - 2 - ceil_div(k - 8, 5);
        r.depth = 2 + ceil_div(k - 8, 5);
    }
    if (k >= 4) r.dim = ceil_div(k - 4, 3) + 2;
    return r;
}

Graph whiskered_star(int spokes, int whiskers) {
    if (spokes < 1 || whiskers < 1 || whiskers > spokes)
        throw InvalidInputError("whiskered_star: need 1 <= whiskers <= spokes");
    std::vector<Edge> edges;
    for (int i = 1; i <= spokes; ++i) edges.emplace_back(1, 1 + i);
    for (int i = 1; i <= whiskers; ++i) edges.emplace_back(1 + i, 1 + spokes + i);
    return Graph::from_edges(1 + spokes + whiskers, edges);
}

Graph double_broom(int n1, int k, int n2) {
    if (n1 < 2 || n2 < 2 || k < 2)
        throw InvalidInputError("double_broom: parameters must be >= 2");
    std::vector<Edge> edges;
    for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
    int next = k + 1;
    for (int i = 0; i < n1 - 1; ++i) edges.emplace_back(1, next++);
    for (int i = 0; i < n2 - 1; ++i) edges.emplace_back(k, next++);
    return Graph::from_edges(n1 + n2 + k - 2, edges);
}

} // namespace treesq
