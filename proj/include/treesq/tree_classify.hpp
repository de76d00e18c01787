#ifndef TREESQ_TREE_CLASSIFY_HPP
#define TREESQ_TREE_CLASSIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "treesq/graph.hpp"

namespace treesq {

// Tree families. Classification precedence: Path, then Star, then
// PartiallyWhiskeredStar, then DoubleBroom, then Other; overlapping small
// cases (L_4, L_5, double stars that are also whiskered stars) take the
// earliest label.
struct PathClass {
    int n = 0;
    std::vector<int> order; // vertices along the path
};
struct StarClass {
    int leaves = 0;
    int center = 0;
};
struct WhiskeredStarClass {
    int spokes = 0;   // n in the x_0/x_i/y_i labeling
    int whiskers = 0; // m, 1 <= m <= spokes
    int center = 0;
    std::vector<int> spoke_vertices;        // whiskered spokes first, ascending
    std::map<int, int> whisker_of_spoke;    // spoke -> its pendant
};
struct DoubleBroomClass {
    // Pendant counts at the two ends of the core path (p1 <= p2) and the
    // core length k >= 2. The matching formula parameters are
    // (p1 + 1, k, p2 + 1).
    int pendants_left = 0;
    int core_length = 0;
    int pendants_right = 0;
    std::vector<int> core;                 // the path of non-leaf vertices
    std::vector<int> left_leaves, right_leaves;
};
struct OtherClass {};

using TreeClass =
    std::variant<PathClass, StarClass, WhiskeredStarClass, DoubleBroomClass, OtherClass>;

TreeClass classify_tree(const Graph& t); // throws InvalidInputError on non-tree
std::string tree_class_name(const TreeClass& c); // "Path(5)", "DoubleBroom(2,2,2)", ...

// True iff t is a path on at most 5 vertices, a star, or a (partially)
// whiskered star; equivalently, iff the square of t is co-chordal.
bool linear_resolution_by_classification(const Graph& t);

// The square-of-a-tree recognition conditions, evaluated on maximal cliques.
// Input must not be complete (complete squares come exactly from stars).
struct ConditionVerdict {
    char label = '?';
    bool holds = false;
    std::string note;
};
struct HararyRossResult {
    bool accepted = false;
    std::vector<ConditionVerdict> verdicts; // conditions a..e in order
};
HararyRossResult harary_ross_check(const Graph& g);

// Closed-form invariants; fields are set only where a formula exists.
struct FormulaReport {
    std::optional<int> dim, depth, projdim_si, reg, bight, indmat, d_prime;
    std::optional<bool> linear_resolution;
};

// Squares of paths on n >= 3 vertices.
FormulaReport path_formulas(int n);

// Squares of double brooms; parameters n1, n2, k >= 2 describe the broom
// with n1 - 1 and n2 - 1 pendants at the ends of a core path of length k,
// n = n1 + n2 + k - 2 vertices in total. dim is provided only for k >= 4.
FormulaReport double_broom_formulas(int n1, int k, int n2);

// ---- family constructions ----

// Center 1, spokes 2..spokes+1, whisker of spoke i+1 is spokes+1+i
// (the first `whiskers` spokes carry one pendant each). 1 <= whiskers <= spokes.
Graph whiskered_star(int spokes, int whiskers);

// Formula parameters (n1, k, n2), all >= 2: core path 1..k, n1 - 1 pendants
// on vertex 1, n2 - 1 pendants on vertex k.
Graph double_broom(int n1, int k, int n2);

} // namespace treesq

#endif
