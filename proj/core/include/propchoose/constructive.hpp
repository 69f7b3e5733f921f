#ifndef PROPCHOOSE_CONSTRUCTIVE_HPP
#define PROPCHOOSE_CONSTRUCTIVE_HPP

#include <string>
#include <vector>

#include "propchoose/graph.hpp"
#include "propchoose/list_assignment.hpp"
#include "propchoose/prop_solver.hpp"

namespace propchoose {

// Matching in a bipartite graph, as (left, right) index pairs with no shared
// endpoints.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    int size() const { return static_cast<int>(pairs.size()); }
    bool saturates_left(int left_count) const { return size() == left_count; }
};

// Maximum-cardinality matching via augmenting paths. Saturates the left side
// exactly when Hall's condition holds.
Matching max_bipartite_matching(int left_count, int right_count,
                                const std::vector<std::pair<int, int>>& edges);

// Proper L-coloring with |V| pairwise distinct colors, built from the
// vertex-color matching that exists whenever eta(c) <= k for every color
// (left degrees are k, right degrees at most k, so Hall's condition holds).
// A matching failure would contradict that counting argument and aborts.
Coloring hall_proper_coloring(const Graph& g, const ListAssignment& l);

// Turns a proper L-coloring that uses no color excessively into a
// proportional L-coloring, assuming max eta(c) < 2k. Greedy local recoloring
// first; exact search as fallback. The fallback's success is a theorem, so
// exhausting it aborts with InternalError.
Coloring repair_no_excess(const Graph& g, const ListAssignment& l, const Coloring& f);

// Which branch of the constructive argument produced a coloring.
enum class KnmStep {
    no_high,
    many_high_even_rainbow,
    many_high_even_constant,
    many_high_even_nonconstant,
    many_high_odd_pair_in_b,
    many_high_odd_pair_in_a,
    recurse_drop_z,
    recurse_recolor_z,
    recurse_swap_in_b,
    recurse_free_color,
    recurse_three_way,
};
const char* to_string(KnmStep step);

struct KnmTrace {
    std::vector<KnmStep> steps;
    int recursion_depth = 0;
};

// Proportional coloring of K_{n,m} under an (m+n-d-1)-assignment with many
// colors of high multiplicity (alpha >= (m-d)/2), via the explicit case
// analysis: pair high-multiplicity colors onto B, then finish with a rainbow
// coloring or the constant-assignment pairing.
// Requires m >= 3d, n >= 2. Output is validated before return.
Coloring color_knm_many_high(const Graph& g, const ListAssignment& l, int d,
                             KnmTrace* trace = nullptr);

// Full constructive proportional colorer for K_{n,m} under any
// (m+n-d-1)-assignment with m >= 3d >= 3 and n >= 2: no high-multiplicity
// colors go through the matching route, many go through the case analysis,
// and the remainder recurses on a derived assignment (replace a
// high-multiplicity color c by a fresh color z on m-d support vertices of B)
// followed by the repair ladder. Output is validated before return; any
// repair step finding no candidate aborts with the step name.
Coloring color_knm(const Graph& g, const ListAssignment& l, int d, KnmTrace* trace = nullptr);

} // namespace propchoose

#endif
