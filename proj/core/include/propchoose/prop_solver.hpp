#ifndef PROPCHOOSE_PROP_SOLVER_HPP
#define PROPCHOOSE_PROP_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "propchoose/enumerate.hpp"
#include "propchoose/graph.hpp"
#include "propchoose/list_assignment.hpp"

namespace propchoose {

// Total vertex coloring; color[v] is the color of vertex v.
struct Coloring {
    std::vector<int> color;
};

struct Violation {
    enum class Kind { improper_edge, color_not_in_list, class_size };
    Kind kind;
    int vertex_u = -1; // improper_edge: endpoints; color_not_in_list: vertex
    int vertex_v = -1;
    int color = -1;
    int class_size = -1; // class_size only
    int lo = -1, hi = -1;
    std::string describe() const;
};

// All ways f fails to be a proportional L-coloring; empty means valid.
// Unused palette colors with a positive lower bound are reported too.
std::vector<Violation> verify_proportional(const Graph& g, const ListAssignment& l,
                                           const Coloring& f);

// Exhaustive search for a proportional L-coloring. Colors are branched in
// order of decreasing mandatory size then decreasing multiplicity; for
// complete multipartite graphs a class of size >= 2 is confined to a single
// part. Returns the first coloring in that deterministic order, or nothing.
std::optional<Coloring> find_proportional(const Graph& g, const ListAssignment& l);

enum class Outcome { choosable, not_choosable, undecided };

struct Verdict {
    int k = 0;
    Outcome outcome = Outcome::undecided;
    // Present iff not_choosable; admits no proportional coloring.
    std::optional<ListAssignment> witness;
    std::uint64_t classes_checked = 0;
    std::chrono::milliseconds elapsed{0};
};

struct DecideOptions {
    int jobs = 1;
    EnumLimits limits;
    // Invoked periodically with the number of classes checked so far.
    std::function<void(std::uint64_t)> progress;
};

// Decides whether g is proportionally k-choosable by checking every
// canonical k-assignment class. The reported witness is always the
// canonically first failure regardless of worker count.
Verdict decide_choosable(const Graph& g, int k, const DecideOptions& opts = {});

struct ChiPcResult {
    // Exact value when decided within k_max.
    std::optional<int> value;
    // Bounds on chi_pc established by the run: every k < lower is refuted or
    // known impossible, and no k <= searched_up_to was found choosable unless
    // value is set.
    int lower = 1;
    int searched_up_to = 0;
    std::vector<Verdict> verdicts;
};

// Smallest k <= k_max with decide_choosable = choosable. Starts at the best
// known lower bound for complete multipartite graphs and exploits
// monotonicity in k (first choosable k is the answer).
ChiPcResult chi_pc(const Graph& g, int k_max, const DecideOptions& opts = {});

} // namespace propchoose

#endif
