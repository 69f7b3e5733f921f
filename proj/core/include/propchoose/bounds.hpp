#ifndef PROPCHOOSE_BOUNDS_HPP
#define PROPCHOOSE_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "propchoose/graph.hpp"
#include "propchoose/list_assignment.hpp"

namespace propchoose {

// chi_pc(K_{1,m}) = 1 + ceil(m/2); exact, not just a bound.
int star_chi_pc(int m);

// max{n+1, ceil(n/2) + ceil(m/2)} for 2 <= n <= m.
int lower_bound_knm(int n, int m);

// n + m - 1 - floor(m/3) for 2 <= n <= m.
int upper_bound_knm(int n, int m);

enum class LowerBoundSource { general, even_case };

inline const char* to_string(LowerBoundSource s) {
    return s == LowerBoundSource::even_case ? "even-case" : "general";
}

// Best closed-form lower bound on chi_pc(K_{n_1,...,n_t}) for t >= 2:
// s = sum ceil(n_i/2), raised to s+1 when every part is even and
// max n_i <= s; for bipartite inputs the n+1 bound is folded in.
std::pair<int, LowerBoundSource> lower_bound_multipartite(const std::vector<int>& parts);

// n'_i = n_i when odd, n_i - 1 when even; preserves sum ceil(n_i/2).
std::vector<int> odd_reduction(std::vector<int> parts);

// The s-assignment with part-i lists [s-1] union {s-1+i}, defined when every
// part is even and max n_i <= s = sum n_i/2. No proportional coloring of it
// exists. Parts are taken in ascending-size order, matching the vertex
// indexing of complete_multipartite.
ListAssignment even_case_witness(const std::vector<int>& parts);

// Closed-form bounds for one bipartite cell (stars routed to the exact star
// value, so lower == upper there).
struct BoundReport {
    int n = 0, m = 0;
    int lower = 0;
    std::optional<int> upper;
    LowerBoundSource lower_source = LowerBoundSource::general;
    bool forced() const { return upper && *upper == lower; }
};
BoundReport bipartite_bounds(int n, int m);

// Executes the lower-bound certification pipeline for a part list: the odd
// reduction must fail Wu's test at s-1, and when the even-case witness
// applies it must be refuted by exhaustive search. A step contradicting the
// expected outcome raises InternalError.
struct LowerBoundReport {
    std::vector<int> parts;
    int s = 0;
    int bound = 0;
    LowerBoundSource source = LowerBoundSource::general;
    std::vector<int> reduced_parts;
    bool wu_refuted_at_s_minus_1 = false;
    bool even_case_applies = false;
    bool witness_refuted = false; // meaningful only when even_case_applies
    std::string summary() const;
};
LowerBoundReport verify_lower_bound(const std::vector<int>& parts);

// Starting point for the chi_pc search: the best certified lower bound when
// the graph carries parts metadata, else 1.
int chi_pc_lower_bound(const Graph& g);

} // namespace propchoose

#endif
