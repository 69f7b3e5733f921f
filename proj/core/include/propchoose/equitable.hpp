#ifndef PROPCHOOSE_EQUITABLE_HPP
#define PROPCHOOSE_EQUITABLE_HPP

#include <optional>
#include <vector>

#include "propchoose/graph.hpp"
#include "propchoose/list_assignment.hpp"
#include "propchoose/prop_solver.hpp"

namespace propchoose {

// Wu's closed-form test: K_{n_1,...,n_t} is equitably s-colorable iff
// s > p, or s <= p and every part satisfies
// n_i >= ceil(n_i / ceil(p/s)) * floor(p/s) and
// sum floor(n_i / floor(p/s)) >= s >= sum ceil(n_i / ceil(p/s)).
bool wu_equitable(const std::vector<int>& parts, int s);

// Proper k-coloring with exactly k (possibly empty) labeled classes, each of
// size floor(|V|/k) or ceil(|V|/k). Exhaustive; vertex count capped at 10.
std::optional<Coloring> equitable_k_colorable_bruteforce(const Graph& g, int k);

// Proper L-coloring where each color is used at most ceil(|V|/k) times.
// There is no lower usage bound. Exhaustive; vertex count capped at 10.
std::optional<Coloring> equitable_list_colorable(const Graph& g, const ListAssignment& l);

} // namespace propchoose

#endif
