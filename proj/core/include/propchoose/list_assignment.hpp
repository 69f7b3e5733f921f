#ifndef PROPCHOOSE_LIST_ASSIGNMENT_HPP
#define PROPCHOOSE_LIST_ASSIGNMENT_HPP

#include <cstdint>
#include <vector>

#include "propchoose/graph.hpp"

namespace propchoose {

// Per-vertex color lists. Colors are small positive integers; lists are kept
// sorted and duplicate-free. Immutable by convention once built.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    int vertex_count() const { return static_cast<int>(lists.size()); }

    // Uniform list size, or -1 when lists differ in size.
    int uniform_size() const;
    bool is_k_assignment(int k) const { return uniform_size() == k; }

    // Sorted palette: union of all lists.
    std::vector<int> palette() const;

    static ListAssignment from_lists(std::vector<std::vector<int>> lists);
};

// eta(c): number of vertices whose list contains c (0 for unused colors).
int multiplicity(const ListAssignment& l, int c);

// Support of c: the set of vertices whose list contains c.
VertexSet support_of(const ListAssignment& l, int c);

// (floor(eta(c)/k), ceil(eta(c)/k)); c must be in the palette.
std::pair<int, int> class_size_bounds(const ListAssignment& l, int k, int c);

// Colors with eta(c) > k; their number is alpha. Requires a k-assignment.
std::vector<int> high_multiplicity_colors(const ListAssignment& l, int k);

// A k-assignment up to color renaming: the multiset of color supports with
// multiplicities. Entries are sorted by (support mask, multiplicity).
struct SupportMultiset {
    std::vector<std::pair<VertexSet, int>> entries;

    bool operator==(const SupportMultiset&) const = default;
    auto operator<=>(const SupportMultiset&) const = default;

    // FNV-1a over the entry encoding; dedup key in the result cache.
    std::uint64_t hash() const;
};

// Multiset of supports of l, no symmetry reduction.
SupportMultiset support_multiset(const ListAssignment& l);

// Renaming- and automorphism-invariant form: the lexicographic minimum of the
// support multiset over the automorphism group of g.
SupportMultiset canonical_form(const Graph& g, const ListAssignment& l);

// Representative assignment of a support multiset: fresh colors 1,2,... are
// given to supports in entry order.
ListAssignment materialize(const SupportMultiset& m, int vertex_count);

// Uniform-at-random k-subset of [palette_size] per vertex, reproducible from
// the seed. Used to fuzz the constructive colorers.
ListAssignment sample_assignment(const Graph& g, int k, int palette_size, std::uint64_t seed);

} // namespace propchoose

#endif
