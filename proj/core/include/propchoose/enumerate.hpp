#ifndef PROPCHOOSE_ENUMERATE_HPP
#define PROPCHOOSE_ENUMERATE_HPP

#include <cstdint>
#include <functional>

#include "propchoose/graph.hpp"
#include "propchoose/list_assignment.hpp"

namespace propchoose {

// Guard against silently hopeless instances. Exceeding it without the
// override throws ResourceLimitError; completeness is never quietly traded
// for progress.
struct EnumLimits {
    int max_vertices = 10;
    int max_k = 6;
    bool override_guard = false;
};

// Streams exactly one representative per equivalence class of k-assignments
// of g under color renaming and graph automorphism, as support multisets in
// a fixed deterministic order. The callback may return false to stop early.
// Returns the number of classes emitted.
std::uint64_t enumerate_support_multisets(const Graph& g, int k,
                                          const std::function<bool(const SupportMultiset&)>& cb,
                                          const EnumLimits& limits = {});

// Same stream, materialized: fresh colors 1,2,... assigned to supports in
// canonical order.
std::uint64_t enumerate_assignments(const Graph& g, int k,
                                    const std::function<bool(const ListAssignment&)>& cb,
                                    const EnumLimits& limits = {});

} // namespace propchoose

#endif
