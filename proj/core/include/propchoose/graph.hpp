#ifndef PROPCHOOSE_GRAPH_HPP
#define PROPCHOOSE_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace propchoose {

// Vertex sets are single machine words; the graph cap of 64 vertices keeps it so.
using VertexSet = std::uint64_t;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet set_of(int v) { return VertexSet{1} << v; }

constexpr int kMaxVertices = 64;

// Simple graph on at most 64 vertices. When built as a complete multipartite
// graph the part sizes are retained and vertices are indexed part by part.
// Immutable after construction; safe to share across threads.
class Graph {
public:
    // K_{n_1,...,n_t}; parts are sorted ascending (ties keep input order) and
    // vertices indexed part by part in that order.
    static Graph complete_multipartite(std::vector<int> parts);

    // General graph from an explicit edge list, no parts metadata.
    static Graph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    VertexSet all_vertices() const { return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return set_contains(adj_[u], v); }
    int degree(int v) const { return set_size(adj_[v]); }
    int max_degree() const;

    bool has_parts() const { return parts_.has_value(); }
    const std::vector<int>& parts() const { return *parts_; }
    // Part index of v, or -1 when the graph has no parts metadata.
    int part_of(int v) const { return part_of_.empty() ? -1 : part_of_[v]; }
    VertexSet part_members(int part) const;

    // Subgraph induced by s, vertices reindexed densely in increasing index
    // order. Parts metadata is carried over with empty parts dropped.
    Graph induced_subgraph(VertexSet s) const;

    // True iff s spans no edge. The empty set is independent.
    bool is_independent(VertexSet s) const;

    // Generators of the automorphism group. For complete multipartite graphs:
    // adjacent transpositions within each part plus swaps of equal-size parts,
    // which generate the full group. Other graphs get the identity only, so
    // symmetry reduction is merely weaker, never wrong.
    std::vector<std::vector<int>> automorphism_generators() const;

    // Full group expanded from the generators (identity included).
    std::vector<std::vector<int>> automorphism_group() const;

private:
    Graph() = default;
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::optional<std::vector<int>> parts_;
    std::vector<int> part_of_;
};

} // namespace propchoose

#endif
