#include "propchoose/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace propchoose {

Graph Graph::complete_multipartite(std::vector<int> parts) {
    if (parts.empty()) throw std::invalid_argument("complete_multipartite: empty part list");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("complete_multipartite: part size must be >= 1");
    std::stable_sort(parts.begin(), parts.end());
    long long total = std::accumulate(parts.begin(), parts.end(), 0LL);
    if (total > kMaxVertices)
        throw std::invalid_argument("complete_multipartite: more than 64 vertices");

    Graph g;
    g.n_ = static_cast<int>(total);
    g.parts_ = parts;
    g.part_of_.resize(g.n_);
    int v = 0;
    for (std::size_t i = 0; i < parts.size(); i++)
        for (int j = 0; j < parts[i]; j++) g.part_of_[v++] = static_cast<int>(i);
    g.adj_.assign(g.n_, 0);
    for (int u = 0; u < g.n_; u++)
        for (int w = 0; w < g.n_; w++)
            if (g.part_of_[u] != g.part_of_[w]) g.adj_[u] |= set_of(w);
    return g;
}

Graph Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 1 || vertex_count > kMaxVertices)
        throw std::invalid_argument("from_edges: vertex count must be in 1..64");
    Graph g;
    g.n_ = vertex_count;
    g.adj_.assign(vertex_count, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("from_edges: endpoint out of range");
        if (u == v) throw std::invalid_argument("from_edges: loops are not allowed");
        g.adj_[u] |= set_of(v);
        g.adj_[v] |= set_of(u);
    }
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; v++) d = std::max(d, degree(v));
    return d;
}

VertexSet Graph::part_members(int part) const {
    VertexSet s = 0;
    for (int v = 0; v < n_; v++)
        if (part_of_[v] == part) s |= set_of(v);
    return s;
}

Graph Graph::induced_subgraph(VertexSet s) const {
    s &= all_vertices();
    if (s == 0) throw std::invalid_argument("induced_subgraph: empty vertex set");
    std::vector<int> keep;
    for (int v = 0; v < n_; v++)
        if (set_contains(s, v)) keep.push_back(v);

    Graph g;
    g.n_ = static_cast<int>(keep.size());
    g.adj_.assign(g.n_, 0);
    for (int i = 0; i < g.n_; i++)
        for (int j = 0; j < g.n_; j++)
            if (adjacent(keep[i], keep[j])) g.adj_[i] |= set_of(j);

    if (parts_) {
        std::vector<int> sizes(parts_->size(), 0);
        for (int v : keep) sizes[part_of_[v]]++;
        std::vector<int> subparts;
        std::vector<int> remap(parts_->size(), -1);
        for (std::size_t i = 0; i < sizes.size(); i++) {
            if (sizes[i] > 0) {
                remap[i] = static_cast<int>(subparts.size());
                subparts.push_back(sizes[i]);
            }
        }
        g.parts_ = subparts;
        g.part_of_.resize(g.n_);
        for (int i = 0; i < g.n_; i++) g.part_of_[i] = remap[part_of_[keep[i]]];
    }
    return g;
}

bool Graph::is_independent(VertexSet s) const {
    for (int v = 0; v < n_; v++)
        if (set_contains(s, v) && (adj_[v] & s)) return false;
    return true;
}

std::vector<std::vector<int>> Graph::automorphism_generators() const {
    std::vector<int> identity(n_);
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<std::vector<int>> gens;
    if (!parts_) {
        gens.push_back(identity);
        return gens;
    }
    const auto& parts = *parts_;
    std::vector<int> start(parts.size());
    int acc = 0;
    for (std::size_t i = 0; i < parts.size(); i++) {
        start[i] = acc;
        acc += parts[i];
    }
    // adjacent transpositions inside each part
    for (std::size_t i = 0; i < parts.size(); i++) {
        for (int j = 0; j + 1 < parts[i]; j++) {
            auto p = identity;
            std::swap(p[start[i] + j], p[start[i] + j + 1]);
            gens.push_back(std::move(p));
        }
    }
    // swaps of equal-size parts
    for (std::size_t i = 0; i < parts.size(); i++) {
        for (std::size_t j = i + 1; j < parts.size(); j++) {
            if (parts[i] != parts[j]) continue;
            auto p = identity;
            for (int x = 0; x < parts[i]; x++) {
                p[start[i] + x] = start[j] + x;
                p[start[j] + x] = start[i] + x;
            }
            gens.push_back(std::move(p));
        }
    }
    if (gens.empty()) gens.push_back(identity);
    return gens;
}

std::vector<std::vector<int>> Graph::automorphism_group() const {
    auto gens = automorphism_generators();
    std::vector<int> identity(n_);
    std::iota(identity.begin(), identity.end(), 0);
    std::set<std::vector<int>> seen{identity};
    std::vector<std::vector<int>> frontier{identity};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier) {
            for (const auto& gen : gens) {
                std::vector<int> q(n_);
                for (int v = 0; v < n_; v++) q[v] = gen[p[v]];
                if (seen.insert(q).second) next.push_back(std::move(q));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

} // namespace propchoose
