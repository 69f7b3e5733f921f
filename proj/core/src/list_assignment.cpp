#include "propchoose/list_assignment.hpp"

#include <algorithm>
#include <stdexcept>

namespace propchoose {

int ListAssignment::uniform_size() const {
    if (lists.empty()) return -1;
    std::size_t k = lists[0].size();
    for (const auto& l : lists)
        if (l.size() != k) return -1;
    return static_cast<int>(k);
}

std::vector<int> ListAssignment::palette() const {
    std::vector<int> p;
    for (const auto& l : lists) p.insert(p.end(), l.begin(), l.end());
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
}

ListAssignment ListAssignment::from_lists(std::vector<std::vector<int>> lists) {
    for (auto& l : lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (l.empty()) throw std::invalid_argument("ListAssignment: empty list");
    }
    return ListAssignment{std::move(lists)};
}

int multiplicity(const ListAssignment& l, int c) {
    int count = 0;
    for (const auto& list : l.lists)
        count += std::binary_search(list.begin(), list.end(), c) ? 1 : 0;
    return count;
}

VertexSet support_of(const ListAssignment& l, int c) {
    VertexSet s = 0;
    for (int v = 0; v < l.vertex_count(); v++)
        if (std::binary_search(l.lists[v].begin(), l.lists[v].end(), c)) s |= set_of(v);
    return s;
}

std::pair<int, int> class_size_bounds(const ListAssignment& l, int k, int c) {
    if (k < 1) throw std::invalid_argument("class_size_bounds: k must be >= 1");
    int eta = multiplicity(l, c);
    if (eta == 0) throw std::invalid_argument("class_size_bounds: color not in palette");
    return {eta / k, (eta + k - 1) / k};
}

std::vector<int> high_multiplicity_colors(const ListAssignment& l, int k) {
    if (!l.is_k_assignment(k))
        throw std::invalid_argument("high_multiplicity_colors: not a k-assignment");
    std::vector<int> high;
    for (int c : l.palette())
        if (multiplicity(l, c) > k) high.push_back(c);
    return high;
}

std::uint64_t SupportMultiset::hash() const {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t x, int bytes) {
        for (int i = 0; i < bytes; i++) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (const auto& [mask, mult] : entries) {
        mix(mask, 8);
        mix(static_cast<std::uint64_t>(mult), 4);
    }
    return h;
}

SupportMultiset support_multiset(const ListAssignment& l) {
    SupportMultiset m;
    for (int c : l.palette()) {
        VertexSet s = support_of(l, c);
        bool merged = false;
        for (auto& [mask, mult] : m.entries)
            if (mask == s) {
                mult++;
                merged = true;
                break;
            }
        if (!merged) m.entries.push_back({s, 1});
    }
    std::sort(m.entries.begin(), m.entries.end());
    return m;
}

SupportMultiset canonical_form(const Graph& g, const ListAssignment& l) {
    SupportMultiset base = support_multiset(l);
    SupportMultiset best = base;
    SupportMultiset image;
    for (const auto& perm : g.automorphism_group()) {
        image.entries.clear();
        for (const auto& [mask, mult] : base.entries) {
            VertexSet s = 0;
            for (int v = 0; v < g.vertex_count(); v++)
                if (set_contains(mask, v)) s |= set_of(perm[v]);
            image.entries.push_back({s, mult});
        }
        std::sort(image.entries.begin(), image.entries.end());
        if (image < best) best = image;
    }
    return best;
}

ListAssignment materialize(const SupportMultiset& m, int vertex_count) {
    std::vector<std::vector<int>> lists(vertex_count);
    int color = 1;
    for (const auto& [mask, mult] : m.entries)
        for (int rep = 0; rep < mult; rep++, color++)
            for (int v = 0; v < vertex_count; v++)
                if (set_contains(mask, v)) lists[v].push_back(color);
    for (const auto& l : lists)
        if (l.empty()) throw std::invalid_argument("materialize: a vertex has no colors");
    return ListAssignment{std::move(lists)};
}

namespace {

// splitmix64; fixed so sampling is reproducible across platforms
struct SampleRng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

} // namespace

ListAssignment sample_assignment(const Graph& g, int k, int palette_size, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("sample_assignment: k must be >= 1");
    if (palette_size < k)
        throw std::invalid_argument("sample_assignment: palette smaller than k");
    SampleRng rng{seed};
    std::vector<std::vector<int>> lists(g.vertex_count());
    std::vector<int> pool(palette_size);
    for (auto& list : lists) {
        for (int i = 0; i < palette_size; i++) pool[i] = i + 1;
        for (int j = 0; j < k; j++) std::swap(pool[j], pool[j + rng.below(palette_size - j)]);
        list.assign(pool.begin(), pool.begin() + k);
        std::sort(list.begin(), list.end());
    }
    return ListAssignment{std::move(lists)};
}

} // namespace propchoose
