#include "propchoose/equitable.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "propchoose/errors.hpp"

namespace propchoose {

bool wu_equitable(const std::vector<int>& parts, int s) {
    if (parts.empty()) throw std::invalid_argument("wu_equitable: empty part list");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("wu_equitable: part size must be >= 1");
    if (s < 1) throw std::invalid_argument("wu_equitable: s must be >= 1");

    int p = std::accumulate(parts.begin(), parts.end(), 0);
    if (s > p) return true;
    int lo = p / s;            // floor(p/s) >= 1 since s <= p
    int hi = (p + s - 1) / s;  // ceil(p/s)
    int sum_floor = 0, sum_ceil = 0;
    for (int ni : parts) {
        int ci = (ni + hi - 1) / hi; // ceil(n_i / ceil(p/s))
        if (ni < ci * lo) return false;
        sum_floor += ni / lo;
        sum_ceil += ci;
    }
    return sum_floor >= s && s >= sum_ceil;
}

namespace {

constexpr int kBruteForceCap = 10;

struct EquitableSearch {
    const Graph& g;
    int k;
    int floor_size, ceil_size;
    std::vector<VertexSet> class_members;
    std::vector<int> class_size;
    std::vector<int> color;

    bool dfs(int v) {
        int n = g.vertex_count();
        if (v == n) {
            for (int c = 0; c < k; c++)
                if (class_size[c] < floor_size) return false;
            return true;
        }
        // deficit prune: remaining vertices must be able to fill every class
        // up to its floor
        int deficit = 0;
        for (int c = 0; c < k; c++) deficit += std::max(0, floor_size - class_size[c]);
        if (deficit > n - v) return false;

        bool seen_empty = false;
        for (int c = 0; c < k; c++) {
            if (class_size[c] == 0) {
                // empty labeled classes are interchangeable
                if (seen_empty) break;
                seen_empty = true;
            }
            if (class_size[c] == ceil_size) continue;
            if (class_members[c] & g.neighbors(v)) continue;
            class_members[c] |= set_of(v);
            class_size[c]++;
            color[v] = c + 1;
            if (dfs(v + 1)) return true;
            class_members[c] &= ~set_of(v);
            class_size[c]--;
        }
        return false;
    }
};

} // namespace

std::optional<Coloring> equitable_k_colorable_bruteforce(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("equitable_k_colorable_bruteforce: k must be >= 1");
    if (g.vertex_count() > kBruteForceCap)
        throw ResourceLimitError("equitable_k_colorable_bruteforce: more than 10 vertices");
    int n = g.vertex_count();
    EquitableSearch search{g, k, n / k, (n + k - 1) / k,
                           std::vector<VertexSet>(k, 0), std::vector<int>(k, 0),
                           std::vector<int>(n, 0)};
    if (!search.dfs(0)) return std::nullopt;
    return Coloring{search.color};
}

namespace {

struct ListSearch {
    const Graph& g;
    const ListAssignment& l;
    int cap;
    std::vector<int> usage_color; // palette colors
    std::vector<int> usage_count;
    std::vector<int> color;

    int usage_of(int c) const {
        for (std::size_t i = 0; i < usage_color.size(); i++)
            if (usage_color[i] == c) return usage_count[i];
        return 0;
    }
    void bump(int c, int delta) {
        for (std::size_t i = 0; i < usage_color.size(); i++)
            if (usage_color[i] == c) {
                usage_count[i] += delta;
                return;
            }
    }

    bool dfs(int v) {
        if (v == g.vertex_count()) return true;
        for (int c : l.lists[v]) {
            if (usage_of(c) >= cap) continue;
            bool clash = false;
            for (int u = 0; u < v && !clash; u++)
                if (g.adjacent(u, v) && color[u] == c) clash = true;
            if (clash) continue;
            color[v] = c;
            bump(c, 1);
            if (dfs(v + 1)) return true;
            bump(c, -1);
        }
        color[v] = 0;
        return false;
    }
};

} // namespace

std::optional<Coloring> equitable_list_colorable(const Graph& g, const ListAssignment& l) {
    int k = l.uniform_size();
    if (k < 1) throw std::invalid_argument("equitable_list_colorable: not a k-assignment");
    if (l.vertex_count() != g.vertex_count())
        throw std::invalid_argument("equitable_list_colorable: vertex count mismatch");
    if (g.vertex_count() > kBruteForceCap)
        throw ResourceLimitError("equitable_list_colorable: more than 10 vertices");

    int n = g.vertex_count();
    ListSearch search{g, l, (n + k - 1) / k, l.palette(), {}, std::vector<int>(n, 0)};
    search.usage_count.assign(search.usage_color.size(), 0);
    if (!search.dfs(0)) return std::nullopt;
    return Coloring{search.color};
}

} // namespace propchoose
