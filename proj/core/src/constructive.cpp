#include "propchoose/constructive.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "propchoose/errors.hpp"

namespace propchoose {

Matching max_bipartite_matching(int left_count, int right_count,
                                const std::vector<std::pair<int, int>>& edges) {
    if (left_count < 0 || right_count < 0)
        throw std::invalid_argument("max_bipartite_matching: negative side size");
    std::vector<std::vector<int>> adj(left_count);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= left_count || v < 0 || v >= right_count)
            throw std::invalid_argument("max_bipartite_matching: edge endpoint out of range");
        adj[u].push_back(v);
    }
    std::vector<int> match_r(right_count, -1);
    std::vector<char> visited(right_count, 0);
    auto augment = [&](auto&& self, int u) -> bool {
        for (int v : adj[u]) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (match_r[v] < 0 || self(self, match_r[v])) {
                match_r[v] = u;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < left_count; u++) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(augment, u);
    }
    Matching m;
    for (int v = 0; v < right_count; v++)
        if (match_r[v] >= 0) m.pairs.push_back({match_r[v], v});
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

namespace {

// Injective choice of colors from per-vertex lists (a system of distinct
// representatives), or nothing when Hall's condition fails.
std::optional<std::vector<int>> rainbow_colors(const std::vector<std::vector<int>>& lists) {
    std::vector<int> colors;
    for (const auto& list : lists) colors.insert(colors.end(), list.begin(), list.end());
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    std::vector<std::pair<int, int>> edges;
    for (std::size_t v = 0; v < lists.size(); v++)
        for (int c : lists[v]) {
            int idx = static_cast<int>(
                std::lower_bound(colors.begin(), colors.end(), c) - colors.begin());
            edges.push_back({static_cast<int>(v), idx});
        }
    Matching m = max_bipartite_matching(static_cast<int>(lists.size()),
                                        static_cast<int>(colors.size()), edges);
    if (!m.saturates_left(static_cast<int>(lists.size()))) return std::nullopt;
    std::vector<int> out(lists.size());
    for (auto [v, idx] : m.pairs) out[v] = colors[idx];
    return out;
}

std::map<int, int> class_sizes(const Coloring& f) {
    std::map<int, int> counts;
    for (int c : f.color) counts[c]++;
    return counts;
}

void check_valid(const Graph& g, const ListAssignment& l, const Coloring& f, const char* step) {
    auto violations = verify_proportional(g, l, f);
    if (!violations.empty()) throw InternalError(step, violations.front().describe());
}

void note(KnmTrace* trace, KnmStep step) {
    if (trace) trace->steps.push_back(step);
}

struct Sides {
    std::vector<int> a, b; // |a| = n <= |b| = m, ascending vertex indices
    int n, m;
};

Sides split_sides(const Graph& g, const char* who) {
    if (!g.has_parts() || g.parts().size() != 2)
        throw std::invalid_argument(std::string(who) + ": graph must be complete bipartite");
    int small = g.parts()[0] <= g.parts()[1] ? 0 : 1;
    Sides s;
    for (int v = 0; v < g.vertex_count(); v++)
        (g.part_of(v) == small ? s.a : s.b).push_back(v);
    s.n = static_cast<int>(s.a.size());
    s.m = static_cast<int>(s.b.size());
    return s;
}

// The `need` high-multiplicity colors of largest eta, ties by color index.
std::vector<int> pick_high(const ListAssignment& l, int k, int need) {
    std::vector<int> high = high_multiplicity_colors(l, k);
    std::stable_sort(high.begin(), high.end(),
                     [&](int a, int b) { return multiplicity(l, a) > multiplicity(l, b); });
    high.resize(need);
    return high;
}

bool in_list(const ListAssignment& l, int v, int c) {
    const auto& list = l.lists[v];
    return std::binary_search(list.begin(), list.end(), c);
}

std::vector<int> list_minus(const std::vector<int>& list, const std::vector<int>& removed) {
    std::vector<int> out;
    for (int c : list)
        if (!std::binary_search(removed.begin(), removed.end(), c)) out.push_back(c);
    return out;
}

} // namespace

Coloring hall_proper_coloring(const Graph& g, const ListAssignment& l) {
    int k = l.uniform_size();
    if (k < 1) throw std::invalid_argument("hall_proper_coloring: not a k-assignment");
    if (l.vertex_count() != g.vertex_count())
        throw std::invalid_argument("hall_proper_coloring: vertex count mismatch");
    std::vector<int> colors = l.palette();
    for (int c : colors)
        if (multiplicity(l, c) > k)
            throw std::invalid_argument("hall_proper_coloring: eta(c) > k for color " +
                                        std::to_string(c));
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.vertex_count(); v++)
        for (int c : l.lists[v]) {
            int idx = static_cast<int>(
                std::lower_bound(colors.begin(), colors.end(), c) - colors.begin());
            edges.push_back({v, idx});
        }
    Matching m = max_bipartite_matching(g.vertex_count(), static_cast<int>(colors.size()), edges);
    if (!m.saturates_left(g.vertex_count()))
        throw InternalError("hall matching",
                            "vertex-color matching does not saturate the vertices, "
                            "contradicting the counting argument");
    Coloring f;
    f.color.resize(g.vertex_count());
    for (auto [v, idx] : m.pairs) f.color[v] = colors[idx];
    return f;
}

Coloring repair_no_excess(const Graph& g, const ListAssignment& l, const Coloring& f) {
    int k = l.uniform_size();
    if (k < 1) throw std::invalid_argument("repair_no_excess: not a k-assignment");
    if (l.vertex_count() != g.vertex_count())
        throw std::invalid_argument("repair_no_excess: vertex count mismatch");
    if (static_cast<int>(f.color.size()) != g.vertex_count())
        throw std::invalid_argument("repair_no_excess: coloring size mismatch");

    std::vector<int> colors = l.palette();
    std::vector<int> lo(colors.size()), hi(colors.size());
    for (std::size_t i = 0; i < colors.size(); i++) {
        int eta = multiplicity(l, colors[i]);
        if (eta >= 2 * k)
            throw std::invalid_argument("repair_no_excess: eta(c) >= 2k for color " +
                                        std::to_string(colors[i]));
        lo[i] = eta / k;
        hi[i] = (eta + k - 1) / k;
    }
    auto index_of = [&](int c) {
        auto it = std::lower_bound(colors.begin(), colors.end(), c);
        if (it == colors.end() || *it != c)
            throw std::invalid_argument("repair_no_excess: color " + std::to_string(c) +
                                        " not in the palette");
        return static_cast<int>(it - colors.begin());
    };

    std::vector<int> count(colors.size(), 0);
    for (int v = 0; v < g.vertex_count(); v++) {
        if (!in_list(l, v, f.color[v]))
            throw std::invalid_argument("repair_no_excess: f is not an L-coloring");
        count[index_of(f.color[v])]++;
    }
    for (int v = 0; v < g.vertex_count(); v++)
        for (int u = v + 1; u < g.vertex_count(); u++)
            if (g.adjacent(u, v) && f.color[u] == f.color[v])
                throw std::invalid_argument("repair_no_excess: f is not proper");
    for (std::size_t i = 0; i < colors.size(); i++)
        if (count[i] > hi[i])
            throw std::invalid_argument("repair_no_excess: color " + std::to_string(colors[i]) +
                                        " is used excessively");

    Coloring out = f;
    for (;;) {
        int deficit = -1;
        for (std::size_t i = 0; i < colors.size(); i++)
            if (count[i] < lo[i]) {
                deficit = static_cast<int>(i);
                break;
            }
        if (deficit < 0) break;
        int cdef = colors[deficit];
        bool moved = false;
        for (int v = 0; v < g.vertex_count() && !moved; v++) {
            if (!in_list(l, v, cdef)) continue;
            int src = index_of(out.color[v]);
            if (count[src] <= lo[src]) continue;
            bool clash = false;
            VertexSet nb = g.neighbors(v);
            for (int u = 0; u < g.vertex_count() && !clash; u++)
                if (set_contains(nb, u) && out.color[u] == cdef) clash = true;
            if (clash) continue;
            out.color[v] = cdef;
            count[src]--;
            count[deficit]++;
            moved = true;
        }
        if (!moved) {
            auto exact = find_proportional(g, l);
            if (!exact)
                throw InternalError("no-excess repair",
                                    "exact fallback found no proportional coloring, "
                                    "contradicting the no-excess existence guarantee");
            return *exact;
        }
    }
    check_valid(g, l, out, "no-excess repair");
    return out;
}

const char* to_string(KnmStep step) {
    switch (step) {
    case KnmStep::no_high: return "no-high";
    case KnmStep::many_high_even_rainbow: return "many-high/even/rainbow";
    case KnmStep::many_high_even_constant: return "many-high/even/constant";
    case KnmStep::many_high_even_nonconstant: return "many-high/even/nonconstant";
    case KnmStep::many_high_odd_pair_in_b: return "many-high/odd/pair-in-b";
    case KnmStep::many_high_odd_pair_in_a: return "many-high/odd/pair-in-a";
    case KnmStep::recurse_drop_z: return "recurse/drop-z";
    case KnmStep::recurse_recolor_z: return "recurse/recolor-z";
    case KnmStep::recurse_swap_in_b: return "recurse/swap-in-b";
    case KnmStep::recurse_free_color: return "recurse/free-color";
    case KnmStep::recurse_three_way: return "recurse/three-way";
    }
    return "?";
}

Coloring color_knm_many_high(const Graph& g, const ListAssignment& l, int d, KnmTrace* trace) {
    Sides sides = split_sides(g, "color_knm_many_high");
    int n = sides.n, m = sides.m;
    if (d < 1 || m < 3 * d)
        throw std::invalid_argument("color_knm_many_high: requires m >= 3d >= 3");
    if (n < 2) throw std::invalid_argument("color_knm_many_high: requires n >= 2");
    int k = m + n - d - 1;
    if (!l.is_k_assignment(k) || l.vertex_count() != g.vertex_count())
        throw std::invalid_argument("color_knm_many_high: l must be an (m+n-d-1)-assignment");
    int alpha = static_cast<int>(high_multiplicity_colors(l, k).size());
    if (2 * alpha < m - d)
        throw std::invalid_argument("color_knm_many_high: alpha < (m-d)/2");

    int need = (m - d + 1) / 2; // (m-d)/2 when even, (m-d+1)/2 when odd
    std::vector<int> chosen = pick_high(l, k, need);
    std::vector<int> chosen_sorted = chosen;
    std::sort(chosen_sorted.begin(), chosen_sorted.end());

    Coloring f;
    f.color.assign(g.vertex_count(), 0);
    std::vector<char> used_b(m, 0); // indexed into sides.b

    // Pair colors onto B greedily in index order: c_i takes the two lowest
    // unused B-vertices whose lists contain it. eta(c_i) >= m+n-d leaves at
    // most d vertices without it, so two are always free here.
    auto pair_color = [&](int c) {
        int got = 0;
        for (int i = 0; i < m && got < 2; i++) {
            if (used_b[i] || !in_list(l, sides.b[i], c)) continue;
            used_b[i] = 1;
            f.color[sides.b[i]] = c;
            got++;
        }
        if (got < 2)
            throw InternalError("high-color pairing",
                                "color " + std::to_string(c) +
                                    " has fewer than two free support vertices in B");
    };

    int full_pairs = (m - d) % 2 == 0 ? need : need - 1;
    for (int i = 0; i < full_pairs; i++) pair_color(chosen[i]);

    auto finish = [&](const std::vector<int>& residual_vertices, KnmStep step) {
        std::vector<std::vector<int>> residual_lists;
        for (int v : residual_vertices)
            residual_lists.push_back(list_minus(l.lists[v], chosen_sorted));
        auto colors = rainbow_colors(residual_lists);
        if (!colors)
            throw InternalError(to_string(step),
                                "no rainbow coloring of the residual subgraph, contradicting "
                                "Hall's condition for the residual lists");
        for (std::size_t i = 0; i < residual_vertices.size(); i++)
            f.color[residual_vertices[i]] = (*colors)[i];
        note(trace, step);
        Coloring out = repair_no_excess(g, l, f);
        check_valid(g, l, out, to_string(step));
        return out;
    };

    if ((m - d) % 2 == 0) {
        // Residual graph: A plus the d unpaired B-vertices.
        std::vector<int> residual = sides.a;
        for (int i = 0; i < m; i++)
            if (!used_b[i]) residual.push_back(sides.b[i]);

        bool residual_constant = true;
        std::vector<int> common = list_minus(l.lists[residual[0]], chosen_sorted);
        if (static_cast<int>(common.size()) != n + d - 1) residual_constant = false;
        for (std::size_t i = 1; residual_constant && i < residual.size(); i++)
            if (list_minus(l.lists[residual[i]], chosen_sorted) != common)
                residual_constant = false;

        if (!residual_constant) return finish(residual, KnmStep::many_high_even_rainbow);

        bool constant = true;
        for (int v = 1; v < g.vertex_count() && constant; v++)
            if (l.lists[v] != l.lists[0]) constant = false;

        if (constant) {
            // Explicit pairing on the shared palette; leftovers take the next
            // palette colors, and the repair raises the unused colors to
            // their mandated single use.
            std::vector<int> palette = l.lists[0];
            f.color.assign(g.vertex_count(), 0);
            for (int i = 0; i < n / 2; i++) {
                f.color[sides.a[2 * i]] = palette[i];
                f.color[sides.a[2 * i + 1]] = palette[i];
            }
            for (int i = 0; i < m / 2; i++) {
                f.color[sides.b[2 * i]] = palette[n / 2 + i];
                f.color[sides.b[2 * i + 1]] = palette[n / 2 + i];
            }
            int next = n / 2 + m / 2;
            if (n % 2) f.color[sides.a[n - 1]] = palette[next++];
            if (m % 2) f.color[sides.b[m - 1]] = palette[next++];
            note(trace, KnmStep::many_high_even_constant);
            Coloring out = repair_no_excess(g, l, f);
            check_valid(g, l, out, to_string(KnmStep::many_high_even_constant));
            return out;
        }

        // L agrees on the residual graph but not everywhere, so some paired
        // vertex deviates; free its pair and put that color on u_1, u_2.
        int j = -1;
        std::vector<int> pair_j;
        for (int i = 0; i < full_pairs && j < 0; i++) {
            std::vector<int> members;
            for (int b = 0; b < m; b++)
                if (f.color[sides.b[b]] == chosen[i]) members.push_back(sides.b[b]);
            for (int v : members)
                if (l.lists[v] != l.lists[residual[0]]) {
                    j = i;
                    pair_j = members;
                    break;
                }
        }
        if (j < 0)
            throw InternalError(to_string(KnmStep::many_high_even_nonconstant),
                                "no deviating paired vertex although L is not constant");
        for (int v : pair_j) f.color[v] = 0;
        f.color[sides.a[0]] = chosen[j];
        f.color[sides.a[1]] = chosen[j];
        std::vector<int> residual2(sides.a.begin() + 2, sides.a.end());
        for (int i = 0; i < m; i++)
            if (!used_b[i]) residual2.push_back(sides.b[i]);
        residual2.insert(residual2.end(), pair_j.begin(), pair_j.end());
        std::sort(residual2.begin(), residual2.end());
        return finish(residual2, KnmStep::many_high_even_nonconstant);
    }

    // Odd m-d: after need-1 pairs, d+1 B-vertices remain free; the last
    // chosen color sits on at least one of them.
    int c_last = chosen[need - 1];
    int vstar = -1;
    for (int i = 0; i < m && vstar < 0; i++)
        if (!used_b[i] && in_list(l, sides.b[i], c_last)) vstar = i;
    if (vstar < 0)
        throw InternalError("odd-case pairing",
                            "last high color has no free support vertex in B");
    int other = -1;
    for (int i = 0; i < m && other < 0; i++)
        if (!used_b[i] && i != vstar && in_list(l, sides.b[i], c_last)) other = i;

    if (other >= 0) {
        f.color[sides.b[vstar]] = c_last;
        f.color[sides.b[other]] = c_last;
        used_b[vstar] = used_b[other] = 1;
        std::vector<int> residual = sides.a;
        for (int i = 0; i < m; i++)
            if (!used_b[i]) residual.push_back(sides.b[i]);
        return finish(residual, KnmStep::many_high_odd_pair_in_b);
    }

    // The d free vertices besides vstar all lack c_last, so every vertex of A
    // carries it.
    for (int u : sides.a)
        if (!in_list(l, u, c_last))
            throw InternalError(to_string(KnmStep::many_high_odd_pair_in_a),
                                "last high color missing from an A-list although all d "
                                "non-support vertices lie in B");
    f.color[sides.a[0]] = c_last;
    f.color[sides.a[1]] = c_last;
    std::vector<int> residual(sides.a.begin() + 2, sides.a.end());
    for (int i = 0; i < m; i++)
        if (!used_b[i]) residual.push_back(sides.b[i]);
    std::sort(residual.begin(), residual.end());
    return finish(residual, KnmStep::many_high_odd_pair_in_a);
}

Coloring color_knm(const Graph& g, const ListAssignment& l, int d, KnmTrace* trace) {
    Sides sides = split_sides(g, "color_knm");
    int n = sides.n, m = sides.m;
    if (d < 1 || m < 3 * d) throw std::invalid_argument("color_knm: requires m >= 3d >= 3");
    if (n < 2) throw std::invalid_argument("color_knm: requires n >= 2");
    int k = m + n - d - 1;
    if (!l.is_k_assignment(k) || l.vertex_count() != g.vertex_count())
        throw std::invalid_argument("color_knm: l must be an (m+n-d-1)-assignment");

    std::vector<int> high = high_multiplicity_colors(l, k);
    int alpha = static_cast<int>(high.size());

    if (alpha == 0) {
        note(trace, KnmStep::no_high);
        return repair_no_excess(g, l, hall_proper_coloring(g, l));
    }
    if (2 * alpha >= m - d) return color_knm_many_high(g, l, d, trace);

    // Replace the smallest high color c by a fresh color z on m-d of its
    // support vertices in B; the derived assignment has alpha-1 high colors.
    int c = high.front();
    std::vector<int> prefix;
    for (int i = 0; i < m && static_cast<int>(prefix.size()) < m - d; i++)
        if (in_list(l, sides.b[i], c)) prefix.push_back(sides.b[i]);
    if (static_cast<int>(prefix.size()) < m - d)
        throw InternalError("recursion", "high color has fewer than m-d support vertices in B");
    int z = l.palette().back() + 1;
    std::vector<std::vector<int>> derived = l.lists;
    for (int v : prefix) {
        auto& list = derived[v];
        list.erase(std::remove(list.begin(), list.end(), c), list.end());
        list.push_back(z);
    }
    ListAssignment lp = ListAssignment::from_lists(std::move(derived));
    if (multiplicity(lp, z) != m - d)
        throw InternalError("recursion", "eta_{L'}(z) != m-d");
    if (multiplicity(lp, c) > n + d)
        throw InternalError("recursion", "eta_{L'}(c) > n+d");
    if (static_cast<int>(high_multiplicity_colors(lp, k).size()) != alpha - 1)
        throw InternalError("recursion", "alpha did not decrease by exactly 1");

    if (trace) trace->recursion_depth++;
    Coloring f = color_knm(g, lp, d, trace);

    auto sizes = class_sizes(f);
    int nz = sizes.count(z) ? sizes[z] : 0;
    int nc = sizes.count(c) ? sizes[c] : 0;

    if (nz == 0) {
        note(trace, KnmStep::recurse_drop_z);
        Coloring out = repair_no_excess(g, l, f);
        check_valid(g, l, out, to_string(KnmStep::recurse_drop_z));
        return out;
    }
    int v1 = -1, vc = -1;
    for (int v = 0; v < g.vertex_count(); v++) {
        if (f.color[v] == z) v1 = v;
        if (f.color[v] == c) vc = v;
    }
    if (nc == 0) {
        f.color[v1] = c;
        note(trace, KnmStep::recurse_recolor_z);
        check_valid(g, l, f, to_string(KnmStep::recurse_recolor_z));
        return f;
    }
    int small_part = g.parts()[0] <= g.parts()[1] ? 0 : 1;
    if (g.part_of(vc) != small_part) {
        // Both the c-vertex and the z-vertex lie in B.
        f.color[v1] = c;
        note(trace, KnmStep::recurse_swap_in_b);
        check_valid(g, l, f, to_string(KnmStep::recurse_swap_in_b));
        return f;
    }

    // f(u1) = c with u1 in A, f(v1) = z with v1 in B.
    int u1 = vc;
    std::vector<int> fa;
    for (int u : sides.a) fa.push_back(f.color[u]);
    std::map<int, int> b_count;
    for (int v : sides.b) b_count[f.color[v]]++;
    std::vector<int> removed = fa;
    for (auto [a, cnt] : b_count)
        if (cnt == 2) removed.push_back(a); // D
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    std::vector<int> l2u1 = list_minus(l.lists[u1], removed);
    if (static_cast<int>(l2u1.size()) < d + 1)
        throw InternalError("repair ladder", "|L''(u1)| < d+1");

    // S: colors other than z used on exactly one vertex of B.
    std::vector<int> s_colors;
    for (auto [a, cnt] : b_count)
        if (cnt == 1 && a != z) s_colors.push_back(a);
    std::vector<int> free_colors = list_minus(l2u1, s_colors);
    if (!free_colors.empty()) {
        f.color[u1] = free_colors.front();
        f.color[v1] = c;
        note(trace, KnmStep::recurse_free_color);
        check_valid(g, l, f, to_string(KnmStep::recurse_free_color));
        return f;
    }

    int v = -1;
    for (int b : sides.b) {
        if (b == v1) continue;
        if (std::binary_search(l2u1.begin(), l2u1.end(), f.color[b]) && in_list(l, b, c)) {
            v = b;
            break;
        }
    }
    if (v < 0)
        throw InternalError("case (2): no v with c in L(v)",
                            "every B-vertex colored from L''(u1) lacks c");
    f.color[u1] = f.color[v];
    f.color[v] = c;
    f.color[v1] = c;
    note(trace, KnmStep::recurse_three_way);
    check_valid(g, l, f, to_string(KnmStep::recurse_three_way));
    return f;
}

} // namespace propchoose
