#include "propchoose/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "propchoose/equitable.hpp"
#include "propchoose/errors.hpp"
#include "propchoose/prop_solver.hpp"

namespace propchoose {

int star_chi_pc(int m) {
    if (m < 1) throw std::invalid_argument("star_chi_pc: m must be >= 1");
    return 1 + (m + 1) / 2;
}

int lower_bound_knm(int n, int m) {
    if (n < 2 || n > m) throw std::invalid_argument("lower_bound_knm: requires 2 <= n <= m");
    return std::max(n + 1, (n + 1) / 2 + (m + 1) / 2);
}

int upper_bound_knm(int n, int m) {
    if (n < 2 || n > m) throw std::invalid_argument("upper_bound_knm: requires 2 <= n <= m");
    return n + m - 1 - m / 3;
}

std::pair<int, LowerBoundSource> lower_bound_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2)
        throw std::invalid_argument("lower_bound_multipartite: requires t >= 2 parts");
    for (int ni : parts)
        if (ni < 1) throw std::invalid_argument("lower_bound_multipartite: part size must be >= 1");
    int s = 0;
    bool all_even = true;
    int max_part = 0;
    for (int ni : parts) {
        s += (ni + 1) / 2;
        if (ni % 2) all_even = false;
        max_part = std::max(max_part, ni);
    }
    int bound = s;
    LowerBoundSource source = LowerBoundSource::general;
    if (all_even && max_part <= s) {
        bound = s + 1;
        source = LowerBoundSource::even_case;
    }
    if (parts.size() == 2) {
        int n = std::min(parts[0], parts[1]);
        if (n >= 2) bound = std::max(bound, n + 1);
    }
    return {bound, source};
}

std::vector<int> odd_reduction(std::vector<int> parts) {
    for (int& ni : parts) {
        if (ni < 1) throw std::invalid_argument("odd_reduction: part size must be >= 1");
        if (ni % 2 == 0) ni -= 1;
    }
    return parts;
}

ListAssignment even_case_witness(const std::vector<int>& parts) {
    if (parts.size() < 2)
        throw std::invalid_argument("even_case_witness: requires t >= 2 parts");
    std::vector<int> sorted = parts;
    std::stable_sort(sorted.begin(), sorted.end());
    int s = 0, max_part = 0;
    for (int ni : sorted) {
        if (ni < 1) throw std::invalid_argument("even_case_witness: part size must be >= 1");
        if (ni % 2 != 0)
            throw std::invalid_argument("even_case_witness: part size " + std::to_string(ni) +
                                        " is odd");
        s += ni / 2;
        max_part = std::max(max_part, ni);
    }
    if (max_part > s)
        throw std::invalid_argument("even_case_witness: max part " + std::to_string(max_part) +
                                    " exceeds s = " + std::to_string(s));
    std::vector<int> shared;
    for (int c = 1; c <= s - 1; c++) shared.push_back(c);
    std::vector<std::vector<int>> lists;
    for (std::size_t i = 0; i < sorted.size(); i++) {
        std::vector<int> list = shared;
        list.push_back(s + static_cast<int>(i)); // s - 1 + (i+1)
        for (int j = 0; j < sorted[i]; j++) lists.push_back(list);
    }
    return ListAssignment::from_lists(std::move(lists));
}

BoundReport bipartite_bounds(int n, int m) {
    if (n > m) std::swap(n, m);
    BoundReport r;
    r.n = n;
    r.m = m;
    if (n < 1) throw std::invalid_argument("bipartite_bounds: n must be >= 1");
    if (n == 1) {
        r.lower = star_chi_pc(m);
        r.upper = r.lower;
        return r;
    }
    auto [lower, source] = lower_bound_multipartite({n, m});
    r.lower = lower;
    r.lower_source = source;
    r.upper = upper_bound_knm(n, m);
    return r;
}

std::string LowerBoundReport::summary() const {
    std::string s_parts;
    for (std::size_t i = 0; i < parts.size(); i++)
        s_parts += (i ? "," : "") + std::to_string(parts[i]);
    std::string out = "K" + s_parts + ": lower bound " + std::to_string(bound) + " (" +
                      to_string(source) + "); odd reduction fails Wu at s-1=" +
                      std::to_string(s - 1);
    if (even_case_applies) out += "; even-case witness refuted at k=" + std::to_string(s);
    return out;
}

LowerBoundReport verify_lower_bound(const std::vector<int>& parts) {
    LowerBoundReport report;
    report.parts = parts;
    auto [bound, source] = lower_bound_multipartite(parts);
    report.bound = bound;
    report.source = source;
    for (int ni : parts) report.s += (ni + 1) / 2;

    // Theorem route: the odd reduction is not equitably (s-1)-colorable,
    // hence not proportionally (s-1)-choosable, hence neither is K_parts.
    report.reduced_parts = odd_reduction(parts);
    if (wu_equitable(report.reduced_parts, report.s - 1))
        throw InternalError("verify_lower_bound",
                            "odd reduction unexpectedly equitably (s-1)-colorable");
    report.wu_refuted_at_s_minus_1 = true;

    report.even_case_applies = source == LowerBoundSource::even_case;
    if (report.even_case_applies) {
        ListAssignment witness = even_case_witness(parts);
        Graph g = Graph::complete_multipartite(parts);
        if (find_proportional(g, witness))
            throw InternalError("verify_lower_bound",
                                "even-case witness unexpectedly admits a proportional coloring");
        report.witness_refuted = true;
    }
    return report;
}

int chi_pc_lower_bound(const Graph& g) {
    if (!g.has_parts() || g.parts().size() < 2) return 1;
    return lower_bound_multipartite(g.parts()).first;
}

} // namespace propchoose
