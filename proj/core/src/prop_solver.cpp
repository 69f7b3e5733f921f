#include "propchoose/prop_solver.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <thread>

#include "propchoose/bounds.hpp"
#include "propchoose/errors.hpp"

namespace propchoose {

std::string Violation::describe() const {
    switch (kind) {
        case Kind::improper_edge:
            return "edge " + std::to_string(vertex_u) + "-" + std::to_string(vertex_v) +
                   " monochromatic in color " + std::to_string(color);
        case Kind::color_not_in_list:
            return "vertex " + std::to_string(vertex_u) + " colored " + std::to_string(color) +
                   " which is not in its list";
        case Kind::class_size:
            return "color " + std::to_string(color) + " class size " +
                   std::to_string(class_size) + " outside [" + std::to_string(lo) + "," +
                   std::to_string(hi) + "]";
    }
    return "unknown violation";
}

std::vector<Violation> verify_proportional(const Graph& g, const ListAssignment& l,
                                           const Coloring& f) {
    std::vector<Violation> out;
    int n = g.vertex_count();
    int k = l.uniform_size();
    if (k < 1) throw std::invalid_argument("verify_proportional: not a k-assignment");
    if (static_cast<int>(f.color.size()) != n)
        throw std::invalid_argument("verify_proportional: coloring size mismatch");

    for (int v = 0; v < n; v++)
        if (!std::binary_search(l.lists[v].begin(), l.lists[v].end(), f.color[v]))
            out.push_back({Violation::Kind::color_not_in_list, v, -1, f.color[v], -1, -1, -1});

    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (g.adjacent(u, v) && f.color[u] == f.color[v])
                out.push_back({Violation::Kind::improper_edge, u, v, f.color[u], -1, -1, -1});

    for (int c : l.palette()) {
        auto [lo, hi] = class_size_bounds(l, k, c);
        int size = 0;
        for (int v = 0; v < n; v++)
            if (f.color[v] == c) size++;
        if (size < lo || size > hi)
            out.push_back({Violation::Kind::class_size, -1, -1, c, size, lo, hi});
    }
    return out;
}

namespace {

// One color to place: its support and admissible class-size window.
struct FlatSpec {
    VertexSet support;
    int lo;
    int hi;
    int eta;
};

// all size-sz subsets of mask, ascending by numeric value
int subsets_of_size(VertexSet mask, int sz, VertexSet* out) {
    int positions[64];
    int w = 0;
    for (int v = 0; v < 64 && mask >> v; v++)
        if (set_contains(mask, v)) positions[w++] = v;
    if (sz > w) return 0;
    if (sz == 0) {
        out[0] = 0;
        return 1;
    }
    int count = 0;
    // Gosper's hack on the compacted index space; deposition through the
    // sorted position table preserves numeric order.
    std::uint64_t sub = (std::uint64_t{1} << sz) - 1;
    std::uint64_t limit = std::uint64_t{1} << w;
    while (sub < limit) {
        VertexSet s = 0;
        for (int i = 0; i < w; i++)
            if ((sub >> i) & 1) s |= set_of(positions[i]);
        out[count++] = s;
        std::uint64_t c = sub & -sub;
        std::uint64_t r = sub + c;
        sub = (((r ^ sub) >> 2) / c) | r;
    }
    return count;
}

// Exhaustive class-by-class search. Colors with identical supports and
// windows are interchangeable, so consecutive identical specs are forced to
// take candidates in non-increasing generation order, cutting the duplicate
// branching.
class ClassSolver {
public:
    ClassSolver(const Graph& g, std::vector<FlatSpec> specs)
        : g_(g), specs_(std::move(specs)) {
        std::stable_sort(specs_.begin(), specs_.end(), [](const FlatSpec& a, const FlatSpec& b) {
            if (a.lo != b.lo) return a.lo > b.lo;
            if (a.eta != b.eta) return a.eta > b.eta;
            return a.support < b.support;
        });
        int m = static_cast<int>(specs_.size());
        suffix_lo_.assign(m + 1, 0);
        suffix_hi_.assign(m + 1, 0);
        suffix_support_.assign(m + 1, 0);
        for (int i = m - 1; i >= 0; i--) {
            suffix_lo_[i] = suffix_lo_[i + 1] + specs_[i].lo;
            suffix_hi_[i] = suffix_hi_[i + 1] + specs_[i].hi;
            suffix_support_[i] = suffix_support_[i + 1] | specs_[i].support;
        }
        chosen_size_.assign(m, 0);
        chosen_set_.assign(m, 0);
        if (g_.has_parts()) {
            part_masks_.resize(g_.parts().size());
            for (std::size_t p = 0; p < part_masks_.size(); p++)
                part_masks_[p] = g_.part_members(static_cast<int>(p));
        }
    }

    // Returns chosen class per spec (in the solver's sorted order), or
    // nothing when no proportional coloring exists.
    std::optional<std::vector<VertexSet>> solve() {
        if (dfs(0, g_.all_vertices())) return chosen_set_;
        return std::nullopt;
    }

    const std::vector<FlatSpec>& sorted_specs() const { return specs_; }

private:
    bool candidate_independent(VertexSet s, int sz) const {
        if (sz <= 1) return true;
        if (g_.has_parts()) {
            // a class of size >= 2 in a complete multipartite graph must sit
            // inside one part
            for (VertexSet pm : part_masks_)
                if ((s & ~pm) == 0) return true;
            return false;
        }
        return g_.is_independent(s);
    }

    bool dfs(int i, VertexSet uncolored) {
        int remaining = set_size(uncolored);
        if (i == static_cast<int>(specs_.size())) return remaining == 0;
        if (remaining < suffix_lo_[i] || remaining > suffix_hi_[i]) return false;
        if (uncolored & ~suffix_support_[i]) return false;

        const FlatSpec& spec = specs_[i];
        VertexSet avail = spec.support & uncolored;
        int max_sz = std::min(spec.hi, set_size(avail));
        // identical predecessor: stay at or past its candidate in the
        // (size desc, mask asc) generation order
        bool tied = i > 0 && specs_[i - 1].support == spec.support &&
                    specs_[i - 1].lo == spec.lo && specs_[i - 1].hi == spec.hi;
        if (tied) max_sz = std::min(max_sz, chosen_size_[i - 1]);

        VertexSet buf[256];
        for (int sz = max_sz; sz >= spec.lo; sz--) {
            int count = subsets_of_size(avail, sz, buf);
            for (int ci = 0; ci < count; ci++) {
                VertexSet s = buf[ci];
                if (tied && sz == chosen_size_[i - 1] && s < chosen_set_[i - 1]) continue;
                if (tied && sz == chosen_size_[i - 1] && s == chosen_set_[i - 1] && sz != 0) continue;
                if (!candidate_independent(s, sz)) continue;
                chosen_size_[i] = sz;
                chosen_set_[i] = s;
                if (dfs(i + 1, uncolored & ~s)) return true;
            }
        }
        return false;
    }

    const Graph& g_;
    std::vector<FlatSpec> specs_;
    std::vector<int> suffix_lo_, suffix_hi_;
    std::vector<VertexSet> suffix_support_;
    std::vector<int> chosen_size_;
    std::vector<VertexSet> chosen_set_;
    std::vector<VertexSet> part_masks_;
};

std::vector<FlatSpec> specs_from_multiset(const SupportMultiset& m, int k) {
    std::vector<FlatSpec> specs;
    for (const auto& [mask, mult] : m.entries) {
        int eta = set_size(mask);
        FlatSpec spec{mask, eta / k, (eta + k - 1) / k, eta};
        for (int i = 0; i < mult; i++) specs.push_back(spec);
    }
    return specs;
}

// true iff a proportional coloring exists for the class structure
bool solvable(const Graph& g, const SupportMultiset& m, int k) {
    ClassSolver solver(g, specs_from_multiset(m, k));
    return solver.solve().has_value();
}

} // namespace

std::optional<Coloring> find_proportional(const Graph& g, const ListAssignment& l) {
    int k = l.uniform_size();
    if (k < 1) throw std::invalid_argument("find_proportional: not a k-assignment");
    if (l.vertex_count() != g.vertex_count())
        throw std::invalid_argument("find_proportional: vertex count mismatch");

    // group palette colors by support so interchangeable colors sit together
    std::vector<int> palette = l.palette();
    std::vector<std::pair<FlatSpec, int>> tagged;
    for (int c : palette) {
        VertexSet s = support_of(l, c);
        int eta = set_size(s);
        tagged.push_back({FlatSpec{s, eta / k, (eta + k - 1) / k, eta}, c});
    }
    std::stable_sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
        if (a.first.lo != b.first.lo) return a.first.lo > b.first.lo;
        if (a.first.eta != b.first.eta) return a.first.eta > b.first.eta;
        if (a.first.support != b.first.support) return a.first.support < b.first.support;
        return a.second < b.second;
    });
    std::vector<FlatSpec> specs;
    for (const auto& [spec, c] : tagged) specs.push_back(spec);

    ClassSolver solver(g, std::move(specs));
    auto classes = solver.solve();
    if (!classes) return std::nullopt;

    // the solver's stable sort preserves the color order within ties
    Coloring f;
    f.color.assign(g.vertex_count(), -1);
    for (std::size_t i = 0; i < classes->size(); i++) {
        VertexSet s = (*classes)[i];
        for (int v = 0; v < g.vertex_count(); v++)
            if (set_contains(s, v)) f.color[v] = tagged[i].second;
    }
    for (int v = 0; v < g.vertex_count(); v++)
        if (f.color[v] == -1)
            throw InternalError("find_proportional", "vertex left uncolored by class solver");
    return f;
}

namespace {

Verdict decide_sequential(const Graph& g, int k, const DecideOptions& opts) {
    Verdict verdict;
    verdict.k = k;
    std::optional<SupportMultiset> witness;
    auto start = std::chrono::steady_clock::now();
    try {
        enumerate_support_multisets(
            g, k,
            [&](const SupportMultiset& m) {
                verdict.classes_checked++;
                if (opts.progress && verdict.classes_checked % 65536 == 0)
                    opts.progress(verdict.classes_checked);
                if (!solvable(g, m, k)) {
                    witness = m;
                    return false;
                }
                return true;
            },
            opts.limits);
        verdict.outcome = witness ? Outcome::not_choosable : Outcome::choosable;
    } catch (const ResourceLimitError&) {
        verdict.outcome = Outcome::undecided;
    }
    if (witness) verdict.witness = materialize(*witness, g.vertex_count());
    verdict.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return verdict;
}

// Worker-pool variant. Classes are handed out in canonical order; the
// reported witness is the canonically first failure even when a later one
// finishes first.
Verdict decide_parallel(const Graph& g, int k, const DecideOptions& opts) {
    Verdict verdict;
    verdict.k = k;
    auto start = std::chrono::steady_clock::now();

    struct Item {
        std::uint64_t seq;
        SupportMultiset m;
    };
    std::mutex mu;
    std::condition_variable cv_space, cv_item;
    std::deque<Item> queue;
    bool producer_done = false;
    bool resource_limited = false;
    std::uint64_t min_fail = UINT64_MAX;
    SupportMultiset fail_multiset;
    std::uint64_t checked = 0;
    const std::size_t queue_cap = 4096;

    std::thread producer([&] {
        std::uint64_t seq = 0;
        try {
            enumerate_support_multisets(
                g, k,
                [&](const SupportMultiset& m) {
                    std::unique_lock lock(mu);
                    cv_space.wait(lock,
                                  [&] { return queue.size() < queue_cap || min_fail != UINT64_MAX; });
                    if (seq > min_fail) return false;
                    queue.push_back({seq++, m});
                    cv_item.notify_one();
                    return true;
                },
                opts.limits);
        } catch (const ResourceLimitError&) {
            std::lock_guard lock(mu);
            resource_limited = true;
        }
        std::lock_guard lock(mu);
        producer_done = true;
        cv_item.notify_all();
    });

    auto worker = [&] {
        for (;;) {
            Item item;
            {
                std::unique_lock lock(mu);
                cv_item.wait(lock, [&] { return !queue.empty() || producer_done; });
                if (queue.empty()) return;
                item = std::move(queue.front());
                queue.pop_front();
                cv_space.notify_one();
                if (item.seq > min_fail) continue;
            }
            bool ok = solvable(g, item.m, k);
            std::lock_guard lock(mu);
            checked++;
            if (opts.progress && checked % 65536 == 0) opts.progress(checked);
            if (!ok && item.seq < min_fail) {
                min_fail = item.seq;
                fail_multiset = item.m;
                cv_space.notify_all();
            }
        }
    };
    std::vector<std::thread> workers;
    for (int i = 0; i < opts.jobs; i++) workers.emplace_back(worker);
    producer.join();
    for (auto& w : workers) w.join();

    verdict.classes_checked = checked;
    if (resource_limited)
        verdict.outcome = Outcome::undecided;
    else if (min_fail != UINT64_MAX) {
        verdict.outcome = Outcome::not_choosable;
        verdict.witness = materialize(fail_multiset, g.vertex_count());
    } else
        verdict.outcome = Outcome::choosable;
    verdict.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return verdict;
}

} // namespace

Verdict decide_choosable(const Graph& g, int k, const DecideOptions& opts) {
    if (k < 1) throw std::invalid_argument("decide_choosable: k must be >= 1");
    if (opts.jobs <= 1) return decide_sequential(g, k, opts);
    return decide_parallel(g, k, opts);
}

ChiPcResult chi_pc(const Graph& g, int k_max, const DecideOptions& opts) {
    if (k_max < 1) throw std::invalid_argument("chi_pc: k_max must be >= 1");
    ChiPcResult result;
    result.lower = chi_pc_lower_bound(g);
    for (int k = result.lower; k <= k_max; k++) {
        Verdict v = decide_choosable(g, k, opts);
        result.verdicts.push_back(v);
        result.searched_up_to = k;
        if (v.outcome == Outcome::choosable) {
            result.value = k;
            return result;
        }
        if (v.outcome == Outcome::undecided) return result;
        result.lower = k + 1;
    }
    return result;
}

} // namespace propchoose
