#include "propchoose/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>

#include "propchoose/bounds.hpp"
#include "propchoose/constructive.hpp"
#include "propchoose/enumerate.hpp"
#include "propchoose/equitable.hpp"
#include "propchoose/io.hpp"
#include "propchoose/prop_solver.hpp"

namespace propchoose {

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    std::ostream& out;
    int index;
    std::string title;
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void require(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
    bool finish(double budget_s) {
        double elapsed = seconds();
        if (elapsed > budget_s)
            fail("exceeded time budget of " + std::to_string(budget_s) + " s");
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1fs", elapsed);
        out << (ok ? "PASS" : "FAIL") << "  " << index << ". " << title << " [" << buf << "]";
        if (!ok) out << " -- " << detail;
        out << "\n";
        out.flush();
        return ok;
    }
};

std::optional<int> decided_chi_pc(const Graph& g, int k_max, int jobs) {
    DecideOptions opts;
    opts.jobs = jobs;
    return chi_pc(g, k_max, opts).value;
}

// Ground-truth proportional colorability: try every function assigning each
// vertex a color from its list and test the definition directly.
bool naive_proportionally_colorable(const Graph& g, const ListAssignment& l) {
    int n = g.vertex_count();
    std::vector<int> idx(n, 0);
    Coloring f;
    f.color.resize(n);
    for (;;) {
        for (int v = 0; v < n; v++) f.color[v] = l.lists[v][idx[v]];
        if (verify_proportional(g, l, f).empty()) return true;
        int v = n - 1;
        while (v >= 0 && idx[v] + 1 == static_cast<int>(l.lists[v].size())) idx[v--] = 0;
        if (v < 0) return false;
        idx[v]++;
    }
}

// Brute-force count of k-assignment classes as plain support multisets over
// automorphisms, enumerated without the canonical generator: all multisets of
// (support, multiplicity) with per-vertex degree k, reduced to canonical form
// through exhaustive relabeling.
std::uint64_t oracle_class_count(const Graph& g, int k) {
    int n = g.vertex_count();
    int masks = (1 << n) - 1;
    std::vector<SupportMultiset> found;
    std::vector<std::pair<VertexSet, int>> cur;
    std::vector<int> degree(n, 0);
    auto record = [&] {
        SupportMultiset m;
        m.entries = cur;
        ListAssignment l = materialize(m, n);
        SupportMultiset canon = canonical_form(g, l);
        for (const auto& seen : found)
            if (seen == canon) return;
        found.push_back(canon);
    };
    auto rec = [&](auto&& self, int mask) -> void {
        bool full = true;
        for (int v = 0; v < n; v++)
            if (degree[v] != k) full = false;
        if (full) {
            record();
            return;
        }
        if (mask > masks) return;
        self(self, mask + 1);
        for (int mult = 1;; mult++) {
            bool fits = true;
            for (int v = 0; v < n && fits; v++)
                if (set_contains(mask, v) && degree[v] + mult > k) fits = false;
            if (!fits) break;
            for (int v = 0; v < n; v++)
                if (set_contains(mask, v)) degree[v] += mult;
            cur.push_back({static_cast<VertexSet>(mask), mult});
            self(self, mask + 1);
            cur.pop_back();
            for (int v = 0; v < n; v++)
                if (set_contains(mask, v)) degree[v] -= mult;
        }
    };
    rec(rec, 1);
    return found.size();
}

void partitions_up_to(int max_p, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int min_part) -> void {
        if (!cur.empty()) out.push_back(cur);
        for (int next = min_part; next <= remaining; next++) {
            cur.push_back(next);
            self(self, remaining - next, next);
            cur.pop_back();
        }
    };
    rec(rec, max_p, 1);
}

} // namespace

bool run_acceptance(std::ostream& out, const AcceptanceOptions& opts) {
    bool all_ok = true;
    DecideOptions dopts;
    dopts.jobs = opts.jobs;

    {
        Criterion c{out, 1, "star formula: chi_pc(K_{1,m}) = 1 + ceil(m/2) for m = 1..5"};
        for (int m = 1; m <= 5; m++) {
            auto t0 = Clock::now();
            auto value = decided_chi_pc(Graph::complete_multipartite({1, m}), 10, opts.jobs);
            double dt = std::chrono::duration<double>(Clock::now() - t0).count();
            c.require(value && *value == star_chi_pc(m),
                      "K_{1," + std::to_string(m) + "} gave " +
                          (value ? std::to_string(*value) : std::string("none")));
            c.require(dt < 60.0, "K_{1," + std::to_string(m) + "} decision took " +
                                     std::to_string(dt) + " s");
        }
        all_ok &= c.finish(5 * 60.0);
    }

    {
        Criterion c{out, 2, "forced bipartite values: K_{2,2}=3, K_{2,3}=3, K_{3,3}=4"};
        auto check = [&](std::vector<int> parts, int expect) {
            auto value = decided_chi_pc(Graph::complete_multipartite(parts), expect + 1, opts.jobs);
            std::string name = "K_{" + std::to_string(parts[0]) + "," + std::to_string(parts[1]) + "}";
            c.require(value && *value == expect,
                      name + " gave " + (value ? std::to_string(*value) : std::string("none")));
        };
        check({2, 2}, 3);
        check({2, 3}, 3);
        check({3, 3}, 4);
        all_ok &= c.finish(30 * 60.0);
    }

    {
        Criterion c{out, 3, "even-case witnesses refuted for [2,2], [2,2,2], [4,4]"};
        for (auto parts : {std::vector<int>{2, 2}, {2, 2, 2}, {4, 4}}) {
            auto t0 = Clock::now();
            Graph g = Graph::complete_multipartite(parts);
            ListAssignment w = even_case_witness(parts);
            bool colorable = find_proportional(g, w).has_value();
            double dt = std::chrono::duration<double>(Clock::now() - t0).count();
            std::string name;
            for (std::size_t i = 0; i < parts.size(); i++)
                name += (i ? "," : "[") + std::to_string(parts[i]);
            name += "]";
            c.require(!colorable, name + " witness unexpectedly colorable");
            c.require(dt < 10.0, name + " refutation took " + std::to_string(dt) + " s");
        }
        all_ok &= c.finish(60.0);
    }

    {
        Criterion c{out, 4, "equitable facts and Wu cross-check for all part lists with p <= 8"};
        c.require(wu_equitable({3, 3}, 2), "Wu says K_{3,3} not equitably 2-colorable");
        c.require(!wu_equitable({3, 3}, 3), "Wu says K_{3,3} equitably 3-colorable");
        Graph k33 = Graph::complete_multipartite({3, 3});
        c.require(equitable_k_colorable_bruteforce(k33, 2).has_value(),
                  "brute force finds no equitable 2-coloring of K_{3,3}");
        c.require(!equitable_k_colorable_bruteforce(k33, 3).has_value(),
                  "brute force finds an equitable 3-coloring of K_{3,3}");
        std::vector<std::vector<int>> parts_lists;
        partitions_up_to(8, parts_lists);
        int disagreements = 0, instances = 0;
        for (const auto& parts : parts_lists) {
            int p = 0;
            for (int ni : parts) p += ni;
            Graph g = Graph::complete_multipartite(parts);
            for (int s = 1; s <= p + 1; s++) {
                instances++;
                bool formula = wu_equitable(parts, s);
                bool brute = equitable_k_colorable_bruteforce(g, s).has_value();
                if (formula != brute) disagreements++;
            }
        }
        c.require(disagreements == 0, std::to_string(disagreements) + " disagreements over " +
                                          std::to_string(instances) + " instances");
        all_ok &= c.finish(5 * 60.0);
    }

    {
        Criterion c{out, 5, "constructive soundness: exhaustive K_{2,3} d=1 plus 1000 samples "
                            "each for (2,3,1), (3,3,1), (2,6,2), (3,6,1)"};
        Graph k23 = Graph::complete_multipartite({2, 3});
        std::uint64_t bad = 0;
        enumerate_assignments(k23, 3, [&](const ListAssignment& l) {
            try {
                Coloring f = color_knm(k23, l, 1);
                if (!verify_proportional(k23, l, f).empty()) bad++;
            } catch (const std::exception&) {
                bad++;
            }
            return true;
        });
        c.require(bad == 0, std::to_string(bad) + " failures on exhaustive K_{2,3}");
        for (auto [n, m, d] : {std::tuple<int, int, int>{2, 3, 1}, {3, 3, 1}, {2, 6, 2}, {3, 6, 1}}) {
            Graph g = Graph::complete_multipartite({n, m});
            int k = n + m - d - 1;
            int failures = 0;
            for (int t = 0; t < 1000; t++) {
                ListAssignment l = sample_assignment(g, k, k + 3, 0x5eed0000 + t);
                try {
                    Coloring f = color_knm(g, l, d);
                    if (!verify_proportional(g, l, f).empty()) failures++;
                } catch (const std::exception&) {
                    failures++;
                }
            }
            c.require(failures == 0, "K_{" + std::to_string(n) + "," + std::to_string(m) +
                                         "} d=" + std::to_string(d) + ": " +
                                         std::to_string(failures) + "/1000 failed");
        }
        all_ok &= c.finish(10 * 60.0);
    }

    {
        Criterion c{out, 6, "monotonicity in k and subgraph closure on small graphs"};
        std::map<std::pair<std::vector<int>, int>, bool> decided;
        for (auto parts : {std::vector<int>{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
            Graph g = Graph::complete_multipartite(parts);
            for (int k = 1; k <= 5; k++)
                decided[{parts, k}] =
                    decide_choosable(g, k, dopts).outcome == Outcome::choosable;
            for (int k = 1; k <= 4; k++)
                c.require(!decided[{parts, k}] || decided[{parts, k + 1}],
                          "K_{" + std::to_string(parts[0]) + "," + std::to_string(parts[1]) +
                              "} choosable at " + std::to_string(k) + " but not " +
                              std::to_string(k + 1));
        }
        c.require(decided[{{2, 3}, 3}], "K_{2,3} not choosable at 3");
        c.require(decided[{{2, 2}, 3}], "closure fails: K_{2,2} at 3");
        c.require(decided[{{1, 3}, 3}], "closure fails: K_{1,3} at 3");
        all_ok &= c.finish(10 * 60.0);
    }

    {
        Criterion c{out, 7, "proportional choosability implies equitable colorability"};
        std::vector<std::pair<std::vector<int>, int>> decided_choosable;
        for (int m = 1; m <= 5; m++) decided_choosable.push_back({{1, m}, star_chi_pc(m)});
        decided_choosable.push_back({{2, 2}, 3});
        decided_choosable.push_back({{2, 3}, 3});
        decided_choosable.push_back({{3, 3}, 4});
        for (auto& [parts, k] : decided_choosable) {
            Graph g = Graph::complete_multipartite(parts);
            c.require(equitable_k_colorable_bruteforce(g, k).has_value(),
                      "K_{" + std::to_string(parts[0]) + "," + std::to_string(parts[1]) +
                          "} choosable at " + std::to_string(k) +
                          " but not equitably k-colorable");
        }
        Graph k22 = Graph::complete_multipartite({2, 2});
        std::uint64_t bad = 0;
        enumerate_assignments(k22, 3, [&](const ListAssignment& l) {
            if (find_proportional(k22, l) && !equitable_list_colorable(k22, l)) bad++;
            return true;
        });
        c.require(bad == 0, std::to_string(bad) +
                                " assignments of K_{2,2} proportional but not equitably "
                                "list-colorable");
        all_ok &= c.finish(10 * 60.0);
    }

    {
        Criterion c{out, 8, "oracle equivalence: naive colorability and class counts on K_2 "
                            "and K_{1,2} for k <= 2"};
        for (auto parts : {std::vector<int>{1, 1}, {1, 2}}) {
            Graph g = Graph::complete_multipartite(parts);
            for (int k = 1; k <= 2; k++) {
                std::uint64_t mismatches = 0;
                std::uint64_t classes = enumerate_assignments(g, k, [&](const ListAssignment& l) {
                    if (find_proportional(g, l).has_value() !=
                        naive_proportionally_colorable(g, l))
                        mismatches++;
                    return true;
                });
                c.require(mismatches == 0, "decision mismatch against naive oracle");
                std::uint64_t expected = oracle_class_count(g, k);
                c.require(classes == expected,
                          "class count " + std::to_string(classes) + " != oracle " +
                              std::to_string(expected));
                if (parts == std::vector<int>{1, 1} && k == 1)
                    c.require(classes == 2, "K_2 k=1 expected 2 classes");
                if (parts == std::vector<int>{1, 1} && k == 2)
                    c.require(classes == 3, "K_2 k=2 expected 3 classes");
            }
        }
        all_ok &= c.finish(60.0);
    }

    {
        Criterion c{out, 9, "exploration: decide K_{2,4} at k=3 is reproducible and cached"};
        namespace fs = std::filesystem;
        fs::path dir = opts.scratch_dir.empty() ? fs::temp_directory_path()
                                                : fs::path(opts.scratch_dir);
        fs::path cache_path = dir / "propchoose_acceptance_cache.txt";
        std::error_code ec;
        fs::remove(cache_path, ec);
        Graph g = Graph::complete_multipartite({2, 4});
        auto run = [&]() -> CacheRecord {
            Verdict v = decide_choosable(g, 3, dopts);
            CacheRecord r;
            r.graph = "K2,4";
            r.k = 3;
            r.outcome = v.outcome == Outcome::choosable      ? "choosable"
                        : v.outcome == Outcome::not_choosable ? "not-choosable"
                                                              : "undecided";
            if (v.witness) r.witness_hash = canonical_form(g, *v.witness).hash();
            r.classes_checked = v.classes_checked;
            r.elapsed_ms = v.elapsed.count();
            r.version = kToolVersion;
            r.timestamp = utc_timestamp();
            return r;
        };
        try {
            {
                ResultCache cache(cache_path.string());
                cache.record(run());
            }
            {
                ResultCache cache(cache_path.string());
                auto cached = cache.lookup("K2,4", 3);
                c.require(cached.has_value(), "record missing after reload");
                CacheRecord again = run();
                c.require(!cached || cached->outcome == again.outcome, "outcome not reproducible");
                c.require(!cached || cached->witness_hash == again.witness_hash,
                          "witness hash not reproducible");
                c.require(!cached || cached->classes_checked == again.classes_checked,
                          "classes_checked not reproducible");
                cache.record(again); // consistency check must accept the re-run
            }
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        fs::remove(cache_path, ec);
        all_ok &= c.finish(24 * 60 * 60.0);
    }

    out << (all_ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
    return all_ok;
}

} // namespace propchoose
