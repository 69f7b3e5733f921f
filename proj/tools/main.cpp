#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "propchoose/acceptance.hpp"
#include "propchoose/bounds.hpp"
#include "propchoose/constructive.hpp"
#include "propchoose/enumerate.hpp"
#include "propchoose/equitable.hpp"
#include "propchoose/errors.hpp"
#include "propchoose/io.hpp"
#include "propchoose/list_assignment.hpp"
#include "propchoose/prop_solver.hpp"

using namespace propchoose;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

struct CommonFlags {
    int jobs = 1;
    std::string cache_path;
    int max_vertices = 0; // 0 = keep the default guard
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--jobs", flags.jobs, "worker threads for the decision procedure")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cache", flags.cache_path,
                    "result cache file (default: $PROPCHOOSE_CACHE if set)");
    cmd->add_option("--max-vertices", flags.max_vertices,
                    "override the enumeration guard up to this many vertices")
        ->check(CLI::PositiveNumber);
}

std::optional<ResultCache> open_cache(const CommonFlags& flags) {
    std::string path = flags.cache_path;
    if (path.empty())
        if (const char* env = std::getenv("PROPCHOOSE_CACHE")) path = env;
    if (path.empty()) return std::nullopt;
    return ResultCache(path);
}

DecideOptions decide_options(const CommonFlags& flags, bool report_progress) {
    DecideOptions opts;
    opts.jobs = flags.jobs;
    if (flags.max_vertices > 0) {
        opts.limits.max_vertices = flags.max_vertices;
        opts.limits.override_guard = true;
    }
    if (report_progress)
        opts.progress = [](std::uint64_t checked) {
            std::cerr << "  ... " << checked << " classes checked\n";
        };
    return opts;
}

const char* outcome_name(Outcome o) {
    switch (o) {
    case Outcome::choosable: return "choosable";
    case Outcome::not_choosable: return "not-choosable";
    case Outcome::undecided: return "undecided";
    }
    return "?";
}

CacheRecord make_record(const std::string& spec, const Graph& g, const Verdict& v) {
    CacheRecord r;
    r.graph = spec;
    r.k = v.k;
    r.outcome = outcome_name(v.outcome);
    if (v.witness) r.witness_hash = canonical_form(g, *v.witness).hash();
    r.classes_checked = v.classes_checked;
    r.elapsed_ms = v.elapsed.count();
    r.version = kToolVersion;
    r.timestamp = utc_timestamp();
    return r;
}

// Decide one k, reusing a cached decision when available.
Outcome decide_with_cache(const std::string& spec, const Graph& g, int k,
                          const CommonFlags& flags, std::optional<ResultCache>& cache,
                          bool verbose) {
    if (cache) {
        auto hit = cache->lookup(spec, k);
        if (hit) {
            if (verbose)
                std::cout << "k=" << k << ": " << hit->outcome << " (cached, "
                          << hit->classes_checked << " classes)\n";
            return hit->outcome == "choosable" ? Outcome::choosable : Outcome::not_choosable;
        }
    }
    Verdict v = decide_choosable(g, k, decide_options(flags, verbose));
    if (verbose)
        std::cout << "k=" << k << ": " << outcome_name(v.outcome) << " (" << v.classes_checked
                  << " classes, " << v.elapsed.count() << " ms)\n";
    if (cache) cache->record(make_record(spec, g, v));
    return v.outcome;
}

int cmd_chi_pc(const std::string& spec, int kmax, const CommonFlags& flags) {
    Graph g = parse_graph_spec(spec);
    auto cache = open_cache(flags);

    int lower = chi_pc_lower_bound(g);
    std::optional<int> upper;
    bool forced = false;
    if (g.has_parts() && g.parts().size() == 2) {
        BoundReport br = bipartite_bounds(g.parts()[0], g.parts()[1]);
        upper = br.upper;
        forced = br.forced();
        std::cout << "bounds: lower " << br.lower << " (" << to_string(br.lower_source)
                  << "), upper " << (br.upper ? std::to_string(*br.upper) : std::string("?"))
                  << "\n";
    } else if (g.has_parts() && g.parts().size() > 2) {
        auto [b, src] = lower_bound_multipartite(g.parts());
        std::cout << "bounds: lower " << b << " (" << to_string(src) << ")\n";
    }

    for (int k = std::max(1, lower); k <= kmax; k++) {
        Outcome o = decide_with_cache(spec, g, k, flags, cache, true);
        if (o == Outcome::choosable) {
            std::cout << "chi_pc = " << k;
            if (forced && upper && k == *upper) std::cout << " (forced: lower=upper)";
            std::cout << "\n";
            return kExitOk;
        }
        if (o == Outcome::undecided) {
            std::cout << "chi_pc in [" << k << ", "
                      << (upper ? std::to_string(*upper) : std::string("?"))
                      << "]: enumeration guard hit at k=" << k
                      << " (rerun with --max-vertices to override)\n";
            return kExitResourceLimit;
        }
        lower = k + 1;
    }
    std::cout << "chi_pc in [" << lower << ", "
              << (upper ? std::to_string(*upper) : std::string("?")) << "]: not decided within "
              << "--kmax " << kmax << "\n";
    return kExitResourceLimit;
}

int cmd_decide(const std::string& spec, int k, const CommonFlags& flags) {
    Graph g = parse_graph_spec(spec);
    auto cache = open_cache(flags);
    if (cache) {
        auto hit = cache->lookup(spec, k);
        if (hit) {
            std::cout << "outcome: " << hit->outcome << " (cached)\n"
                      << "classes: " << hit->classes_checked << "\n";
            if (hit->witness_hash) {
                char buf[24];
                std::snprintf(buf, sizeof buf, "%016llx",
                              static_cast<unsigned long long>(*hit->witness_hash));
                std::cout << "witness-hash: " << buf << "\n";
            }
            return kExitOk;
        }
    }
    Verdict v = decide_choosable(g, k, decide_options(flags, true));
    std::cout << "outcome: " << outcome_name(v.outcome) << "\n"
              << "classes: " << v.classes_checked << "\n"
              << "elapsed-ms: " << v.elapsed.count() << "\n";
    if (v.witness) {
        char buf[24];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(canonical_form(g, *v.witness).hash()));
        std::cout << "witness-hash: " << buf << "\n" << "witness:\n";
        write_assignment(std::cout, *v.witness);
    }
    if (cache) cache->record(make_record(spec, g, v));
    return v.outcome == Outcome::undecided ? kExitResourceLimit : kExitOk;
}

int cmd_table(int nmin, int nmax, int mmin, int mmax, const std::string& format,
              const CommonFlags& flags) {
    auto cache = open_cache(flags);
    bool tsv = format == "tsv";
    auto emit = [&](std::initializer_list<std::string> cells) {
        bool first = true;
        for (const auto& cell : cells) {
            if (!first) std::cout << (tsv ? "\t" : "  ");
            if (!tsv) {
                std::cout << cell;
                for (std::size_t pad = cell.size(); pad < 10; pad++) std::cout << ' ';
            } else {
                std::cout << cell;
            }
            first = false;
        }
        std::cout << "\n";
    };
    emit({"n", "m", "lower", "upper", "chi_pc", "conjecture", "ratio"});
    for (int n = nmin; n <= nmax; n++) {
        for (int m = std::max(n, mmin); m <= mmax; m++) {
            BoundReport br = bipartite_bounds(n, m);
            std::optional<int> value;
            if (br.forced()) value = br.lower;
            if (!value && cache && br.upper) {
                // Cached decisions can pin the value: the smallest choosable k
                // with everything below it refuted.
                std::string spec = "K" + std::to_string(n) + "," + std::to_string(m);
                for (int k = br.lower; k <= *br.upper; k++) {
                    auto hit = cache->lookup(spec, k);
                    if (!hit) break;
                    if (hit->outcome == "choosable") {
                        value = k;
                        break;
                    }
                    if (hit->outcome != "not-choosable") break;
                }
            }
            int conj = std::max(n + 1, (n + 1) / 2 + (m + 1) / 2);
            std::string status = !value ? "open" : (*value == conj ? "holds" : "fails");
            char ratio[16] = "-";
            if (value) std::snprintf(ratio, sizeof ratio, "%.3f", double(*value) / m);
            emit({std::to_string(n), std::to_string(m), std::to_string(br.lower),
                  br.upper ? std::to_string(*br.upper) : "?",
                  value ? std::to_string(*value) : "open", status, ratio});
        }
    }
    return kExitOk;
}

int cmd_cross_check(int max_p) {
    std::vector<std::vector<int>> parts_lists;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int min_part) -> void {
        if (!cur.empty()) parts_lists.push_back(cur);
        for (int next = min_part; next <= remaining; next++) {
            cur.push_back(next);
            self(self, remaining - next, next);
            cur.pop_back();
        }
    };
    rec(rec, max_p, 1);

    int instances = 0, disagreements = 0;
    for (const auto& parts : parts_lists) {
        int p = 0;
        for (int ni : parts) p += ni;
        Graph g = Graph::complete_multipartite(parts);
        for (int s = 1; s <= p + 1; s++) {
            instances++;
            bool formula = wu_equitable(parts, s);
            bool brute = equitable_k_colorable_bruteforce(g, s).has_value();
            if (formula == brute) continue;
            disagreements++;
            std::cout << "DISAGREEMENT parts=[";
            for (std::size_t i = 0; i < parts.size(); i++)
                std::cout << (i ? "," : "") << parts[i];
            std::cout << "] s=" << s << " formula=" << formula << " brute=" << brute << "\n";
        }
    }
    std::cout << disagreements << " disagreements / " << instances << " instances\n";
    return disagreements == 0 ? kExitOk : kExitVerificationFailure;
}

int cmd_construct(int n, int m, int d, int samples, std::uint64_t seed, int palette, int emit,
                  const std::string& dump_path) {
    Graph g = Graph::complete_multipartite({n, m});
    int k = n + m - d - 1;
    if (palette == 0) palette = k + 3;
    KnmTrace trace;
    int verified = 0;
    for (int t = 0; t < samples; t++) {
        ListAssignment l = sample_assignment(g, k, palette, seed + t);
        Coloring f;
        std::string failure;
        try {
            f = color_knm(g, l, d, &trace);
            auto violations = verify_proportional(g, l, f);
            if (!violations.empty()) failure = violations.front().describe();
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception& e) {
            failure = e.what();
        }
        if (!failure.empty()) {
            std::ofstream dump(dump_path);
            write_assignment(dump, l);
            std::cout << "FAIL at sample " << t << " (seed " << seed + t << "): " << failure
                      << "\nassignment dumped to " << dump_path << "\n";
            return kExitVerificationFailure;
        }
        verified++;
        if (t < emit) {
            std::cout << "# sample " << t << " (seed " << seed + t << ")\n";
            write_coloring(std::cout, f);
        }
    }
    std::cout << verified << "/" << samples << " verified\n";
    std::map<std::string, int> histogram;
    for (KnmStep step : trace.steps) histogram[to_string(step)]++;
    std::cout << "subcases:\n";
    for (const auto& [name, count] : histogram)
        std::cout << "  " << name << ": " << count << "\n";
    std::cout << "recursions: " << trace.recursion_depth << "\n";
    return kExitOk;
}

int cmd_witness(const std::string& parts_arg, std::string out_path) {
    std::string digits = parts_arg;
    if (!digits.empty() && digits[0] == 'K') digits = digits.substr(1);
    std::vector<int> parts;
    std::stringstream ss(digits);
    std::string field;
    while (std::getline(ss, field, ',')) parts.push_back(std::stoi(field));
    if (parts.empty()) throw std::invalid_argument("witness: no part sizes given");

    LowerBoundReport report = verify_lower_bound(parts);
    std::cout << report.summary() << "\n";
    if (report.even_case_applies) {
        if (out_path.empty()) {
            out_path = "witness-K";
            for (std::size_t i = 0; i < parts.size(); i++)
                out_path += (i ? "," : "") + std::to_string(parts[i]);
            out_path += ".txt";
        }
        std::ofstream out(out_path);
        write_assignment(out, even_case_witness(parts));
        std::cout << "witness assignment written to " << out_path << "\n";
    } else {
        std::cout << "even-case witness inapplicable; bound certified via the odd reduction\n";
    }
    std::cout << "certified lower bound: " << report.bound << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations around proportional choosability of complete "
                 "multipartite graphs"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    std::string spec, parts_arg, format = "text", dump_path = "failing-assignment.txt";
    std::string witness_out;
    int k = 0, kmax = 12, max_p = 8;
    int nmin = 1, nmax = 4, mmin = 1, mmax = 6;
    int cn = 0, cm = 0, cd = 0, samples = 1000, palette = 0, emit = 1;
    std::uint64_t seed = 1;
    CommonFlags chi_flags, decide_flags, table_flags, accept_flags;

    auto* chi = app.add_subcommand("chi-pc", "compute chi_pc or an interval");
    chi->add_option("spec", spec, "graph spec (K<n1>,<n2>,... or edge-list file)")->required();
    chi->add_option("--kmax", kmax, "largest k to try")->check(CLI::PositiveNumber);
    add_common(chi, chi_flags);

    auto* decide = app.add_subcommand("decide", "decide proportional k-choosability");
    decide->add_option("spec", spec, "graph spec")->required();
    decide->add_option("k", k, "list size k")->required()->check(CLI::PositiveNumber);
    add_common(decide, decide_flags);

    auto* table = app.add_subcommand("table", "bounds/values table for K_{n,m}");
    table->add_option("--nmin", nmin)->check(CLI::PositiveNumber);
    table->add_option("--nmax", nmax)->check(CLI::PositiveNumber);
    table->add_option("--mmin", mmin)->check(CLI::PositiveNumber);
    table->add_option("--mmax", mmax)->check(CLI::PositiveNumber);
    table->add_option("--format", format, "text or tsv")
        ->check(CLI::IsMember({"text", "tsv"}));
    add_common(table, table_flags);

    auto* cross = app.add_subcommand("cross-check", "Wu formula vs brute force");
    cross->add_option("--max-p", max_p, "largest total vertex count")
        ->check(CLI::Range(1, 10));

    auto* construct = app.add_subcommand("construct", "fuzz the constructive colorer");
    construct->add_option("n", cn)->required()->check(CLI::PositiveNumber);
    construct->add_option("m", cm)->required()->check(CLI::PositiveNumber);
    construct->add_option("d", cd)->required()->check(CLI::PositiveNumber);
    construct->add_option("--samples", samples)->check(CLI::PositiveNumber);
    construct->add_option("--seed", seed);
    construct->add_option("--palette", palette, "palette size (default k+3)");
    construct->add_option("--emit", emit, "print the first N colorings");
    construct->add_option("--dump", dump_path, "file for a failing assignment");

    auto* witness = app.add_subcommand("witness", "certify a lower bound with artifacts");
    witness->add_option("parts", parts_arg, "part sizes, e.g. 2,2,2")->required();
    witness->add_option("--out", witness_out, "witness assignment output file");

    auto* verify = app.add_subcommand("verify-bounds", "run the full acceptance suite");
    add_common(verify, accept_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (chi->parsed()) return cmd_chi_pc(spec, kmax, chi_flags);
        if (decide->parsed()) return cmd_decide(spec, k, decide_flags);
        if (table->parsed()) return cmd_table(nmin, nmax, mmin, mmax, format, table_flags);
        if (cross->parsed()) return cmd_cross_check(max_p);
        if (construct->parsed())
            return cmd_construct(cn, cm, cd, samples, seed, palette, emit, dump_path);
        if (witness->parsed()) return cmd_witness(parts_arg, witness_out);
        if (verify->parsed()) {
            AcceptanceOptions opts;
            opts.jobs = accept_flags.jobs;
            return run_acceptance(std::cout, opts) ? kExitOk : kExitVerificationFailure;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
