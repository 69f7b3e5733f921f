#include <doctest.h>

#include <map>
#include <vector>

#include "propchoose/bounds.hpp"
#include "propchoose/enumerate.hpp"
#include "propchoose/list_assignment.hpp"
#include "propchoose/prop_solver.hpp"

using namespace propchoose;

namespace {

ListAssignment constant(int n, std::vector<int> list) {
    return ListAssignment::from_lists(std::vector<std::vector<int>>(n, list));
}

bool naive_colorable(const Graph& g, const ListAssignment& l) {
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

std::map<int, int> sizes(const Coloring& f) {
    std::map<int, int> out;
    for (int c : f.color) out[c]++;
    return out;
}

} // namespace

TEST_CASE("verify_proportional catalogues violations") {
    Graph k12 = Graph::complete_multipartite({1, 2}); // vertex 0 = center
    ListAssignment l = constant(3, {1, 2});
    CHECK(verify_proportional(k12, l, Coloring{{1, 2, 2}}).empty());

    auto violations = verify_proportional(k12, l, Coloring{{1, 1, 1}});
    CHECK(!violations.empty());
    bool improper = false, class_size = false;
    for (const auto& v : violations) {
        if (v.kind == Violation::Kind::improper_edge) improper = true;
        if (v.kind == Violation::Kind::class_size && v.color == 2 && v.class_size == 0)
            class_size = true;
    }
    CHECK(improper);
    CHECK(class_size);

    Graph k2 = Graph::complete_multipartite({1, 1});
    CHECK(verify_proportional(k2, ListAssignment::from_lists({{1}, {2}}), Coloring{{1, 2}})
              .empty());
    auto off_list = verify_proportional(k2, ListAssignment::from_lists({{1}, {2}}),
                                        Coloring{{2, 2}});
    bool not_in_list = false;
    for (const auto& v : off_list)
        if (v.kind == Violation::Kind::color_not_in_list) not_in_list = true;
    CHECK(not_in_list);
}

TEST_CASE("find_proportional on landmark instances") {
    Graph k22 = Graph::complete_multipartite({2, 2});
    CHECK(!find_proportional(k22, even_case_witness({2, 2})));

    Graph k23 = Graph::complete_multipartite({2, 3});
    auto f = find_proportional(k23, constant(5, {1, 2, 3}));
    REQUIRE(f.has_value());
    CHECK(verify_proportional(k23, constant(5, {1, 2, 3}), *f).empty());
    auto by_color = sizes(*f);
    std::vector<int> class_sizes;
    for (auto [c, n] : by_color) class_sizes.push_back(n);
    std::sort(class_sizes.begin(), class_sizes.end());
    CHECK(class_sizes == std::vector<int>{1, 2, 2});

    Graph k1 = Graph::complete_multipartite({1});
    auto trivial = find_proportional(k1, constant(1, {1}));
    REQUIRE(trivial.has_value());
    CHECK(trivial->color == std::vector<int>{1});
}

TEST_CASE("found colorings always verify") {
    Graph g = Graph::complete_multipartite({2, 2});
    enumerate_assignments(g, 3, [&](const ListAssignment& l) {
        auto f = find_proportional(g, l);
        if (f) CHECK(verify_proportional(g, l, *f).empty());
        return true;
    });
}

TEST_CASE("naive oracle agreement on tiny instances") {
    for (auto parts : {std::vector<int>{1, 1}, {1, 2}}) {
        Graph g = Graph::complete_multipartite(parts);
        for (int k = 1; k <= 2; k++) {
            enumerate_assignments(g, k, [&](const ListAssignment& l) {
                CHECK(find_proportional(g, l).has_value() == naive_colorable(g, l));
                return true;
            });
        }
    }
}

TEST_CASE("decide_choosable verdicts and witnesses") {
    Graph k12 = Graph::complete_multipartite({1, 2});
    CHECK(decide_choosable(k12, 2).outcome == Outcome::choosable);

    Graph k22 = Graph::complete_multipartite({2, 2});
    Verdict no = decide_choosable(k22, 2);
    CHECK(no.outcome == Outcome::not_choosable);
    REQUIRE(no.witness.has_value());
    CHECK(!find_proportional(k22, *no.witness));
    CHECK(canonical_form(k22, *no.witness) == canonical_form(k22, even_case_witness({2, 2})));

    CHECK(decide_choosable(k22, 3).outcome == Outcome::choosable);

    // guard: oversized instance is undecided, not wrong
    Graph big = Graph::complete_multipartite({9, 9});
    CHECK(decide_choosable(big, 2).outcome == Outcome::undecided);
}

TEST_CASE("worker count changes nothing observable") {
    Graph g = Graph::complete_multipartite({2, 3});
    for (int k = 2; k <= 3; k++) {
        Verdict seq = decide_choosable(g, k);
        DecideOptions par;
        par.jobs = 4;
        Verdict mt = decide_choosable(g, k, par);
        CHECK(seq.outcome == mt.outcome);
        if (seq.outcome == Outcome::choosable) CHECK(seq.classes_checked == mt.classes_checked);
        CHECK(seq.witness.has_value() == mt.witness.has_value());
        if (seq.witness)
            CHECK(canonical_form(g, *seq.witness) == canonical_form(g, *mt.witness));
    }
}

TEST_CASE("chi_pc landmark values and intervals") {
    CHECK(chi_pc(Graph::complete_multipartite({1, 3}), 8).value == 3);
    CHECK(chi_pc(Graph::complete_multipartite({2, 2}), 8).value == 3);
    CHECK(chi_pc(Graph::complete_multipartite({2, 3}), 8).value == 3);

    ChiPcResult capped = chi_pc(Graph::complete_multipartite({2, 2}), 2);
    CHECK(!capped.value.has_value());
    CHECK(capped.lower == 3);
}
