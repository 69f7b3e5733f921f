#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "propchoose/constructive.hpp"
#include "propchoose/enumerate.hpp"
#include "propchoose/errors.hpp"
#include "propchoose/prop_solver.hpp"

using namespace propchoose;

namespace {

ListAssignment constant(int n, std::vector<int> list) {
    return ListAssignment::from_lists(std::vector<std::vector<int>>(n, list));
}

bool all_distinct(const Coloring& f) {
    std::set<int> seen(f.color.begin(), f.color.end());
    return seen.size() == f.color.size();
}

} // namespace

TEST_CASE("maximum bipartite matching") {
    // cycle lists {1,2},{2,3},{3,4},{4,1} as vertex-color edges
    std::vector<std::pair<int, int>> edges{{0, 0}, {0, 1}, {1, 1}, {1, 2},
                                           {2, 2}, {2, 3}, {3, 3}, {3, 0}};
    Matching m = max_bipartite_matching(4, 4, edges);
    CHECK(m.saturates_left(4));
    std::set<int> rights;
    for (auto [l, r] : m.pairs) rights.insert(r);
    CHECK(rights.size() == 4);

    // Hall violation: three vertices sharing two colors
    Matching bad = max_bipartite_matching(3, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
    CHECK(!bad.saturates_left(3));
    CHECK(bad.size() == 2);

    CHECK_THROWS_AS(max_bipartite_matching(2, 2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("hall proper coloring") {
    Graph k2 = Graph::complete_multipartite({1, 1});
    Coloring f = hall_proper_coloring(k2, ListAssignment::from_lists({{1, 2}, {3, 4}}));
    CHECK(all_distinct(f));
    CHECK((f.color[0] == 1 || f.color[0] == 2));
    CHECK((f.color[1] == 3 || f.color[1] == 4));

    Graph cycle = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    ListAssignment l = ListAssignment::from_lists({{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    Coloring g = hall_proper_coloring(cycle, l);
    CHECK(all_distinct(g));
    for (int v = 0; v < 4; v++)
        CHECK(std::find(l.lists[v].begin(), l.lists[v].end(), g.color[v]) != l.lists[v].end());

    // eta(1) = 3 > k = 2
    Graph k12 = Graph::complete_multipartite({1, 2});
    CHECK_THROWS_AS(hall_proper_coloring(k12, constant(3, {1, 2})), std::invalid_argument);
}

TEST_CASE("no-excess repair") {
    Graph k2 = Graph::complete_multipartite({1, 1});
    ListAssignment l2 = constant(2, {1, 2});
    Coloring id = repair_no_excess(k2, l2, Coloring{{1, 2}});
    CHECK(id.color == std::vector<int>{1, 2});

    // every proper no-excess coloring of K_{1,2} with constant {1,2} is
    // already proportional, so repair is the identity on all of them
    Graph k12 = Graph::complete_multipartite({1, 2});
    ListAssignment l12 = constant(3, {1, 2});
    int checked = 0;
    for (int a = 1; a <= 2; a++)
        for (int b = 1; b <= 2; b++)
            for (int c = 1; c <= 2; c++) {
                Coloring f{{a, b, c}};
                if (a == b || a == c) continue;      // improper
                std::vector<int> count(3, 0);
                count[a]++, count[b]++, count[c]++;
                if (count[1] > 2 || count[2] > 2) continue; // excessive
                CHECK(verify_proportional(k12, l12, f).empty());
                CHECK(repair_no_excess(k12, l12, f).color == f.color);
                checked++;
            }
    CHECK(checked == 2);

    // repair fixes an underused color: K_{2,2} constant {1,2,3}, k = 3,
    // bounds are [1,2] per color but f never uses color 3
    Graph k22 = Graph::complete_multipartite({2, 2});
    ListAssignment l22 = constant(4, {1, 2, 3});
    Coloring skewed{{1, 1, 2, 2}};
    CHECK(!verify_proportional(k22, l22, skewed).empty());
    Coloring fixed = repair_no_excess(k22, l22, skewed);
    CHECK(verify_proportional(k22, l22, fixed).empty());

    CHECK_THROWS_AS(repair_no_excess(k12, l12, Coloring{{1, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(repair_no_excess(k2, l2, Coloring{{3, 1}}), std::invalid_argument);
}

TEST_CASE("many-high colorer on constant assignments") {
    Graph k23 = Graph::complete_multipartite({2, 3});
    ListAssignment l23 = constant(5, {1, 2, 3});
    KnmTrace trace23;
    Coloring f23 = color_knm_many_high(k23, l23, 1, &trace23);
    CHECK(verify_proportional(k23, l23, f23).empty());
    std::vector<int> counts(4, 0);
    for (int c : f23.color) counts[c]++;
    std::sort(counts.begin() + 1, counts.end());
    CHECK(std::vector<int>(counts.begin() + 1, counts.end()) == std::vector<int>{1, 2, 2});

    Graph k33 = Graph::complete_multipartite({3, 3});
    ListAssignment l33 = constant(6, {1, 2, 3, 4});
    KnmTrace trace33;
    Coloring f33 = color_knm_many_high(k33, l33, 1, &trace33);
    CHECK(verify_proportional(k33, l33, f33).empty());
    REQUIRE(!trace33.steps.empty());
    CHECK(trace33.steps.back() == KnmStep::many_high_even_constant);

    // alpha = 0 violates the precondition
    ListAssignment low = ListAssignment::from_lists(
        {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {4, 5, 6}, {4, 5, 6}});
    CHECK_THROWS_AS(color_knm_many_high(k23, low, 1), std::invalid_argument);
}

TEST_CASE("color_knm preconditions") {
    Graph k22 = Graph::complete_multipartite({2, 2});
    CHECK_THROWS_AS(color_knm(k22, constant(4, {1, 2}), 1), std::invalid_argument);
    Graph k23 = Graph::complete_multipartite({2, 3});
    CHECK_THROWS_AS(color_knm(k23, constant(5, {1, 2}), 1), std::invalid_argument); // wrong k
}

TEST_CASE("color_knm exhaustively on K_{2,3} with d = 1") {
    Graph g = Graph::complete_multipartite({2, 3});
    std::uint64_t classes = enumerate_assignments(g, 3, [&](const ListAssignment& l) {
        Coloring f = color_knm(g, l, 1);
        CHECK(verify_proportional(g, l, f).empty());
        CHECK(find_proportional(g, l).has_value());
        return true;
    });
    CHECK(classes > 0);
}

TEST_CASE("color_knm on sampled assignments, recursion included") {
    KnmTrace trace;
    for (auto [n, m, d] : {std::tuple<int, int, int>{3, 3, 1}, {2, 6, 2}, {3, 6, 1}}) {
        Graph g = Graph::complete_multipartite({n, m});
        int k = n + m - d - 1;
        for (int seed = 0; seed < 200; seed++) {
            ListAssignment l = sample_assignment(g, k, k + 3, seed);
            Coloring f = color_knm(g, l, d, &trace);
            CHECK(verify_proportional(g, l, f).empty());
        }
    }
    // the ladder below the recursion must actually be exercised
    CHECK(trace.recursion_depth > 0);
    bool saw_ladder = false;
    for (KnmStep step : trace.steps)
        if (step == KnmStep::recurse_drop_z || step == KnmStep::recurse_recolor_z ||
            step == KnmStep::recurse_swap_in_b || step == KnmStep::recurse_free_color ||
            step == KnmStep::recurse_three_way)
            saw_ladder = true;
    CHECK(saw_ladder);
}

TEST_CASE("step names are stable") {
    CHECK(std::string(to_string(KnmStep::no_high)) == "no-high");
    CHECK(std::string(to_string(KnmStep::recurse_three_way)) == "recurse/three-way");
}
