#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "propchoose/bounds.hpp"
#include "propchoose/enumerate.hpp"
#include "propchoose/errors.hpp"
#include "propchoose/list_assignment.hpp"

using namespace propchoose;

namespace {

ListAssignment constant(int n, std::vector<int> list) {
    return ListAssignment::from_lists(std::vector<std::vector<int>>(n, list));
}

// All k-subsets of {1..palette}, lexicographic.
std::vector<std::vector<int>> k_subsets(int palette, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int c = next; c <= palette; c++) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Literal class-count oracle: all assignments over a palette of size n*k,
// quotiented by canonical_form (color bijections and automorphisms).
std::size_t oracle_classes(const Graph& g, int k) {
    int n = g.vertex_count();
    auto lists = k_subsets(n * k, k);
    std::set<SupportMultiset> classes;
    std::vector<std::size_t> pick(n, 0);
    for (;;) {
        std::vector<std::vector<int>> assignment;
        for (int v = 0; v < n; v++) assignment.push_back(lists[pick[v]]);
        classes.insert(canonical_form(g, ListAssignment::from_lists(std::move(assignment))));
        int v = n - 1;
        while (v >= 0 && pick[v] + 1 == lists.size()) pick[v--] = 0;
        if (v < 0) break;
        pick[v]++;
    }
    return classes.size();
}

} // namespace

TEST_CASE("multiplicity and class size bounds") {
    ListAssignment l = constant(3, {1, 2}); // K_{1,2}
    CHECK(multiplicity(l, 1) == 3);
    CHECK(multiplicity(l, 9) == 0);

    ListAssignment w = even_case_witness({2, 2}); // lists {1,2},{1,2},{1,3},{1,3}
    CHECK(multiplicity(w, 1) == 4);
    CHECK(multiplicity(w, 3) == 2);

    ListAssignment five = ListAssignment::from_lists(
        {{1, 2}, {1, 2}, {1, 3}, {1, 3}, {1, 4}});
    CHECK(class_size_bounds(five, 3, 1) == std::pair<int, int>{1, 2}); // eta 5, k 3
    ListAssignment four = constant(4, {1, 2});
    CHECK(class_size_bounds(four, 2, 1) == std::pair<int, int>{2, 2}); // eta 4, k 2
    ListAssignment two = constant(2, {1, 2});
    CHECK(class_size_bounds(two, 3, 1) == std::pair<int, int>{0, 1}); // eta 2, k 3
    CHECK_THROWS_AS(class_size_bounds(two, 3, 9), std::invalid_argument);
}

TEST_CASE("high multiplicity colors") {
    CHECK(high_multiplicity_colors(constant(5, {1, 2, 3}), 3) == std::vector<int>{1, 2, 3});
    CHECK(high_multiplicity_colors(even_case_witness({2, 2}), 2) == std::vector<int>{1});
    CHECK(high_multiplicity_colors(constant(2, {1, 2}), 2).empty());
    ListAssignment ragged = ListAssignment::from_lists({{1, 2}, {1}});
    CHECK_THROWS_AS(high_multiplicity_colors(ragged, 2), std::invalid_argument);
}

TEST_CASE("canonical form renaming and automorphism invariance") {
    Graph k2 = Graph::complete_multipartite({1, 1});
    CHECK(canonical_form(k2, constant(2, {1, 2})) == canonical_form(k2, constant(2, {7, 9})));
    CHECK(canonical_form(k2, constant(2, {1})) !=
          canonical_form(k2, ListAssignment::from_lists({{1}, {2}})));

    Graph k22 = Graph::complete_multipartite({2, 2});
    ListAssignment a = ListAssignment::from_lists({{1, 2}, {1, 3}, {1, 4}, {1, 4}});
    ListAssignment b = ListAssignment::from_lists({{1, 3}, {1, 2}, {1, 4}, {1, 4}});
    CHECK(canonical_form(k22, a) == canonical_form(k22, b));
}

TEST_CASE("canonical form is idempotent") {
    Graph g = Graph::complete_multipartite({2, 3});
    for (int seed = 0; seed < 50; seed++) {
        ListAssignment l = sample_assignment(g, 3, 6, seed);
        SupportMultiset canon = canonical_form(g, l);
        ListAssignment rep = materialize(canon, g.vertex_count());
        CHECK(canonical_form(g, rep) == canon);
    }
}

TEST_CASE("total multiplicity equals k times vertex count") {
    Graph g = Graph::complete_multipartite({2, 3});
    for (int seed = 0; seed < 50; seed++) {
        ListAssignment l = sample_assignment(g, 3, 7, seed);
        int total = 0;
        for (int c : l.palette()) total += multiplicity(l, c);
        CHECK(total == 3 * g.vertex_count());
    }
}

TEST_CASE("canonical form survives random recolorings") {
    Graph g = Graph::complete_multipartite({2, 2});
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 1000; trial++) {
        ListAssignment l = sample_assignment(g, 2, 5, trial);
        std::vector<int> image{1, 2, 3, 4, 5, 6, 7, 8};
        std::shuffle(image.begin(), image.end(), rng);
        std::vector<std::vector<int>> renamed = l.lists;
        for (auto& list : renamed)
            for (int& c : list) c = image[c - 1];
        CHECK(canonical_form(g, ListAssignment::from_lists(std::move(renamed))) ==
              canonical_form(g, l));
    }
}

TEST_CASE("enumeration counts against the literal oracle") {
    Graph k2 = Graph::complete_multipartite({1, 1});
    Graph k12 = Graph::complete_multipartite({1, 2});
    auto count = [](const Graph& g, int k) {
        return enumerate_assignments(g, k, [](const ListAssignment&) { return true; });
    };
    CHECK(count(k2, 1) == 2);
    CHECK(count(k2, 2) == 3);
    CHECK(count(Graph::complete_multipartite({1}), 3) == 1);
    for (int k = 1; k <= 2; k++) {
        CHECK(count(k2, k) == oracle_classes(k2, k));
        CHECK(count(k12, k) == oracle_classes(k12, k));
    }
}

TEST_CASE("enumeration emits valid distinct canonical representatives") {
    Graph g = Graph::complete_multipartite({2, 2});
    std::set<SupportMultiset> seen;
    enumerate_assignments(g, 2, [&](const ListAssignment& l) {
        CHECK(l.uniform_size() == 2);
        SupportMultiset canon = canonical_form(g, l);
        CHECK(canon == support_multiset(l));
        CHECK(seen.insert(canon).second);
        return true;
    });
    CHECK(seen.size() > 0);
}

TEST_CASE("enumeration guard") {
    Graph big = Graph::complete_multipartite({5, 6});
    CHECK_THROWS_AS(
        enumerate_assignments(big, 2, [](const ListAssignment&) { return false; }),
        ResourceLimitError);
    Graph small = Graph::complete_multipartite({1, 1});
    CHECK_THROWS_AS(
        enumerate_assignments(small, 7, [](const ListAssignment&) { return false; }),
        ResourceLimitError);
    EnumLimits lifted;
    lifted.override_guard = true;
    std::uint64_t n = 0;
    enumerate_assignments(small, 7, [&](const ListAssignment&) {
        n++;
        return n < 5;
    }, lifted);
    CHECK(n == 5);
}

TEST_CASE("sampling is reproducible and respects the palette") {
    Graph g = Graph::complete_multipartite({2, 3});
    ListAssignment only = sample_assignment(g, 3, 3, 42);
    for (const auto& list : only.lists) CHECK(list == std::vector<int>{1, 2, 3});

    Graph k2 = Graph::complete_multipartite({1, 1});
    CHECK(sample_assignment(k2, 1, 2, 9).lists == sample_assignment(k2, 1, 2, 9).lists);
    CHECK_THROWS_AS(sample_assignment(g, 3, 2, 1), std::invalid_argument);

    // empirical mean multiplicity approximately |V| * k / palette
    double total = 0;
    int colors = 0;
    for (int seed = 0; seed < 1000; seed++) {
        ListAssignment l = sample_assignment(g, 3, 6, seed);
        for (int c = 1; c <= 6; c++) total += multiplicity(l, c);
        colors += 6;
    }
    double mean = total / colors;
    CHECK(mean > 2.3);
    CHECK(mean < 2.7);
}
