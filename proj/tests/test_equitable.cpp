#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "propchoose/equitable.hpp"
#include "propchoose/errors.hpp"
#include "propchoose/prop_solver.hpp"

using namespace propchoose;

namespace {

ListAssignment constant(int n, std::vector<int> list) {
    return ListAssignment::from_lists(std::vector<std::vector<int>>(n, list));
}

void all_partitions(int max_p, std::vector<std::vector<int>>& out) {
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

bool equitable_sizes(const Graph& g, const Coloring& f, int k) {
    std::vector<int> count(k + 1, 0);
    for (int c : f.color) {
        if (c < 1 || c > k) return false;
        count[c]++;
    }
    int lo = g.vertex_count() / k, hi = (g.vertex_count() + k - 1) / k;
    for (int c = 1; c <= k; c++)
        if (count[c] < lo || count[c] > hi) return false;
    for (int u = 0; u < g.vertex_count(); u++)
        for (int v = u + 1; v < g.vertex_count(); v++)
            if (g.adjacent(u, v) && f.color[u] == f.color[v]) return false;
    return true;
}

} // namespace

TEST_CASE("wu formula on landmark instances") {
    CHECK(wu_equitable({3, 3}, 2));
    CHECK(!wu_equitable({3, 3}, 3));
    CHECK(wu_equitable({5, 5}, 11)); // s > p branch
    CHECK_THROWS_AS(wu_equitable({}, 1), std::invalid_argument);
    CHECK_THROWS_AS(wu_equitable({2, 2}, 0), std::invalid_argument);
}

TEST_CASE("brute force equitable coloring") {
    Graph k33 = Graph::complete_multipartite({3, 3});
    auto two = equitable_k_colorable_bruteforce(k33, 2);
    REQUIRE(two.has_value());
    CHECK(equitable_sizes(k33, *two, 2));
    CHECK(!equitable_k_colorable_bruteforce(k33, 3));

    Graph k1 = Graph::complete_multipartite({1});
    auto one = equitable_k_colorable_bruteforce(k1, 1);
    REQUIRE(one.has_value());
    CHECK(one->color == std::vector<int>{1});

    CHECK_THROWS_AS(equitable_k_colorable_bruteforce(Graph::complete_multipartite({5, 6}), 2),
                    ResourceLimitError);
}

TEST_CASE("equitable list coloring") {
    Graph k12 = Graph::complete_multipartite({1, 2});
    auto f = equitable_list_colorable(k12, constant(3, {1, 2}));
    REQUIRE(f.has_value());
    // cap ceil(3/2) = 2, properness, list membership
    int ones = 0, twos = 0;
    for (int c : f->color) (c == 1 ? ones : twos)++;
    CHECK(ones <= 2);
    CHECK(twos <= 2);
    CHECK(f->color[0] != f->color[1]);
    CHECK(f->color[0] != f->color[2]);

    Graph k2 = Graph::complete_multipartite({1, 1});
    CHECK(!equitable_list_colorable(k2, constant(2, {1})));

    Graph k1 = Graph::complete_multipartite({1});
    auto g = equitable_list_colorable(k1, constant(1, {1}));
    REQUIRE(g.has_value());
    CHECK(g->color == std::vector<int>{1});
}

TEST_CASE("wu agrees with brute force up to p = 6") {
    std::vector<std::vector<int>> parts_lists;
    all_partitions(6, parts_lists);
    for (const auto& parts : parts_lists) {
        int p = 0;
        for (int ni : parts) p += ni;
        Graph g = Graph::complete_multipartite(parts);
        for (int s = 1; s <= p + 1; s++) {
            INFO("p = " << p << ", s = " << s);
            CHECK(wu_equitable(parts, s) ==
                  equitable_k_colorable_bruteforce(g, s).has_value());
        }
    }
}

TEST_CASE("equitable colorings exist above max degree") {
    std::vector<std::vector<int>> parts_lists;
    all_partitions(8, parts_lists);
    for (const auto& parts : parts_lists) {
        if (parts.size() < 2) continue;
        Graph g = Graph::complete_multipartite(parts);
        for (int k = g.max_degree() + 1; k <= 8; k++)
            CHECK(equitable_k_colorable_bruteforce(g, k).has_value());
    }
}
