#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "propchoose/bounds.hpp"
#include "propchoose/list_assignment.hpp"
#include "propchoose/prop_solver.hpp"

using namespace propchoose;

TEST_CASE("closed-form bound values") {
    CHECK(star_chi_pc(1) == 2);
    CHECK(star_chi_pc(2) == 2);
    CHECK(star_chi_pc(3) == 3);
    CHECK(star_chi_pc(5) == 4);
    CHECK_THROWS_AS(star_chi_pc(0), std::invalid_argument);

    CHECK(lower_bound_knm(2, 2) == 3);
    CHECK(lower_bound_knm(2, 5) == 4);
    CHECK(lower_bound_knm(4, 4) == 5);
    CHECK(upper_bound_knm(2, 2) == 3);
    CHECK(upper_bound_knm(2, 3) == 3);
    CHECK(upper_bound_knm(3, 9) == 8);
    CHECK_THROWS_AS(lower_bound_knm(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(upper_bound_knm(3, 2), std::invalid_argument);

    for (int n = 2; n <= 12; n++)
        for (int m = n; m <= 12; m++) CHECK(lower_bound_knm(n, m) <= upper_bound_knm(n, m));
}

TEST_CASE("multipartite lower bound with source tags") {
    auto [b22, s22] = lower_bound_multipartite({2, 2});
    CHECK(b22 == 3);
    CHECK(s22 == LowerBoundSource::even_case);

    auto [b222, s222] = lower_bound_multipartite({2, 2, 2});
    CHECK(b222 == 4);
    CHECK(s222 == LowerBoundSource::even_case);

    auto [b35, s35] = lower_bound_multipartite({3, 5});
    CHECK(b35 == 5);
    CHECK(s35 == LowerBoundSource::general);

    CHECK_THROWS_AS(lower_bound_multipartite({4}), std::invalid_argument);

    // bipartite agreement with the two-part formula
    for (int n = 2; n <= 8; n++)
        for (int m = n; m <= 8; m++)
            CHECK(lower_bound_multipartite({n, m}).first == lower_bound_knm(n, m));
}

TEST_CASE("odd reduction") {
    CHECK(odd_reduction({2, 3}) == std::vector<int>{1, 3});
    CHECK(odd_reduction({4, 4}) == std::vector<int>{3, 3});
    CHECK(odd_reduction({1, 1}) == std::vector<int>{1, 1});
    for (auto parts : {std::vector<int>{2, 3}, {4, 4}, {2, 2, 5}, {1, 6, 7}}) {
        int s_before = 0, s_after = 0;
        for (int ni : parts) s_before += (ni + 1) / 2;
        for (int ni : odd_reduction(parts)) s_after += (ni + 1) / 2;
        CHECK(s_before == s_after);
    }
}

TEST_CASE("even-case witness construction") {
    ListAssignment w22 = even_case_witness({2, 2});
    CHECK(w22.lists == std::vector<std::vector<int>>{{1, 2}, {1, 2}, {1, 3}, {1, 3}});

    ListAssignment w222 = even_case_witness({2, 2, 2});
    CHECK(w222.lists == std::vector<std::vector<int>>{
                            {1, 2, 3}, {1, 2, 3}, {1, 2, 4}, {1, 2, 4}, {1, 2, 5}, {1, 2, 5}});

    CHECK_THROWS_AS(even_case_witness({2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(even_case_witness({2, 3}), std::invalid_argument);

    // multiplicity profile: eta(c) = 2s on the shared colors, eta = n_i on
    // the private ones
    for (auto parts : {std::vector<int>{2, 2}, {2, 2, 2}, {4, 4}, {2, 2, 4}}) {
        int s = 0;
        for (int ni : parts) s += ni / 2;
        ListAssignment w = even_case_witness(parts);
        CHECK(w.uniform_size() == s);
        for (int c = 1; c <= s - 1; c++) CHECK(multiplicity(w, c) == 2 * s);
        std::vector<int> sorted = parts;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); i++) {
            CHECK(multiplicity(w, s + static_cast<int>(i)) == sorted[i]);
            CHECK(sorted[i] <= s);
        }
    }
}

TEST_CASE("lower bound certification pipeline") {
    LowerBoundReport r22 = verify_lower_bound({2, 2});
    CHECK(r22.bound == 3);
    CHECK(r22.wu_refuted_at_s_minus_1);
    CHECK(r22.even_case_applies);
    CHECK(r22.witness_refuted);
    CHECK(r22.reduced_parts == std::vector<int>{1, 1});

    LowerBoundReport r222 = verify_lower_bound({2, 2, 2});
    CHECK(r222.bound == 4);
    CHECK(r222.witness_refuted);

    LowerBoundReport r33 = verify_lower_bound({3, 3});
    CHECK(r33.bound == 4);
    CHECK(r33.s == 4);
    CHECK(!r33.even_case_applies);
    CHECK(r33.wu_refuted_at_s_minus_1);
}

TEST_CASE("certified bounds really refute the k below them") {
    for (auto parts : {std::vector<int>{2, 2}, {2, 3}, {2, 2, 2}}) {
        Graph g = Graph::complete_multipartite(parts);
        int bound = lower_bound_multipartite(parts).first;
        CHECK(decide_choosable(g, bound - 1).outcome == Outcome::not_choosable);
    }
}

TEST_CASE("bipartite bound reports") {
    BoundReport star = bipartite_bounds(1, 5);
    CHECK(star.lower == 4);
    CHECK(star.upper == 4);
    CHECK(star.forced());

    BoundReport k23 = bipartite_bounds(2, 3);
    CHECK(k23.lower == 3);
    CHECK(k23.upper == 3);
    CHECK(k23.forced());

    BoundReport k24 = bipartite_bounds(2, 4);
    CHECK(k24.lower == 3);
    CHECK(k24.upper == 4);
    CHECK(!k24.forced());

    // swapped arguments are normalized
    CHECK(bipartite_bounds(4, 2).lower == 3);
}
