#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <vector>

#include "graceful/constructions.hpp"
#include "graceful/graph.hpp"

using namespace graceful;

namespace {

std::vector<int> rail(const ConstructionResult& r, Rail which) {
    std::vector<int> colors;
    for (int i = 1; i <= r.spec.n; ++i) colors.push_back(r.coloring.color_of({which, i}));
    return colors;
}

void check_valid(const ConstructionResult& r) {
    INFO(family_graph_name(r.spec), " via ", r.source_case);
    CHECK(r.coloring.k == r.claimed_chi_g);
    CHECK(is_graceful(build_family(r.spec), r.coloring).graceful);
}

}  // namespace

TEST_CASE("closed ladder tables and formula") {
    const auto l2 = color_closed_ladder(2);
    CHECK(l2.claimed_chi_g == 4);
    check_valid(l2);

    const auto l3 = color_closed_ladder(3);
    CHECK(l3.claimed_chi_g == 5);
    CHECK(rail(l3, Rail::X) == std::vector<int>{3, 1, 2});
    CHECK(rail(l3, Rail::Y) == std::vector<int>{2, 5, 4});
    check_valid(l3);

    const auto l5 = color_closed_ladder(5);
    CHECK(rail(l5, Rail::X) == std::vector<int>{3, 1, 2, 4, 5});
    CHECK(rail(l5, Rail::Y) == std::vector<int>{2, 4, 5, 1, 2});
    check_valid(l5);
}

TEST_CASE("slanting ladder formula never touches the middle color") {
    const auto sl4 = color_slanting_ladder(4);
    CHECK(rail(sl4, Rail::X) == std::vector<int>{1, 4, 2, 5});
    CHECK(rail(sl4, Rail::Y) == std::vector<int>{4, 2, 5, 1});
    CHECK(sl4.claimed_chi_g == 5);
    check_valid(sl4);

    for (int n : {4, 5, 8, 13}) {
        const auto r = color_slanting_ladder(n);
        for (const auto& [v, c] : r.coloring.assignment) CHECK(c != 3);
        check_valid(r);
    }

    // every diagonal edge x_i y_{i+1} is labeled 1 under this pattern
    const auto sl5 = color_slanting_ladder(5);
    for (int i = 1; i < 5; ++i)
        CHECK(std::abs(sl5.coloring.color_of(vx(i)) - sl5.coloring.color_of(vy(i + 1))) == 1);
}

TEST_CASE("triangular ladder tables and formula") {
    const auto tl4 = color_triangular_ladder(4);
    CHECK(tl4.claimed_chi_g == 6);
    CHECK(rail(tl4, Rail::X) == std::vector<int>{4, 2, 6, 4});
    CHECK(rail(tl4, Rail::Y) == std::vector<int>{3, 1, 5, 3});
    check_valid(tl4);

    // the 3-column case is the 4-column table truncated, and must stand alone
    const auto tl3 = color_triangular_ladder(3);
    CHECK(tl3.claimed_chi_g == 6);
    CHECK(rail(tl3, Rail::X) == std::vector<int>{4, 2, 6});
    CHECK(rail(tl3, Rail::Y) == std::vector<int>{3, 1, 5});
    check_valid(tl3);

    const auto tl5 = color_triangular_ladder(5);
    CHECK(tl5.claimed_chi_g == 7);
    CHECK(rail(tl5, Rail::X) == std::vector<int>{2, 3, 6, 2, 3});
    CHECK(rail(tl5, Rail::Y) == std::vector<int>{4, 7, 1, 5, 7});
    check_valid(tl5);
}

TEST_CASE("diagonal ladder tables and formula") {
    const auto dl6 = color_diagonal_ladder(6);
    CHECK(dl6.claimed_chi_g == 8);
    CHECK(rail(dl6, Rail::X) == std::vector<int>{5, 7, 3, 1, 7, 5});
    CHECK(rail(dl6, Rail::Y) == std::vector<int>{4, 2, 8, 6, 2, 4});
    check_valid(dl6);

    const auto dl5 = color_diagonal_ladder(5);
    CHECK(dl5.claimed_chi_g == 8);
    CHECK(rail(dl5, Rail::X) == std::vector<int>{5, 7, 3, 1, 7});
    check_valid(dl5);

    const auto dl7 = color_diagonal_ladder(7);
    CHECK(dl7.claimed_chi_g == 9);
    CHECK(rail(dl7, Rail::X) == std::vector<int>{7, 1, 8, 4, 7, 1, 8});
    CHECK(rail(dl7, Rail::Y) == std::vector<int>{5, 2, 9, 3, 6, 2, 9});
    check_valid(dl7);
}

TEST_CASE("circular ladder covers all four residue classes") {
    const auto cl8 = color_circular_ladder(8);
    CHECK(cl8.claimed_chi_g == 5);
    CHECK(rail(cl8, Rail::X) == std::vector<int>{1, 2, 5, 4, 1, 2, 5, 4});
    CHECK(rail(cl8, Rail::Y) == std::vector<int>{5, 4, 1, 2, 5, 4, 1, 2});
    check_valid(cl8);

    const auto cl5 = color_circular_ladder(5);
    CHECK(cl5.claimed_chi_g == 6);
    CHECK(cl5.coloring.color_of(vx(4)) == 3);  // x_{n-1}
    CHECK(cl5.coloring.color_of(vy(4)) == 6);  // y_{n-1}
    check_valid(cl5);

    const auto cl7 = color_circular_ladder(7);
    CHECK(cl7.claimed_chi_g == 6);
    check_valid(cl7);

    const auto cl6 = color_circular_ladder(6);
    CHECK(cl6.claimed_chi_g == 6);
    check_valid(cl6);

    const auto cl10 = color_circular_ladder(10);
    CHECK(cl10.claimed_chi_g == 6);
    check_valid(cl10);
}

TEST_CASE("open colorings are literal restrictions of the closed ones") {
    for (int n = 4; n <= 40; ++n)
        CHECK(color_open_ladder(n).coloring.assignment ==
              color_closed_ladder(n).coloring.assignment);
    for (int n = 5; n <= 40; ++n)
        CHECK(color_open_triangular_ladder(n).coloring.assignment ==
              color_triangular_ladder(n).coloring.assignment);
    for (int n = 7; n <= 40; ++n)
        CHECK(color_open_diagonal_ladder(n).coloring.assignment ==
              color_diagonal_ladder(n).coloring.assignment);
}

TEST_CASE("formula cases are periodic away from the ends") {
    auto assert_period = [](const ConstructionResult& r, int period, int lo, int hi) {
        CAPTURE(family_graph_name(r.spec));
        for (int i = lo; i + period <= hi; ++i) {
            CHECK(r.coloring.color_of(vx(i)) == r.coloring.color_of(vx(i + period)));
            CHECK(r.coloring.color_of(vy(i)) == r.coloring.color_of(vy(i + period)));
        }
    };
    for (int n : {12, 17, 30}) {
        assert_period(color_closed_ladder(n), 4, 5, n - 4);
        assert_period(color_open_ladder(n), 4, 5, n - 4);
        assert_period(color_slanting_ladder(n), 4, 5, n - 4);
        assert_period(color_triangular_ladder(n), 3, 5, n - 4);
        assert_period(color_open_triangular_ladder(n), 3, 5, n - 4);
        assert_period(color_diagonal_ladder(n), 4, 5, n - 4);
        assert_period(color_open_diagonal_ladder(n), 4, 5, n - 4);
    }
    assert_period(color_circular_ladder(16), 4, 5, 12);
    assert_period(color_circular_ladder(17), 4, 5, 13);
    assert_period(color_circular_ladder(19), 4, 5, 15);
    // the repaired 2-mod-4 pattern ends in two 5-blocks, so its periodic
    // window stops at n-10 rather than n-4
    assert_period(color_circular_ladder(22), 4, 5, 12);
    assert_period(color_circular_ladder(26), 4, 5, 16);
}

TEST_CASE("out-of-range parameters are rejected") {
    CHECK_THROWS_AS(color_closed_ladder(1), std::invalid_argument);
    CHECK_THROWS_AS(color_open_ladder(3), std::invalid_argument);
    CHECK_THROWS_AS(color_slanting_ladder(3), std::invalid_argument);
    CHECK_THROWS_AS(color_triangular_ladder(2), std::invalid_argument);
    CHECK_THROWS_AS(color_open_triangular_ladder(4), std::invalid_argument);
    CHECK_THROWS_AS(color_diagonal_ladder(4), std::invalid_argument);
    CHECK_THROWS_AS(color_open_diagonal_ladder(6), std::invalid_argument);
    CHECK_THROWS_AS(color_circular_ladder(3), std::invalid_argument);
}

TEST_CASE("family dispatch covers exactly the closed-form ranges") {
    CHECK_FALSE(color_family({Family::Path, 9}).has_value());
    CHECK_FALSE(color_family({Family::Cycle, 9}).has_value());
    CHECK_FALSE(color_family({Family::OpenLadder, 3}).has_value());
    CHECK_FALSE(color_family({Family::CircularLadder, 3}).has_value());
    CHECK(color_family({Family::ClosedLadder, 2}).has_value());
    CHECK(color_family({Family::DiagonalLadder, 5}).has_value());
    CHECK(color_family({Family::SlantingLadder, 4})->claimed_chi_g == 5);
}

TEST_CASE("every emitted coloring validates at the claimed palette, n up to 120") {
    // the acceptance suite stretches this to 500; keep the unit run snappy
    for (int n = 2; n <= 120; ++n) {
        for (Family family : all_families()) {
            const FamilySpec spec{family, n};
            if (n < family_min_n(family)) continue;
            const auto r = color_family(spec);
            if (!r) continue;
            CAPTURE(family_graph_name(spec));
            CHECK(r->spec == spec);
            CHECK(r->coloring.k == r->claimed_chi_g);
            CHECK(is_graceful(build_family(spec), r->coloring).graceful);
        }
    }
}
