#include "oracles.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <random>

using namespace swc;
using testing::error_of;

TEST_CASE("canonicalize_direction examples") {
    CHECK(canonicalize_direction({2, 4}).coords()[1] == 2);
    CHECK(canonicalize_direction({2, 4}) == canonicalize_direction({1, 2}));
    CHECK(canonicalize_direction({-1, 2}) == canonicalize_direction({1, -2}));
    const Direction a = canonicalize_direction({-2, 1});
    const Direction b = canonicalize_direction({2, -1});
    CHECK(a == b);
    CHECK(a[0] == 2);
    CHECK(a[1] == -1);
    CHECK(canonicalize_direction({0, -3, 6})[1] == 1);
    CHECK(canonicalize_direction({0, -3, 6})[2] == -2);
    CHECK(error_of([] { canonicalize_direction({0, 0}); }) == ErrorCode::InvalidDirection);
}

TEST_CASE("canonicalize_direction is idempotent and scale invariant") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> entry(-50, 50);
    std::uniform_int_distribution<Int> scale(-9, 9);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<Int> v(2 + trial % 3);
        for (auto& x : v) x = entry(rng);
        if (std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; })) continue;
        const Direction c = canonicalize_direction(v);
        CHECK(canonicalize_direction(c.coords()) == c);
        std::vector<Int> neg = v;
        for (auto& x : neg) x = -x;
        CHECK(canonicalize_direction(neg) == c);
        Int k = scale(rng);
        if (k == 0) k = 7;
        std::vector<Int> scaled = v;
        for (auto& x : scaled) x *= k;
        CHECK(canonicalize_direction(scaled) == c);
        Int g = 0;
        for (Int x : c.coords()) g = std::gcd(g, x);
        CHECK(g == 1);
    }
}

TEST_CASE("distinct nonnegative primitive vectors are never parallel") {
    for (Int a = 0; a <= 6; ++a) {
        for (Int b = 0; b <= 6; ++b) {
            for (Int c = 0; c <= 6; ++c) {
                for (Int e = 0; e <= 6; ++e) {
                    if ((a == 0 && b == 0) || (c == 0 && e == 0)) continue;
                    if (std::gcd(a, b) != 1 || std::gcd(c, e) != 1) continue;
                    if (a == c && b == e) continue;
                    CHECK(a * e - b * c != 0);
                }
            }
        }
    }
}

TEST_CASE("validate_direction_set examples") {
    const DirectionSet S = testing::dirset({{1, 0}, {0, 1}, {1, 1}});
    CHECK(S.size() == 3);
    CHECK(S.dim() == 2);
    CHECK(error_of([] { testing::dirset({{1, 0}, {2, 0}}); }) == ErrorCode::NotPairwiseIndependent);
    CHECK(testing::dirset({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}).size() == 3);
    CHECK(error_of([] { testing::dirset({{1, 1, 0}, {1, 0, 1}, {0, 1, -1}}); }) == ErrorCode::NotSpanning);
    CHECK(error_of([] { testing::dirset({{1, 0}}); }) == ErrorCode::NotSpanning);
    CHECK(error_of([] { validate_direction_set(testing::dirs({{1, 0}, {0, 1, 1}}), 2); }) ==
          ErrorCode::DimensionError);
    CHECK(error_of([] { validate_direction_set(testing::dirs({{1}}), 1); }).has_value());
}

TEST_CASE("integer_rank matches rational elimination") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Int> entry(-4, 4);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t rows = 1 + trial % 5;
        const std::size_t cols = 2 + trial % 3;
        std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
        for (auto& r : m) {
            for (auto& x : r) x = entry(rng);
        }
        // Force some dependent rows.
        if (rows >= 3 && trial % 2 == 0) {
            for (std::size_t j = 0; j < cols; ++j) m[2][j] = m[0][j] * 2 - m[1][j];
        }
        CHECK(integer_rank(m) == oracle::rational_rank(m));
    }
}

TEST_CASE("point configurations are multisets") {
    PointConfiguration F(2);
    F.add({1, 2});
    F.add({1, 2});
    F.add({0, 0}, 3);
    CHECK(F.cardinality() == 5);
    CHECK(F.multiplicity({1, 2}) == 2);
    CHECK(F.multiplicity({9, 9}) == 0);
    CHECK_FALSE(F.is_set());
    CHECK(F.expanded().size() == 5);
    CHECK(F.expanded().front() == LatticePoint{0, 0});
    CHECK(error_of([&] { F.add({1, 2, 3}); }) == ErrorCode::DimensionError);

    const PointConfiguration G = testing::config(2, {{1, 2}, {5, 5}});
    const PointConfiguration common = common_part(F, G);
    CHECK(common.cardinality() == 1);
    const auto [a, b] = cancel_common(F, G);
    CHECK(a.cardinality() == 4);
    CHECK(b == testing::config(2, {{5, 5}}));

    const PointConfiguration T = G.translated({1, -1});
    CHECK(T == testing::config(2, {{2, 1}, {6, 4}}));
}

TEST_CASE("grid enumeration is lexicographic and complete") {
    const Grid g({2, 3}, {0, 5});
    const auto pts = g.points();
    REQUIRE(pts.size() == 6);
    CHECK(g.cell_count() == 6);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(pts.front() == LatticePoint{0, 5});
    CHECK(pts.back() == LatticePoint{1, 7});
    CHECK(g.contains({1, 6}));
    CHECK_FALSE(g.contains({2, 6}));
    CHECK_FALSE(g.contains({1, 4}));

    const Grid c = Grid::cube(3, 2);
    CHECK(c.cell_count() == 8);
    CHECK(c.points().front() == LatticePoint{1, 1, 1});
    CHECK(error_of([] { Grid({0, 2}); }) == ErrorCode::InvalidParameter);

    const oracle::Box box{{2, 3, 2}, {-1, 0, 4}};
    const Grid mirror({2, 3, 2}, {-1, 0, 4});
    const auto expected = box.points();
    const auto got = mirror.points();
    REQUIRE(expected.size() == got.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(std::vector<Int>(got[i].coords().begin(), got[i].coords().end()) == expected[i]);
    }
}
