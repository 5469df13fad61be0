#include "oracles.hpp"
#include "test_helpers.hpp"

#include "swc/bounds.hpp"
#include "swc/constructions.hpp"
#include "swc/xray.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace swc;
using testing::error_of;

TEST_CASE("weak compositions") {
    CHECK(weak_composition_count(2, 3) == 6);
    CHECK(weak_composition_count(0, 5) == 1);
    CHECK(weak_composition_count(5, 1) == 1);
    CHECK(weak_composition_count(0, 0) == 1);
    CHECK(error_of([] { weak_composition_count(3, 0); }) == ErrorCode::InvalidParameter);
    for (Int k = 0; k <= 8; ++k) {
        for (Int l = 1; l <= 8; ++l) {
            CHECK(weak_composition_count(k, l) == BigInt(static_cast<unsigned long>(oracle::enumerate_weak_compositions(k, l))));
        }
    }
    for (Int k = 0; k <= 50; ++k) {
        for (Int l = 1; l <= 50; ++l) CHECK(weak_composition_count(k, l) <= weak_composition_count(k, l + 1));
    }
}

TEST_CASE("theorem_n uses exact integer roots") {
    CHECK(theorem_n(4, 2, PositiveRational::make(1, 1)) == 16);
    CHECK(theorem_n(3, 2, PositiveRational::make(1, 1)) == 10);
    CHECK(theorem_n(5, 2, PositiveRational::make(1, 2)) == 18);
    CHECK(oracle::int_pow(17, 4) >= oracle::int_pow(5, 7));
    CHECK(oracle::int_pow(16, 4) < oracle::int_pow(5, 7));
    CHECK(ceil_rational_power(5, 7, 4) == 17);
    CHECK(ceil_rational_power(8, 5, 2) == 182);
    // t = ceil(m^(a/b)) is characterised by (t-1)^b < m^a <= t^b
    for (Int m = 1; m <= 40; ++m) {
        for (Int a = 1; a <= 9; ++a) {
            for (Int b = 1; b <= 6; ++b) {
                const Int t = ceil_rational_power(m, a, b);
                CHECK(oracle::int_pow(t, static_cast<std::uint64_t>(b)) >= oracle::int_pow(m, static_cast<std::uint64_t>(a)));
                if (t > 0) {
                    CHECK(oracle::int_pow(t - 1, static_cast<std::uint64_t>(b)) < oracle::int_pow(m, static_cast<std::uint64_t>(a)));
                }
            }
        }
    }
    Int prev = 0;
    for (Int m = 1; m <= 300; ++m) {
        const Int n = theorem_n(m, 3, PositiveRational::make(2, 3));
        CHECK(n % 2 == 0);
        CHECK(n >= prev);
        prev = n;
    }
    CHECK(PositiveRational::parse("6/4") == PositiveRational::make(3, 2));
    CHECK(PositiveRational::parse("2").str() == "2");
    CHECK(error_of([] { PositiveRational::parse("0"); }) == ErrorCode::InvalidParameter);
    CHECK(error_of([] { PositiveRational::parse("1/x"); }) == ErrorCode::InvalidParameter);
    CHECK(error_of([] { PositiveRational::parse("-1/2"); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("profile space and subset counts") {
    const std::vector<std::uint64_t> three{3, 3};
    CHECK(*profile_space_bound(2, three).exact == 36);
    const std::vector<std::uint64_t> many{4, 9, 1};
    CHECK(*profile_space_bound(0, many).exact == 1);
    const std::vector<std::uint64_t> ones{1, 1};
    CHECK(*profile_space_bound(2, ones).exact == 1);
    const std::vector<std::uint64_t> zero{0};
    CHECK(error_of([&] { profile_space_bound(2, zero); }) == ErrorCode::InvalidParameter);

    const ProfileBound capped = profile_space_bound(1000, std::vector<std::uint64_t>{500, 700}, 16);
    CHECK_FALSE(capped.exact);
    const BigInt truth = oracle::binomial(1499, 499) * oracle::binomial(1699, 699);
    const double lt = static_cast<double>(mpz_sizeinbase(truth.get_mpz_t(), 2));
    CHECK(capped.log2.lo <= lt);
    CHECK(capped.log2.hi >= lt - 1);

    CHECK(subset_count(2, 2) == 6);
    CHECK(subset_count(2, 3) == 70);
    CHECK(subset_count(4, 2) == 12870);
    CHECK(error_of([] { subset_count(3, 2); }) == ErrorCode::InvalidParameter);
    for (std::size_t d = 2; d <= 3; ++d) {
        for (Int n = 2; n <= 10; n += 2) {
            const auto N = static_cast<std::uint64_t>(oracle::int_pow(n, d).get_ui());
            const BigInt c = subset_count(n, d);
            CHECK(c == oracle::binomial(N, N / 2));
            CHECK(c >= oracle::int_pow(2, N / 2));
            const Log2Interval li = subset_count_log2(n, d);
            CHECK(li.lo >= static_cast<double>(N / 2) - 1e-9);
            CHECK(li.hi <= static_cast<double>(N) + 1e-9);
        }
    }
}

TEST_CASE("log2 intervals enclose exact binomials") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::uint64_t> nd(0, 3000);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t n = nd(rng);
        const std::uint64_t k = n == 0 ? 0 : nd(rng) % (n + 1);
        const BigInt c = oracle::binomial(n, k);
        const Log2Interval li = log2_binomial(n, k);
        // 2^floor(log2 c) <= c < 2^(floor+1)
        const auto bits = static_cast<double>(mpz_sizeinbase(c.get_mpz_t(), 2));
        CHECK(li.lo <= bits);
        CHECK(li.hi >= bits - 1);
        double mant = 0;
        long ex = 0;
        mant = mpz_get_d_2exp(&ex, c.get_mpz_t());
        const double log2c = std::log2(mant) + static_cast<double>(ex);
        CHECK(li.lo <= log2c + 1e-9);
        CHECK(li.hi >= log2c - 1e-9);
        CHECK(li.hi - li.lo < 1e-3 + 1e-9 * log2c);
    }
}

TEST_CASE("toy certificate fails the counting bound") {
    CertificateOptions opt;
    opt.directions = testing::dirset({{1, 0}, {0, 1}});
    opt.n = 2;
    const PigeonholeReport r = pigeonhole_certificate(2, 2, PositiveRational::make(1, 1), opt);
    REQUIRE(r.profile_bound.exact);
    REQUIRE(r.subset_count);
    CHECK(*r.profile_bound.exact == 9);
    CHECK(*r.subset_count == 6);
    CHECK(r.verdict == Verdict::BoundFails);
    CHECK(r.k == 2);
    CHECK(r.line_counts == std::vector<std::uint64_t>{2, 2});
    CHECK_FALSE(r.paper_chain_holds);
    REQUIRE(r.find_link("n_at_least_4"));
    CHECK(r.find_link("n_at_least_4")->status == LinkStatus::Fails);

    CHECK(error_of([&] {
              CertificateOptions bad;
              bad.directions = testing::dirset({{1, 0}, {0, 1}});
              pigeonhole_certificate(3, 2, PositiveRational::make(1, 1), bad);
          }) == ErrorCode::InvalidParameter);
    CHECK(error_of([&] {
              CertificateOptions bad;
              bad.n = 5;
              pigeonhole_certificate(3, 2, PositiveRational::make(1, 1), bad);
          }) == ErrorCode::InvalidParameter);
}

TEST_CASE("side condition: every direction meets at least n^(d-1) lines") {
    const DirectionSelection sel = select_directions(8, 2);
    for (Int n : {theorem_n(8, 2, PositiveRational::make(1, 1)), Int{182}}) {
        CertificateOptions opt;
        opt.directions = sel.directions;
        opt.n = n;
        const PigeonholeReport r = pigeonhole_certificate(8, 2, PositiveRational::make(1, 1), opt);
        for (std::size_t i = 0; i < r.line_counts.size(); ++i) {
            CHECK(r.line_counts[i] >= static_cast<std::uint64_t>(n));
            CHECK(r.line_counts[i] == oracle::brute_line_count(sel.directions[i].coords(), n, 2));
            REQUIRE(r.find_link("lines_at_least_n_pow_d_minus_1", i));
            CHECK(r.find_link("lines_at_least_n_pow_d_minus_1", i)->status == LinkStatus::Holds);
        }
    }
    CHECK(theorem_n(8, 2, PositiveRational::make(1, 1)) == 64);
}

TEST_CASE("verdict is monotone in the grid side") {
    for (const auto& rows : std::vector<std::vector<std::vector<Int>>>{
             {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}, {1, 1}}, {{1, 1}, {1, 2}, {2, 1}}, {{1, 0}, {0, 1}, {1, 1}, {1, -1}}}) {
        const DirectionSet S = testing::dirset(rows);
        bool seen = false;
        for (Int n = 2; n <= 60; n += 2) {
            CertificateOptions opt;
            opt.directions = S;
            opt.n = n;
            const auto r = pigeonhole_certificate(static_cast<Int>(S.size()), 2, PositiveRational::make(1, 1), opt);
            if (seen) CHECK(r.verdict == Verdict::GhostGuaranteed);
            if (r.verdict == Verdict::GhostGuaranteed) seen = true;
        }
        CHECK(seen);
    }
}

TEST_CASE("sampled profiles are weak compositions of k over the line counts") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const Int n = 2 * (1 + trial % 3);
        const std::size_t d = 2 + trial % 2;
        const auto rows = oracle::random_direction_rows(rng, d, d + 1, 2, true);
        const Grid g = Grid::cube(d, n);
        auto cells = g.points();
        std::shuffle(cells.begin(), cells.end(), rng);
        const std::size_t k = cells.size() / 2;
        PointConfiguration F(d);
        for (std::size_t i = 0; i < k; ++i) F.add(cells[i]);
        for (const auto& row : rows) {
            const Direction s = canonicalize_direction(row);
            const XRayProfile X = xray(F, s);
            const auto l = count_lines_exact(s, n, d);
            CHECK(X.counts.size() <= l);
            CHECK(X.total() == static_cast<Int>(k));
            std::set<LineKey> all;
            for (const auto& p : g.points()) all.insert(line_key(p, s));
            CHECK(all.size() == l);
            for (const auto& [key, c] : X.counts) CHECK(all.count(key) == 1);
        }
    }
}

TEST_CASE("exact and log-domain verdicts agree") {
    int compared = 0;
    for (Int m = 2; m <= 9; ++m) {
        for (std::size_t d = 2; d <= 3; ++d) {
            if (m < static_cast<Int>(d)) continue;
            for (const auto& eps : {PositiveRational::make(1, 1), PositiveRational::make(1, 2), PositiveRational::make(3, 1)}) {
                for (Int n = 2; n <= (d == 2 ? 24 : 8); n += 2) {
                    CertificateOptions exact;
                    exact.n = n;
                    CertificateOptions logd = exact;
                    logd.exact_bit_cap = 0;
                    const auto a = pigeonhole_certificate(m, d, eps, exact);
                    const auto b = pigeonhole_certificate(m, d, eps, logd);
                    CHECK(a.verdict_method == Evaluation::Exact);
                    CHECK(b.verdict_method == Evaluation::Log2);
                    if (b.verdict != Verdict::Inconclusive) {
                        CHECK(a.verdict == b.verdict);
                        ++compared;
                    }
                    CHECK(a.verdict != Verdict::Inconclusive);
                }
            }
        }
    }
    CHECK(compared > 100);
}

TEST_CASE("threshold scan") {
    const auto rows = guaranteed_threshold_scan(2, PositiveRational::make(1, 1), 2, 30);
    REQUIRE(rows.size() == 29);
    Int prev = 0;
    for (const auto& row : rows) {
        CHECK(row.n >= prev);
        CHECK(row.n_nondecreasing);
        prev = row.n;
        const double half = static_cast<double>(row.n * row.n) / 2.0;
        CHECK(row.log2_subset.hi >= half);
        CHECK(row.log2_subset.lo <= static_cast<double>(row.n * row.n));
    }
    CHECK(error_of([] { guaranteed_threshold_scan(2, PositiveRational::make(1, 1), 1, 3); }) == ErrorCode::InvalidParameter);
    CHECK(error_of([] { guaranteed_threshold_scan(2, PositiveRational::make(1, 1), 5, 3); }) == ErrorCode::InvalidParameter);
}
