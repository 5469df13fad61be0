#include "swc/bigint.hpp"

#include <cmath>
#include <numbers>

namespace swc {

BigInt big_from_u64(std::uint64_t v) {
    BigInt r;
    mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
    return r;
}

BigInt big_from_i64(std::int64_t v) {
    BigInt r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    BigInt r;
    if (k > n) return r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

std::uint64_t bit_length(const BigInt& v) {
    if (v == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

namespace {

using Real = long double;

// Relative slack applied to every floating evaluation. Far above the
// accumulated rounding error of the handful of long double operations used.
constexpr Real kRelSlack = 1e-14L;
constexpr Real kAbsSlack = 1e-12L;

struct LnInterval {
    Real lo;
    Real hi;
};

// Robbins: ln n! = n ln n - n + ln(2 pi n)/2 + r, 1/(12n+1) < r < 1/(12n).
LnInterval ln_factorial(std::uint64_t n) {
    if (n <= 1) return {0.0L, 0.0L};
    if (n < 256) {
        Real sum = 0.0L;
        for (std::uint64_t j = 2; j <= n; ++j) sum += std::log(static_cast<Real>(j));
        const Real slack = kRelSlack * sum + kAbsSlack;
        return {sum - slack, sum + slack};
    }
    const Real x = static_cast<Real>(n);
    const Real base = x * std::log(x) - x + 0.5L * std::log(2.0L * std::numbers::pi_v<Real> * x);
    const Real slack = kRelSlack * (x * std::log(x) + x) + kAbsSlack;
    return {base + 1.0L / (12.0L * x + 1.0L) - slack, base + 1.0L / (12.0L * x) + slack};
}

}  // namespace

Log2Interval log2_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return {-INFINITY, -INFINITY};
    if (k == 0 || k == n) return {0.0, 0.0};
    const LnInterval a = ln_factorial(n);
    const LnInterval b = ln_factorial(k);
    const LnInterval c = ln_factorial(n - k);
    const Real ln2 = std::numbers::ln2_v<Real>;
    Real lo = (a.lo - b.hi - c.hi) / ln2;
    Real hi = (a.hi - b.lo - c.lo) / ln2;
    lo -= kRelSlack * std::fabs(lo) + kAbsSlack;
    hi += kRelSlack * std::fabs(hi) + kAbsSlack;
    // 1 <= C(n, k) <= 2^n
    lo = std::max<Real>(lo, 0.0L);
    hi = std::min<Real>(hi, static_cast<Real>(n));
    return {std::nextafter(static_cast<double>(lo), -INFINITY),
            std::nextafter(static_cast<double>(hi), INFINITY)};
}

Log2Interval log2_u64(std::uint64_t v) {
    if (v == 0) return {-INFINITY, -INFINITY};
    const Real l = std::log2(static_cast<Real>(v));
    const Real slack = kRelSlack * std::fabs(l) + kAbsSlack;
    return {std::nextafter(static_cast<double>(l - slack), -INFINITY),
            std::nextafter(static_cast<double>(l + slack), INFINITY)};
}

Log2Interval log2_big(const BigInt& v) {
    if (v <= 0) return {-INFINITY, -INFINITY};
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    const Real l = static_cast<Real>(exp) + std::log2(static_cast<Real>(mant));
    const Real slack = kRelSlack * std::fabs(l) + kAbsSlack;
    return {std::nextafter(static_cast<double>(l - slack), -INFINITY),
            std::nextafter(static_cast<double>(l + slack), INFINITY)};
}

}  // namespace swc
