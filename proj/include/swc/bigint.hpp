#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace swc {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Closed interval [lo, hi] containing a base-2 logarithm. Endpoints are
/// rounded outward, so a strict comparison between two intervals is sound.
struct Log2Interval {
    double lo = 0.0;
    double hi = 0.0;

    Log2Interval& operator+=(const Log2Interval& o) {
        lo += o.lo;
        hi += o.hi;
        return *this;
    }
    bool certainly_less(const Log2Interval& o) const { return hi < o.lo; }
    bool certainly_geq(const Log2Interval& o) const { return lo >= o.hi; }
};

BigInt big_from_u64(std::uint64_t v);
BigInt big_from_i64(std::int64_t v);
BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt big_pow(const BigInt& base, std::uint64_t exp);
std::string to_decimal(const BigInt& v);
/// Number of bits in |v| (0 for v == 0).
std::uint64_t bit_length(const BigInt& v);

/// Outward-rounded interval for log2 C(n, k), from Robbins' two-sided
/// Stirling bounds.
Log2Interval log2_binomial(std::uint64_t n, std::uint64_t k);
/// Outward-rounded interval for log2 of a positive integer given in 64 bits.
Log2Interval log2_u64(std::uint64_t v);
/// Outward-rounded interval for log2 of a positive big integer.
Log2Interval log2_big(const BigInt& v);

}  // namespace swc
