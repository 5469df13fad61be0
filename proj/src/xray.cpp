#include "swc/xray.hpp"

#include "swc/error.hpp"

#include <algorithm>
#include <string>

namespace swc {

namespace {

void require_dim(std::size_t got, std::size_t want) {
    if (got != want) {
        throw Error(ErrorCode::DimensionError,
                    "dimension " + std::to_string(got) + " does not match " + std::to_string(want));
    }
}

void check_countable(const Direction& s, Int n, std::size_t d) {
    require_dim(s.dim(), d);
    if (d < 2) throw Error(ErrorCode::DimensionError, "dimension must be at least 2");
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "grid side must be positive");
    if (!s.nonnegative()) {
        throw Error(ErrorCode::UnsupportedOrientation,
                    "line counting is defined for directions with nonnegative entries; reflect axes first");
    }
}

}  // namespace

LineKey line_key(const LatticePoint& p, const Direction& s) {
    require_dim(p.dim(), s.dim());
    const std::size_t d = p.dim();
    LineKey key;
    key.reserve(d * (d - 1) / 2);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            key.push_back(detail::checked_sub(detail::checked_mul(p[i], s[j]), detail::checked_mul(p[j], s[i])));
        }
    }
    return key;
}

Int XRayProfile::total() const {
    Int t = 0;
    for (const auto& [key, c] : counts) t += c;
    return t;
}

XRayProfile xray(const PointConfiguration& F, const Direction& s) {
    require_dim(F.dim(), s.dim());
    XRayProfile profile{s, {}};
    for (const auto& [p, mult] : F.entries()) profile.counts[line_key(p, s)] += mult;
    return profile;
}

EquivalenceResult tomographically_equivalent(const PointConfiguration& F, const PointConfiguration& G,
                                             std::span<const Direction> S) {
    require_dim(F.dim(), G.dim());
    for (const auto& s : S) {
        const XRayProfile a = xray(F, s);
        const XRayProfile b = xray(G, s);
        if (a.counts == b.counts) continue;

        // Merge-walk both sorted maps to the first key whose counts differ.
        auto ia = a.counts.begin();
        auto ib = b.counts.begin();
        while (true) {
            if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
                return {false, EquivalenceWitness{s, ia->first, ia->second, 0}};
            }
            if (ia == a.counts.end() || ib->first < ia->first) {
                return {false, EquivalenceWitness{s, ib->first, 0, ib->second}};
            }
            if (ia->second != ib->second) {
                return {false, EquivalenceWitness{s, ia->first, ia->second, ib->second}};
            }
            ++ia;
            ++ib;
        }
    }
    return {true, std::nullopt};
}

std::uint64_t count_lines_exact(const Direction& s, Int n, std::size_t d) {
    check_countable(s, n, d);
    const Int all = detail::checked_pow(n, d);
    Int inner = 1;
    for (std::size_t i = 0; i < d; ++i) inner = detail::checked_mul(inner, std::max<Int>(0, n - s[i]));
    return static_cast<std::uint64_t>(all - inner);
}

std::uint64_t count_lines_bound(const Direction& s, Int n, std::size_t d) {
    check_countable(s, n, d);
    Int b = detail::checked_mul(static_cast<Int>(d), detail::checked_pow(n, d - 1));
    return static_cast<std::uint64_t>(detail::checked_mul(b, s.max_entry()));
}

}  // namespace swc
