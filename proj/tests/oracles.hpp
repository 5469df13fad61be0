#pragma once

// Slow, independent reference implementations used to cross-check the library.

#include "swc/bigint.hpp"
#include "swc/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace oracle {

using swc::BigInt;
using swc::BigRational;
using swc::Int;
using Vec = std::vector<Int>;

struct Box {
    Vec extents;
    Vec offset;

    bool contains(const Vec& p) const {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] < offset[i] || p[i] >= offset[i] + extents[i]) return false;
        }
        return true;
    }

    std::vector<Vec> points() const {
        std::vector<Vec> out;
        Vec p = offset;
        const std::size_t d = extents.size();
        for (Int e : extents) {
            if (e <= 0) return out;
        }
        while (true) {
            out.push_back(p);
            std::size_t i = d;
            while (i > 0) {
                --i;
                if (++p[i] < offset[i] + extents[i]) break;
                p[i] = offset[i];
                if (i == 0) return out;
            }
        }
    }
};

inline Box cube(std::size_t d, Int n) { return {Vec(d, n), Vec(d, 1)}; }

// Walk backwards along s while staying in the box: the first point of the
// segment (line ∩ box) containing p. Boxes are convex, so this identifies lines.
inline Vec segment_start(Vec p, std::span<const Int> s, const Box& box) {
    while (true) {
        Vec q = p;
        for (std::size_t i = 0; i < q.size(); ++i) q[i] -= s[i];
        if (!box.contains(q)) return p;
        p = std::move(q);
    }
}

// Number of lines parallel to s meeting {1..n}^d: points whose predecessor leaves the cube.
inline std::uint64_t brute_line_count(std::span<const Int> s, Int n, std::size_t d) {
    const Box box = cube(d, n);
    std::uint64_t count = 0;
    for (const auto& p : box.points()) {
        Vec q = p;
        for (std::size_t i = 0; i < d; ++i) q[i] -= s[i];
        if (!box.contains(q)) ++count;
    }
    return count;
}

// Rank over Q by Gaussian elimination on rationals.
inline std::size_t rational_rank(const std::vector<Vec>& rows) {
    if (rows.empty()) return 0;
    std::vector<std::vector<BigRational>> a;
    for (const auto& r : rows) {
        std::vector<BigRational> row;
        for (Int v : r) row.emplace_back(static_cast<long>(v));
        a.push_back(std::move(row));
    }
    const std::size_t cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const BigRational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt c = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        c *= static_cast<unsigned long>(n - i);
        c /= static_cast<unsigned long>(i + 1);
    }
    return c;
}

// Counts tuples (x_1..x_l) of nonnegative integers with sum k by recursion.
inline std::uint64_t enumerate_weak_compositions(Int k, Int l) {
    if (l == 0) return k == 0 ? 1 : 0;
    if (l == 1) return 1;
    std::uint64_t total = 0;
    for (Int first = 0; first <= k; ++first) total += enumerate_weak_compositions(k - first, l - 1);
    return total;
}

// Relatively prime tuples in {1..p}^d by odometer enumeration.
inline std::uint64_t brute_coprime_count(Int p, std::size_t d) {
    Vec t(d, 1);
    std::uint64_t count = 0;
    while (true) {
        Int g = 0;
        for (Int v : t) g = std::gcd(g, v);
        if (g == 1) ++count;
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (++t[i] <= p) break;
            t[i] = 1;
            if (i == 0) return count;
        }
    }
}

// Smallest k <= k_max such that two distinct k-subsets of the box share all
// line counts along every direction. Distinct subsets with equal X-rays stay
// equivalent after removing their intersection, so the minimum is attained by
// a disjoint pair.
inline std::optional<Int> naive_min_ghost(const std::vector<Vec>& dirs, const Box& box, Int k_max) {
    const auto cells = box.points();
    const std::size_t N = cells.size();
    if (N > 20) return std::nullopt;
    // line index of each cell per direction
    std::vector<std::vector<std::size_t>> line_of(dirs.size(), std::vector<std::size_t>(N));
    std::vector<std::size_t> line_counts(dirs.size());
    for (std::size_t a = 0; a < dirs.size(); ++a) {
        std::vector<Vec> starts;
        for (std::size_t c = 0; c < N; ++c) {
            const Vec st = segment_start(cells[c], dirs[a], box);
            auto it = std::find(starts.begin(), starts.end(), st);
            if (it == starts.end()) {
                line_of[a][c] = starts.size();
                starts.push_back(st);
            } else {
                line_of[a][c] = static_cast<std::size_t>(it - starts.begin());
            }
        }
        line_counts[a] = starts.size();
    }
    std::vector<std::unordered_map<std::string, int>> seen(N + 1);
    std::optional<Int> best;
    for (std::uint32_t mask = 1; mask < (1U << N); ++mask) {
        const auto k = static_cast<Int>(std::popcount(mask));
        if (k > k_max || (best && k >= *best)) continue;
        std::string sig;
        for (std::size_t a = 0; a < dirs.size(); ++a) {
            std::string part(line_counts[a], '\0');
            for (std::size_t c = 0; c < N; ++c) {
                if (mask >> c & 1U) ++part[line_of[a][c]];
            }
            sig += part;
        }
        if (!seen[static_cast<std::size_t>(k)].emplace(std::move(sig), 1).second) best = k;
    }
    return best;
}

inline BigInt power_sum(const std::vector<Vec>& pts, const Vec& exps) {
    BigInt total = 0;
    for (const auto& p : pts) {
        BigInt term = 1;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            for (Int e = 0; e < exps[i]; ++e) term *= static_cast<long>(p[i]);
        }
        total += term;
    }
    return total;
}

// e bracketed by partial sums of sum 1/j!: S_J < e < S_J + 2/(J+1)!.
struct EBounds {
    BigRational lo, hi;
};

inline EBounds e_bounds(unsigned terms = 30) {
    BigRational s = 0;
    BigInt fact = 1;
    for (unsigned j = 0; j <= terms; ++j) {
        if (j > 0) fact *= j;
        s += BigRational(BigInt(1), fact);
    }
    fact *= terms + 1;
    BigRational hi = s + BigRational(BigInt(2), fact);
    hi.canonicalize();
    s.canonicalize();
    return {s, hi};
}

inline BigRational rat_pow(const BigRational& b, std::uint64_t e) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), e);
    return BigRational(num, den);
}

inline BigInt int_pow(Int b, std::uint64_t e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), e);
    return r;
}

// Random pairwise independent, spanning direction sets with small entries.
inline std::vector<Vec> random_direction_rows(std::mt19937_64& rng, std::size_t d, std::size_t m, Int max_entry,
                                              bool nonnegative = false) {
    std::uniform_int_distribution<Int> dist(nonnegative ? 0 : -max_entry, max_entry);
    while (true) {
        std::vector<Vec> rows;
        int attempts = 0;
        while (rows.size() < m && attempts++ < 1000) {
            Vec v(d);
            for (auto& x : v) x = dist(rng);
            Int g = 0;
            for (Int x : v) g = std::gcd(g, x);
            if (g == 0) continue;
            for (auto& x : v) x /= g;
            auto first = std::find_if(v.begin(), v.end(), [](Int x) { return x != 0; });
            if (*first < 0) {
                for (auto& x : v) x = -x;
            }
            if (std::find(rows.begin(), rows.end(), v) != rows.end()) continue;
            rows.push_back(std::move(v));
        }
        if (rows.size() == m && rational_rank(rows) == d) return rows;
    }
}

}  // namespace oracle
