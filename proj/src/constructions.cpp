#include "swc/constructions.hpp"

#include "swc/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>
#include <thread>

namespace swc {

GhostCheck check_ghost_pair(const PointConfiguration& F, const PointConfiguration& G,
                            std::span<const Direction> S) {
    GhostCheck check;
    check.same_dimension = F.dim() == G.dim() &&
                           std::all_of(S.begin(), S.end(), [&](const Direction& s) { return s.dim() == F.dim(); });
    if (!check.same_dimension) return check;
    check.equal_cardinality = F.cardinality() == G.cardinality();
    check.disjoint = common_part(F, G).empty();
    check.nonempty = !F.empty() && !G.empty();
    check.equivalence = tomographically_equivalent(F, G, S);
    return check;
}

GhostPair make_ghost_pair(PointConfiguration F, PointConfiguration G, DirectionSet S) {
    const GhostCheck check = check_ghost_pair(F, G, S.directions());
    if (!check.valid()) throw Error(ErrorCode::InternalError, "configurations do not form a switching component");
    return GhostPair{std::move(F), std::move(G), std::move(S)};
}

HypercubeGhost hypercube_ghost(const DirectionSet& S) {
    const std::size_t m = S.size();
    const std::size_t d = S.dim();
    if (m < 2) throw Error(ErrorCode::InvalidParameter, "hypercube construction needs at least 2 directions");
    if (m > 26) throw Error(ErrorCode::ResourceLimit, "2^m vertices exceed the construction limit (m <= 26)");

    PointConfiguration even(d);
    PointConfiguration odd(d);
    const std::uint64_t vertices = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < vertices; ++mask) {
        std::vector<Int> image(d, 0);
        for (std::size_t i = 0; i < m; ++i) {
            if ((mask >> i) & 1U) {
                for (std::size_t c = 0; c < d; ++c) image[c] = detail::checked_add(image[c], S[i][c]);
            }
        }
        (std::popcount(mask) % 2 == 0 ? even : odd).add(LatticePoint(std::move(image)));
    }

    auto [F, G] = cancel_common(even, odd);
    if (F.empty() || G.empty()) throw Error(ErrorCode::DegenerateGhost, "cancellation removed every point");
    GhostPair pair = make_ghost_pair(std::move(F), std::move(G), S);
    return HypercubeGhost{std::move(even), std::move(odd), std::move(pair)};
}

GhostPair paper_example_m5() {
    PointConfiguration F(2, {{0, 2}, {1, 4}, {2, 2}, {3, 0}, {4, 3}, {5, 1}});
    PointConfiguration G(2, {{0, 3}, {1, 1}, {2, 4}, {3, 2}, {4, 0}, {5, 2}});
    DirectionSet S = validate_direction_set({canonicalize_direction({1, 0}), canonicalize_direction({0, 1}),
                                             canonicalize_direction({1, 1}), canonicalize_direction({1, -1}),
                                             canonicalize_direction({-2, 1})},
                                            2);
    return make_ghost_pair(std::move(F), std::move(G), std::move(S));
}

// --- regular 2m-gon ---

PolygonPairingCertificate polygon_ghost(int m) {
    if (m < 2) throw Error(ErrorCode::InvalidParameter, "polygon construction needs m >= 2");
    if (m > (1 << 20)) throw Error(ErrorCode::ResourceLimit, "m too large");
    const int n = 2 * m;
    PolygonPairingCertificate cert;
    cert.m = m;
    for (int c = 1; c < n; c += 2) {
        ChordClass cls;
        cls.residue = c;
        for (int i = 0; i < n; i += 2) {
            const int j = ((c - i) % n + n) % n;
            cls.pairs.emplace_back(std::min(i, j), std::max(i, j));
        }
        std::sort(cls.pairs.begin(), cls.pairs.end());
        cert.classes.push_back(std::move(cls));
    }
    return cert;
}

bool verify_polygon_pairing(const PolygonPairingCertificate& cert) {
    const int m = cert.m;
    if (m < 2 || static_cast<int>(cert.classes.size()) != m) return false;
    const int n = 2 * m;
    std::set<int> residues;
    for (const auto& cls : cert.classes) {
        if (cls.residue < 0 || cls.residue >= n || cls.residue % 2 == 0) return false;
        if (!residues.insert(cls.residue).second) return false;
        if (static_cast<int>(cls.pairs.size()) != m) return false;
        std::vector<int> seen(n, 0);
        for (const auto& [i, j] : cls.pairs) {
            if (i < 0 || j < 0 || i >= n || j >= n) return false;
            if ((i + j) % 2 == 0) return false;
            if ((i + j) % n != cls.residue) return false;
            ++seen[i];
            ++seen[j];
        }
        if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) return false;
    }
    return true;
}

double polygon_parallelism_defect(const PolygonPairingCertificate& cert) {
    const double step = std::numbers::pi / cert.m;
    auto unit_chord = [&](const std::pair<int, int>& pr) {
        const double x = std::cos(step * pr.second) - std::cos(step * pr.first);
        const double y = std::sin(step * pr.second) - std::sin(step * pr.first);
        const double len = std::hypot(x, y);
        return std::pair<double, double>{x / len, y / len};
    };
    double worst = 0.0;
    for (const auto& cls : cert.classes) {
        const auto ref = unit_chord(cls.pairs.front());
        for (const auto& pr : cls.pairs) {
            const auto u = unit_chord(pr);
            worst = std::max(worst, std::fabs(u.first * ref.second - u.second * ref.first));
        }
    }
    return worst;
}

// --- coprime census ---

namespace {

Int checked_volume(Int p, std::size_t d) { return detail::checked_pow(p, d); }

// Tuples (x_depth..x_{d-1}) in {1..p} whose gcd together with g equals 1.
std::uint64_t count_coprime_from(Int p, std::size_t remaining, Int g) {
    if (g == 1) return static_cast<std::uint64_t>(checked_volume(p, remaining));
    if (remaining == 0) return 0;
    std::uint64_t total = 0;
    for (Int x = 1; x <= p; ++x) total += count_coprime_from(p, remaining - 1, std::gcd(g, x));
    return total;
}

std::vector<int> mobius_table(Int p) {
    std::vector<int> mu(static_cast<std::size_t>(p) + 1, 1);
    std::vector<bool> composite(static_cast<std::size_t>(p) + 1, false);
    std::vector<Int> primes;
    if (p >= 1) mu[1] = 1;
    for (Int i = 2; i <= p; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (Int q : primes) {
            if (i * q > p) break;
            composite[i * q] = true;
            if (i % q == 0) {
                mu[i * q] = 0;
                break;
            }
            mu[i * q] = -mu[i];
        }
    }
    return mu;
}

void check_census_args(Int p, std::size_t d) {
    if (p < 1) throw Error(ErrorCode::InvalidParameter, "p must be positive");
    if (d < 2) throw Error(ErrorCode::InvalidParameter, "d must be at least 2");
}

}  // namespace

BigInt coprime_count_by_enumeration(Int p, std::size_t d, unsigned threads) {
    check_census_args(p, d);
    checked_volume(p, d);
    threads = std::max(1U, threads);

    // Worker w takes first coordinates x = w+1, w+1+threads, ...; partial
    // sums are combined in worker order.
    std::vector<std::uint64_t> partial(threads, 0);
    auto work = [&](unsigned w) {
        for (Int x = 1 + w; x <= p; x += threads) partial[w] += count_coprime_from(p, d - 1, x);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    BigInt total = 0;
    for (auto v : partial) total += big_from_u64(v);
    return total;
}

BigInt coprime_count_by_mobius(Int p, std::size_t d) {
    check_census_args(p, d);
    if (p > (Int{1} << 32)) throw Error(ErrorCode::ResourceLimit, "p too large for the Mobius sieve");
    const auto mu = mobius_table(p);
    BigInt total = 0;
    for (Int j = 1; j <= p; ++j) {
        if (mu[j] == 0) continue;
        BigInt term = big_pow(big_from_i64(p / j), d);
        if (mu[j] > 0) total += term;
        else total -= term;
    }
    return total;
}

CoprimeCensus coprime_census(Int p, std::size_t d) {
    check_census_args(p, d);
    CoprimeCensus c;
    c.p = p;
    c.d = d;
    c.count = coprime_count_by_mobius(p, d);
    c.total = big_pow(big_from_i64(p), d);
    if (c.total <= (1 << 20) && coprime_count_by_enumeration(p, d) != c.count) {
        throw Error(ErrorCode::InternalError, "gcd enumeration disagrees with the Mobius sum");
    }
    c.density = BigRational(c.count, c.total);
    c.density.canonicalize();
    return c;
}

// --- direction selection ---

std::vector<std::vector<Int>> primitive_tuples(Int q, std::size_t d) {
    if (q < 1 || d < 1) throw Error(ErrorCode::InvalidParameter, "q and d must be positive");
    checked_volume(q, d);
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(d, 1);
    while (true) {
        Int g = 0;
        for (Int c : cur) g = std::gcd(g, c);
        if (g == 1) out.push_back(cur);
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (++cur[i] <= q) break;
            cur[i] = 1;
            if (i == 0) return out;
        }
    }
}

DirectionSelection select_directions(Int m, std::size_t d) {
    if (d < 2) throw Error(ErrorCode::InvalidParameter, "d must be at least 2");
    if (m < static_cast<Int>(d)) throw Error(ErrorCode::InvalidParameter, "need m >= d directions");

    Int q = 1;
    const Int target = detail::checked_mul(2, m);
    while (detail::checked_pow(q, d) < target) ++q;

    const Int q_initial = q;
    std::vector<Int> increments;
    std::vector<std::vector<Int>> pool = primitive_tuples(q, d);
    while (static_cast<Int>(pool.size()) < m) {
        ++q;
        increments.push_back(q);
        pool = primitive_tuples(q, d);
    }
    pool.resize(static_cast<std::size_t>(m));

    bool replaced = false;
    if (integer_rank(pool) < d) {
        replaced = true;
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<Int> e(d, 0);
            e[i] = 1;
            pool[static_cast<std::size_t>(m) - d + i] = std::move(e);
        }
    }
    std::vector<Direction> dirs;
    for (const auto& v : pool) dirs.push_back(canonicalize_direction(v));
    return DirectionSelection{validate_direction_set(std::move(dirs), d), q_initial, q, std::move(increments),
                              replaced};
}

// --- zeta density ---

ZetaInterval zeta_bracket(std::size_t s, double width) {
    if (s < 2) throw Error(ErrorCode::InvalidParameter, "zeta(s) needs s >= 2");
    using Real = long double;
    // Bracket width int_M^{M+1} x^-s <= M^-s.
    const auto M = static_cast<std::uint64_t>(std::ceil(std::pow(1.0L / width, 1.0L / s)));
    Real partial = 0.0L;
    for (std::uint64_t j = M; j >= 1; --j) partial += std::pow(static_cast<Real>(j), -static_cast<Real>(s));
    const Real e = static_cast<Real>(s) - 1.0L;
    const Real tail_lo = std::pow(static_cast<Real>(M + 1), -e) / e;
    const Real tail_hi = std::pow(static_cast<Real>(M), -e) / e;
    const Real slack = 1e-15L;
    return {static_cast<double>(partial + tail_lo - slack), static_cast<double>(partial + tail_hi + slack)};
}

ZetaReport zeta_lower_check(Int p, std::size_t d) {
    check_census_args(p, d);
    ZetaReport r;
    r.p = p;
    r.d = d;
    r.count = coprime_count_by_mobius(p, d);
    const BigInt total = big_pow(big_from_i64(p), d);
    r.exceeds_half = 2 * r.count > total;
    r.density = BigRational(r.count, total).get_d();
    const ZetaInterval z = zeta_bracket(d);
    r.inverse_zeta = 1.0 / z.mid();
    r.zeta_error = 0.5 * (z.hi - z.lo);
    r.deviation = std::fabs(r.density - r.inverse_zeta);
    return r;
}

}  // namespace swc
