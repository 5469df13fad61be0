#include "swc/bounds.hpp"

#include "swc/constructions.hpp"
#include "swc/error.hpp"
#include "swc/xray.hpp"

#include <charconv>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace swc {

// --- PositiveRational ---

PositiveRational PositiveRational::make(Int num, Int den) {
    if (num <= 0 || den <= 0) throw Error(ErrorCode::InvalidParameter, "epsilon must be a positive rational");
    const Int g = std::gcd(num, den);
    return {num / g, den / g};
}

PositiveRational PositiveRational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        Int v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
            throw Error(ErrorCode::InvalidParameter, "cannot parse rational '" + std::string(text) + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return make(parse_int(text), 1);
    return make(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string PositiveRational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::GhostGuaranteed: return "GhostGuaranteed";
        case Verdict::Inconclusive: return "Inconclusive";
        case Verdict::BoundFails: return "BoundFails";
    }
    return "?";
}

const char* to_string(LinkStatus s) noexcept {
    switch (s) {
        case LinkStatus::Holds: return "holds";
        case LinkStatus::Fails: return "fails";
        case LinkStatus::Undetermined: return "undetermined";
    }
    return "?";
}

const char* to_string(Evaluation e) noexcept { return e == Evaluation::Exact ? "exact" : "log2"; }

// --- counting primitives ---

BigInt weak_composition_count(Int k, Int l) {
    if (k < 0 || l < 0) throw Error(ErrorCode::InvalidParameter, "k and l must be nonnegative");
    if (l == 0) {
        if (k > 0) throw Error(ErrorCode::InvalidParameter, "no composition of k > 0 into zero parts");
        return 1;
    }
    return binomial(static_cast<std::uint64_t>(k + l - 1), static_cast<std::uint64_t>(l - 1));
}

Int ceil_rational_power(Int m, Int a, Int b) {
    if (m < 0 || a < 0 || b < 1) throw Error(ErrorCode::InvalidParameter, "need m >= 0, a >= 0, b >= 1");
    if (m <= 1 || a == 0) return a == 0 ? 1 : m;
    if (static_cast<double>(a) * std::log2(static_cast<double>(m)) > 1e8) {
        throw Error(ErrorCode::ResourceLimit, "m^a too large");
    }
    const BigInt target = big_pow(big_from_i64(m), static_cast<std::uint64_t>(a));
    BigInt root;
    const int exact = mpz_root(root.get_mpz_t(), target.get_mpz_t(), static_cast<unsigned long>(b));
    if (!exact) root += 1;
    if (!root.fits_slong_p()) throw Error(ErrorCode::ResourceLimit, "ceil(m^(a/b)) exceeds 64 bits");
    return root.get_si();
}

Int theorem_n(Int m, std::size_t d, PositiveRational eps) {
    if (m < 1) throw Error(ErrorCode::InvalidParameter, "m must be positive");
    if (d < 2) throw Error(ErrorCode::InvalidParameter, "d must be at least 2");
    eps = PositiveRational::make(eps.num, eps.den);
    // 1 + (1 + p/q)/d = (dq + q + p) / (dq)
    const Int dq = detail::checked_mul(static_cast<Int>(d), eps.den);
    const Int a = detail::checked_add(detail::checked_add(dq, eps.den), eps.num);
    const Int t = ceil_rational_power(m, a, dq);
    return t % 2 == 0 ? t : detail::checked_add(t, 1);
}

ProfileBound profile_space_bound(Int k, std::span<const std::uint64_t> line_counts, std::uint64_t exact_bit_cap) {
    if (k < 0) throw Error(ErrorCode::InvalidParameter, "k must be nonnegative");
    ProfileBound out;
    const auto ku = static_cast<std::uint64_t>(k);
    for (auto l : line_counts) {
        if (l < 1) throw Error(ErrorCode::InvalidParameter, "line counts must be positive");
        out.log2 += log2_binomial(ku + l - 1, l - 1);
    }
    if (out.log2.hi <= static_cast<double>(exact_bit_cap)) {
        BigInt prod = 1;
        for (auto l : line_counts) prod *= binomial(ku + l - 1, l - 1);
        out.exact = std::move(prod);
    }
    return out;
}

namespace {

std::uint64_t grid_volume(Int n, std::size_t d) {
    return static_cast<std::uint64_t>(detail::checked_pow(n, d));
}

void check_even_side(Int n, std::size_t d) {
    if (d < 2) throw Error(ErrorCode::InvalidParameter, "d must be at least 2");
    if (n < 2 || n % 2 != 0) throw Error(ErrorCode::InvalidParameter, "grid side n must be even and >= 2");
}

}  // namespace

Log2Interval subset_count_log2(Int n, std::size_t d) {
    check_even_side(n, d);
    const std::uint64_t N = grid_volume(n, d);
    return log2_binomial(N, N / 2);
}

BigInt subset_count(Int n, std::size_t d) {
    check_even_side(n, d);
    const std::uint64_t N = grid_volume(n, d);
    if (N > 64'000'000) throw Error(ErrorCode::ResourceLimit, "C(n^d, n^d/2) too large to evaluate exactly");
    BigInt c = binomial(N, N / 2);
    BigInt floor = 0;
    mpz_setbit(floor.get_mpz_t(), N / 2);
    if (c < floor) throw Error(ErrorCode::InternalError, "C(n^d, n^d/2) < 2^(n^d/2)");
    return c;
}

// --- certificate ---

const ChainLink* PigeonholeReport::find_link(std::string_view name, std::optional<std::size_t> direction) const {
    for (const auto& link : chain) {
        if (link.name == name && link.direction == direction) return &link;
    }
    return nullptr;
}

namespace {

// 2.718281828459045 < e < 2.718281828459046
const BigInt kELo("2718281828459045");
const BigInt kEHi("2718281828459046");
const BigInt kEDen("1000000000000000");
constexpr Log2Interval kLog2E{1.4426950408889630, 1.4426950408889640};

Log2Interval scale(const Log2Interval& v, double c) {
    Log2Interval r{v.lo * c, v.hi * c};
    const double slack = 1e-14 * std::max(std::fabs(r.lo), std::fabs(r.hi)) + 1e-12;
    return {std::nextafter(r.lo - slack, -INFINITY), std::nextafter(r.hi + slack, INFINITY)};
}

Log2Interval minus(const Log2Interval& a, const Log2Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

LinkStatus compare_le(const Log2Interval& lhs, const Log2Interval& rhs) {
    if (lhs.hi <= rhs.lo) return LinkStatus::Holds;
    if (lhs.lo > rhs.hi) return LinkStatus::Fails;
    return LinkStatus::Undetermined;
}

// C(k+l, l) <= ((k+l) e / l)^l
ChainLink entropy_link(std::uint64_t k, std::uint64_t l, std::size_t i, std::uint64_t cap) {
    ChainLink link{"binomial_entropy_bound", i};
    const double est = static_cast<double>(l) * (std::log2(static_cast<double>(k + l) + 1.0) + 53.0);
    if (est <= static_cast<double>(cap)) {
        link.method = Evaluation::Exact;
        const BigInt lhs = binomial(k + l, l) * big_pow(big_from_u64(l) * kEDen, l);
        if (lhs <= big_pow(big_from_u64(k + l) * kELo, l)) link.status = LinkStatus::Holds;
        else if (lhs > big_pow(big_from_u64(k + l) * kEHi, l)) link.status = LinkStatus::Fails;
        else link.status = LinkStatus::Undetermined;
        return link;
    }
    link.method = Evaluation::Log2;
    Log2Interval per_line = minus(log2_u64(k + l), log2_u64(l));
    per_line += kLog2E;
    link.status = compare_le(log2_binomial(k + l, l), scale(per_line, static_cast<double>(l)));
    return link;
}

// prod_i (n^d e/(2 l_i) + e)^l_i <= (ne + e)^l, i.e. after dividing out e^l:
// prod_i (n^d + 2 l_i)^l_i <= (n+1)^l prod_i (2 l_i)^l_i
ChainLink collapse_link(std::uint64_t N, Int n, std::span<const std::uint64_t> ls, std::uint64_t total,
                        std::uint64_t cap) {
    ChainLink link{"factor_collapse", std::nullopt};
    double est = static_cast<double>(total) * std::log2(static_cast<double>(n) + 1.0);
    for (auto l : ls) est += static_cast<double>(l) * (std::log2(static_cast<double>(N + 2 * l)) + 1.0);
    if (est <= static_cast<double>(cap)) {
        link.method = Evaluation::Exact;
        BigInt lhs = 1;
        BigInt rhs = big_pow(big_from_i64(n + 1), total);
        for (auto l : ls) {
            lhs *= big_pow(big_from_u64(N + 2 * l), l);
            rhs *= big_pow(big_from_u64(2 * l), l);
        }
        link.status = lhs <= rhs ? LinkStatus::Holds : LinkStatus::Fails;
        return link;
    }
    link.method = Evaluation::Log2;
    Log2Interval lhs{0.0, 0.0};
    for (auto l : ls) lhs += scale(minus(log2_u64(N + 2 * l), log2_u64(2 * l)), static_cast<double>(l));
    link.status = compare_le(lhs, scale(log2_u64(static_cast<std::uint64_t>(n) + 1), static_cast<double>(total)));
    return link;
}

// (ne + e)^l <= n^(2l)  <=>  (n+1) e <= n^2
ChainLink e_collapse_link(Int n) {
    ChainLink link{"e_collapse", std::nullopt};
    const BigInt lhs_factor = big_from_i64(n + 1);
    const BigInt rhs = big_from_i64(n) * big_from_i64(n) * kEDen;
    if (lhs_factor * kEHi <= rhs) link.status = LinkStatus::Holds;
    else if (lhs_factor * kELo > rhs) link.status = LinkStatus::Fails;
    return link;
}

// n^(2l) < 2^k
ChainLink claim_link(Int n, std::uint64_t total, std::uint64_t k, std::uint64_t cap) {
    ChainLink link{"power_claim", std::nullopt};
    const double est = 2.0 * static_cast<double>(total) * std::log2(static_cast<double>(n));
    if (est <= static_cast<double>(cap)) {
        link.method = Evaluation::Exact;
        const BigInt lhs = big_pow(big_from_i64(n), 2 * total);
        // lhs < 2^k  <=>  bit_length(lhs) <= k
        link.status = bit_length(lhs) <= k ? LinkStatus::Holds : LinkStatus::Fails;
        return link;
    }
    link.method = Evaluation::Log2;
    const Log2Interval lhs = scale(log2_u64(static_cast<std::uint64_t>(n)), 2.0 * static_cast<double>(total));
    const double kd = static_cast<double>(k);
    if (lhs.hi < kd) link.status = LinkStatus::Holds;
    else if (lhs.lo >= kd) link.status = LinkStatus::Fails;
    return link;
}

}  // namespace

PigeonholeReport pigeonhole_certificate(Int m, std::size_t d, PositiveRational eps, const CertificateOptions& options) {
    if (d < 2) throw Error(ErrorCode::InvalidParameter, "d must be at least 2");
    if (m < 1) throw Error(ErrorCode::InvalidParameter, "m must be positive");
    eps = PositiveRational::make(eps.num, eps.den);

    PigeonholeReport r;
    r.m = m;
    r.d = d;
    r.epsilon = eps;

    if (options.directions) {
        if (options.directions->dim() != d) throw Error(ErrorCode::DimensionError, "direction set dimension differs from d");
        if (static_cast<Int>(options.directions->size()) != m) {
            throw Error(ErrorCode::InvalidParameter, "direction set size differs from m");
        }
        r.directions.assign(options.directions->begin(), options.directions->end());
    } else {
        const auto sel = select_directions(m, d);
        r.directions.assign(sel.directions.begin(), sel.directions.end());
    }

    if (options.n) {
        check_even_side(*options.n, d);
        r.n = *options.n;
    } else {
        r.n = theorem_n(m, d, eps);
        r.n_from_theorem = true;
    }
    const Int n = r.n;
    const std::uint64_t N = grid_volume(n, d);
    const std::uint64_t k = N / 2;
    r.k = static_cast<Int>(k);
    const std::uint64_t cap = options.exact_bit_cap;

    for (const auto& s : r.directions) {
        std::vector<Int> reflected(s.coords().begin(), s.coords().end());
        for (Int& c : reflected) c = c < 0 ? -c : c;
        const std::uint64_t l = count_lines_exact(canonicalize_direction(reflected), n, d);
        r.line_counts.push_back(l);
        r.total_lines += l;
    }

    // Sharp comparison.
    r.profile_bound = profile_space_bound(r.k, r.line_counts, cap);
    r.subset_log2 = log2_binomial(N, k);
    if (r.subset_log2.hi <= static_cast<double>(cap)) r.subset_count = binomial(N, k);

    if (r.profile_bound.exact && r.subset_count) {
        r.verdict_method = Evaluation::Exact;
        r.verdict = *r.profile_bound.exact < *r.subset_count ? Verdict::GhostGuaranteed : Verdict::BoundFails;
    } else {
        r.verdict_method = Evaluation::Log2;
        if (r.profile_bound.log2.certainly_less(r.subset_log2)) r.verdict = Verdict::GhostGuaranteed;
        else if (r.profile_bound.log2.certainly_geq(r.subset_log2)) r.verdict = Verdict::BoundFails;
        else r.verdict = Verdict::Inconclusive;
    }

    // Chain links.
    const std::uint64_t n_pow_dm1 = static_cast<std::uint64_t>(detail::checked_pow(n, d - 1));
    for (std::size_t i = 0; i < r.line_counts.size(); ++i) {
        const std::uint64_t l = r.line_counts[i];
        ChainLink mono{"composition_le_binomial", i};
        if (log2_binomial(k + l, l).hi <= static_cast<double>(cap)) {
            mono.status = binomial(k + l - 1, l - 1) <= binomial(k + l, l) ? LinkStatus::Holds : LinkStatus::Fails;
        } else {
            // C(k+l, l) = C(k+l-1, l-1) (k+l)/l
            mono.status = LinkStatus::Holds;
        }
        r.chain.push_back(mono);
        r.chain.push_back(entropy_link(k, l, i, cap));
        r.chain.push_back({"lines_at_least_n_pow_d_minus_1", i,
                           l >= n_pow_dm1 ? LinkStatus::Holds : LinkStatus::Fails, Evaluation::Exact});
    }
    r.chain.push_back(collapse_link(N, n, r.line_counts, r.total_lines, cap));
    r.chain.push_back(e_collapse_link(n));
    r.chain.push_back({"n_at_least_4", std::nullopt, n >= 4 ? LinkStatus::Holds : LinkStatus::Fails,
                       Evaluation::Exact});
    r.chain.push_back(claim_link(n, r.total_lines, k, cap));
    {
        ChainLink sub{"subset_lower_bound", std::nullopt};
        if (r.subset_count) {
            BigInt floor = 0;
            mpz_setbit(floor.get_mpz_t(), k);
            sub.status = *r.subset_count >= floor ? LinkStatus::Holds : LinkStatus::Fails;
        } else {
            sub.method = Evaluation::Log2;
            const double kd = static_cast<double>(k);
            if (r.subset_log2.lo >= kd) sub.status = LinkStatus::Holds;
            else if (r.subset_log2.hi < kd) sub.status = LinkStatus::Fails;
        }
        r.chain.push_back(sub);
    }
    r.paper_chain_holds = std::all_of(r.chain.begin(), r.chain.end(),
                                      [](const ChainLink& c) { return c.status == LinkStatus::Holds; });

    r.log2_n_pow_2l = scale(log2_u64(static_cast<std::uint64_t>(n)), 2.0 * static_cast<double>(r.total_lines));
    if (r.log2_n_pow_2l.hi <= static_cast<double>(PigeonholeReport::kChainValueBits)) {
        r.n_pow_2l = big_pow(big_from_i64(n), 2 * r.total_lines);
    }
    if (k <= PigeonholeReport::kChainValueBits) {
        BigInt v = 0;
        mpz_setbit(v.get_mpz_t(), k);
        r.two_pow_half = std::move(v);
    }
    return r;
}

std::vector<ScanRow> guaranteed_threshold_scan(std::size_t d, PositiveRational eps, Int m_from, Int m_to,
                                               std::uint64_t exact_bit_cap) {
    if (d < 2) throw Error(ErrorCode::InvalidParameter, "d must be at least 2");
    if (m_from < static_cast<Int>(d)) throw Error(ErrorCode::InvalidParameter, "scan needs m_from >= d");
    if (m_to < m_from) throw Error(ErrorCode::InvalidParameter, "empty m range");
    if (m_to - m_from > 10'000) throw Error(ErrorCode::ResourceLimit, "scan range limited to 10001 rows");

    std::vector<ScanRow> rows;
    Int prev_n = 0;
    for (Int m = m_from; m <= m_to; ++m) {
        ScanRow row;
        row.m = m;
        try {
            CertificateOptions opt;
            opt.exact_bit_cap = exact_bit_cap;
            const PigeonholeReport rep = pigeonhole_certificate(m, d, eps, opt);
            row.n = rep.n;
            row.total_lines = rep.total_lines;
            row.verdict = rep.verdict;
            row.method = rep.verdict_method;
            row.log2_profile = rep.profile_bound.log2;
            row.log2_subset = rep.subset_log2;
            row.paper_chain_holds = rep.paper_chain_holds;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ResourceLimit) throw;
            row.verdict = Verdict::Inconclusive;
            row.note = e.what();
            row.n = theorem_n(m, d, eps);
        }
        row.n_nondecreasing = row.n >= prev_n;
        prev_n = row.n;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace swc
