#pragma once

#include "swc/bigint.hpp"
#include "swc/lattice.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swc {

struct PositiveRational {
    Int num = 1;
    Int den = 1;

    /// Accepts "P/Q" or "P"; the value must be strictly positive.
    static PositiveRational parse(std::string_view text);
    static PositiveRational make(Int num, Int den);
    std::string str() const;
    friend bool operator==(const PositiveRational&, const PositiveRational&) = default;
};

inline constexpr std::uint64_t kDefaultExactBitCap = 1'000'000;

/// Solutions of x_1 + ... + x_l = k in nonnegative integers: C(k+l-1, l-1).
BigInt weak_composition_count(Int k, Int l);

/// Smallest integer t >= 0 with t^b >= m^a.
Int ceil_rational_power(Int m, Int a, Int b);

/// The even member of {t, t+1} where t = ceil(m^(1 + (1+eps)/d)).
Int theorem_n(Int m, std::size_t d, PositiveRational eps);

struct ProfileBound {
    std::optional<BigInt> exact;  // present when log2 upper end is within the cap
    Log2Interval log2;
};

/// prod_i N(k, l_i), an upper bound on the number of distinct X-ray tuples of
/// k-point sets when direction i meets l_i lines.
ProfileBound profile_space_bound(Int k, std::span<const std::uint64_t> line_counts,
                                 std::uint64_t exact_bit_cap = kDefaultExactBitCap);

/// C(n^d, n^d/2) for even n. Throws InternalError if it is below 2^(n^d/2).
BigInt subset_count(Int n, std::size_t d);
Log2Interval subset_count_log2(Int n, std::size_t d);

enum class Verdict { GhostGuaranteed, Inconclusive, BoundFails };
enum class LinkStatus { Holds, Fails, Undetermined };
enum class Evaluation { Exact, Log2 };

const char* to_string(Verdict v) noexcept;
const char* to_string(LinkStatus s) noexcept;
const char* to_string(Evaluation e) noexcept;

/// One inequality of the counting chain evaluated at concrete parameters.
/// Per-direction links carry the direction index.
struct ChainLink {
    std::string name;
    std::optional<std::size_t> direction;
    LinkStatus status = LinkStatus::Undetermined;
    Evaluation method = Evaluation::Exact;
};

struct PigeonholeReport {
    Int m = 0;
    std::size_t d = 0;
    PositiveRational epsilon;
    Int n = 0;
    bool n_from_theorem = false;
    Int k = 0;  // n^d / 2
    std::vector<Direction> directions;
    std::vector<std::uint64_t> line_counts;
    std::uint64_t total_lines = 0;

    ProfileBound profile_bound;
    std::optional<BigInt> subset_count;
    Log2Interval subset_log2;

    Verdict verdict = Verdict::Inconclusive;
    Evaluation verdict_method = Evaluation::Exact;

    std::vector<ChainLink> chain;
    bool paper_chain_holds = false;

    // n^(2l) and 2^(n^d/2), kept only when they fit in kChainValueBits.
    std::optional<BigInt> n_pow_2l;
    std::optional<BigInt> two_pow_half;
    Log2Interval log2_n_pow_2l;

    static constexpr std::uint64_t kChainValueBits = 4096;

    const ChainLink* find_link(std::string_view name, std::optional<std::size_t> direction = {}) const;
};

struct CertificateOptions {
    std::optional<DirectionSet> directions;  // default: select_directions(m, d)
    std::optional<Int> n;                    // default: theorem_n(m, d, eps)
    std::uint64_t exact_bit_cap = kDefaultExactBitCap;
};

/// Sharp pigeonhole comparison prod N(k, l_i) < C(n^d, k) over the grid
/// {1..n}^d, plus every link of the coarser chain
/// N(k,l_i) <= C(k+l_i, l_i) <= ((k+l_i)e/l_i)^l_i, prod (..)^l_i <= (ne+e)^l
/// <= n^(2l) < 2^(n^d/2) <= C(n^d, k). Directions with negative entries are
/// counted through their coordinate reflection, which maps the cube grid
/// onto itself.
PigeonholeReport pigeonhole_certificate(Int m, std::size_t d, PositiveRational eps,
                                        const CertificateOptions& options = {});

struct ScanRow {
    Int m = 0;
    Int n = 0;
    std::uint64_t total_lines = 0;
    Verdict verdict = Verdict::Inconclusive;
    Evaluation method = Evaluation::Log2;
    Log2Interval log2_profile;
    Log2Interval log2_subset;
    bool n_nondecreasing = true;
    bool paper_chain_holds = false;
    std::string note;
};

std::vector<ScanRow> guaranteed_threshold_scan(std::size_t d, PositiveRational eps, Int m_from, Int m_to,
                                               std::uint64_t exact_bit_cap = kDefaultExactBitCap);

}  // namespace swc
