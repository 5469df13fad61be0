#pragma once

#include "swc/constructions.hpp"
#include "swc/lattice.hpp"
#include "swc/xray.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace swc {

/// g = 1_F - 1_G as a single signed function on Z^d.
class SignedConfiguration {
public:
    explicit SignedConfiguration(std::size_t d) : d_(d) {}
    static SignedConfiguration from_pair(const PointConfiguration& F, const PointConfiguration& G);

    void add(const LatticePoint& p, Int value);
    std::size_t dim() const noexcept { return d_; }
    const std::map<LatticePoint, Int>& values() const noexcept { return values_; }
    PointConfiguration positive_part() const;
    PointConfiguration negative_part() const;
    bool balanced() const;
    /// Every line sum along every direction of S is zero.
    bool line_sums_vanish(std::span<const Direction> S) const;

private:
    std::size_t d_;
    std::map<LatticePoint, Int> values_;
};

struct SearchOptions {
    std::uint64_t node_budget = 100'000'000;
    unsigned threads = 1;
    std::size_t solution_limit = SIZE_MAX;  // sets_with_profile only
};

struct SearchOutcome {
    std::optional<Int> minimal_size;   // per-side cardinality
    std::optional<GhostPair> witness;  // present iff minimal_size is
    bool exhausted = false;            // the answer is definitive for (grid, k_max)
    std::uint64_t nodes_explored = 0;
    Int k_max = 0;                     // after clamping to half the grid
    std::vector<std::string> warnings;
};

/// Smallest k <= k_max for which two disjoint k-point subsets of `grid` have
/// equal X-rays in every direction of S. Depth-first labelling of grid
/// points (lexicographic order) by +1 / -1 / 0 with per-line sum pruning;
/// the first nonzero label is forced to +1. Results, including the witness
/// and node count, do not depend on options.threads.
SearchOutcome min_ghost(const DirectionSet& S, const Grid& grid, Int k_max, const SearchOptions& options = {});

struct ProfileMatches {
    std::vector<PointConfiguration> configurations;
    bool exhausted = false;
    std::uint64_t nodes_explored = 0;
};

/// Every subset of `grid` whose X-rays equal all of `profiles`.
ProfileMatches sets_with_profile(std::span<const XRayProfile> profiles, const Grid& grid,
                                 const SearchOptions& options = {});

struct UniquenessResult {
    bool unique = false;
    std::vector<PointConfiguration> alternatives;
    bool exhausted = false;
    std::uint64_t nodes_explored = 0;
};

UniquenessResult uniqueness_check(const PointConfiguration& F, std::span<const Direction> S, const Grid& grid,
                                  const SearchOptions& options = {});

struct UgonViolation {
    LatticePoint vertex;
    Direction direction;
};

struct UgonReport {
    bool is_ugon = false;
    bool convex_position = false;
    std::vector<LatticePoint> non_vertices;
    std::vector<UgonViolation> violations;
};

/// Checks that V is the vertex set of a non-degenerate convex polygon and
/// that every line through a vertex along a direction of S meets a second
/// vertex.
UgonReport ugon_check(const PointConfiguration& V, std::span<const Direction> S);

}  // namespace swc
