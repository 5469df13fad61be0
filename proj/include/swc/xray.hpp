#pragma once

#include "swc/lattice.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace swc {

/// The 2x2 minors p_i s_j - p_j s_i over coordinate pairs i < j. Two lattice
/// points share a key for primitive s exactly when they lie on one line
/// parallel to s.
using LineKey = std::vector<Int>;

LineKey line_key(const LatticePoint& p, const Direction& s);

/// Number of points (with multiplicity) on each occupied line parallel to
/// `direction`. Lines with no points are not stored.
struct XRayProfile {
    Direction direction;
    std::map<LineKey, Int> counts;

    Int total() const;
    friend bool operator==(const XRayProfile&, const XRayProfile&) = default;
};

XRayProfile xray(const PointConfiguration& F, const Direction& s);

struct EquivalenceWitness {
    Direction direction;
    LineKey key;
    Int first_count = 0;
    Int second_count = 0;
};

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<EquivalenceWitness> witness;  // set iff !equivalent

    explicit operator bool() const noexcept { return equivalent; }
};

/// Compares X-rays direction by direction; on mismatch reports the first
/// direction (in the given order) and its lexicographically first
/// differing line.
EquivalenceResult tomographically_equivalent(const PointConfiguration& F, const PointConfiguration& G,
                                             std::span<const Direction> S);

/// Exact number of lines parallel to s meeting the grid {1..n}^d:
/// n^d - prod_i max(0, n - s_i). Every such line has a unique entry point p
/// with p - s outside the grid, and the non-entry points are exactly the
/// translates p + s of grid points with p + s still inside.
std::uint64_t count_lines_exact(const Direction& s, Int n, std::size_t d);

/// The bound d * n^(d-1) * max_i s_i on the same count.
std::uint64_t count_lines_bound(const Direction& s, Int n, std::size_t d);

}  // namespace swc
