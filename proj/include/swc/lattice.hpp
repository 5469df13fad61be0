#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace swc {

using Int = std::int64_t;

/// A point of Z^d.
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(std::vector<Int> coords) : coords_(std::move(coords)) {}
    LatticePoint(std::initializer_list<Int> coords) : coords_(coords) {}

    std::size_t dim() const noexcept { return coords_.size(); }
    Int operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Int> coords() const noexcept { return coords_; }

    LatticePoint operator+(const LatticePoint& o) const;
    LatticePoint operator-(const LatticePoint& o) const;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

private:
    std::vector<Int> coords_;
};

/// Primitive integer vector whose first nonzero coordinate is positive.
/// Only obtainable through canonicalize_direction, so s and -s (and any
/// integer multiple) share one representative.
class Direction {
public:
    std::size_t dim() const noexcept { return coords_.size(); }
    Int operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Int> coords() const noexcept { return coords_; }
    bool nonnegative() const noexcept;
    Int max_entry() const noexcept;

    static Direction unit(std::size_t d, std::size_t axis);

    friend auto operator<=>(const Direction&, const Direction&) = default;
    friend bool operator==(const Direction&, const Direction&) = default;

private:
    explicit Direction(std::vector<Int> coords) : coords_(std::move(coords)) {}
    friend Direction canonicalize_direction(std::span<const Int> v);

    std::vector<Int> coords_;
};

Direction canonicalize_direction(std::span<const Int> v);
inline Direction canonicalize_direction(std::initializer_list<Int> v) {
    return canonicalize_direction(std::span<const Int>(v.begin(), v.size()));
}

/// Pairwise linearly independent directions spanning R^d. Construct with
/// validate_direction_set.
class DirectionSet {
public:
    std::size_t dim() const noexcept { return d_; }
    std::size_t size() const noexcept { return directions_.size(); }
    const Direction& operator[](std::size_t i) const { return directions_[i]; }
    std::span<const Direction> directions() const noexcept { return directions_; }
    auto begin() const noexcept { return directions_.begin(); }
    auto end() const noexcept { return directions_.end(); }

    friend bool operator==(const DirectionSet&, const DirectionSet&) = default;

private:
    DirectionSet(std::vector<Direction> dirs, std::size_t d) : directions_(std::move(dirs)), d_(d) {}
    friend DirectionSet validate_direction_set(std::vector<Direction> directions, std::size_t d);

    std::vector<Direction> directions_;
    std::size_t d_ = 0;
};

DirectionSet validate_direction_set(std::vector<Direction> directions, std::size_t d);

/// Rank over Q of a list of equal-length integer vectors, by fraction-free
/// (Bareiss) elimination in arbitrary precision.
std::size_t integer_rank(const std::vector<std::vector<Int>>& rows);

/// Finite multiset of lattice points of a fixed dimension.
class PointConfiguration {
public:
    explicit PointConfiguration(std::size_t d) : d_(d) {}
    PointConfiguration(std::size_t d, std::initializer_list<LatticePoint> points);
    static PointConfiguration from_points(std::size_t d, std::span<const LatticePoint> points);

    void add(const LatticePoint& p, Int multiplicity = 1);

    std::size_t dim() const noexcept { return d_; }
    Int cardinality() const noexcept { return cardinality_; }
    bool empty() const noexcept { return entries_.empty(); }
    Int multiplicity(const LatticePoint& p) const;
    /// True when every multiplicity is one.
    bool is_set() const noexcept;
    const std::map<LatticePoint, Int>& entries() const noexcept { return entries_; }
    /// Points sorted lexicographically, each repeated by its multiplicity.
    std::vector<LatticePoint> expanded() const;
    PointConfiguration translated(const LatticePoint& t) const;

    friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;

private:
    std::size_t d_;
    std::map<LatticePoint, Int> entries_;
    Int cardinality_ = 0;
};

/// Multiset intersection of two configurations.
PointConfiguration common_part(const PointConfiguration& a, const PointConfiguration& b);
/// Removes the common part from both sides: (a - a∩b, b - a∩b).
std::pair<PointConfiguration, PointConfiguration> cancel_common(const PointConfiguration& a,
                                                                const PointConfiguration& b);

/// Axis-aligned box of lattice points, offset + [0, extent_i) on each axis.
/// Grid::cube(d, n) is the one-based grid {1..n}^d.
class Grid {
public:
    explicit Grid(std::vector<Int> extents);
    Grid(std::vector<Int> extents, std::vector<Int> offset);
    static Grid cube(std::size_t d, Int n);

    std::size_t dim() const noexcept { return extents_.size(); }
    std::span<const Int> extents() const noexcept { return extents_; }
    std::span<const Int> offset() const noexcept { return offset_; }
    std::uint64_t cell_count() const noexcept { return cells_; }
    bool contains(const LatticePoint& p) const;
    /// All grid points in lexicographic order.
    std::vector<LatticePoint> points() const;

private:
    std::vector<Int> extents_;
    std::vector<Int> offset_;
    std::uint64_t cells_ = 0;
};

}  // namespace swc
