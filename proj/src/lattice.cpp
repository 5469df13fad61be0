#include "swc/lattice.hpp"

#include "swc/bigint.hpp"
#include "swc/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace swc {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b) {
        throw Error(ErrorCode::DimensionError,
                    "dimension " + std::to_string(a) + " does not match " + std::to_string(b));
    }
}

}  // namespace

LatticePoint LatticePoint::operator+(const LatticePoint& o) const {
    require_same_dim(dim(), o.dim());
    std::vector<Int> r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = detail::checked_add(coords_[i], o.coords_[i]);
    return LatticePoint(std::move(r));
}

LatticePoint LatticePoint::operator-(const LatticePoint& o) const {
    require_same_dim(dim(), o.dim());
    std::vector<Int> r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = detail::checked_sub(coords_[i], o.coords_[i]);
    return LatticePoint(std::move(r));
}

// --- Direction ---

bool Direction::nonnegative() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c >= 0; });
}

Int Direction::max_entry() const noexcept {
    return *std::max_element(coords_.begin(), coords_.end());
}

Direction Direction::unit(std::size_t d, std::size_t axis) {
    if (axis >= d) throw Error(ErrorCode::InvalidParameter, "unit axis out of range");
    std::vector<Int> v(d, 0);
    v[axis] = 1;
    return Direction(std::move(v));
}

Direction canonicalize_direction(std::span<const Int> v) {
    if (v.empty()) throw Error(ErrorCode::InvalidDirection, "empty vector");
    Int g = 0;
    for (Int c : v) {
        if (c == INT64_MIN) throw Error(ErrorCode::InvalidDirection, "coordinate out of range");
        g = std::gcd(g, c < 0 ? -c : c);
    }
    if (g == 0) throw Error(ErrorCode::InvalidDirection, "zero vector");

    std::vector<Int> out(v.begin(), v.end());
    for (Int& c : out) c /= g;
    auto first = std::find_if(out.begin(), out.end(), [](Int c) { return c != 0; });
    if (*first < 0) {
        for (Int& c : out) c = -c;
    }
    return Direction(std::move(out));
}

// --- DirectionSet ---

std::size_t integer_rank(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::vector<std::vector<BigInt>> a;
    a.reserve(rows.size());
    for (const auto& r : rows) {
        require_same_dim(r.size(), cols);
        std::vector<BigInt> br;
        br.reserve(cols);
        for (Int c : r) br.push_back(big_from_i64(c));
        a.push_back(std::move(br));
    }

    // Bareiss: after pivoting on (rank, col), every entry of the trailing
    // block is divisible by the previous pivot.
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < a.size(); ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                BigInt num = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
                mpz_divexact(a[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

DirectionSet validate_direction_set(std::vector<Direction> directions, std::size_t d) {
    if (d < 2) throw Error(ErrorCode::DimensionError, "dimension must be at least 2");
    for (const auto& s : directions) require_same_dim(s.dim(), d);

    // Canonical representatives coincide exactly when two vectors are parallel.
    for (std::size_t i = 0; i < directions.size(); ++i) {
        for (std::size_t j = i + 1; j < directions.size(); ++j) {
            if (directions[i] == directions[j]) {
                throw Error(ErrorCode::NotPairwiseIndependent,
                            "directions " + std::to_string(i) + " and " + std::to_string(j) +
                                " are parallel");
            }
        }
    }

    std::vector<std::vector<Int>> rows;
    for (const auto& s : directions) rows.emplace_back(s.coords().begin(), s.coords().end());
    const std::size_t rank = integer_rank(rows);
    if (rank < d) {
        throw Error(ErrorCode::NotSpanning,
                    "rank " + std::to_string(rank) + " < dimension " + std::to_string(d));
    }
    return DirectionSet(std::move(directions), d);
}

// --- PointConfiguration ---

PointConfiguration::PointConfiguration(std::size_t d, std::initializer_list<LatticePoint> points)
    : d_(d) {
    for (const auto& p : points) add(p);
}

PointConfiguration PointConfiguration::from_points(std::size_t d, std::span<const LatticePoint> points) {
    PointConfiguration c(d);
    for (const auto& p : points) c.add(p);
    return c;
}

void PointConfiguration::add(const LatticePoint& p, Int multiplicity) {
    require_same_dim(p.dim(), d_);
    if (multiplicity < 1) throw Error(ErrorCode::InvalidParameter, "multiplicity must be positive");
    entries_[p] = detail::checked_add(entries_[p], multiplicity);
    cardinality_ = detail::checked_add(cardinality_, multiplicity);
}

Int PointConfiguration::multiplicity(const LatticePoint& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
}

bool PointConfiguration::is_set() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second == 1; });
}

std::vector<LatticePoint> PointConfiguration::expanded() const {
    std::vector<LatticePoint> out;
    out.reserve(static_cast<std::size_t>(cardinality_));
    for (const auto& [p, mult] : entries_) {
        for (Int i = 0; i < mult; ++i) out.push_back(p);
    }
    return out;
}

PointConfiguration PointConfiguration::translated(const LatticePoint& t) const {
    PointConfiguration out(d_);
    for (const auto& [p, mult] : entries_) out.add(p + t, mult);
    return out;
}

PointConfiguration common_part(const PointConfiguration& a, const PointConfiguration& b) {
    require_same_dim(a.dim(), b.dim());
    PointConfiguration out(a.dim());
    for (const auto& [p, mult] : a.entries()) {
        const Int shared = std::min(mult, b.multiplicity(p));
        if (shared > 0) out.add(p, shared);
    }
    return out;
}

std::pair<PointConfiguration, PointConfiguration> cancel_common(const PointConfiguration& a,
                                                                const PointConfiguration& b) {
    require_same_dim(a.dim(), b.dim());
    PointConfiguration ra(a.dim());
    PointConfiguration rb(b.dim());
    for (const auto& [p, mult] : a.entries()) {
        const Int left = mult - std::min(mult, b.multiplicity(p));
        if (left > 0) ra.add(p, left);
    }
    for (const auto& [p, mult] : b.entries()) {
        const Int left = mult - std::min(mult, a.multiplicity(p));
        if (left > 0) rb.add(p, left);
    }
    return {std::move(ra), std::move(rb)};
}

// --- Grid ---

Grid::Grid(std::vector<Int> extents) : Grid(extents, std::vector<Int>(extents.size(), 1)) {}

Grid::Grid(std::vector<Int> extents, std::vector<Int> offset)
    : extents_(std::move(extents)), offset_(std::move(offset)) {
    if (extents_.empty()) throw Error(ErrorCode::InvalidParameter, "grid needs at least one axis");
    require_same_dim(offset_.size(), extents_.size());
    Int cells = 1;
    for (Int e : extents_) {
        if (e < 1) throw Error(ErrorCode::InvalidParameter, "grid extents must be positive");
        cells = detail::checked_mul(cells, e);
    }
    for (std::size_t i = 0; i < extents_.size(); ++i) {
        detail::checked_add(offset_[i], extents_[i]);
    }
    cells_ = static_cast<std::uint64_t>(cells);
}

Grid Grid::cube(std::size_t d, Int n) { return Grid(std::vector<Int>(d, n)); }

bool Grid::contains(const LatticePoint& p) const {
    if (p.dim() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (p[i] < offset_[i] || p[i] >= offset_[i] + extents_[i]) return false;
    }
    return true;
}

std::vector<LatticePoint> Grid::points() const {
    std::vector<LatticePoint> out;
    out.reserve(cells_);
    std::vector<Int> cur(offset_.begin(), offset_.end());
    for (std::uint64_t n = 0; n < cells_; ++n) {
        out.emplace_back(cur);
        for (std::size_t i = dim(); i-- > 0;) {
            if (++cur[i] < offset_[i] + extents_[i]) break;
            cur[i] = offset_[i];
        }
    }
    return out;
}

}  // namespace swc
