#pragma once

#include "swc/bigint.hpp"
#include "swc/lattice.hpp"
#include "swc/xray.hpp"

#include <span>
#include <utility>
#include <vector>

namespace swc {

/// Two disjoint, equal-cardinality configurations with equal X-rays in
/// every direction of `directions`.
struct GhostPair {
    PointConfiguration first;
    PointConfiguration second;
    DirectionSet directions;
};

struct GhostCheck {
    bool same_dimension = false;
    bool equal_cardinality = false;
    bool disjoint = false;
    bool nonempty = false;
    EquivalenceResult equivalence;

    bool valid() const noexcept {
        return same_dimension && equal_cardinality && disjoint && nonempty && equivalence.equivalent;
    }
};

GhostCheck check_ghost_pair(const PointConfiguration& F, const PointConfiguration& G,
                            std::span<const Direction> S);

/// Builds a GhostPair after re-checking every invariant; throws
/// InternalError when the sides are not a switching component.
GhostPair make_ghost_pair(PointConfiguration F, PointConfiguration G, DirectionSet S);

struct HypercubeGhost {
    PointConfiguration raw_even;  // images of even-weight vertices of {0,1}^m
    PointConfiguration raw_odd;
    GhostPair pair;               // common points cancelled
};

/// Two-colouring of {0,1}^m pushed into Z^d by v -> sum v_i s_i.
HypercubeGhost hypercube_ghost(const DirectionSet& S);

/// The 6-point switching component for five directions in Z^2.
GhostPair paper_example_m5();

struct ChordClass {
    int residue = 0;                          // i + j (mod 2m) shared by every chord in the class
    std::vector<std::pair<int, int>> pairs;   // (min, max) vertex indices, sorted
};

/// Index-level proof that alternate vertices of the regular 2m-gon are
/// tomographically equivalent for the m chord directions of odd residue.
struct PolygonPairingCertificate {
    int m = 0;
    std::vector<ChordClass> classes;
};

PolygonPairingCertificate polygon_ghost(int m);
/// Checks: m classes with distinct odd residues, every pair matches one even
/// and one odd index with the class residue, every index used exactly once.
bool verify_polygon_pairing(const PolygonPairingCertificate& cert);
/// Places vertex k at angle pi k / m on the unit circle and returns the
/// largest |cross product| between a chord's unit direction and the first
/// chord of its class.
double polygon_parallelism_defect(const PolygonPairingCertificate& cert);

/// Relatively prime d-tuples in {1..p}^d.
struct CoprimeCensus {
    Int p = 0;
    std::size_t d = 0;
    BigInt count;
    BigInt total;        // p^d
    BigRational density;
};

BigInt coprime_count_by_enumeration(Int p, std::size_t d, unsigned threads = 1);
/// sum_{j=1..p} mu(j) floor(p/j)^d
BigInt coprime_count_by_mobius(Int p, std::size_t d);
CoprimeCensus coprime_census(Int p, std::size_t d);

struct DirectionSelection {
    DirectionSet directions;
    Int q_initial = 0;          // ceil((2m)^(1/d))
    Int q_used = 0;
    std::vector<Int> q_increments;  // each q tried after q_initial fell short
    bool replaced_with_units = false;

    bool initial_q_sufficed() const noexcept { return q_used == q_initial; }
};

/// First m primitive tuples of {1..q}^d in lexicographic order, growing q
/// until there are enough. If they fail to span, the last d picks are
/// replaced by the standard unit vectors.
DirectionSelection select_directions(Int m, std::size_t d);

/// All primitive tuples of {1..q}^d in lexicographic order.
std::vector<std::vector<Int>> primitive_tuples(Int q, std::size_t d);

struct ZetaInterval {
    double lo = 0.0;
    double hi = 0.0;
    double mid() const noexcept { return 0.5 * (lo + hi); }
};

/// zeta(s) for integer s >= 2 from the partial sum up to M plus the integral
/// bracket int_{M+1}^inf x^-s <= tail <= int_M^inf x^-s, with M chosen so
/// the bracket is narrower than `width`.
ZetaInterval zeta_bracket(std::size_t s, double width = 1e-9);

struct ZetaReport {
    Int p = 0;
    std::size_t d = 0;
    BigInt count;
    bool exceeds_half = false;   // R(p,d) > p^d / 2
    double density = 0.0;
    double inverse_zeta = 0.0;
    double deviation = 0.0;      // |R/p^d - 1/zeta(d)|
    double zeta_error = 0.0;     // half-width of the zeta bracket
};

ZetaReport zeta_lower_check(Int p, std::size_t d);

}  // namespace swc
