#pragma once

#include "swc/constructions.hpp"
#include "swc/lattice.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace swc {

/// Two multisets X, Y of integer r-tuples with equal power sums
/// sum x_1^j_1 ... x_r^j_r for every exponent vector of total degree
/// <= degree. X and Y are kept sorted.
struct PTESolution {
    std::size_t r = 0;
    Int degree = 0;
    std::vector<std::vector<Int>> X;
    std::vector<std::vector<Int>> Y;

    std::size_t size() const noexcept { return X.size(); }
    void normalize();
};

struct PTECheck {
    bool valid = false;
    bool distinct = false;      // X != Y as multisets
    bool well_formed = false;   // |X| == |Y| and every tuple has r entries
    std::optional<std::vector<Int>> violated_exponent;
    std::size_t identities_checked = 0;
};

/// Exponent vectors of length r with total degree <= k, ordered by degree
/// then lexicographically (descending in the first entry).
std::vector<std::vector<Int>> exponent_vectors(std::size_t r, Int k);

/// Exact power-sum identities in arbitrary precision.
PTECheck verify_pte(const PTESolution& sol);

/// A planar switching component for m directions is a PTE solution of
/// degree m - 1. Throws InternalError if the identities fail.
PTESolution ghost_to_pte2(const GhostPair& pair);

/// Images a1 x1 + a2 x2 of a planar solution. Throws DegenerateFunctional if
/// the images of X and Y coincide as multisets.
PTESolution reduce_to_pte1(const PTESolution& sol, std::array<Int, 2> alpha);

/// Heuristic functional (1, B) with B one more than the spread of the first
/// coordinate; injective on the solution's points.
std::array<Int, 2> suggest_alpha(const PTESolution& sol);

}  // namespace swc
