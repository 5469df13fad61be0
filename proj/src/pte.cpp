#include "swc/pte.hpp"

#include "swc/bigint.hpp"
#include "swc/error.hpp"

#include <algorithm>

namespace swc {

void PTESolution::normalize() {
    std::sort(X.begin(), X.end());
    std::sort(Y.begin(), Y.end());
}

std::vector<std::vector<Int>> exponent_vectors(std::size_t r, Int k) {
    if (r < 1 || k < 0) throw Error(ErrorCode::InvalidParameter, "need r >= 1 and degree >= 0");
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(r, 0);
    // Compositions of `left` into the slots [pos, r).
    auto fill = [&](auto&& self, std::size_t pos, Int left) -> void {
        if (pos + 1 == r) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (Int v = left; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    for (Int total = 0; total <= k; ++total) fill(fill, 0, total);
    return out;
}

namespace {

BigInt power_sum(const std::vector<std::vector<Int>>& pts, const std::vector<Int>& exps) {
    BigInt total = 0;
    for (const auto& x : pts) {
        BigInt term = 1;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] > 0) term *= big_pow(big_from_i64(x[i]), static_cast<std::uint64_t>(exps[i]));
        }
        total += term;
    }
    return total;
}

}  // namespace

PTECheck verify_pte(const PTESolution& sol) {
    PTECheck c;
    c.well_formed = sol.r >= 1 && sol.degree >= 0 && sol.X.size() == sol.Y.size();
    for (const auto& v : sol.X) c.well_formed = c.well_formed && v.size() == sol.r;
    for (const auto& v : sol.Y) c.well_formed = c.well_formed && v.size() == sol.r;
    if (!c.well_formed) {
        if (sol.r >= 1 && sol.X.size() != sol.Y.size()) c.violated_exponent = std::vector<Int>(sol.r, 0);
        return c;
    }

    auto xs = sol.X;
    auto ys = sol.Y;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    c.distinct = xs != ys;

    for (const auto& e : exponent_vectors(sol.r, sol.degree)) {
        ++c.identities_checked;
        if (power_sum(xs, e) != power_sum(ys, e)) {
            c.violated_exponent = e;
            break;
        }
    }
    c.valid = c.distinct && !c.violated_exponent;
    return c;
}

PTESolution ghost_to_pte2(const GhostPair& pair) {
    if (pair.first.dim() != 2) throw Error(ErrorCode::DimensionError, "PTE_2 needs a planar switching component");
    if (!check_ghost_pair(pair.first, pair.second, pair.directions.directions()).valid()) {
        throw Error(ErrorCode::InternalError, "input is not a verified switching component");
    }
    PTESolution sol;
    sol.r = 2;
    sol.degree = static_cast<Int>(pair.directions.size()) - 1;
    for (const auto& p : pair.first.expanded()) sol.X.emplace_back(p.coords().begin(), p.coords().end());
    for (const auto& p : pair.second.expanded()) sol.Y.emplace_back(p.coords().begin(), p.coords().end());
    sol.normalize();
    if (!verify_pte(sol).valid) throw Error(ErrorCode::InternalError, "power-sum identities failed for a verified ghost");
    return sol;
}

PTESolution reduce_to_pte1(const PTESolution& sol, std::array<Int, 2> alpha) {
    if (sol.r != 2) throw Error(ErrorCode::DimensionError, "reduction expects a planar (r = 2) solution");
    if (alpha[0] == 0 && alpha[1] == 0) throw Error(ErrorCode::InvalidParameter, "alpha must be nonzero");
    if (!verify_pte(sol).valid) throw Error(ErrorCode::InvalidParameter, "input is not a valid PTE solution");

    auto image = [&](const std::vector<Int>& v) {
        if (v.size() != 2) throw Error(ErrorCode::DimensionError, "tuple is not planar");
        return std::vector<Int>{
            detail::checked_add(detail::checked_mul(alpha[0], v[0]), detail::checked_mul(alpha[1], v[1]))};
    };
    PTESolution out;
    out.r = 1;
    out.degree = sol.degree;
    for (const auto& v : sol.X) out.X.push_back(image(v));
    for (const auto& v : sol.Y) out.Y.push_back(image(v));
    out.normalize();
    if (out.X == out.Y) {
        throw Error(ErrorCode::DegenerateFunctional, "images of both sides coincide as multisets");
    }
    const PTECheck c = verify_pte(out);
    if (!c.valid) throw Error(ErrorCode::InternalError, "linear image failed the power-sum identities");
    return out;
}

std::array<Int, 2> suggest_alpha(const PTESolution& sol) {
    if (sol.r != 2) throw Error(ErrorCode::DimensionError, "suggest_alpha expects r = 2");
    Int lo = 0;
    Int hi = 0;
    bool first = true;
    for (const auto* side : {&sol.X, &sol.Y}) {
        for (const auto& v : *side) {
            lo = first ? v[0] : std::min(lo, v[0]);
            hi = first ? v[0] : std::max(hi, v[0]);
            first = false;
        }
    }
    return {1, detail::checked_add(detail::checked_sub(hi, lo), 1)};
}

}  // namespace swc
