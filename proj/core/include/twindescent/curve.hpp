#pragma once

#include <string>
#include <vector>

#include "twindescent/arith.hpp"

namespace twindescent::curve {

using arith::PrimePair;

/// E_sigma : y^2 = x (x + sigma p)(x + sigma q)
///         = x^3 + sigma(p+q) x^2 + pq x.
struct TwinCurve {
    PrimePair pair;
    int sigma;  // +1 or -1
    Int a2;     // sigma (p + q)
    Int a4;     // p q

    TwinCurve(PrimePair pr, int sigma_);
    const Int& p() const { return pair.p; }
    const Int& q() const { return pair.q; }
};

/// The 2-isogenous curve E' : y^2 = x^3 - 2 sigma (p+q) x^2 + 4 x.
struct IsogenousCurve {
    Int A2;  // -2 sigma (p + q)
    Int A4;  // 4
    TwinCurve source;

    explicit IsogenousCurve(const TwinCurve& e);
};

/// Both E and E' have the shape y^2 = x^3 + a2 x^2 + a4 x; the group law
/// below works on this common form.
struct CurveEq {
    Int a2, a4;
};
CurveEq equation(const TwinCurve& e);
CurveEq equation(const IsogenousCurve& e);

/// Standard quantities b2..b8, c4, c6, discriminant and j-invariant,
/// computed from the a-invariants by the usual formulas.
struct Invariants {
    Int b2, b4, b6, b8;
    Int c4, c6;
    Int disc;
    Rat j;
};

Invariants invariants(const TwinCurve& e);

/// A point of E(Q): the point at infinity or an affine pair of exact
/// rationals satisfying the curve equation.
struct RationalPoint {
    bool infinity = true;
    Rat x, y;

    static RationalPoint O() { return {}; }
    static RationalPoint affine(Rat x_, Rat y_);
    bool operator==(const RationalPoint& o) const;
};

bool is_on_curve(const CurveEq& e, const RationalPoint& pt);
bool is_on_curve(const TwinCurve& e, const RationalPoint& pt);
bool is_on_curve(const IsogenousCurve& e, const RationalPoint& pt);

/// Chord-tangent group law; throws std::invalid_argument if an input is
/// not on the curve.
RationalPoint add(const CurveEq& e, const RationalPoint& a, const RationalPoint& b);
RationalPoint neg(const RationalPoint& a);
RationalPoint multiply(const CurveEq& e, const RationalPoint& a, long n);

/// phi : E -> E', (x, y) |-> (y^2/x^2, y(pq - x^2)/x^2); kernel {O, (0,0)}.
RationalPoint phi(const TwinCurve& e, const RationalPoint& pt);
/// Dual isogeny E' -> E, (x, y) |-> (y^2/4x^2, y(4 - x^2)/8x^2);
/// phi_hat(phi(P)) = 2P.
RationalPoint phi_hat(const IsogenousCurve& ep, const RationalPoint& pt);

/// {O, (0,0), (-sigma p, 0), (-sigma q, 0)}.
std::vector<RationalPoint> two_torsion(const TwinCurve& e);

enum class TorsionStructure { Z2xZ2 };

struct TorsionGroup {
    TorsionStructure structure;
    std::vector<RationalPoint> generators;  // two independent order-2 points
    std::string str() const { return "Z/2Z x Z/2Z"; }
};

/// E(Q)_tors, always Z/2 x Z/2 for these curves. The order bound is
/// re-derived from point counts at good primes rather than assumed: the
/// torsion injects into E~(F_ell) for odd good ell, and the gcd of the
/// counts comes out to exactly 4 (at ell = 3 alone when p != 3, since the
/// reduction is supersingular there with #E~(F_3) = 4).
TorsionGroup torsion_over_Q(const TwinCurve& e);

/// #E~(F_ell) by direct summation of Legendre symbols; requires good
/// reduction (odd ell not in {p, q}).
Int count_points_mod_raw(const Int& a2, const Int& a4, const Int& ell);

}  // namespace twindescent::curve
