#pragma once

#include <optional>
#include <vector>

#include "twindescent/curve.hpp"

namespace twindescent::rank1 {

using curve::RationalPoint;
using curve::TwinCurve;

/// q = a^2 + b^2 with (a+eps)^2 + (b+delta)^2 = c^2; the hypothesis of the
/// rank-one criterion.
struct TwinSquareWitness {
    Int a, b;
    int eps, delta;  // +-1
    Int c;
};

/// System (I): X^2 - pY^2 = S^2,  X^2 - qY^2 = -T^2;
/// system (II) carries a factor 2 on both right-hand sides.
enum class System { I, II };

struct PrimarySolution {
    Int X, Y, S, T;
    System system;
};

/// Tries both orderings of the two-squares decomposition of q against all
/// four sign pairs, in the fixed order (-1,-1), (-1,+1), (+1,-1), (+1,+1);
/// returns the first witness found. q = 1 (mod 4) required.
std::optional<TwinSquareWitness> twin_square_criterion(const Int& q);

/// Exhaustive search for a primary solution with 0 < Y <= bound, X ascending
/// from ceil(sqrt(p) Y) to floor(sqrt(q) Y) (the window the two equations
/// allow), gcd(X, Y) = 1.
std::optional<PrimarySolution> primary_solution(const Int& p, const Int& q,
                                                System system, const Int& bound);

/// The constructive step behind the criterion: the root u of
/// (a+eps) u^2 - 2(b+delta) u - (a+eps) = 0 is rational, and clearing
/// denominators in q(1+u^2)^2 = ((1-u^2)a + 2ub)^2 + (2ua + (u^2-1)b)^2
/// produces an integer solution of system (I), reduced here to a primary
/// one. When a + eps = 0, the witness is re-read with the two squares
/// swapped (same q, same identity); both vanishing would force q = 2.
PrimarySolution witness_to_primary(const TwinSquareWitness& w);

/// Lifts a primary solution to E via the homogeneous space C'_(-1):
/// (x0, y0) = (X/Y, ST/Y^2) (system I; doubled for II) sits on C'_(-1), and
/// (d1 x0^2, d1 x0 y0) with d1 = -1 lands on E. The result is verified on
/// the curve and certified of infinite order by exclusion from the four
/// torsion points. Requires sigma = +1.
RationalPoint primary_to_curve_point(const PrimarySolution& sol, const TwinCurve& e);

struct RankOneCertificate {
    TwinSquareWitness witness;
    PrimarySolution solution;
    RationalPoint point;
};

/// The rank-one criterion: sigma = +1, p = 3 (mod 8), and the twin-square
/// condition on q. Then rank + dim Sha[2] = 1 while the constructed point
/// gives rank >= 1, so rank = 1 exactly.
std::optional<RankOneCertificate> rank_one_certificate(const TwinCurve& e);

/// All affine points with x = m/e^2, y = n/e^3, |m| <= height_bound and
/// e <= height_bound, sorted by height then coordinates.
std::vector<RationalPoint> point_search(const TwinCurve& e, const Int& height_bound);

}  // namespace twindescent::rank1
