#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twindescent/curve.hpp"

namespace twindescent::localsolve {

using curve::TwinCurve;

enum class Family { C, Cprime };

std::string family_name(Family f);

/// An even quartic y^2 = g(x) = d1 x^4 + A x^2 + d2 attached to the descent:
///   family C  (phi-descent):     d1 | 4 squarefree,  d2 = 4/d1,  A = -2 sigma (p+q)
///   family C' (phi-hat descent): d1 | pq squarefree, d2 = pq/d1, A =  sigma (p+q)
/// The constructor rejects d1 outside the family and degenerate quartics.
struct QuarticSpace {
    Family family;
    Int d1, A, d2;
    TwinCurve parent;

    QuarticSpace(Family fam, Int d1_, const TwinCurve& e);
};

/// A place of Q relevant to the descent: the real place or a prime.
struct LocalPlace {
    bool infinite = true;
    Int ell;

    static LocalPlace real() { return {}; }
    static LocalPlace finite(Int ell_) { return {false, std::move(ell_)}; }
    std::string str() const;
};

/// Does g attain a value >= 0 on R: immediate from sign analysis of the
/// parabola in t = x^2.
bool solvable_real(const QuarticSpace& q);

/// Is r a square in Q_2: even valuation and unit part = 1 (mod 8).
bool is_square_in_Q2(const Rat& r);
/// Same test at any prime (odd ell uses the Legendre symbol on the unit).
bool is_square_in_Ql(const Rat& r, const Int& ell);

/// Univariate Hensel criterion: v(f(x0)) > 2 v(f'(x0)), coefficients
/// ascending. True guarantees a root of f in Z_ell near x0.
bool hensel_liftable(const std::vector<Int>& f, const Int& x0, const Int& ell);

/// A term c * x^i * y^j of an integer polynomial in two variables.
struct BivariateTerm {
    unsigned i, j;
    Int c;
};
/// Bivariate form: v(f(x0,y0)) > 2 v(f_k(x0,y0)) for some partial f_k.
bool hensel_liftable(const std::vector<BivariateTerm>& f, const Int& x0,
                     const Int& y0, const Int& ell);

/// The sufficient criterion of the reduction test: g mod ell factors as
/// (unit) * s(x)^2 * h(x) with h squarefree of degree >= 1, which forces an
/// ell-adic point. False only means "inconclusive". Odd ell only.
bool reduction_nonsquare_test(const QuarticSpace& q, const Int& ell);
bool reduction_nonsquare_test(const Int& d1, const Int& A, const Int& d2,
                              const Int& ell);

/// Raw quartic coefficients for the residue-tree search below.
struct Quartic {
    // g(x) = c[4] x^4 + c[3] x^3 + c[2] x^2 + c[1] x + c[0]
    Int c[5];

    static Quartic even(const Int& d1, const Int& A, const Int& d2);
    Quartic reciprocal() const;  // x^4 g(1/x)
    Int eval(const Int& x) const;
    Int deriv(const Int& x) const;
    Int disc() const;
};

/// Depth bound for the lifting search: v_ell(disc g) + 2 v_ell(2) + 3.
/// Valid for v_ell(leading coefficient) <= 2, which covers every descent
/// space (|d1| squarefree) with margin.
long lift_depth_bound(const Quartic& g, const Int& ell);

/// Decides whether y^2 = g(x) has a solution with x, y in Z_ell, by
/// breadth-first refinement of residue classes with Hensel acceptance and
/// valuation/unit-square pruning. Returns the accepting class when found.
struct LiftWitness {
    Int x0;
    long k;  // some x = x0 (mod ell^k) carries a point
};
std::optional<LiftWitness> lift_search(const Quartic& g, const Int& ell);
bool lift_search_solvable(const Quartic& g, const Int& ell);

/// C(Q_ell) != {}: reduction fast path (odd ell), then the lifting search on
/// g and on its reciprocal (the x -> 1/x substitution covers |x|_ell > 1).
bool solvable_at(const QuarticSpace& q, const Int& ell);

/// Like solvable_at but always produces a concrete residue witness when
/// solvable; second member of the pair is true when the witness lives on the
/// reciprocal quartic (x printed as the inverse class).
std::optional<std::pair<LiftWitness, bool>> solvable_at_witness(
    const QuarticSpace& q, const Int& ell);

/// Everywhere-local solvability over S = {inf, 2, p, q}.
bool solvable_everywhere(const QuarticSpace& q);

}  // namespace twindescent::localsolve
