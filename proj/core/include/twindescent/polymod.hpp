#pragma once

#include <vector>

#include "twindescent/arith.hpp"

namespace twindescent::polymod {

/// Polynomials over F_ell, coefficients ascending, reduced into [0, ell),
/// trailing zeros trimmed. The zero polynomial is the empty vector.
/// Everything here is specialised to the tiny degrees (<= 4) the descent
/// machinery needs; no attempt is made at asymptotic efficiency.
using Poly = std::vector<Int>;

Poly reduce(const std::vector<Int>& coeffs, const Int& ell);
int degree(const Poly& f);  // -1 for the zero polynomial
Int eval(const Poly& f, const Int& x, const Int& ell);
Poly derivative(const Poly& f, const Int& ell);
Poly mul(const Poly& a, const Poly& b, const Int& ell);
/// Remainder of a modulo b (b != 0).
Poly rem(const Poly& a, const Poly& b, const Int& ell);
Poly make_monic(const Poly& f, const Int& ell);
/// Monic gcd.
Poly gcd(const Poly& a, const Poly& b, const Int& ell);
/// (x^n) mod f, computed by repeated squaring; f must have degree >= 1.
Poly x_pow_mod(const Int& n, const Poly& f, const Int& ell);

/// All distinct roots of f in F_ell, sorted. f must be nonzero.
/// For small ell this enumerates; for large ell it splits the product of
/// linear factors gcd(f, x^ell - x) with quadratic-character probes.
std::vector<Int> roots(const Poly& f, const Int& ell);

/// True when f = c * s(x)^2 for some constant c and s in F_ell[x]
/// (ell odd). Degree-0 f counts as a constant times a square.
/// Equivalently: the squarefree "odd part" of f has degree 0.
bool is_constant_times_square(const Poly& f, const Int& ell);

}  // namespace twindescent::polymod
