#pragma once

#include <string>

#include "twindescent/curve.hpp"

namespace twindescent::localdata {

using curve::TwinCurve;

enum class ReductionType { Good, MultiplicativeSplit, MultiplicativeNonsplit, Additive };

std::string reduction_name(ReductionType r);

/// Only the three fiber types that occur in this family are representable;
/// anything else aborts the computation (std::logic_error).
struct KodairaSymbol {
    enum class Kind { I0, In, III };
    Kind kind;
    long n = 0;  // multiplicative index for In

    static KodairaSymbol I0() { return {Kind::I0, 0}; }
    static KodairaSymbol In(long n);
    static KodairaSymbol III() { return {Kind::III, 0}; }
    std::string str() const;  // "I0", "I2", "III"
    bool operator==(const KodairaSymbol& o) const {
        return kind == o.kind && n == o.n;
    }
};

struct LocalData {
    Int ell;
    ReductionType reduction;
    KodairaSymbol kodaira;
    long f;  // conductor exponent
    long c;  // Tamagawa number
    long m;  // irreducible components of the special fiber
};

/// Classifies the reduction at ell. Multiplicative split/non-split is decided
/// by the tangent-slope square test on the reduced singular cubic (is the
/// quadratic part of the shifted cubic a square mod ell).
ReductionType reduction_type(const TwinCurve& e, const Int& ell);

/// Kodaira symbol, conductor exponent, Tamagawa number and component count
/// at ell, derived by running Tate's criteria on the (shifted) equation:
/// I_n from v(disc) when v(c4) = 0, and the additive chain
/// v(a6') >= 2, v(b8') = 2 => III at ell = 2, with f from Ogg's formula.
LocalData local_data(const TwinCurve& e, const Int& ell);

/// prod ell^f_ell over the bad primes {2, p, q}.
Int conductor(const TwinCurve& e);

/// Sum_{k=0..m} binom(m,k)^2 p^k q^(m-k) mod ell, m = (ell-1)/2; the curve is
/// supersingular at ell exactly when this vanishes. Requires an odd prime of
/// good reduction (ell not in {2, p, q}).
Int supersingular_sum(const TwinCurve& e, const Int& ell);

/// #E~(F_ell) for odd good ell, by direct point enumeration.
Int count_points_mod(const TwinCurve& e, const Int& ell);

}  // namespace twindescent::localdata
