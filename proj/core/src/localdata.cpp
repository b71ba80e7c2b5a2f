#include "twindescent/localdata.hpp"

#include <stdexcept>

#include "twindescent/polymod.hpp"

namespace twindescent::localdata {

using arith::legendre_unchecked;
using arith::valuation;

namespace {

// The shift x -> x + x0 maps y^2 = x^3 + a2 x^2 + a4 x + a6 to a new cubic;
// returns the shifted (a2, a4, a6).
struct ShiftedCubic {
    Int a2, a4, a6;
};

ShiftedCubic shift(const Int& a2, const Int& a4, const Int& a6, const Int& x0) {
    ShiftedCubic s;
    s.a2 = a2 + 3 * x0;
    s.a4 = a4 + 2 * a2 * x0 + 3 * x0 * x0;
    s.a6 = a6 + a4 * x0 + a2 * x0 * x0 + x0 * x0 * x0;
    return s;
}

// Multiple root of the reduced cubic x^3 + a2 x^2 + a4 x mod ell, lifted to
// a small nonnegative integer. The reduction is singular here, so the gcd
// with the derivative has a root.
Int singular_shift(const TwinCurve& e, const Int& ell) {
    polymod::Poly f = polymod::reduce({Int(0), e.a4, e.a2, Int(1)}, ell);
    polymod::Poly g = polymod::gcd(f, polymod::derivative(f, ell), ell);
    for (const Int& r : polymod::roots(g, ell))
        if (polymod::eval(f, r, ell) == 0) return r;
    throw std::logic_error("singular_shift: no multiple root found");
}

}  // namespace

std::string reduction_name(ReductionType r) {
    switch (r) {
        case ReductionType::Good: return "Good";
        case ReductionType::MultiplicativeSplit: return "MultiplicativeSplit";
        case ReductionType::MultiplicativeNonsplit: return "MultiplicativeNonsplit";
        case ReductionType::Additive: return "Additive";
    }
    return "?";
}

KodairaSymbol KodairaSymbol::In(long n) {
    if (n < 1) throw std::logic_error("KodairaSymbol: In needs n >= 1");
    return {Kind::In, n};
}

std::string KodairaSymbol::str() const {
    switch (kind) {
        case Kind::I0: return "I0";
        case Kind::In: return "I" + std::to_string(n);
        case Kind::III: return "III";
    }
    return "?";
}

ReductionType reduction_type(const TwinCurve& e, const Int& ell) {
    if (!arith::is_prime(ell))
        throw std::invalid_argument("reduction_type: ell must be prime");
    const curve::Invariants inv = curve::invariants(e);
    if (inv.disc % ell != 0) return ReductionType::Good;
    if (inv.c4 % ell == 0) return ReductionType::Additive;
    // Multiplicative. Shift the node to the origin; the tangent cone there is
    // y^2 = a2' x^2, so the tangents are rational iff a2' is a square mod ell.
    Int x0 = singular_shift(e, ell);
    ShiftedCubic s = shift(e.a2, e.a4, Int(0), x0);
    return legendre_unchecked(s.a2, ell) == 1 ? ReductionType::MultiplicativeSplit
                                              : ReductionType::MultiplicativeNonsplit;
}

LocalData local_data(const TwinCurve& e, const Int& ell) {
    if (!arith::is_prime(ell))
        throw std::invalid_argument("local_data: ell must be prime");
    const curve::Invariants inv = curve::invariants(e);
    LocalData d;
    d.ell = ell;
    d.reduction = reduction_type(e, ell);

    if (d.reduction == ReductionType::Good) {
        d.kodaira = KodairaSymbol::I0();
        d.f = 0;
        d.c = 1;
        d.m = 1;
        return d;
    }

    const long v_disc = valuation(inv.disc, ell);

    if (d.reduction != ReductionType::Additive) {
        // Type I_n with n = v(disc); f = 1, and m = v(disc) + 1 - f by Ogg.
        const long n = v_disc;
        d.kodaira = KodairaSymbol::In(n);
        d.f = 1;
        d.m = v_disc + 1 - d.f;
        if (d.reduction == ReductionType::MultiplicativeSplit)
            d.c = n;
        else
            d.c = (n % 2 == 0) ? 2 : 1;
        return d;
    }

    // Additive (ell = 2 for these curves). Run Tate's chain on the equation
    // shifted so the singular point sits at the origin.
    Int x0 = singular_shift(e, ell);
    ShiftedCubic s = shift(e.a2, e.a4, Int(0), x0);
    if (s.a6 != 0 && valuation(s.a6, ell) < 2)
        throw std::logic_error("local_data: type II fiber outside this family");
    Int b8 = 4 * s.a2 * s.a6 - s.a4 * s.a4;  // a1 = a3 = 0
    if (b8 == 0 || valuation(b8, ell) >= 3)
        throw std::logic_error("local_data: fiber beyond III outside this family");
    d.kodaira = KodairaSymbol::III();
    d.m = 2;                  // type III has two components
    d.f = v_disc + 1 - d.m;   // Ogg
    d.c = 2;
    return d;
}

Int conductor(const TwinCurve& e) {
    // disc = 64 p^2 q^2, so the bad primes are exactly {2, p, q}.
    Int n = 1;
    for (const Int& ell : {Int(2), e.p(), e.q()}) {
        const LocalData d = local_data(e, ell);
        for (long i = 0; i < d.f; ++i) n *= ell;
    }
    return n;
}

Int supersingular_sum(const TwinCurve& e, const Int& ell) {
    if (ell == 2 || ell == e.p() || ell == e.q() || !arith::is_prime(ell))
        throw std::invalid_argument(
            "supersingular_sum: need an odd prime of good reduction");
    const Int m = (ell - 1) / 2;
    const Int pr = e.p() % ell;
    const Int qr = e.q() % ell;
    // binom(m,k) mod ell, built incrementally; k+1 < ell stays invertible.
    Int binom = 1, pk = 1, qk = arith::mod_pow(qr, m, ell);
    const Int q_inv = arith::mod_inverse(qr == 0 ? Int(1) : qr, ell);
    Int sum = 0;
    for (Int k = 0; k <= m; ++k) {
        sum = (sum + binom * binom % ell * pk % ell * qk) % ell;
        binom = binom * ((m - k) % ell) % ell *
                arith::mod_inverse(Int((k + 1) % ell), ell) % ell;
        pk = pk * pr % ell;
        qk = qk * q_inv % ell;
    }
    return sum;
}

Int count_points_mod(const TwinCurve& e, const Int& ell) {
    if (ell < 3 || ell == e.p() || ell == e.q() || !arith::is_prime(ell))
        throw std::invalid_argument(
            "count_points_mod: need an odd prime of good reduction");
    return curve::count_points_mod_raw(e.a2, e.a4, ell);
}

}  // namespace twindescent::localdata
