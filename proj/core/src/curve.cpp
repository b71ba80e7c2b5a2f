#include "twindescent/curve.hpp"

#include <stdexcept>
#include <utility>

namespace twindescent::curve {

using arith::legendre_unchecked;

TwinCurve::TwinCurve(PrimePair pr, int sigma_) : pair(std::move(pr)), sigma(sigma_) {
    if (sigma != 1 && sigma != -1)
        throw std::invalid_argument("TwinCurve: sigma must be +1 or -1");
    a2 = sigma * (pair.p + pair.q);
    a4 = pair.p * pair.q;
}

IsogenousCurve::IsogenousCurve(const TwinCurve& e)
    : A2(-2 * e.a2), A4(4), source(e) {}

CurveEq equation(const TwinCurve& e) { return {e.a2, e.a4}; }
CurveEq equation(const IsogenousCurve& e) { return {e.A2, e.A4}; }

Invariants invariants(const TwinCurve& e) {
    Invariants v;
    // a1 = a3 = a6 = 0 throughout this family.
    v.b2 = 4 * e.a2;
    v.b4 = 2 * e.a4;
    v.b6 = 0;
    v.b8 = -e.a4 * e.a4;
    v.c4 = v.b2 * v.b2 - 24 * v.b4;
    v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
    v.disc = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 +
             9 * v.b2 * v.b4 * v.b6;
    if (v.disc == 0) throw std::logic_error("invariants: singular curve");
    v.j = Rat(v.c4 * v.c4 * v.c4, v.disc);
    v.j.canonicalize();
    return v;
}

RationalPoint RationalPoint::affine(Rat x_, Rat y_) {
    RationalPoint pt;
    pt.infinity = false;
    x_.canonicalize();
    y_.canonicalize();
    pt.x = std::move(x_);
    pt.y = std::move(y_);
    return pt;
}

bool RationalPoint::operator==(const RationalPoint& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
}

bool is_on_curve(const CurveEq& e, const RationalPoint& pt) {
    if (pt.infinity) return true;
    Rat rhs = pt.x * pt.x * pt.x + e.a2 * pt.x * pt.x + e.a4 * pt.x;
    return pt.y * pt.y == rhs;
}

bool is_on_curve(const TwinCurve& e, const RationalPoint& pt) {
    return is_on_curve(equation(e), pt);
}
bool is_on_curve(const IsogenousCurve& e, const RationalPoint& pt) {
    return is_on_curve(equation(e), pt);
}

RationalPoint neg(const RationalPoint& a) {
    if (a.infinity) return a;
    return RationalPoint::affine(a.x, -a.y);
}

RationalPoint add(const CurveEq& e, const RationalPoint& a, const RationalPoint& b) {
    if (!is_on_curve(e, a) || !is_on_curve(e, b))
        throw std::invalid_argument("add: point not on curve");
    if (a.infinity) return b;
    if (b.infinity) return a;
    Rat lambda;
    if (a.x == b.x) {
        if (a.y != b.y || a.y == 0) return RationalPoint::O();  // P + (-P)
        // tangent: (3x^2 + 2 a2 x + a4) / 2y
        lambda = (3 * a.x * a.x + 2 * e.a2 * a.x + e.a4) / (2 * a.y);
    } else {
        lambda = (b.y - a.y) / (b.x - a.x);
    }
    Rat x3 = lambda * lambda - e.a2 - a.x - b.x;
    Rat y3 = lambda * (a.x - x3) - a.y;
    return RationalPoint::affine(x3, y3);
}

RationalPoint multiply(const CurveEq& e, const RationalPoint& a, long n) {
    RationalPoint base = n < 0 ? neg(a) : a;
    if (n < 0) n = -n;
    RationalPoint acc = RationalPoint::O();
    while (n > 0) {
        if (n & 1) acc = add(e, acc, base);
        base = add(e, base, base);
        n >>= 1;
    }
    return acc;
}

RationalPoint phi(const TwinCurve& e, const RationalPoint& pt) {
    if (!is_on_curve(e, pt)) throw std::invalid_argument("phi: point not on E");
    if (pt.infinity || (pt.x == 0 && pt.y == 0)) return RationalPoint::O();
    Rat x2 = pt.x * pt.x;
    return RationalPoint::affine(pt.y * pt.y / x2, pt.y * (e.a4 - x2) / x2);
}

RationalPoint phi_hat(const IsogenousCurve& ep, const RationalPoint& pt) {
    if (!is_on_curve(ep, pt))
        throw std::invalid_argument("phi_hat: point not on E'");
    if (pt.infinity || (pt.x == 0 && pt.y == 0)) return RationalPoint::O();
    Rat x2 = pt.x * pt.x;
    return RationalPoint::affine(pt.y * pt.y / (4 * x2),
                                 pt.y * (4 - x2) / (8 * x2));
}

std::vector<RationalPoint> two_torsion(const TwinCurve& e) {
    return {RationalPoint::O(), RationalPoint::affine(0, 0),
            RationalPoint::affine(Rat(-e.sigma * e.p()), 0),
            RationalPoint::affine(Rat(-e.sigma * e.q()), 0)};
}

Int count_points_mod_raw(const Int& a2, const Int& a4, const Int& ell) {
    Int count = ell + 1;
    Int fx;
    for (Int x = 0; x < ell; ++x) {
        fx = ((x * x + a2 * x + a4) * x) % ell;
        if (fx != 0) count += legendre_unchecked(fx, ell);
    }
    return count;
}

TorsionGroup torsion_over_Q(const TwinCurve& e) {
    const std::vector<unsigned long> good_candidates = {3, 7, 11, 13, 17, 19, 23};
    Int bound = 0;
    for (unsigned long l : good_candidates) {
        Int ell(l);
        if (ell == e.p() || ell == e.q()) continue;
        Int n = count_points_mod_raw(e.a2, e.a4, ell);
        if (ell == 3 && n != 4)
            throw std::logic_error("torsion_over_Q: #E(F_3) != 4");
        bound = bound == 0 ? n : Int(gcd(bound, n));
        if (bound == 4) break;
    }
    if (bound != 4)
        throw std::logic_error("torsion_over_Q: torsion bound did not reach 4");
    TorsionGroup t;
    t.structure = TorsionStructure::Z2xZ2;
    t.generators = {RationalPoint::affine(0, 0),
                    RationalPoint::affine(Rat(-e.sigma * e.p()), 0)};
    return t;
}

}  // namespace twindescent::curve
