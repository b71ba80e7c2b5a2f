#include "twindescent/rank1.hpp"

#include <algorithm>
#include <stdexcept>

namespace twindescent::rank1 {

using arith::exact_sqrt;
using arith::isqrt;

std::optional<TwinSquareWitness> twin_square_criterion(const Int& q) {
    if (q % 4 != 1)
        throw std::invalid_argument("twin_square_criterion: need q = 1 (mod 4)");
    const auto [a, b] = arith::two_squares(q);
    const std::pair<Int, Int> orderings[2] = {{a, b}, {b, a}};
    const std::pair<int, int> signs[4] = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    for (const auto& [x, y] : orderings)
        for (const auto& [eps, delta] : signs) {
            Int sum = (x + eps) * (x + eps) + (y + delta) * (y + delta);
            if (auto c = exact_sqrt(sum))
                return TwinSquareWitness{x, y, eps, delta, *c};
        }
    return std::nullopt;
}

namespace {

bool solves_system(const Int& p, const Int& q, const PrimarySolution& s) {
    const Int lhs1 = s.X * s.X - p * s.Y * s.Y;
    const Int lhs2 = s.X * s.X - q * s.Y * s.Y;
    if (s.system == System::I)
        return lhs1 == s.S * s.S && lhs2 == -(s.T * s.T);
    return lhs1 == 2 * s.S * s.S && lhs2 == -2 * (s.T * s.T);
}

// Builds the integer solution of system (I) attached to a root u = n/d of
// the witness quadratic and reduces it to a primary one.
std::optional<PrimarySolution> from_root(const TwinSquareWitness& w, const Int& n,
                                         const Int& d) {
    const Int q = w.a * w.a + w.b * w.b;
    const Int p = q - 2;
    PrimarySolution s;
    s.system = System::I;
    s.X = 2 * n * d * w.a + (n * n - d * d) * w.b;
    s.Y = n * n + d * d;
    s.S = w.eps * (n * n - d * d) + 2 * w.delta * n * d;
    s.T = w.eps * (n * n - d * d) - 2 * w.delta * n * d;
    Int g = gcd(s.X, s.Y);  // Y > 0, so g >= 1
    s.X = abs(s.X) / g;
    s.Y = s.Y / g;
    s.S = abs(s.S) / g;
    s.T = abs(s.T) / g;
    if (!solves_system(p, q, s) || gcd(s.X, s.Y) != 1) return std::nullopt;
    return s;
}

}  // namespace

PrimarySolution witness_to_primary(const TwinSquareWitness& w_in) {
    TwinSquareWitness w = w_in;
    if (w.a + w.eps == 0) {
        // Same witness with the two squares swapped; a + eps and b + delta
        // cannot both vanish unless q = 2.
        std::swap(w.a, w.b);
        std::swap(w.eps, w.delta);
        if (w.a + w.eps == 0)
            throw std::invalid_argument("witness_to_primary: a + eps = 0");
    }
    // (a+eps) u^2 - 2(b+delta) u - (a+eps) = 0 has discriminant (2c)^2.
    const Int den = w.a + w.eps;
    for (const Int& num : {Int(w.b + w.delta + w.c), Int(w.b + w.delta - w.c)}) {
        Int n = num, d = den;
        Int g = gcd(n, d);
        if (g != 0) n /= g, d /= g;
        if (auto s = from_root(w, n, d)) return *s;
    }
    throw std::logic_error("witness_to_primary: construction failed");
}

std::optional<PrimarySolution> primary_solution(const Int& p, const Int& q,
                                                System system, const Int& bound) {
    if (bound < 1 || bound > 1000000)
        throw std::invalid_argument("primary_solution: bound out of range");
    for (Int Y = 1; Y <= bound; ++Y) {
        const Int pyy = p * Y * Y, qyy = q * Y * Y;
        Int X = isqrt(pyy);
        if (X * X < pyy) ++X;  // X >= sqrt(p) Y, else S^2 < 0
        for (; X * X <= qyy; ++X) {
            if (gcd(X, Y) != 1) continue;
            Int s2 = X * X - pyy, t2 = qyy - X * X;
            if (system == System::II) {
                if (s2 % 2 != 0 || t2 % 2 != 0) continue;
                s2 /= 2;
                t2 /= 2;
            }
            auto S = exact_sqrt(s2);
            if (!S) continue;
            auto T = exact_sqrt(t2);
            if (!T) continue;
            return PrimarySolution{X, Y, *S, *T, system};
        }
    }
    return std::nullopt;
}

RationalPoint primary_to_curve_point(const PrimarySolution& sol, const TwinCurve& e) {
    if (e.sigma != 1)
        throw std::invalid_argument("primary_to_curve_point: needs sigma = +1");
    if (!solves_system(e.p(), e.q(), sol))
        throw std::invalid_argument("primary_to_curve_point: invalid solution");
    Rat x0(sol.X, sol.Y);
    x0.canonicalize();
    Rat y0(sol.S * sol.T, sol.Y * sol.Y);
    y0.canonicalize();
    if (sol.system == System::II) y0 *= 2;
    // (x0, y0) lies on C'_(-1): y^2 = -x^4 + (p+q)x^2 - pq; push it through
    // the covering (x, y) |-> (d1 x^2, d1 x y) with d1 = -1.
    RationalPoint pt = RationalPoint::affine(-x0 * x0, -x0 * y0);
    if (!curve::is_on_curve(e, pt))
        throw std::logic_error("primary_to_curve_point: image not on E");
    for (const RationalPoint& t : curve::two_torsion(e))
        if (pt == t)
            throw std::logic_error("primary_to_curve_point: image is torsion");
    return pt;
}

std::optional<RankOneCertificate> rank_one_certificate(const TwinCurve& e) {
    if (e.sigma != 1) return std::nullopt;
    if (e.p() % 8 != 3) return std::nullopt;
    auto w = twin_square_criterion(e.q());  // q = p + 2 = 5 (mod 8)
    if (!w) return std::nullopt;
    RankOneCertificate cert;
    cert.witness = *w;
    cert.solution = witness_to_primary(*w);
    cert.point = primary_to_curve_point(cert.solution, e);
    return cert;
}

std::vector<RationalPoint> point_search(const TwinCurve& e, const Int& height_bound) {
    if (height_bound < 1 || height_bound > 100000)
        throw std::invalid_argument("point_search: height bound out of range");
    std::vector<RationalPoint> out;
    for (Int den = 1; den <= height_bound; ++den) {
        const Int e2 = den * den, e4 = e2 * e2;
        const Int e3 = e2 * den;
        for (Int m = -height_bound; m <= height_bound; ++m) {
            if (gcd(m, den) != 1) continue;
            Int n2 = m * (m * m + e.a2 * m * e2 + e.a4 * e4);
            if (n2 < 0) continue;
            auto n = exact_sqrt(n2);
            if (!n) continue;
            Rat x(m, e2), y(*n, e3);
            x.canonicalize();
            y.canonicalize();
            out.push_back(RationalPoint::affine(x, y));
            if (*n != 0) out.push_back(RationalPoint::affine(x, -y));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RationalPoint& a, const RationalPoint& b) {
                  Int ha = std::max(Int(abs(a.x.get_num())), Int(a.x.get_den()));
                  Int hb = std::max(Int(abs(b.x.get_num())), Int(b.x.get_den()));
                  if (ha != hb) return ha < hb;
                  if (a.x != b.x) return a.x < b.x;
                  return a.y < b.y;
              });
    return out;
}

}  // namespace twindescent::rank1
