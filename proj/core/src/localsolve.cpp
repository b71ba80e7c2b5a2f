#include "twindescent/localsolve.hpp"

#include <limits>
#include <stdexcept>

#include "twindescent/polymod.hpp"

namespace twindescent::localsolve {

using arith::is_prime;
using arith::legendre_unchecked;

namespace {

constexpr long kValInf = std::numeric_limits<long>::max() / 4;
constexpr unsigned long kEnumerateMaxEll = 50;  // above this, residue trees
                                                // are steered analytically
constexpr long kNodeBudget = 1 << 20;

// valuation + unit part in one call; c != 0
long strip(const Int& c, const Int& ell, Int& unit) {
    return static_cast<long>(
        mpz_remove(unit.get_mpz_t(), c.get_mpz_t(), ell.get_mpz_t()));
}

bool unit_square_mod8(const Int& u) { return ((u % 8) + 8) % 8 == 1; }

}  // namespace

std::string family_name(Family f) { return f == Family::C ? "C" : "Cprime"; }

std::string LocalPlace::str() const {
    return infinite ? "inf" : ell.get_str();
}

QuarticSpace::QuarticSpace(Family fam, Int d1_, const TwinCurve& e)
    : family(fam), d1(std::move(d1_)), parent(e) {
    if (d1 == 0) throw std::invalid_argument("QuarticSpace: d1 = 0");
    if (family == Family::C) {
        if (!mpz_divisible_p(Int(4).get_mpz_t(), d1.get_mpz_t()) || abs(d1) == 4)
            throw std::invalid_argument(
                "QuarticSpace: d1 must be a squarefree divisor of 4");
        d2 = 4 / d1;
        A = -2 * e.a2;  // -2 sigma (p+q)
    } else {
        Int pq = e.p() * e.q();
        if (!mpz_divisible_p(pq.get_mpz_t(), d1.get_mpz_t()))
            throw std::invalid_argument(
                "QuarticSpace: d1 must be a squarefree divisor of pq");
        d2 = pq / d1;
        A = e.a2;  // sigma (p+q)
    }
    if (A * A == 4 * d1 * d2)
        throw std::invalid_argument("QuarticSpace: degenerate quartic");
}

bool solvable_real(const QuarticSpace& q) {
    if (q.d1 > 0 || q.d2 >= 0) return true;
    // downward parabola in t = x^2 with negative endpoints; needs its vertex
    // at positive t with nonnegative value
    return q.A > 0 && q.A * q.A >= 4 * q.d1 * q.d2;
}

bool is_square_in_Q2(const Rat& r) { return is_square_in_Ql(r, 2); }

bool is_square_in_Ql(const Rat& r, const Int& ell) {
    if (r == 0) throw std::domain_error("is_square_in_Ql: r = 0");
    if (!is_prime(ell)) throw std::invalid_argument("is_square_in_Ql: ell not prime");
    Int nu, du;
    long v = strip(Int(r.get_num()), ell, nu) - strip(Int(r.get_den()), ell, du);
    if (v % 2 != 0) return false;
    if (ell == 2) return ((nu % 8) + 8) % 8 == ((du % 8) + 8) % 8;
    if (nu < 0) nu = -nu, du = -du;  // chi(n/d) = chi(n d)
    return legendre_unchecked(nu * du, ell) == 1;
}

bool hensel_liftable(const std::vector<Int>& f, const Int& x0, const Int& ell) {
    Int value = 0, deriv = 0;
    for (size_t i = f.size(); i-- > 0;) {
        deriv = deriv * x0 + value;
        value = value * x0 + f[i];
    }
    if (value == 0) return deriv != 0;
    if (deriv == 0) return false;
    Int u;
    return strip(value, ell, u) > 2 * strip(deriv, ell, u);
}

bool hensel_liftable(const std::vector<BivariateTerm>& f, const Int& x0,
                     const Int& y0, const Int& ell) {
    Int value = 0, fx = 0, fy = 0;
    for (const BivariateTerm& t : f) {
        Int xi = 1, yj = 1;
        for (unsigned k = 0; k < t.i; ++k) xi *= x0;
        for (unsigned k = 0; k < t.j; ++k) yj *= y0;
        value += t.c * xi * yj;
        if (t.i > 0) {
            Int xim = 1;
            for (unsigned k = 0; k + 1 < t.i; ++k) xim *= x0;
            fx += t.c * t.i * xim * yj;
        }
        if (t.j > 0) {
            Int yjm = 1;
            for (unsigned k = 0; k + 1 < t.j; ++k) yjm *= y0;
            fy += t.c * t.j * xi * yjm;
        }
    }
    Int u;
    if (value == 0) return fx != 0 || fy != 0;
    const long lam = strip(value, ell, u);
    if (fx != 0 && lam > 2 * strip(fx, ell, u)) return true;
    if (fy != 0 && lam > 2 * strip(fy, ell, u)) return true;
    return false;
}

Quartic Quartic::even(const Int& d1, const Int& A, const Int& d2) {
    Quartic g;
    g.c[0] = d2;
    g.c[1] = 0;
    g.c[2] = A;
    g.c[3] = 0;
    g.c[4] = d1;
    return g;
}

Quartic Quartic::reciprocal() const {
    Quartic g;
    for (int i = 0; i < 5; ++i) g.c[i] = c[4 - i];
    return g;
}

Int Quartic::eval(const Int& x) const {
    return (((c[4] * x + c[3]) * x + c[2]) * x + c[1]) * x + c[0];
}

Int Quartic::deriv(const Int& x) const {
    return ((4 * c[4] * x + 3 * c[3]) * x + 2 * c[2]) * x + c[1];
}

Int Quartic::disc() const {
    const Int &a = c[4], &b = c[3], &cc = c[2], &d = c[1], &e = c[0];
    return 256 * a * a * a * e * e * e - 192 * a * a * b * d * e * e -
           128 * a * a * cc * cc * e * e + 144 * a * a * cc * d * d * e -
           27 * a * a * d * d * d * d + 144 * a * b * b * cc * e * e -
           6 * a * b * b * d * d * e - 80 * a * b * cc * cc * d * e +
           18 * a * b * cc * d * d * d + 16 * a * cc * cc * cc * cc * e -
           4 * a * cc * cc * cc * d * d - 27 * b * b * b * b * e * e +
           18 * b * b * b * cc * d * e - 4 * b * b * b * d * d * d -
           4 * b * b * cc * cc * cc * e + b * b * cc * cc * d * d;
}

long lift_depth_bound(const Quartic& g, const Int& ell) {
    Int disc = g.disc();
    if (disc == 0)
        throw std::invalid_argument("lift_depth_bound: degenerate quartic");
    Int u;
    return strip(disc, ell, u) + (ell == 2 ? 2 : 0) + 3;
}

namespace {

// Residue-tree search for Z_ell points of y^2 = g(x). Classes x = x0
// (mod ell^k) refine breadth-first; a class is accepted as soon as the
// exact value g(x0) is an ell-adic square (or zero, or a root of g is
// Hensel-reachable), and discarded once no member can give a square:
// along the class, v(g(x)) and the unit part are pinned down modulo
// ell^min(mu+k, 2k), so an odd valuation or a nonsquare unit kills it.
struct LiftSearcher {
    const Quartic& g;
    const Int ell;
    const long k_max;
    const bool odd;
    long nodes = 0;
    std::optional<LiftWitness> found;

    enum class Verdict { Accept, Dead, Refine };

    LiftSearcher(const Quartic& g_, const Int& ell_)
        : g(g_), ell(ell_), k_max(lift_depth_bound(g_, ell_)), odd(ell_ != 2) {}

    Verdict classify(const Int& x0, long k) const {
        Int c = g.eval(x0);
        if (c == 0) return Verdict::Accept;
        Int u;
        const long lam = strip(c, ell, u);
        const bool lam_even = lam % 2 == 0;
        if (lam_even &&
            (odd ? legendre_unchecked(u, ell) == 1 : unit_square_mod8(u)))
            return Verdict::Accept;
        Int gp = g.deriv(x0);
        Int gpu;
        const long mu = gp == 0 ? kValInf : strip(gp, ell, gpu);
        if (lam > 2 * mu) return Verdict::Accept;  // g has a root near x0
        const long dim = std::min(mu + k, 2 * k);
        if (lam >= dim) return Verdict::Refine;
        if (!lam_even) return Verdict::Dead;
        if (odd) return Verdict::Dead;  // nonsquare unit pinned mod ell
        const long known = dim - lam;   // unit known mod 2^known
        if (known >= 3) return Verdict::Dead;
        if (known == 2 && ((u % 4) + 4) % 4 == 3) return Verdict::Dead;
        return Verdict::Refine;
    }

    bool run() {
        return refine(0, 0, Int(1));
    }

    // x = x0 (mod ell^k) needs refinement; ek = ell^k
    bool refine(const Int& x0, long k, const Int& ek) {
        if (++nodes > kNodeBudget)
            throw std::logic_error("lift_search: node budget exceeded");
        if (k >= k_max)
            throw std::logic_error("lift_search: undecided at depth bound");
        if (!odd || mpz_cmp_ui(ell.get_mpz_t(), kEnumerateMaxEll) <= 0)
            return refine_enumerate(x0, k, ek);
        return refine_analytic(x0, k, ek);
    }

    bool child(const Int& x1, long k1, const Int& ek1) {
        switch (classify(x1, k1)) {
            case Verdict::Accept:
                found = LiftWitness{x1, k1};
                return true;
            case Verdict::Dead:
                return false;
            case Verdict::Refine:
                return refine(x1, k1, ek1);
        }
        return false;
    }

    bool refine_enumerate(const Int& x0, long k, const Int& ek) {
        const Int ek1 = ek * ell;
        for (Int t = 0; t < ell; ++t)
            if (child(x0 + t * ek, k + 1, ek1)) return true;
        return false;
    }

    // Large odd ell: the value polynomial P(t) = g(x0 + ell^k t) = ell^e h(t)
    // with h nonzero mod ell. A child with h(t) != 0 has value valuation
    // exactly e and unit = h(t) (mod ell), so it accepts iff e is even and
    // h(t) is a nonzero square; otherwise it is dead (its classify() would
    // say the same, since v(g') >= e - k on all children). Only the roots of
    // h need visiting.
    bool refine_analytic(const Int& x0, long k, const Int& ek) {
        const Int ek1 = ek * ell;
        Int T[5];
        T[0] = g.eval(x0);
        T[1] = g.deriv(x0) * ek;
        T[2] = (6 * g.c[4] * x0 * x0 + 3 * g.c[3] * x0 + g.c[2]) * ek * ek;
        T[3] = (4 * g.c[4] * x0 + g.c[3]) * ek * ek * ek;
        T[4] = g.c[4] * ek * ek * ek * ek;

        long e = kValInf;
        Int u;
        for (const Int& ti : T)
            if (ti != 0) e = std::min(e, strip(ti, ell, u));
        if (e >= kValInf) throw std::logic_error("lift_search: zero quartic");

        Int scale = 1;
        for (long i = 0; i < e; ++i) scale *= ell;
        std::vector<Int> hc(5);
        for (int i = 0; i < 5; ++i) hc[static_cast<size_t>(i)] = T[i] / scale;
        polymod::Poly h = polymod::reduce(hc, ell);

        if (e % 2 == 0) {
            const bool const_square = polymod::is_constant_times_square(h, ell);
            if (!const_square || legendre_unchecked(h.back(), ell) == 1) {
                // an accepting nonroot child exists; scan for the first
                for (Int t = 0; t < ell; ++t) {
                    Int ht = polymod::eval(h, t, ell);
                    if (ht != 0 && legendre_unchecked(ht, ell) == 1) {
                        Int x1 = x0 + t * ek;
                        if (classify(x1, k + 1) != Verdict::Accept)
                            throw std::logic_error("lift_search: analytic accept mismatch");
                        found = LiftWitness{x1, k + 1};
                        return true;
                    }
                }
                throw std::logic_error("lift_search: accepting child not found");
            }
        }
        // No nonroot child can accept; they are all dead provided e stays
        // below 2k+2, which holds throughout this family (the x^2
        // coefficient of g never vanishes to order 2 along a root chain).
        if (e >= 2 * k + 2)
            throw std::logic_error("lift_search: degenerate deep refinement");
        for (const Int& t : polymod::roots(h, ell))
            if (child(x0 + t * ek, k + 1, ek1)) return true;
        return false;
    }
};

}  // namespace

std::optional<LiftWitness> lift_search(const Quartic& g, const Int& ell) {
    LiftSearcher s(g, ell);
    s.run();
    return s.found;
}

bool lift_search_solvable(const Quartic& g, const Int& ell) {
    return lift_search(g, ell).has_value();
}

bool reduction_nonsquare_test(const Int& d1, const Int& A, const Int& d2,
                              const Int& ell) {
    if (ell == 2 || !is_prime(ell))
        throw std::invalid_argument("reduction_nonsquare_test: need odd prime");
    Quartic g = Quartic::even(d1, A, d2);
    if (g.disc() == 0)
        throw std::invalid_argument("reduction_nonsquare_test: degenerate quartic");
    polymod::Poly gbar = polymod::reduce({d2, Int(0), A, Int(0), d1}, ell);
    if (polymod::degree(gbar) < 1) return false;
    return !polymod::is_constant_times_square(gbar, ell);
}

bool reduction_nonsquare_test(const QuarticSpace& q, const Int& ell) {
    return reduction_nonsquare_test(q.d1, q.A, q.d2, ell);
}

bool solvable_at(const QuarticSpace& q, const Int& ell) {
    if (!is_prime(ell)) throw std::invalid_argument("solvable_at: ell not prime");
    if (ell != 2 && reduction_nonsquare_test(q, ell)) return true;
    Quartic g = Quartic::even(q.d1, q.A, q.d2);
    return lift_search_solvable(g, ell) ||
           lift_search_solvable(g.reciprocal(), ell);
}

std::optional<std::pair<LiftWitness, bool>> solvable_at_witness(
    const QuarticSpace& q, const Int& ell) {
    if (!is_prime(ell))
        throw std::invalid_argument("solvable_at_witness: ell not prime");
    Quartic g = Quartic::even(q.d1, q.A, q.d2);
    if (auto w = lift_search(g, ell)) return std::make_pair(*w, false);
    if (auto w = lift_search(g.reciprocal(), ell)) return std::make_pair(*w, true);
    return std::nullopt;
}

bool solvable_everywhere(const QuarticSpace& q) {
    if (!solvable_real(q)) return false;
    for (const Int& ell : {Int(2), q.parent.p(), q.parent.q()})
        if (!solvable_at(q, ell)) return false;
    return true;
}

}  // namespace twindescent::localsolve
