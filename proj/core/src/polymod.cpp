#include "twindescent/polymod.hpp"

#include <algorithm>
#include <stdexcept>

namespace twindescent::polymod {

namespace {

using arith::mod_inverse;

Int mod(const Int& a, const Int& ell) {
    Int r = a % ell;
    if (r < 0) r += ell;
    return r;
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly sub(const Poly& a, const Poly& b, const Int& ell) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] - b[i], ell);
    trim(r);
    return r;
}

Poly pow_mod(const Poly& base, const Int& e, const Poly& f, const Int& ell) {
    Poly result{Int(1)};
    Poly b = rem(base, f, ell);
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result, ell), f, ell);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = rem(mul(result, b, ell), f, ell);
    }
    return result;
}

std::vector<Int> roots_by_enumeration(const Poly& f, const Int& ell) {
    std::vector<Int> out;
    for (Int x = 0; x < ell; ++x)
        if (eval(f, x, ell) == 0) out.push_back(x);
    return out;
}

// f is monic, squarefree and splits into distinct linear factors.
void split_linear_product(const Poly& f, const Int& ell, std::vector<Int>& out) {
    int d = degree(f);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(mod(-f[0], ell));
        return;
    }
    // Probe with the quadratic character of x + s: gcd(f, (x+s)^((ell-1)/2) - 1)
    // separates roots r1, r2 whenever chi(r1+s) != chi(r2+s).
    const Int half = (ell - 1) / 2;
    for (unsigned long s = 0; s < 200; ++s) {
        Poly probe = pow_mod(Poly{Int(s), Int(1)}, half, f, ell);
        probe = sub(probe, Poly{Int(1)}, ell);
        Poly h = gcd(f, probe, ell);
        int dh = degree(h);
        if (dh > 0 && dh < d) {
            split_linear_product(h, ell, out);
            // divide f by h
            Poly q;  // long division, exact
            Poly r = f;
            q.assign(static_cast<size_t>(d - dh) + 1, Int(0));
            while (degree(r) >= dh) {
                int k = degree(r) - dh;
                Int c = r[degree(r)];  // h is monic
                q[static_cast<size_t>(k)] = c;
                Poly shifted(static_cast<size_t>(k), Int(0));
                for (const Int& hc : h) shifted.push_back(mod(hc * c, ell));
                r = sub(r, shifted, ell);
            }
            split_linear_product(q, ell, out);
            return;
        }
    }
    // Character probes failed to separate (astronomically unlikely); fall
    // back to enumeration, which is always correct.
    auto found = roots_by_enumeration(f, ell);
    out.insert(out.end(), found.begin(), found.end());
}

}  // namespace

Poly reduce(const std::vector<Int>& coeffs, const Int& ell) {
    Poly f;
    f.reserve(coeffs.size());
    for (const Int& c : coeffs) f.push_back(mod(c, ell));
    trim(f);
    return f;
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Int eval(const Poly& f, const Int& x, const Int& ell) {
    Int acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = mod(acc * x + f[i], ell);
    return acc;
}

Poly derivative(const Poly& f, const Int& ell) {
    Poly d;
    for (size_t i = 1; i < f.size(); ++i)
        d.push_back(mod(f[i] * static_cast<unsigned long>(i), ell));
    trim(d);
    return d;
}

Poly mul(const Poly& a, const Poly& b, const Int& ell) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod(r[i + j] + a[i] * b[j], ell);
    trim(r);
    return r;
}

Poly rem(const Poly& a, const Poly& b, const Int& ell) {
    if (b.empty()) throw std::domain_error("polymod::rem: division by zero");
    Poly r = a;
    const int db = degree(b);
    const Int inv_lead = mod_inverse(b.back(), ell);
    while (degree(r) >= db) {
        int k = degree(r) - db;
        Int c = mod(r[r.size() - 1] * inv_lead, ell);
        for (int i = 0; i <= db; ++i)
            r[static_cast<size_t>(k + i)] =
                mod(r[static_cast<size_t>(k + i)] - c * b[static_cast<size_t>(i)], ell);
        trim(r);
    }
    return r;
}

Poly make_monic(const Poly& f, const Int& ell) {
    if (f.empty()) return f;
    Poly r = f;
    Int inv = mod_inverse(f.back(), ell);
    for (Int& c : r) c = mod(c * inv, ell);
    return r;
}

Poly gcd(const Poly& a, const Poly& b, const Int& ell) {
    Poly x = a, y = b;
    while (!y.empty()) {
        Poly r = rem(x, y, ell);
        x = std::move(y);
        y = std::move(r);
    }
    return x.empty() ? x : make_monic(x, ell);
}

Poly x_pow_mod(const Int& n, const Poly& f, const Int& ell) {
    return pow_mod(Poly{Int(0), Int(1)}, n, f, ell);
}

std::vector<Int> roots(const Poly& f, const Int& ell) {
    if (f.empty()) throw std::domain_error("polymod::roots: zero polynomial");
    std::vector<Int> out;
    if (degree(f) == 0) return out;
    if (ell <= 64) {
        out = roots_by_enumeration(f, ell);
    } else {
        // gcd(f, x^ell - x) is the product of the distinct linear factors.
        Poly xq = x_pow_mod(ell, f, ell);
        Poly lin = gcd(f, sub(xq, Poly{Int(0), Int(1)}, ell), ell);
        split_linear_product(lin, ell, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_constant_times_square(const Poly& f, const Int& ell) {
    const int d = degree(f);
    if (d <= 0) return true;
    if (d % 2 != 0) return false;
    if (d == 2) {
        // a(x + b/2a)^2 exactly when the discriminant vanishes
        return mod(f[1] * f[1] - 4 * f[2] * f[0], ell) == 0;
    }
    // d == 4: compare against (x^2 + alpha x + beta)^2 after making monic
    const Int inv_lead = mod_inverse(f.back(), ell);
    const Int inv2 = mod_inverse(Int(2), ell);
    Int w3 = mod(f[3] * inv_lead, ell);
    Int w2 = mod(f[2] * inv_lead, ell);
    Int w1 = mod(f[1] * inv_lead, ell);
    Int w0 = mod(f[0] * inv_lead, ell);
    Int alpha = mod(w3 * inv2, ell);
    Int beta = mod((w2 - alpha * alpha) * inv2, ell);
    return mod(w1 - 2 * alpha * beta, ell) == 0 &&
           mod(w0 - beta * beta, ell) == 0;
}

}  // namespace twindescent::polymod
