#pragma once

// Test-only reference implementations, kept independent of the library code
// paths they check: trial division instead of Miller-Rabin, a plain sieve,
// exhaustive searches, and an unpruned residue-enumeration oracle for the
// ell-adic solvability decision.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "twindescent/arith.hpp"
#include "twindescent/localsolve.hpp"

namespace oracles {

using twindescent::Int;
using twindescent::localsolve::Quartic;

inline bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> sieve_twins(
    std::uint64_t limit) {
    std::vector<bool> is_comp(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!is_comp[i])
            for (std::uint64_t j = 2 * i; j <= limit; j += i) is_comp[j] = true;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t p = 2; p + 2 <= limit; ++p)
        if (!is_comp[p] && !is_comp[p + 2]) out.emplace_back(p, p + 2);
    return out;
}

// v_ell by repeated division; n != 0.
inline long slow_valuation(Int n, const Int& ell) {
    long v = 0;
    while (n % ell == 0) {
        n /= ell;
        ++v;
    }
    return v;
}

// Is c congruent to a square modulo ell^k (k >= 1)? Decided exactly; this is
// what "enumerate all y mod ell^k" computes.
inline bool square_congruence_solvable(const Int& c, const Int& ell, long k) {
    Int mod = 1;
    for (long i = 0; i < k; ++i) mod *= ell;
    Int r = c % mod;
    if (r < 0) r += mod;
    if (r == 0) return true;
    long v = slow_valuation(r, ell);
    if (v >= k) return true;
    if (v % 2 != 0) return false;
    Int u = r;
    for (long i = 0; i < v; ++i) u /= ell;
    if (ell == 2) {
        long known = k - v;
        if (known >= 3) return u % 8 == 1;
        if (known == 2) return u % 4 == 1;
        return true;
    }
    return twindescent::arith::legendre_unchecked(u, ell) == 1;
}

// Exact ell-adic square test on a nonzero integer.
inline bool exact_square_in_Zl(const Int& c, const Int& ell) {
    long v = slow_valuation(c, ell);
    if (v % 2 != 0) return false;
    Int u = c;
    for (long i = 0; i < v; ++i) u /= ell;
    if (ell == 2) return ((u % 8) + 8) % 8 == 1;
    return twindescent::arith::legendre_unchecked(u, ell) == 1;
}

// Unpruned breadth-first enumeration: every residue class that still admits
// y^2 = g(x) as a congruence is refined, up to the same depth bound the
// library search uses; acceptance is the same exact-square / Hensel rule.
inline bool unpruned_solvable(const Quartic& g, const Int& ell) {
    const long k_max = twindescent::localsolve::lift_depth_bound(g, ell);
    std::vector<Int> classes{Int(0)};
    Int ek = 1;  // ell^k
    for (long k = 0; k <= k_max; ++k) {
        std::vector<Int> next;
        for (const Int& x0 : classes) {
            Int c = g.eval(x0);
            if (c == 0) return true;
            if (exact_square_in_Zl(c, ell)) return true;
            Int gp = g.deriv(x0);
            if (gp != 0 && slow_valuation(c, ell) > 2 * slow_valuation(gp, ell))
                return true;
            if (k == k_max) continue;
            for (Int t = 0; t < ell; ++t) {
                Int child = x0 + t * ek;
                if (square_congruence_solvable(g.eval(child), ell, k + 1))
                    next.push_back(child);
            }
        }
        classes = std::move(next);
        ek *= ell;
        if (classes.empty()) break;
    }
    return false;
}

}  // namespace oracles
