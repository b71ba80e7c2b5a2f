#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace twindescent {

/// Arbitrary-precision integer. All curve and descent arithmetic is exact.
using Int = mpz_class;
/// Arbitrary-precision rational, always stored reduced with positive denominator.
using Rat = mpq_class;

namespace arith {

/// A pair of twin primes (p, q) with q = p + 2 and p >= 3.
/// The constructor checks both primality conditions and throws
/// std::invalid_argument if any of them fails.
struct PrimePair {
    Int p;
    Int q;

    PrimePair(Int p_, Int q_);
    explicit PrimePair(const Int& p_) : PrimePair(p_, p_ + 2) {}
};

/// Miller-Rabin primality test.
///
/// Uses the 12 witnesses {2,3,...,37}, which decide primality correctly for
/// all n < 3.317e24 (in particular for everything 64-bit). Larger inputs run
/// 40 fixed witnesses, so a composite slips through with probability < 4^-40.
bool is_prime(const Int& n);

/// All twin pairs (p, p+2) with p+2 <= limit, ascending in p.
std::vector<PrimePair> twin_prime_pairs(std::uint64_t limit);

/// Legendre symbol (a/ell) in {-1, 0, +1}; 0 iff ell | a.
/// Throws std::invalid_argument unless ell is an odd prime.
int legendre(const Int& a, const Int& ell);

/// ell-adic valuation v_ell(n). Throws std::domain_error on n = 0
/// (v(0) = infinity has no integer value).
long valuation(const Int& n, const Int& ell);
/// v_ell of a rational; negative when ell divides the denominator.
long valuation(const Rat& n, const Int& ell);

/// Square root of a modulo an odd prime ell, via Tonelli-Shanks.
/// Returns the smaller of the two roots (min(x, ell-x)), or nullopt when
/// (a/ell) = -1. sqrt_mod(0, ell) = 0.
std::optional<Int> sqrt_mod(const Int& a, const Int& ell);

/// Writes a prime q = 1 (mod 4) as a^2 + b^2 with a < b (Cornacchia, seeded
/// by sqrt_mod(-1, q)). Throws std::invalid_argument for other inputs.
std::pair<Int, Int> two_squares(const Int& q);

// -- small exact-arithmetic helpers shared across the library --

/// (base^exp) mod m, exp >= 0.
Int mod_pow(const Int& base, const Int& exp, const Int& m);
/// Inverse of a mod m; throws std::domain_error when gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);
/// Floor of sqrt(n), n >= 0.
Int isqrt(const Int& n);
/// sqrt(n) when n is a perfect square, nullopt otherwise (n < 0 included).
std::optional<Int> exact_sqrt(const Int& n);
/// Legendre symbol without the primality check on ell; callers guarantee
/// ell is an odd prime. Used on hot paths (point counts, residue trees).
int legendre_unchecked(const Int& a, const Int& ell);

}  // namespace arith
}  // namespace twindescent
