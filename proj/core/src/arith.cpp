#include "twindescent/arith.hpp"

#include <stdexcept>

namespace twindescent::arith {

namespace {

constexpr unsigned kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                     29, 31, 37, 41, 43, 47, 53, 59, 61,
                                     67, 71, 73, 79, 83, 89, 97};

// Witnesses proving primality for every n < 3.317e24 (Sorenson-Webster).
constexpr unsigned kDeterministicWitnesses[] = {2,  3,  5,  7,  11, 13,
                                                17, 19, 23, 29, 31, 37};
// Extra witnesses for larger inputs; 40 rounds total.
constexpr unsigned kExtraWitnesses[] = {
    41,  43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97, 101,
    103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};

const Int& deterministic_limit() {
    static const Int limit("3317044064679887385961981");
    return limit;
}

// One Miller-Rabin round: true means "n may be prime".
bool witness_passes(const Int& n, const Int& a, const Int& d, unsigned long r) {
    Int x = mod_pow(a, d, n);
    const Int n1 = n - 1;
    if (x == 1 || x == n1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (unsigned p : kSmallPrimes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    // n odd and > 97^2 would be needed for full trial division; go straight
    // to Miller-Rabin with n-1 = 2^r d.
    Int d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);

    for (unsigned a : kDeterministicWitnesses)
        if (!witness_passes(n, Int(a), d, r)) return false;
    if (n < deterministic_limit()) return true;
    for (unsigned a : kExtraWitnesses)
        if (!witness_passes(n, Int(a), d, r)) return false;
    return true;
}

PrimePair::PrimePair(Int p_, Int q_) : p(std::move(p_)), q(std::move(q_)) {
    if (q - p != 2) throw std::invalid_argument("PrimePair: q - p != 2");
    if (p < 3) throw std::invalid_argument("PrimePair: p < 3");
    if (!is_prime(p)) throw std::invalid_argument("PrimePair: p is not prime");
    if (!is_prime(q)) throw std::invalid_argument("PrimePair: q is not prime");
}

std::vector<PrimePair> twin_prime_pairs(std::uint64_t limit) {
    if (limit > (1ull << 32))
        throw std::invalid_argument("twin_prime_pairs: limit above 2^32");
    std::vector<PrimePair> out;
    if (limit < 5) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    for (std::uint64_t p = 3; p + 2 <= limit; p += 2)
        if (!composite[p] && !composite[p + 2])
            out.emplace_back(Int(static_cast<unsigned long>(p)),
                             Int(static_cast<unsigned long>(p + 2)));
    return out;
}

int legendre_unchecked(const Int& a, const Int& ell) {
    return mpz_legendre(a.get_mpz_t(), ell.get_mpz_t());
}

int legendre(const Int& a, const Int& ell) {
    if (ell < 3 || mpz_even_p(ell.get_mpz_t()) || !is_prime(ell))
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    return legendre_unchecked(a, ell);
}

long valuation(const Int& n, const Int& ell) {
    if (n == 0) throw std::domain_error("valuation: v(0) is infinite");
    Int cofactor;
    return static_cast<long>(
        mpz_remove(cofactor.get_mpz_t(), n.get_mpz_t(), ell.get_mpz_t()));
}

long valuation(const Rat& n, const Int& ell) {
    if (n == 0) throw std::domain_error("valuation: v(0) is infinite");
    return valuation(Int(n.get_num()), ell) - valuation(Int(n.get_den()), ell);
}

Int mod_pow(const Int& base, const Int& exp, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("mod_inverse: not invertible");
    return r;
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    return isqrt(n);
}

std::optional<Int> sqrt_mod(const Int& a, const Int& ell) {
    if (ell < 3 || mpz_even_p(ell.get_mpz_t()) || !is_prime(ell))
        throw std::invalid_argument("sqrt_mod: modulus must be an odd prime");
    Int r = a % ell;
    if (r < 0) r += ell;
    if (r == 0) return Int(0);
    if (legendre_unchecked(r, ell) != 1) return std::nullopt;

    // Tonelli-Shanks. Write ell - 1 = 2^s * t with t odd.
    Int t = ell - 1;
    unsigned long s = mpz_scan1(t.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), s);

    // Any quadratic nonresidue works as the seed; scan small integers.
    Int z = 2;
    while (legendre_unchecked(z, ell) != -1) ++z;

    Int m(static_cast<unsigned long>(s));
    Int c = mod_pow(z, t, ell);
    Int x = mod_pow(r, (t + 1) / 2, ell);
    Int u = mod_pow(r, t, ell);
    while (u != 1) {
        Int v = u;
        long i = 0;
        while (v != 1) {
            v = (v * v) % ell;
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = (b * b) % ell;
        x = (x * b) % ell;
        c = (b * b) % ell;
        u = (u * c) % ell;
        m = i;
    }
    Int other = ell - x;
    return x < other ? x : other;
}

std::pair<Int, Int> two_squares(const Int& q) {
    if (!is_prime(q) || q % 4 != 1)
        throw std::invalid_argument("two_squares: need a prime q = 1 (mod 4)");
    // Cornacchia: run Euclid on (q, sqrt(-1)) down to the first remainder
    // below sqrt(q); it is one leg of the representation.
    Int x = *sqrt_mod(q - 1, q);  // a root of -1 mod q
    Int bound = isqrt(q);
    Int a = q, b = x;
    while (b > bound) {
        Int r = a % b;
        a = b;
        b = r;
    }
    Int other = *exact_sqrt(q - b * b);
    if (b > other) std::swap(b, other);
    return {b, other};
}

}  // namespace twindescent::arith
