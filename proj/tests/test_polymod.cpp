#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twindescent/polymod.hpp"

using namespace twindescent;
using namespace twindescent::polymod;

namespace {

std::vector<Int> enumerate_roots(const Poly& f, const Int& ell) {
    std::vector<Int> out;
    for (Int x = 0; x < ell; ++x)
        if (eval(f, x, ell) == 0) out.push_back(x);
    return out;
}

bool brute_constant_times_square(const Poly& f, long ell) {
    // try every c * (s2 x^2 + s1 x + s0)^2 over F_ell
    const Int L(ell);
    for (long c = 1; c < ell; ++c)
        for (long s2 = 0; s2 < ell; ++s2)
            for (long s1 = 0; s1 < ell; ++s1)
                for (long s0 = 0; s0 < ell; ++s0) {
                    Poly s = reduce({Int(s0), Int(s1), Int(s2)}, L);
                    Poly candidate = mul(s, s, L);
                    for (Int& coef : candidate) coef = coef * c % L;
                    candidate = reduce(candidate, L);
                    if (candidate == f) return true;
                }
    return false;
}

}  // namespace

TEST_CASE("roots agree with enumeration across prime sizes") {
    std::mt19937_64 rng(31337);
    const long primes[] = {2, 3, 5, 13, 53, 97, 211};
    for (int iter = 0; iter < 300; ++iter) {
        const Int ell(primes[rng() % 7]);
        std::vector<Int> coeffs;
        for (int i = 0; i < 5; ++i)
            coeffs.push_back(Int(static_cast<long>(rng() % 41) - 20));
        Poly f = reduce(coeffs, ell);
        if (f.empty()) continue;
        CHECK(roots(f, ell) == enumerate_roots(f, ell));
    }
}

TEST_CASE("roots of dense split quartics at a large prime") {
    // (x-1)(x-2)(x-3)(x-4) style products, where the character-probe
    // splitting has to separate all four roots
    const Int ell(10007);
    std::mt19937_64 rng(4);
    for (int iter = 0; iter < 50; ++iter) {
        Int r[4];
        for (auto& v : r) v = Int(static_cast<unsigned long>(rng() % 10007));
        Poly f{Int(1)};
        for (const Int& root : r) f = mul(f, reduce({-root, Int(1)}, ell), ell);
        std::vector<Int> expect{r, r + 4};
        std::sort(expect.begin(), expect.end());
        expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
        CHECK(roots(f, ell) == expect);
    }
}

TEST_CASE("is_constant_times_square against brute force") {
    std::mt19937_64 rng(55);
    const long primes[] = {3, 5, 7, 11};
    for (int iter = 0; iter < 200; ++iter) {
        const long ell = primes[rng() % 4];
        std::vector<Int> coeffs;
        for (int i = 0; i < 5; ++i)
            coeffs.push_back(Int(static_cast<long>(rng() % ell)));
        Poly f = reduce(coeffs, Int(ell));
        if (degree(f) < 1) continue;
        CHECK(is_constant_times_square(f, Int(ell)) ==
              brute_constant_times_square(f, ell));
    }
}

TEST_CASE("gcd and x_pow_mod basics") {
    const Int ell(7);
    Poly f = reduce({Int(-1), Int(0), Int(1)}, ell);       // x^2 - 1
    Poly g = reduce({Int(1), Int(2), Int(1)}, ell);        // (x+1)^2
    CHECK(gcd(f, g, ell) == reduce({Int(1), Int(1)}, ell));
    // x^7 = x (mod x^2 - 1, F_7) since x^2 = 1 there
    CHECK(x_pow_mod(Int(7), f, ell) == reduce({Int(0), Int(1)}, ell));
}
