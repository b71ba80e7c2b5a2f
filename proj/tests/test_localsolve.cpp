#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twindescent/localsolve.hpp"

using namespace twindescent;
using namespace twindescent::localsolve;
using curve::TwinCurve;

namespace {

TwinCurve make(unsigned long p, int sigma) {
    return TwinCurve(arith::PrimePair(Int(p)), sigma);
}

QuarticSpace space(Family f, long d1, unsigned long p, int sigma) {
    return QuarticSpace(f, Int(d1), make(p, sigma));
}

}  // namespace

TEST_CASE("QuarticSpace constructor validates the class") {
    TwinCurve e = make(3, 1);
    CHECK_NOTHROW(QuarticSpace(Family::C, Int(-2), e));
    CHECK_THROWS(QuarticSpace(Family::C, Int(4), e));    // not squarefree
    CHECK_THROWS(QuarticSpace(Family::C, Int(3), e));    // does not divide 4
    CHECK_THROWS(QuarticSpace(Family::C, Int(0), e));
    CHECK_NOTHROW(QuarticSpace(Family::Cprime, Int(-15), e));
    CHECK_THROWS(QuarticSpace(Family::Cprime, Int(7), e));  // does not divide pq

    // family C': d1 = -p gives d2 = -q and A = sigma(p+q)
    QuarticSpace s(Family::Cprime, Int(-3), e);
    CHECK(s.d2 == -5);
    CHECK(s.A == 8);
}

TEST_CASE("solvable_real") {
    CHECK(solvable_real(space(Family::C, 2, 5, 1)));        // (0, sqrt 2)
    CHECK(solvable_real(space(Family::Cprime, -1, 5, 1)));  // (sqrt p, 0)
    CHECK_FALSE(solvable_real(space(Family::C, -1, 5, 1))); // all negative
    // sigma = -1 flips A; negative d1 then fails the vertex condition
    CHECK_FALSE(solvable_real(space(Family::Cprime, -1, 5, -1)));
    CHECK(solvable_real(space(Family::C, -1, 5, -1)));      // A > 0, A^2 >= 4 d1 d2
}

TEST_CASE("hensel_liftable") {
    // g(x, y) = f(x) - y^2 for C_(2) of (71,73): g(1,-2) = -4(p+1) = -288,
    // g_y = -2y = 4; v2(-288) = 5 > 4 = 2 v2(4)
    std::vector<BivariateTerm> g{{4, 0, Int(2)},
                                 {2, 0, Int(-2 * (71 + 73))},
                                 {0, 0, Int(2)},
                                 {0, 2, Int(-1)}};
    CHECK(hensel_liftable(g, Int(1), Int(-2), Int(2)));

    // exact root with a live partial derivative
    std::vector<Int> f{Int(-4), Int(0), Int(1)};  // x^2 - 4
    CHECK(hensel_liftable(f, Int(2), Int(7)));

    // x^2 - 3 at x = 1, ell = 2: v(-2) = 1, 2 v(2) = 2
    std::vector<Int> h{Int(-3), Int(0), Int(1)};
    CHECK_FALSE(hensel_liftable(h, Int(1), Int(2)));
}

TEST_CASE("is_square_in_Q2 and the square-class structure") {
    CHECK(is_square_in_Q2(Rat(17)));
    CHECK_FALSE(is_square_in_Q2(Rat(2)));
    CHECK(is_square_in_Q2(Rat(4, 9)));
    CHECK(is_square_in_Q2(Rat(-15)));  // -15 = 1 (mod 8) up to the square 16
    CHECK_FALSE(is_square_in_Q2(Rat(3)));
    CHECK_THROWS(is_square_in_Q2(Rat(0)));

    std::mt19937_64 rng(2024);
    auto random_rat = [&] {
        long n = static_cast<long>(rng() % 4000) - 2000;
        long d = static_cast<long>(rng() % 2000) + 1;
        if (n == 0) n = 1;
        Rat r(n, d);
        r.canonicalize();
        return r;
    };
    // squares are squares
    for (int i = 0; i < 200; ++i) {
        Rat r = random_rat();
        CHECK(is_square_in_Q2(Rat(r * r)));
    }
    // the classifier (v mod 2, unit mod 8) refines Q2*/squares into 8 classes;
    // a product is a square iff the classes agree
    auto classify = [](const Rat& r) {
        long v = arith::valuation(r, Int(2));
        Int nu = r.get_num(), du = r.get_den();
        Int pow2;
        mpz_remove(nu.get_mpz_t(), nu.get_mpz_t(), Int(2).get_mpz_t());
        (void)pow2;
        mpz_remove(du.get_mpz_t(), du.get_mpz_t(), Int(2).get_mpz_t());
        Int u8 = nu * du % 8;  // du self-inverse mod 8
        return std::pair<long, long>(((v % 2) + 2) % 2, ((u8.get_si() % 8) + 8) % 8);
    };
    for (int i = 0; i < 300; ++i) {
        Rat r = random_rat(), s = random_rat();
        CHECK(is_square_in_Q2(Rat(r * s)) == (classify(r) == classify(s)));
    }
}

TEST_CASE("reduction_nonsquare_test") {
    // C'_(-1) at p: f = x^2 (-x^2 + 2) (mod p), odd part of degree 2
    CHECK(reduction_nonsquare_test(space(Family::Cprime, -1, 5, 1), Int(5)));
    // a quartic reducing to x^4: constant times a square, inconclusive
    CHECK_FALSE(reduction_nonsquare_test(Int(1), Int(7), Int(7), Int(7)));
    // squarefree degree-4 reduction
    CHECK(reduction_nonsquare_test(Int(1), Int(0), Int(1), Int(3)));
    CHECK_THROWS(reduction_nonsquare_test(Int(1), Int(0), Int(1), Int(2)));
}

TEST_CASE("solvable_at matches the paper's worked cases") {
    // C_(2) at p for (5,7): (2/5) = -1
    CHECK_FALSE(solvable_at(space(Family::C, 2, 5, 1), Int(5)));
    // C'_(-1) at 2: p = 5 (mod 8) excluded, p = 3 included
    CHECK_FALSE(solvable_at(space(Family::Cprime, -1, 5, 1), Int(2)));
    CHECK(solvable_at(space(Family::Cprime, -1, 3, 1), Int(2)));
    // C_(2) at 2 for p = 7 (mod 8): Hensel at (1, -2)
    CHECK(solvable_at(space(Family::C, 2, 71, 1), Int(2)));
}

TEST_CASE("solvable_everywhere on classes with global points") {
    // C'_(-sigma p) and C'_(-sigma q) carry (1, 0); C'_(pq) carries (0, 1);
    // C_(1) carries (0, 2)
    for (unsigned long p : {3ul, 5ul, 11ul, 17ul})
        for (int sigma : {1, -1}) {
            long sp = sigma > 0 ? 1 : -1;
            CHECK(solvable_everywhere(
                space(Family::Cprime, -sp * static_cast<long>(p), p, sigma)));
            CHECK(solvable_everywhere(
                space(Family::Cprime, -sp * static_cast<long>(p + 2), p, sigma)));
            CHECK(solvable_everywhere(space(
                Family::Cprime, static_cast<long>(p * (p + 2)), p, sigma)));
            CHECK(solvable_everywhere(space(Family::C, 1, p, sigma)));
        }
    CHECK_FALSE(solvable_everywhere(space(Family::C, 2, 5, 1)));
}

TEST_CASE("witness extraction certifies solvable places") {
    auto s = space(Family::Cprime, -1, 3, 1);
    auto w = solvable_at_witness(s, Int(2));
    REQUIRE(w.has_value());
    // re-check the accepted class on the right quartic
    Quartic g = Quartic::even(s.d1, s.A, s.d2);
    if (w->second) g = g.reciprocal();
    Int c = g.eval(w->first.x0);
    bool ok = c == 0 || oracles::exact_square_in_Zl(c, Int(2)) ||
              (g.deriv(w->first.x0) != 0 &&
               oracles::slow_valuation(c, Int(2)) >
                   2 * oracles::slow_valuation(g.deriv(w->first.x0), Int(2)));
    CHECK(ok);
}

TEST_CASE("pruned search equals the unpruned oracle on family spaces") {
    for (const auto& pr : arith::twin_prime_pairs(60))
        for (int sigma : {1, -1}) {
            TwinCurve e(pr, sigma);
            std::vector<QuarticSpace> spaces;
            for (long d1 : {1, -1, 2, -2}) spaces.emplace_back(Family::C, Int(d1), e);
            for (const Int& d1 :
                 {Int(1), Int(-1), pr.p, -pr.p, pr.q, -pr.q, Int(pr.p * pr.q),
                  Int(-pr.p * pr.q)})
                spaces.emplace_back(Family::Cprime, d1, e);
            for (const auto& s : spaces)
                for (const Int& ell : {Int(2), pr.p, pr.q}) {
                    Quartic g = Quartic::even(s.d1, s.A, s.d2);
                    CHECK(lift_search_solvable(g, ell) ==
                          oracles::unpruned_solvable(g, ell));
                    Quartic r = g.reciprocal();
                    CHECK(lift_search_solvable(r, ell) ==
                          oracles::unpruned_solvable(r, ell));
                }
        }
}

TEST_CASE("pruned search equals the unpruned oracle on synthetic quartics") {
    std::mt19937_64 rng(424242);
    const long primes[] = {2, 3, 5, 7, 11, 13};
    int done = 0;
    while (done < 120) {
        const Int ell(primes[rng() % 6]);
        Int a(static_cast<long>(rng() % 31) - 15);
        Int b(static_cast<long>(rng() % 31) - 15);
        Int c(static_cast<long>(rng() % 31) - 15);
        if (a == 0 || c == 0 || b * b == 4 * a * c) continue;
        // stay inside the depth bound's validated envelope
        if (a % (ell * ell * ell) == 0) continue;
        Quartic g = Quartic::even(a, b, c);
        CHECK(lift_search_solvable(g, ell) == oracles::unpruned_solvable(g, ell));
        ++done;
    }
}

TEST_CASE("fast path is sound: reduction test true implies solvable") {
    std::mt19937_64 rng(777);
    const long primes[] = {3, 5, 7, 11, 13};
    int done = 0;
    while (done < 150) {
        const Int ell(primes[rng() % 5]);
        Int a(static_cast<long>(rng() % 21) - 10);
        Int b(static_cast<long>(rng() % 21) - 10);
        Int c(static_cast<long>(rng() % 21) - 10);
        if (a == 0 || c == 0 || b * b == 4 * a * c) continue;
        ++done;
        if (!reduction_nonsquare_test(a, b, c, ell)) continue;
        Quartic g = Quartic::even(a, b, c);
        CHECK((lift_search_solvable(g, ell) ||
               lift_search_solvable(g.reciprocal(), ell)));
    }
}

TEST_CASE("a global point forces local solvability everywhere") {
    // C'_(-1) of (3,5,+1) contains (2, 1); check every finite place and a few
    // good primes besides
    auto s = space(Family::Cprime, -1, 3, 1);
    for (long ell : {2, 3, 5, 7, 11, 13})
        CHECK(solvable_at(s, Int(ell)));
    CHECK(solvable_real(s));
}

TEST_CASE("depth bound formula") {
    // family C: disc = 16384 p^2 q^2, so k_max at 2 is 14 + 2 + 3
    Quartic g = Quartic::even(Int(2), Int(-2 * (3 + 5)), Int(2));
    CHECK(lift_depth_bound(g, Int(2)) == 19);
    CHECK(lift_depth_bound(g, Int(3)) == 5);
    // family C': disc = 256 pq
    Quartic h = Quartic::even(Int(-1), Int(8), Int(-15));
    CHECK(lift_depth_bound(h, Int(2)) == 13);
    CHECK(lift_depth_bound(h, Int(3)) == 4);
    CHECK(lift_depth_bound(h, Int(5)) == 4);
    CHECK_THROWS(lift_depth_bound(Quartic::even(Int(1), Int(2), Int(1)), Int(2)));
}
