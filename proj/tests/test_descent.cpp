#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "twindescent/descent.hpp"
#include "twindescent/rank1.hpp"

using namespace twindescent;
using namespace twindescent::descent;
using curve::TwinCurve;

namespace {

TwinCurve make(unsigned long p, int sigma) {
    return TwinCurve(arith::PrimePair(Int(p)), sigma);
}

bool has(const SelmerGroup& s, long d1) {
    return std::find(s.elements.begin(), s.elements.end(), Int(d1)) !=
           s.elements.end();
}

std::vector<Int> classes(const SelmerGroup& s) { return s.elements; }

}  // namespace

TEST_CASE("S^(phi) worked cases") {
    auto s57 = selmer_phi(make(5, 1));
    CHECK(classes(s57) == std::vector<Int>{Int(1)});
    CHECK(s57.dim == 0);

    auto s71 = selmer_phi(make(71, 1));
    CHECK(classes(s71) == std::vector<Int>{Int(1), Int(2)});
    CHECK(s71.dim == 1);

    auto s17m = selmer_phi(make(17, -1));
    CHECK(classes(s17m) == std::vector<Int>{Int(1), Int(-2)});
    CHECK(s17m.dim == 1);
}

TEST_CASE("S^(phi-hat) worked cases") {
    auto s57 = selmer_phihat(make(5, 1));
    CHECK(classes(s57) == std::vector<Int>{Int(1), Int(-5), Int(-7), Int(35)});
    CHECK(s57.dim == 2);

    auto s35 = selmer_phihat(make(3, 1));
    CHECK(s35.dim == 3);  // the -1 class joins for p = 3 (mod 8)
    CHECK(has(s35, -1));

    auto s35m = selmer_phihat(make(3, -1));
    CHECK(classes(s35m) == std::vector<Int>{Int(1), Int(3), Int(5), Int(15)});
    CHECK(s35m.dim == 2);
}

TEST_CASE("the four classes with global points always appear") {
    for (const auto& pr : arith::twin_prime_pairs(100))
        for (int sigma : {1, -1}) {
            auto s = selmer_phihat(TwinCurve(pr, sigma));
            CHECK(has(s, 1));
            Int sp = -sigma * pr.p, sq = -sigma * pr.q;
            CHECK(std::find(s.elements.begin(), s.elements.end(), sp) !=
                  s.elements.end());
            CHECK(std::find(s.elements.begin(), s.elements.end(), sq) !=
                  s.elements.end());
            CHECK(std::find(s.elements.begin(), s.elements.end(),
                            Int(pr.p * pr.q)) != s.elements.end());
        }
}

TEST_CASE("negative classes are barred where the real place obstructs") {
    for (const auto& pr : arith::twin_prime_pairs(100)) {
        // sigma = +1: no negative d1 in S^(phi)
        for (const Int& d : selmer_phi(TwinCurve(pr, 1)).elements) CHECK(d > 0);
        // sigma = -1: -1 never in S^(phi), and no negative d1 in S^(phi-hat)
        CHECK_FALSE(has(selmer_phi(TwinCurve(pr, -1)), -1));
        for (const Int& d : selmer_phihat(TwinCurve(pr, -1)).elements) CHECK(d > 0);
    }
}

TEST_CASE("descend worked cases") {
    auto d57 = descend(make(5, 1));
    CHECK(d57.rank_sha_bound == 0);
    CHECK(d57.dim_selmer2 == 2);
    CHECK(d57.certificate.kind == Certificate::Kind::RankZero);
    REQUIRE(d57.certificate.torsion.has_value());

    auto d35 = descend(make(3, 1));
    CHECK(d35.rank_sha_bound == 1);
    CHECK(d35.certificate.kind == Certificate::Kind::RankOne);
    REQUIRE(d35.certificate.witness.has_value());
    CHECK(curve::is_on_curve(make(3, 1), *d35.certificate.witness));

    auto d71 = descend(make(71, 1));
    CHECK(d71.rank_sha_bound == 2);
    CHECK(d71.certificate.kind == Certificate::Kind::BoundOnly);
}

TEST_CASE("predicted_dims table") {
    CHECK(predicted_dims(Int(5), 1) == PredictedDims{0, 2, 2, 0});
    CHECK(predicted_dims(Int(7), 1) == PredictedDims{1, 3, 4, 2});
    CHECK(predicted_dims(Int(3), -1) == PredictedDims{0, 2, 2, 0});
    CHECK(predicted_dims(Int(17), 1) == PredictedDims{0, 3, 3, 1});
    CHECK(predicted_dims(Int(3), 1) == PredictedDims{0, 3, 3, 1});
    CHECK(predicted_dims(Int(17), -1) == PredictedDims{1, 2, 3, 1});
    CHECK(predicted_dims(Int(7), -1) == PredictedDims{1, 2, 3, 1});
    CHECK(predicted_dims(Int(5), -1) == PredictedDims{0, 2, 2, 0});
    CHECK_THROWS(predicted_dims(Int(8), 1));
    CHECK_THROWS(predicted_dims(Int(5), 2));
}

TEST_CASE("computed dimensions match the closed form on a midsize range") {
    for (const auto& pr : arith::twin_prime_pairs(600))
        for (int sigma : {1, -1}) {
            DescentSummary s = descend(TwinCurve(pr, sigma));
            PredictedDims want = predicted_dims(pr.p, sigma);
            CHECK(s.selmer_phi.dim == want.dim_phi);
            CHECK(s.selmer_phihat.dim == want.dim_phihat);
            CHECK(s.dim_selmer2 == want.dim_selmer2);
            CHECK(s.rank_sha_bound == want.bound);
            CHECK(s.rank_sha_bound >= 0);
            CHECK(s.dim_selmer2 == s.selmer_phi.dim + s.selmer_phihat.dim);
        }
}

TEST_CASE("divisor class group arithmetic") {
    auto g = DivisorClassGroup::phihat_ambient(make(3, 1));
    CHECK(g.elements().size() == 8);
    CHECK(g.mul(Int(-3), Int(-5)) == 15);
    CHECK(g.mul(Int(15), Int(15)) == 1);
    CHECK(g.mul(Int(-1), Int(3)) == -3);
    auto c = DivisorClassGroup::phi_ambient();
    CHECK(c.mul(Int(2), Int(-2)) == -1);
    CHECK(c.mul(Int(2), Int(2)) == 1);
}

TEST_CASE("found rational points land in the computed Selmer set") {
    // the descent image of an affine point (x, y) under the phi-hat descent
    // is the class of x modulo squares; (0,0) maps to the class of pq
    for (auto [p, sigma] : std::vector<std::pair<unsigned long, int>>{
             {3, 1}, {5, 1}, {11, 1}, {3, -1}, {17, -1}}) {
        TwinCurve e = make(p, sigma);
        auto sel = selmer_phihat(e);
        auto cls = DivisorClassGroup::phihat_ambient(e);
        for (const auto& P : rank1::point_search(e, Int(30))) {
            Int cl;
            if (P.x == 0) {
                cl = e.p() * e.q();
            } else {
                // x = m/e^2 reduced: class of x = class of m; strip squares of
                // the ambient basis primes and normalise the rest to +-1
                Int m = P.x.get_num();
                Int c = m < 0 ? -1 : 1;
                for (const Int& b : {e.p(), e.q()}) {
                    int v = 0;
                    Int t = abs(m);
                    while (t % b == 0) t /= b, ++v;
                    if (v % 2 == 1) c *= b;
                    // the square part of m prime to p, q must be a perfect
                    // square for the class to stay in the ambient group
                    if (v % 2 == 0 && b == e.q())
                        CHECK(arith::exact_sqrt(t).has_value());
                }
                cl = c;
            }
            CHECK(std::find(sel.elements.begin(), sel.elements.end(), cl) !=
                  sel.elements.end());
            (void)cls;
        }
    }
}
