#include "twindescent/descent.hpp"

#include <algorithm>
#include <stdexcept>

#include "twindescent/rank1.hpp"

namespace twindescent::descent {

using localsolve::Family;
using localsolve::QuarticSpace;

namespace {

// (|d1| ascending, positive before negative); deterministic report order.
bool class_less(const Int& a, const Int& b) {
    Int aa = abs(a), ab = abs(b);
    if (aa != ab) return aa < ab;
    return a > b;
}

int dim_of(size_t n) {
    int d = 0;
    while ((size_t{1} << d) < n) ++d;
    if ((size_t{1} << d) != n)
        throw std::logic_error("SelmerGroup: element count not a power of 2");
    return d;
}

void check_subgroup(const DivisorClassGroup& g, const std::vector<Int>& elems) {
    auto contains = [&](const Int& v) {
        return std::find(elems.begin(), elems.end(), v) != elems.end();
    };
    if (!contains(Int(1)))
        throw std::logic_error("SelmerGroup: missing identity class");
    for (const Int& a : elems)
        for (const Int& b : elems)
            if (!contains(g.mul(a, b)))
                throw std::logic_error("SelmerGroup: not closed under multiplication");
}

SelmerGroup selmer_from_family(const TwinCurve& e, Family fam,
                               SelmerGroup::Kind kind,
                               const DivisorClassGroup& ambient) {
    SelmerGroup s;
    s.kind = kind;
    for (const Int& d1 : ambient.elements()) {
        QuarticSpace space(fam, d1, e);
        if (localsolve::solvable_everywhere(space)) s.elements.push_back(d1);
    }
    std::sort(s.elements.begin(), s.elements.end(), class_less);
    check_subgroup(ambient, s.elements);
    s.dim = dim_of(s.elements.size());
    return s;
}

}  // namespace

DivisorClassGroup DivisorClassGroup::phi_ambient() { return {{Int(2)}}; }

DivisorClassGroup DivisorClassGroup::phihat_ambient(const TwinCurve& e) {
    return {{e.p(), e.q()}};
}

std::vector<Int> DivisorClassGroup::elements() const {
    std::vector<Int> out;
    const size_t n = basis.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask)
        for (int sign : {1, -1}) {
            Int v = sign;
            for (size_t i = 0; i < n; ++i)
                if (mask & (size_t{1} << i)) v *= basis[i];
            out.push_back(v);
        }
    std::sort(out.begin(), out.end(), class_less);
    return out;
}

Int DivisorClassGroup::mul(const Int& a, const Int& b) const {
    // xor the basis exponents, multiply the signs
    Int v = (a < 0) == (b < 0) ? 1 : -1;
    for (const Int& p : basis) {
        bool in_a = mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t());
        bool in_b = mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t());
        if (in_a != in_b) v *= p;
    }
    return v;
}

SelmerGroup selmer_phi(const TwinCurve& e) {
    return selmer_from_family(e, Family::C, SelmerGroup::Kind::Phi,
                              DivisorClassGroup::phi_ambient());
}

SelmerGroup selmer_phihat(const TwinCurve& e) {
    return selmer_from_family(e, Family::Cprime, SelmerGroup::Kind::PhiHat,
                              DivisorClassGroup::phihat_ambient(e));
}

std::string Certificate::kind_str() const {
    switch (kind) {
        case Kind::RankZero: return "RankZero";
        case Kind::RankOne: return "RankOne";
        case Kind::BoundOnly: return "BoundOnly";
    }
    return "?";
}

DescentSummary descend(const TwinCurve& e) {
    DescentSummary s;
    s.selmer_phi = selmer_phi(e);
    s.selmer_phihat = selmer_phihat(e);
    s.dim_selmer2 = s.selmer_phi.dim + s.selmer_phihat.dim;
    s.rank_sha_bound = s.dim_selmer2 - 2;
    if (s.rank_sha_bound < 0)
        throw std::logic_error("descend: negative rank bound");

    if (s.rank_sha_bound == 0) {
        s.certificate.kind = Certificate::Kind::RankZero;
        s.certificate.torsion = curve::torsion_over_Q(e);
    } else if (auto cert = rank1::rank_one_certificate(e)) {
        if (s.rank_sha_bound != 1)
            throw std::logic_error("descend: rank-one certificate with bound != 1");
        s.certificate.kind = Certificate::Kind::RankOne;
        s.certificate.witness = cert->point;
    } else {
        s.certificate.kind = Certificate::Kind::BoundOnly;
    }
    return s;
}

PredictedDims predicted_dims(const Int& p, int sigma) {
    if (sigma != 1 && sigma != -1)
        throw std::invalid_argument("predicted_dims: sigma must be +-1");
    if (mpz_even_p(p.get_mpz_t()))
        throw std::invalid_argument("predicted_dims: p must be odd");
    const long r = mpz_fdiv_ui(p.get_mpz_t(), 8);
    if (sigma == 1) {
        if (r == 5) return {0, 2, 2, 0};
        if (r == 1 || r == 3) return {0, 3, 3, 1};
        return {1, 3, 4, 2};  // r == 7
    }
    if (r == 3 || r == 5) return {0, 2, 2, 0};
    return {1, 2, 3, 1};  // r == 1 or 7
}

SpaceVerdicts space_verdicts(const QuarticSpace& q) {
    SpaceVerdicts v;
    v.family = q.family;
    v.d1 = q.d1;
    v.at_real = localsolve::solvable_real(q);
    v.at_2 = localsolve::solvable_at(q, Int(2));
    v.at_p = localsolve::solvable_at(q, q.parent.p());
    v.at_q = localsolve::solvable_at(q, q.parent.q());
    return v;
}

}  // namespace twindescent::descent
