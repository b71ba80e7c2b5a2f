#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twindescent/curve.hpp"
#include "twindescent/localsolve.hpp"

namespace twindescent::descent {

using curve::TwinCurve;

/// The ambient group of squarefree divisor classes: {+-1, +-2} for the
/// phi-descent, {+-1, +-p, +-q, +-pq} for the phi-hat descent. Elements
/// multiply modulo squares; the representation keeps the sign and the
/// subset of basis primes, so no factoring is ever needed.
struct DivisorClassGroup {
    std::vector<Int> basis;  // {2} or {p, q}

    static DivisorClassGroup phi_ambient();
    static DivisorClassGroup phihat_ambient(const TwinCurve& e);
    std::vector<Int> elements() const;  // all 2^(basis+1) classes
    Int mul(const Int& a, const Int& b) const;  // product modulo squares
};

struct SelmerGroup {
    enum class Kind { Phi, PhiHat, Two };
    Kind kind;
    std::vector<Int> elements;  // sorted by (|d1|, sign); empty for Two
    int dim = 0;                // F_2 dimension
};

/// Everywhere-locally-solvable classes d1 with C_(d1) (resp. C'_(d1));
/// the result is checked to be a subgroup before returning.
SelmerGroup selmer_phi(const TwinCurve& e);
SelmerGroup selmer_phihat(const TwinCurve& e);

struct Certificate {
    enum class Kind { RankZero, RankOne, BoundOnly };
    Kind kind = Kind::BoundOnly;
    std::optional<curve::RationalPoint> witness;   // RankOne
    std::optional<curve::TorsionGroup> torsion;    // RankZero: E(Q) = torsion
    std::string kind_str() const;
};

struct DescentSummary {
    SelmerGroup selmer_phi;
    SelmerGroup selmer_phihat;
    int dim_selmer2 = 0;
    int rank_sha_bound = 0;  // rank E(Q) + dim_F2 Sha[2]
    Certificate certificate;
};

/// Full 2-descent: both Selmer groups, dim S^(2) = dim S^(phi) + dim S^(phi^),
/// the bound rank + dim Sha[2] = dim S^(2) - 2, and a certificate:
/// RankZero (bound 0: rank 0, Sha[2] = 0, E(Q) = Z/2 x Z/2), RankOne when
/// the twin-square criterion produces a point, BoundOnly otherwise.
DescentSummary descend(const TwinCurve& e);

/// The closed-form dimension table, keyed by p mod 8 and sigma.
struct PredictedDims {
    int dim_phi, dim_phihat, dim_selmer2, bound;
    bool operator==(const PredictedDims&) const = default;
};
PredictedDims predicted_dims(const Int& p, int sigma);

/// Verdicts of one homogeneous space over S, as serialized in reports.
struct SpaceVerdicts {
    localsolve::Family family;
    Int d1;
    bool at_real, at_2, at_p, at_q;
    bool everywhere() const { return at_real && at_2 && at_p && at_q; }
};
SpaceVerdicts space_verdicts(const localsolve::QuarticSpace& q);

}  // namespace twindescent::descent
