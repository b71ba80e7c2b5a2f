#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twindescent/descent.hpp"
#include "twindescent/localdata.hpp"
#include "twindescent/rank1.hpp"

namespace twindescent::report {

/// Everything the CLI knows about one curve, in the shape the JSON output
/// uses. Integers that may outgrow 64 bits are serialized as decimal strings,
/// rationals as "num/den".
struct Report {
    Int p, q;
    int sigma = 1;
    curve::Invariants invariants;
    Int conductor;
    std::vector<localdata::LocalData> local_rows;
    std::vector<descent::SpaceVerdicts> spaces;
    descent::DescentSummary summary;
    std::optional<rank1::RankOneCertificate> rank_one;
    std::string torsion;
    descent::PredictedDims predicted{};
    bool conformant = false;
};

/// Runs the full pipeline on one curve; every report field filled in.
Report analyze_curve(const curve::TwinCurve& e);

std::string to_json(const Report& r, bool pretty = false);
Report from_json(const std::string& text);

}  // namespace twindescent::report
