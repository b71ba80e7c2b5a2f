#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "twindescent/report.hpp"

namespace twindescent::cli {

struct AnalyzeOptions {
    Int p;
    int sigma = 1;
    bool json = false;
};

struct ScanOptions {
    std::uint64_t limit = 0;
    int sigma = 1;
    bool json = false;
    unsigned jobs = 0;  // 0: TWIN_DESCENT_JOBS env var, then hardware threads
};

struct LocalOptions {
    std::string family;  // "C" or "Cprime"
    Int d1;
    Int p;
    int sigma = 1;
    std::string place;  // "inf", "2", "p", "q" or an explicit prime
    bool json = false;
};

struct RankOneOptions {
    Int p;
    int sigma = 1;
    Int bound = 10000;  // primary-solution search bound
    bool json = false;
};

/// Full pipeline for one curve; exit 1 with a message when (p, p+2) is not a
/// twin prime pair.
int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);

/// One report per twin pair with q <= limit, in order, plus a conformance
/// summary per residue class of p mod 8. Exit 0 iff every curve matches the
/// predicted dimensions.
int cmd_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err);

/// Local solvability of a single homogeneous space at one place, with a
/// witness residue (or a real sample point) when solvable.
int cmd_local(const LocalOptions& opt, std::ostream& out, std::ostream& err);

/// The rank-one criterion on one curve, plus direct primary-solution
/// searches for both systems within the bound.
int cmd_rank1(const RankOneOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace twindescent::cli
