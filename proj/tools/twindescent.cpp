#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "twindescent/cli.hpp"

namespace {

int parse_sigma(const std::string& s) {
    if (s == "+1" || s == "1") return 1;
    if (s == "-1") return -1;
    throw CLI::ValidationError("--sigma", "must be +1 or -1");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace twindescent;

    CLI::App app{"2-isogeny descent on the twin-prime curves y^2 = x(x+sp)(x+sq)"};
    app.require_subcommand(1);

    std::string sigma = "+1";
    bool json = false;

    auto* analyze = app.add_subcommand("analyze", "full descent report for one curve");
    std::string analyze_p;
    analyze->add_option("p", analyze_p, "the smaller twin prime")->required();
    analyze->add_option("--sigma", sigma, "curve sign (+1 or -1)");
    analyze->add_flag("--json", json, "emit JSON instead of the table");

    auto* scan = app.add_subcommand("scan", "descend on every twin pair up to a limit");
    std::uint64_t limit = 0;
    unsigned jobs = 0;
    scan->add_option("limit", limit, "upper bound on q")->required();
    scan->add_option("--sigma", sigma, "curve sign (+1 or -1)");
    scan->add_option("--jobs", jobs, "worker threads (default: TWIN_DESCENT_JOBS or hardware)");
    scan->add_flag("--json", json, "one JSON line per curve");

    auto* local = app.add_subcommand("local", "local solvability of one homogeneous space");
    std::string family, place, local_d1, local_p;
    local->add_option("--family", family, "C or Cprime")->required();
    local->add_option("--d1", local_d1, "descent class d1")->required();
    local->add_option("--p", local_p, "the smaller twin prime")->required();
    local->add_option("--sigma", sigma, "curve sign (+1 or -1)");
    local->add_option("--place", place, "inf, 2, p, q or an explicit prime")->required();
    local->add_flag("--json", json, "emit JSON");

    auto* rank1 = app.add_subcommand("rank1", "rank-one criterion and primary solutions");
    std::string rank1_p, bound = "10000";
    rank1->add_option("p", rank1_p, "the smaller twin prime")->required();
    rank1->add_option("--sigma", sigma, "curve sign (+1 or -1)");
    rank1->add_option("--bound", bound, "primary-solution search bound");
    rank1->add_flag("--json", json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            cli::AnalyzeOptions opt{Int(analyze_p), parse_sigma(sigma), json};
            return cli::cmd_analyze(opt, std::cout, std::cerr);
        }
        if (scan->parsed()) {
            cli::ScanOptions opt{limit, parse_sigma(sigma), json, jobs};
            return cli::cmd_scan(opt, std::cout, std::cerr);
        }
        if (local->parsed()) {
            cli::LocalOptions opt{family, Int(local_d1), Int(local_p),
                                  parse_sigma(sigma), place, json};
            return cli::cmd_local(opt, std::cout, std::cerr);
        }
        if (rank1->parsed()) {
            cli::RankOneOptions opt{Int(rank1_p), parse_sigma(sigma), Int(bound), json};
            return cli::cmd_rank1(opt, std::cout, std::cerr);
        }
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
