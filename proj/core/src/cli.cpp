#include "twindescent/cli.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

namespace twindescent::cli {

using curve::TwinCurve;
using localsolve::Family;
using localsolve::QuarticSpace;
using report::Report;

namespace {

std::optional<TwinCurve> make_curve(const Int& p, int sigma, std::ostream& err) {
    if (!arith::is_prime(p)) {
        err << "error: " << p.get_str() << " is not prime\n";
        return std::nullopt;
    }
    if (!arith::is_prime(p + 2)) {
        err << "error: " << Int(p + 2).get_str() << " = p + 2 is not prime\n";
        return std::nullopt;
    }
    return TwinCurve(arith::PrimePair(p), sigma);
}

std::string point_str(const curve::RationalPoint& pt) {
    if (pt.infinity) return "O";
    return "(" + pt.x.get_str() + ", " + pt.y.get_str() + ")";
}

std::string selmer_str(const descent::SelmerGroup& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.elements.size(); ++i) {
        if (i) out += ", ";
        out += s.elements[i].get_str();
    }
    return out + "}";
}

void print_human(const Report& r, std::ostream& out) {
    const char* sign = r.sigma == 1 ? "+" : "-";
    out << "E_" << sign << "1(" << r.p.get_str() << ", " << r.q.get_str()
        << "): y^2 = x (x " << (r.sigma == 1 ? "+ " : "- ") << r.p.get_str()
        << ")(x " << (r.sigma == 1 ? "+ " : "- ") << r.q.get_str() << ")\n";
    out << "  disc = " << r.invariants.disc.get_str()
        << ", c4 = " << r.invariants.c4.get_str()
        << ", c6 = " << r.invariants.c6.get_str()
        << ", j = " << r.invariants.j.get_str() << "\n";
    out << "  conductor = " << r.conductor.get_str() << "\n";
    out << "  local data:\n";
    for (const auto& d : r.local_rows)
        out << "    ell = " << d.ell.get_str() << ": " << reduction_name(d.reduction)
            << ", " << d.kodaira.str() << ", f = " << d.f << ", c = " << d.c
            << ", m = " << d.m << "\n";
    out << "  S^(phi)     = " << selmer_str(r.summary.selmer_phi) << "  (dim "
        << r.summary.selmer_phi.dim << ")\n";
    out << "  S^(phi-hat) = " << selmer_str(r.summary.selmer_phihat) << "  (dim "
        << r.summary.selmer_phihat.dim << ")\n";
    out << "  dim S^(2) = " << r.summary.dim_selmer2
        << ", rank + dim Sha[2] = " << r.summary.rank_sha_bound << "\n";
    out << "  certificate: " << r.summary.certificate.kind_str();
    if (r.summary.certificate.witness)
        out << ", witness " << point_str(*r.summary.certificate.witness);
    out << "\n";
    out << "  torsion: " << r.torsion << "\n";
    out << "  conformant with predicted dims: " << (r.conformant ? "yes" : "NO")
        << "\n";
}

unsigned resolve_jobs(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TWIN_DESCENT_JOBS")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
    auto e = make_curve(opt.p, opt.sigma, err);
    if (!e) return 1;
    Report r = report::analyze_curve(*e);
    if (opt.json)
        out << report::to_json(r, true) << "\n";
    else
        print_human(r, out);
    return r.conformant ? 0 : 2;
}

int cmd_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<arith::PrimePair> pairs;
    try {
        pairs = arith::twin_prime_pairs(opt.limit);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
    std::vector<Report> reports(pairs.size());
    const size_t at_most = pairs.empty() ? 1 : pairs.size();
    const unsigned jobs = static_cast<unsigned>(
        std::min<size_t>(resolve_jobs(opt.jobs), at_most));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < pairs.size();)
            reports[i] = report::analyze_curve(TwinCurve(pairs[i], opt.sigma));
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // residue class of p mod 8 -> (pairs, conformant, rank-one hits)
    std::map<long, std::array<long, 3>> classes;
    bool all_ok = true;
    std::vector<std::string> rank_one_pairs;
    for (const Report& r : reports) {
        if (opt.json)
            out << report::to_json(r) << "\n";
        else
            print_human(r, out);
        auto& row = classes[mpz_fdiv_ui(r.p.get_mpz_t(), 8)];
        row[0]++;
        row[1] += r.conformant ? 1 : 0;
        all_ok = all_ok && r.conformant;
        if (r.summary.certificate.kind == descent::Certificate::Kind::RankOne) {
            row[2]++;
            rank_one_pairs.push_back("(" + r.p.get_str() + ", " + r.q.get_str() + ")");
        }
    }

    out << "# scanned " << pairs.size() << " twin pairs with q <= " << opt.limit
        << ", sigma = " << (opt.sigma == 1 ? "+1" : "-1") << "\n";
    out << "# p mod 8 | pairs | conformant | rank-one\n";
    for (const auto& [cls, row] : classes)
        out << "#    " << cls << "     |  " << row[0] << "  |  " << row[1] << "  |  "
            << row[2] << "\n";
    out << "# rank-one certificates:";
    for (const auto& s : rank_one_pairs) out << " " << s;
    out << "\n";
    out << "# conformance: " << (all_ok ? "all curves match the predicted dimensions"
                                        : "MISMATCH FOUND")
        << "\n";
    return all_ok ? 0 : 2;
}

int cmd_local(const LocalOptions& opt, std::ostream& out, std::ostream& err) {
    auto e = make_curve(opt.p, opt.sigma, err);
    if (!e) return 1;
    Family fam;
    if (opt.family == "C")
        fam = Family::C;
    else if (opt.family == "Cprime" || opt.family == "C'")
        fam = Family::Cprime;
    else {
        err << "error: family must be C or Cprime\n";
        return 1;
    }
    std::optional<QuarticSpace> space;
    try {
        space.emplace(fam, opt.d1, *e);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }

    nlohmann::json j;
    j["family"] = family_name(fam);
    j["d1"] = opt.d1.get_str();
    j["place"] = opt.place;
    std::ostringstream note;
    bool solvable = false;
    if (opt.place == "inf") {
        solvable = localsolve::solvable_real(*space);
        if (solvable) {
            // a sample real point: x = 0 when d2 >= 0, the vertex otherwise
            double x, d1 = space->d1.get_d(), a = space->A.get_d(),
                      d2 = space->d2.get_d();
            if (d2 >= 0)
                x = 0.0;
            else if (d1 > 0)
                x = std::sqrt((std::fabs(a) + std::fabs(d2)) / d1 + 1.0);
            else
                x = std::sqrt(-a / (2.0 * d1));
            double y = std::sqrt(std::max(0.0, ((d1 * x * x + a) * x * x + d2)));
            note << "real point near (" << x << ", " << y << ")";
        }
    } else {
        Int ell;
        if (opt.place == "2")
            ell = 2;
        else if (opt.place == "p")
            ell = e->p();
        else if (opt.place == "q")
            ell = e->q();
        else
            ell = Int(opt.place);
        if (!arith::is_prime(ell)) {
            err << "error: place must be inf or a prime\n";
            return 1;
        }
        auto w = localsolve::solvable_at_witness(*space, ell);
        solvable = w.has_value();
        if (w) {
            note << (w->second ? "1/x" : "x") << " = " << w->first.x0.get_str()
                 << " (mod " << ell.get_str() << "^" << w->first.k << ")";
        }
    }
    j["solvable"] = solvable;
    if (!note.str().empty()) j["witness"] = note.str();
    if (opt.json) {
        out << j.dump(2) << "\n";
    } else {
        out << family_name(fam) << "_(" << opt.d1.get_str() << ") at " << opt.place
            << ": " << (solvable ? "solvable" : "unsolvable");
        if (!note.str().empty()) out << "  [" << note.str() << "]";
        out << "\n";
    }
    return 0;
}

int cmd_rank1(const RankOneOptions& opt, std::ostream& out, std::ostream& err) {
    auto e = make_curve(opt.p, opt.sigma, err);
    if (!e) return 1;
    auto cert = rank1::rank_one_certificate(*e);
    auto sol_i = rank1::primary_solution(e->p(), e->q(), rank1::System::I, opt.bound);
    auto sol_ii = rank1::primary_solution(e->p(), e->q(), rank1::System::II, opt.bound);

    nlohmann::json j;
    j["p"] = e->p().get_str();
    j["q"] = e->q().get_str();
    j["sigma"] = e->sigma;
    j["criterion_applies"] = cert.has_value();
    auto sol_json = [](const rank1::PrimarySolution& s) {
        return nlohmann::json{{"X", s.X.get_str()},
                              {"Y", s.Y.get_str()},
                              {"S", s.S.get_str()},
                              {"T", s.T.get_str()},
                              {"system", s.system == rank1::System::I ? "I" : "II"}};
    };
    if (cert) {
        j["witness"] = {{"a", cert->witness.a.get_str()},
                        {"b", cert->witness.b.get_str()},
                        {"eps", cert->witness.eps},
                        {"delta", cert->witness.delta},
                        {"c", cert->witness.c.get_str()}};
        j["solution"] = sol_json(cert->solution);
        j["point"] = {{"x", cert->point.x.get_str()}, {"y", cert->point.y.get_str()}};
    }
    if (sol_i) j["search_system_I"] = sol_json(*sol_i);
    if (sol_ii) j["search_system_II"] = sol_json(*sol_ii);

    if (opt.json) {
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "E_+1(" << e->p().get_str() << ", " << e->q().get_str() << ")";
    if (e->sigma == -1) out << " [sigma = -1: criterion not applicable]";
    out << "\n";
    if (cert) {
        out << "  rank = 1: q = " << cert->witness.a.get_str() << "^2 + "
            << cert->witness.b.get_str() << "^2, (a" << (cert->witness.eps > 0 ? "+" : "-")
            << "1)^2 + (b" << (cert->witness.delta > 0 ? "+" : "-")
            << "1)^2 = " << cert->witness.c.get_str() << "^2\n";
        out << "  primary solution (X, Y, S, T) = (" << cert->solution.X.get_str()
            << ", " << cert->solution.Y.get_str() << ", " << cert->solution.S.get_str()
            << ", " << cert->solution.T.get_str() << ") of system I\n";
        out << "  infinite-order point " << point_str(cert->point) << "\n";
    } else {
        out << "  rank-one criterion not applicable\n";
    }
    if (sol_i)
        out << "  system I search (bound " << opt.bound.get_str() << "): ("
            << sol_i->X.get_str() << ", " << sol_i->Y.get_str() << ", "
            << sol_i->S.get_str() << ", " << sol_i->T.get_str() << ")\n";
    if (sol_ii)
        out << "  system II search (bound " << opt.bound.get_str() << "): ("
            << sol_ii->X.get_str() << ", " << sol_ii->Y.get_str() << ", "
            << sol_ii->S.get_str() << ", " << sol_ii->T.get_str() << ")\n";
    if (!sol_i && !sol_ii)
        out << "  no primary solution within bound " << opt.bound.get_str() << "\n";
    return 0;
}

}  // namespace twindescent::cli
