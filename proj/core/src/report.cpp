#include "twindescent/report.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace twindescent::report {

using json = nlohmann::json;
using descent::Certificate;
using descent::SpaceVerdicts;
using localdata::KodairaSymbol;
using localdata::LocalData;
using localdata::ReductionType;
using localsolve::Family;

namespace {

json int_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

Int int_from(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
    return Int(j.get<std::string>());
}

json rat_json(const Rat& v) { return json(v.get_str()); }

Rat rat_from(const json& j) {
    Rat r(j.get<std::string>());
    r.canonicalize();
    return r;
}

json point_json(const curve::RationalPoint& pt) {
    if (pt.infinity) return json{{"infinity", true}};
    return json{{"x", rat_json(pt.x)}, {"y", rat_json(pt.y)}};
}

curve::RationalPoint point_from(const json& j) {
    if (j.contains("infinity") && j["infinity"].get<bool>())
        return curve::RationalPoint::O();
    return curve::RationalPoint::affine(rat_from(j["x"]), rat_from(j["y"]));
}

ReductionType reduction_from(const std::string& s) {
    if (s == "Good") return ReductionType::Good;
    if (s == "MultiplicativeSplit") return ReductionType::MultiplicativeSplit;
    if (s == "MultiplicativeNonsplit") return ReductionType::MultiplicativeNonsplit;
    if (s == "Additive") return ReductionType::Additive;
    throw std::invalid_argument("unknown reduction type: " + s);
}

KodairaSymbol kodaira_from(const std::string& s) {
    if (s == "III") return KodairaSymbol::III();
    if (s == "I0") return KodairaSymbol::I0();
    if (s.size() > 1 && s[0] == 'I') return KodairaSymbol::In(std::stol(s.substr(1)));
    throw std::invalid_argument("unknown Kodaira symbol: " + s);
}

json local_row_json(const LocalData& d) {
    return json{{"ell", int_json(d.ell)},      {"reduction", reduction_name(d.reduction)},
                {"kodaira", d.kodaira.str()},  {"f", d.f},
                {"c", d.c},                    {"m", d.m}};
}

LocalData local_row_from(const json& j) {
    LocalData d;
    d.ell = int_from(j["ell"]);
    d.reduction = reduction_from(j["reduction"].get<std::string>());
    d.kodaira = kodaira_from(j["kodaira"].get<std::string>());
    d.f = j["f"].get<long>();
    d.c = j["c"].get<long>();
    d.m = j["m"].get<long>();
    return d;
}

json space_json(const SpaceVerdicts& s) {
    return json{{"family", family_name(s.family)},
                {"d1", int_json(s.d1)},
                {"verdicts",
                 {{"inf", s.at_real}, {"2", s.at_2}, {"p", s.at_p}, {"q", s.at_q}}}};
}

SpaceVerdicts space_from(const json& j) {
    SpaceVerdicts s;
    s.family = j["family"].get<std::string>() == "C" ? Family::C : Family::Cprime;
    s.d1 = int_from(j["d1"]);
    const json& v = j["verdicts"];
    s.at_real = v["inf"].get<bool>();
    s.at_2 = v["2"].get<bool>();
    s.at_p = v["p"].get<bool>();
    s.at_q = v["q"].get<bool>();
    return s;
}

json selmer_json(const descent::SelmerGroup& s) {
    json a = json::array();
    for (const Int& d : s.elements) a.push_back(int_json(d));
    return a;
}

std::vector<Int> classes_from(const json& j) {
    std::vector<Int> v;
    for (const auto& e : j) v.push_back(int_from(e));
    return v;
}

}  // namespace

Report analyze_curve(const curve::TwinCurve& e) {
    Report r;
    r.p = e.p();
    r.q = e.q();
    r.sigma = e.sigma;
    r.invariants = curve::invariants(e);
    r.conductor = localdata::conductor(e);

    std::vector<Int> row_primes = {Int(2), e.p(), e.q()};
    int good_spots = 0;
    for (unsigned long l : {3ul, 5ul, 7ul, 11ul, 13ul}) {
        Int ell(l);
        if (ell == e.p() || ell == e.q()) continue;
        row_primes.push_back(ell);
        if (++good_spots == 3) break;
    }
    for (const Int& ell : row_primes)
        r.local_rows.push_back(localdata::local_data(e, ell));

    for (const Int& d1 : descent::DivisorClassGroup::phi_ambient().elements())
        r.spaces.push_back(
            descent::space_verdicts(localsolve::QuarticSpace(Family::C, d1, e)));
    for (const Int& d1 : descent::DivisorClassGroup::phihat_ambient(e).elements())
        r.spaces.push_back(
            descent::space_verdicts(localsolve::QuarticSpace(Family::Cprime, d1, e)));

    r.summary = descent::descend(e);
    r.rank_one = rank1::rank_one_certificate(e);
    r.torsion = curve::torsion_over_Q(e).str();
    r.predicted = descent::predicted_dims(e.p(), e.sigma);
    r.conformant = r.summary.selmer_phi.dim == r.predicted.dim_phi &&
                   r.summary.selmer_phihat.dim == r.predicted.dim_phihat &&
                   r.summary.dim_selmer2 == r.predicted.dim_selmer2 &&
                   r.summary.rank_sha_bound == r.predicted.bound;
    return r;
}

std::string to_json(const Report& r, bool pretty) {
    json j;
    j["p"] = int_json(r.p);
    j["q"] = int_json(r.q);
    j["sigma"] = r.sigma;
    j["invariants"] = json{{"b2", int_json(r.invariants.b2)},
                           {"b4", int_json(r.invariants.b4)},
                           {"b6", int_json(r.invariants.b6)},
                           {"b8", int_json(r.invariants.b8)},
                           {"c4", int_json(r.invariants.c4)},
                           {"c6", int_json(r.invariants.c6)},
                           {"disc", int_json(r.invariants.disc)},
                           {"j", rat_json(r.invariants.j)}};
    j["conductor"] = int_json(r.conductor);
    j["local_data"] = json::array();
    for (const LocalData& d : r.local_rows) j["local_data"].push_back(local_row_json(d));
    j["spaces"] = json::array();
    for (const SpaceVerdicts& s : r.spaces) j["spaces"].push_back(space_json(s));
    j["selmer_phi"] = selmer_json(r.summary.selmer_phi);
    j["selmer_phihat"] = selmer_json(r.summary.selmer_phihat);
    j["dim_selmer_phi"] = r.summary.selmer_phi.dim;
    j["dim_selmer_phihat"] = r.summary.selmer_phihat.dim;
    j["dim_selmer2"] = r.summary.dim_selmer2;
    j["rank_sha_bound"] = r.summary.rank_sha_bound;
    j["certificate"] = r.summary.certificate.kind_str();
    if (r.summary.certificate.kind != Certificate::Kind::BoundOnly) j["sha2_dim"] = 0;
    if (r.summary.certificate.witness)
        j["witness_point"] = point_json(*r.summary.certificate.witness);
    if (r.rank_one) {
        j["rank_one"] = json{
            {"witness",
             {{"a", int_json(r.rank_one->witness.a)},
              {"b", int_json(r.rank_one->witness.b)},
              {"eps", r.rank_one->witness.eps},
              {"delta", r.rank_one->witness.delta},
              {"c", int_json(r.rank_one->witness.c)}}},
            {"solution",
             {{"X", int_json(r.rank_one->solution.X)},
              {"Y", int_json(r.rank_one->solution.Y)},
              {"S", int_json(r.rank_one->solution.S)},
              {"T", int_json(r.rank_one->solution.T)},
              {"system", r.rank_one->solution.system == rank1::System::I ? "I" : "II"}}},
            {"point", point_json(r.rank_one->point)}};
    }
    j["torsion"] = r.torsion;
    j["predicted"] = json{{"dim_phi", r.predicted.dim_phi},
                          {"dim_phihat", r.predicted.dim_phihat},
                          {"dim_selmer2", r.predicted.dim_selmer2},
                          {"bound", r.predicted.bound}};
    j["conformant"] = r.conformant;
    return pretty ? j.dump(2) : j.dump();
}

Report from_json(const std::string& text) {
    const json j = json::parse(text);
    Report r;
    r.p = int_from(j["p"]);
    r.q = int_from(j["q"]);
    r.sigma = j["sigma"].get<int>();
    const json& inv = j["invariants"];
    r.invariants.b2 = int_from(inv["b2"]);
    r.invariants.b4 = int_from(inv["b4"]);
    r.invariants.b6 = int_from(inv["b6"]);
    r.invariants.b8 = int_from(inv["b8"]);
    r.invariants.c4 = int_from(inv["c4"]);
    r.invariants.c6 = int_from(inv["c6"]);
    r.invariants.disc = int_from(inv["disc"]);
    r.invariants.j = rat_from(inv["j"]);
    r.conductor = int_from(j["conductor"]);
    for (const auto& row : j["local_data"]) r.local_rows.push_back(local_row_from(row));
    for (const auto& s : j["spaces"]) r.spaces.push_back(space_from(s));

    r.summary.selmer_phi.kind = descent::SelmerGroup::Kind::Phi;
    r.summary.selmer_phi.elements = classes_from(j["selmer_phi"]);
    r.summary.selmer_phi.dim = j["dim_selmer_phi"].get<int>();
    r.summary.selmer_phihat.kind = descent::SelmerGroup::Kind::PhiHat;
    r.summary.selmer_phihat.elements = classes_from(j["selmer_phihat"]);
    r.summary.selmer_phihat.dim = j["dim_selmer_phihat"].get<int>();
    r.summary.dim_selmer2 = j["dim_selmer2"].get<int>();
    r.summary.rank_sha_bound = j["rank_sha_bound"].get<int>();
    const std::string cert = j["certificate"].get<std::string>();
    r.summary.certificate.kind = cert == "RankZero"  ? Certificate::Kind::RankZero
                                 : cert == "RankOne" ? Certificate::Kind::RankOne
                                                     : Certificate::Kind::BoundOnly;
    if (j.contains("witness_point"))
        r.summary.certificate.witness = point_from(j["witness_point"]);
    if (j.contains("rank_one")) {
        rank1::RankOneCertificate c;
        const json& w = j["rank_one"]["witness"];
        c.witness = {int_from(w["a"]), int_from(w["b"]), w["eps"].get<int>(),
                     w["delta"].get<int>(), int_from(w["c"])};
        const json& s = j["rank_one"]["solution"];
        c.solution = {int_from(s["X"]), int_from(s["Y"]), int_from(s["S"]),
                      int_from(s["T"]),
                      s["system"].get<std::string>() == "I" ? rank1::System::I
                                                            : rank1::System::II};
        c.point = point_from(j["rank_one"]["point"]);
        r.rank_one = c;
    }
    r.torsion = j["torsion"].get<std::string>();
    const json& pr = j["predicted"];
    r.predicted = {pr["dim_phi"].get<int>(), pr["dim_phihat"].get<int>(),
                   pr["dim_selmer2"].get<int>(), pr["bound"].get<int>()};
    r.conformant = j["conformant"].get<bool>();
    return r;
}

}  // namespace twindescent::report
