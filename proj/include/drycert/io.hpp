#pragma once

#include <drycert/atlas.hpp>

#include <json.hpp>

#include <limits>
#include <sstream>
#include <string>

namespace drycert {
namespace io {

using json = nlohmann::ordered_json;

/* Integers that fit a JSON number are emitted as numbers; everything else
 * (large integers, proper fractions) as decimal strings "p" or "p/q", so a
 * round trip is always exact. */
inline json rational_json(const Rational& r) {
    if (is_integer(r)) {
        const Int n = num(r);
        if (n >= std::numeric_limits<std::int64_t>::min() &&
            n <= std::numeric_limits<std::int64_t>::max())
            return json(n.convert_to<std::int64_t>());
        return json(n.str());
    }
    return json(num(r).str() + "/" + den(r).str());
}

inline json int_json(const Int& n) { return rational_json(Rational(n)); }

inline Rational parse_rational(const json& j) {
    if (j.is_number_integer()) return Rational(Int(j.get<std::int64_t>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Int(s));
            const Int p(s.substr(0, slash));
            const Int q(s.substr(slash + 1));
            if (q == 0) throw std::invalid_argument("zero denominator");
            return Rational(p, q);
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("malformed rational: " + s);
        }
    }
    throw std::invalid_argument("expected a rational (number or \"p/q\" string)");
}

inline Int parse_int(const json& j) {
    const Rational r = parse_rational(j);
    if (!is_integer(r)) throw std::invalid_argument("expected an integer");
    return num(r);
}

inline json div_class_json(const DivClass& d) {
    json out = json::array();
    for (const auto& c : d.c) out.push_back(rational_json(c));
    return out;
}

inline DivClass parse_div_class(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("expected a nonempty coefficient array");
    DivClass d = DivClass::zero(j.size());
    std::size_t i = 0;
    for (const auto& c : j) d.c[i++] = parse_rational(c);
    return d;
}

inline json base_json(const BaseSurface& base) {
    json out;
    out["base"] = base.name;
    out["rank"] = base.rank;
    json gram = json::array();
    for (const auto& row : base.gram) {
        json r = json::array();
        for (const auto& v : row) r.push_back(rational_json(v));
        gram.push_back(r);
    }
    out["gram"] = gram;
    out["c1"] = div_class_json(c1(base));
    out["c1_squared"] = rational_json(self_intersect(base, c1(base)));
    json mori = json::array();
    for (const auto& curve : base.mori) mori.push_back(div_class_json(curve));
    out["mori"] = mori;
    return out;
}

inline json candidate_json(const BaseSurface& base, const CandidateClass& cand) {
    json out;
    out["base"] = base.name;
    out["N"] = cand.N;
    out["phi"] = div_class_json(cand.phi);
    out["omega"] = int_json(cand.omega);
    return out;
}

inline json dry_json(const BaseSurface& base, const CandidateClass& cand,
                     const DryEvaluation& ev) {
    json out = candidate_json(base, cand);
    out["R"] = rational_json(ev.R);
    out["q"] = rational_json(ev.q);
    out["phi_shift_ample"] = ev.phi_shift_ample;
    if (ev.b_max) out["b_max"] = rational_json(*ev.b_max);
    if (ev.omega0_at_bmax) out["omega0_at_bmax"] = rational_json(*ev.omega0_at_bmax);
    if (ev.threshold) out["threshold"] = rational_json(*ev.threshold);
    out["dry"] = ev.dry;
    return out;
}

inline const char* twist_name(Twist t) {
    return t == Twist::Balanced ? "balanced" : "standard";
}

inline const char* bpf_status_name(BpfStatus s) {
    switch (s) {
        case BpfStatus::Certified: return "certified";
        case BpfStatus::Failed: return "failed";
        case BpfStatus::Unverified: return "unverified";
    }
    return "failed";
}

inline Twist parse_twist(const json& j) {
    const std::string s = j.get<std::string>();
    if (s == "balanced") return Twist::Balanced;
    if (s == "standard") return Twist::Standard;
    throw std::invalid_argument("unknown twist: " + s);
}

inline json witness_json(const Witness& w) {
    json out;
    out["eta"] = div_class_json(w.eta);
    json cfg;
    cfg["n"] = w.cfg.n;
    cfg["r"] = w.cfg.r;
    cfg["two_lambda"] = w.cfg.two_lambda;
    cfg["twist"] = twist_name(w.cfg.twist);
    cfg["alpha"] = div_class_json(w.cfg.alpha);
    out["config"] = cfg;
    out["c2E"] = int_json(w.c2E);
    json polar;
    polar["H_B"] = div_class_json(w.polarization.H_B);
    polar["x"] = int_json(w.polarization.x);
    polar["rho"] = div_class_json(w.polarization.rho);
    polar["h"] = div_class_json(w.polarization.h);
    polar["t"] = int_json(w.polarization.t);
    out["polarization"] = polar;
    json c2v;
    c2v["sigma_part"] = div_class_json(w.recomputed_c2V.sigma_part);
    c2v["fiber_part"] = rational_json(w.recomputed_c2V.fiber_part);
    out["c2V"] = c2v;
    json cond;
    cond["parity"] = w.condition_report.parity;
    cond["bpf"] = bpf_status_name(w.condition_report.bpf);
    cond["eta_shift_effective"] = w.condition_report.eta_shift_effective;
    cond["alpha_nonzero"] = w.condition_report.alpha_nonzero;
    cond["alpha_orthogonal"] = w.condition_report.alpha_orthogonal;
    cond["nonsplit"] = w.condition_report.nonsplit;
    cond["polarization"] = w.condition_report.polarization;
    cond["c2e_integral"] = w.condition_report.c2e_integral;
    cond["artamkin"] = w.condition_report.artamkin;
    out["condition_report"] = cond;
    return out;
}

/* Only the fields the verifier re-audits come back; reports derived during
 * construction are recomputed, never trusted from the file. */
inline Witness parse_witness(const json& j) {
    Witness w;
    w.eta = parse_div_class(j.at("eta"));
    const json& cfg = j.at("config");
    w.cfg.n = cfg.at("n").get<int>();
    w.cfg.r = cfg.at("r").get<int>();
    w.cfg.two_lambda = cfg.at("two_lambda").get<int>();
    w.cfg.twist = parse_twist(cfg.at("twist"));
    w.cfg.alpha = parse_div_class(cfg.at("alpha"));
    w.c2E = parse_int(j.at("c2E"));
    const json& polar = j.at("polarization");
    w.polarization.H_B = parse_div_class(polar.at("H_B"));
    w.polarization.x = parse_int(polar.at("x"));
    w.polarization.rho = parse_div_class(polar.at("rho"));
    w.polarization.h = parse_div_class(polar.at("h"));
    w.polarization.t = parse_int(polar.at("t"));
    return w;
}

inline const char* verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Realized: return "realized";
        case VerdictKind::NotDry: return "not_dry";
        case VerdictKind::ExceptionCandidate: return "exception_candidate";
        case VerdictKind::Unsupported: return "unsupported";
    }
    return "unsupported";
}

inline json verdict_json(const BaseSurface& base, const CandidateClass& cand,
                         const Verdict& v) {
    json out = candidate_json(base, cand);
    out["verdict"] = verdict_kind_name(v.kind);
    out["dry_report"] = dry_json(base, cand, v.dry_report);
    if (v.witness) out["witness"] = witness_json(*v.witness);
    if (!v.failures.empty()) {
        json fails = json::array();
        for (const auto& f : v.failures) {
            json one;
            one["config"] = f.config;
            one["reason"] = f.reason;
            fails.push_back(one);
        }
        out["failures"] = fails;
    }
    if (!v.reason.empty()) out["reason"] = v.reason;
    return out;
}

inline json census_json(const CensusReport& report) {
    json out;
    out["base"] = report.base;
    out["N"] = report.N;
    out["phi_bound"] = int_json(report.phi_bound);
    out["complete"] = report.complete;
    json entries = json::array();
    for (const auto& e : report.entries) {
        json one;
        one["phi"] = div_class_json(e.phi);
        json omegas = json::array();
        for (const auto& w : e.omegas) omegas.push_back(int_json(w));
        one["omegas"] = omegas;
        json fails = json::array();
        for (const auto& f : e.failures) {
            json fj;
            fj["config"] = f.config;
            fj["reason"] = f.reason;
            fails.push_back(fj);
        }
        one["failures"] = fails;
        entries.push_back(one);
    }
    out["entries"] = entries;
    return out;
}

inline CensusReport parse_census(const json& j) {
    CensusReport report;
    report.base = j.at("base").get<std::string>();
    report.N = j.at("N").get<long long>();
    report.phi_bound = parse_int(j.at("phi_bound"));
    report.complete = j.at("complete").get<bool>();
    for (const auto& e : j.at("entries")) {
        CensusEntry entry;
        entry.phi = parse_div_class(e.at("phi"));
        for (const auto& w : e.at("omegas")) entry.omegas.push_back(parse_int(w));
        for (const auto& f : e.at("failures"))
            entry.failures.push_back(ConfigFailure{f.at("config").get<std::string>(),
                                                   f.at("reason").get<std::string>()});
        report.entries.push_back(std::move(entry));
    }
    return report;
}

/* One row per (phi, omega); phi joined with ';', failing configs with '|'. */
inline std::string census_csv(const CensusReport& report) {
    std::ostringstream out;
    out << "base,N,phi,omega,failing_configs\n";
    for (const auto& e : report.entries) {
        std::string phi;
        for (std::size_t i = 0; i < e.phi.size(); ++i) {
            if (i) phi += ';';
            phi += format_rational(e.phi.c[i]);
        }
        std::string fails;
        for (std::size_t i = 0; i < e.failures.size(); ++i) {
            if (i) fails += '|';
            fails += e.failures[i].config + ":" + e.failures[i].reason;
        }
        for (const auto& w : e.omegas)
            out << report.base << ',' << report.N << ',' << phi << ',' << w.str() << ','
                << fails << '\n';
    }
    return out.str();
}

}  // namespace io
}  // namespace drycert
