#pragma once

#include <drycert/dry.hpp>
#include <drycert/extension.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace drycert {

/* Raised when no construction in the case table covers (N, base). */
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigTemplate {
    int n = 0;
    int r = 0;
    int two_lambda = 1;
    Twist twist = Twist::Standard;

    std::string label() const {
        return std::string(twist == Twist::Balanced ? "balanced" : "standard") + "-n" +
               std::to_string(n) + "-r" + std::to_string(r);
    }
};

/* Constructions available for a given twist scale N on a given base, in
 * preference order (Balanced first: it has the lower realizability floor).
 * Balanced needs N even with n = N/2 odd on any rank >= 2 base, or n even
 * on F0 only.  Standard covers N >= 6 everywhere and N in {4,5} on F0. */
inline std::vector<ConfigTemplate> case_table(long long N, const BaseSurface& base) {
    std::vector<ConfigTemplate> out;
    if (N < 4 || base.rank < 2) return out;
    const bool is_f0 = base.kind == BaseKind::Hirzebruch && base.param == 0;
    if (N % 2 == 0) {
        const int half = static_cast<int>(N / 2);
        if (half % 2 == 1 || is_f0)
            out.push_back(ConfigTemplate{half, half, 1, Twist::Balanced});
    }
    if (N >= 6)
        out.push_back(ConfigTemplate{3, static_cast<int>(N - 3), 1, Twist::Standard});
    else if (is_f0)
        out.push_back(ConfigTemplate{2, static_cast<int>(N - 2), 1, Twist::Standard});
    return out;
}

/* Preferred alpha candidate per base/twist, before sign adjustment. */
inline DivClass alpha_candidate(const BaseSurface& base, Twist twist) {
    if (base.rank < 2) throw std::domain_error("no alpha candidate on a rank-1 base");
    if (base.kind == BaseKind::Hirzebruch) return DivClass{Rational(-1), Rational(1)};
    DivClass a0 = DivClass::zero(static_cast<std::size_t>(base.rank));
    if (twist == Twist::Standard) {
        a0.c[0] = base.param;
        for (int i = 1; i < base.rank; ++i) a0.c[static_cast<std::size_t>(i)] = -3;
    } else {
        a0.c[0] = 1;
        a0.c[1] = -3;
    }
    return a0;
}

/* Sign-adjusted so that alpha.(eta - n c1) <= 0; ties keep the positive sign. */
inline DivClass select_alpha(const BaseSurface& base, const DivClass& eta,
                             const ConfigTemplate& tmpl) {
    const DivClass a0 = alpha_candidate(base, tmpl.twist);
    const Rational pairing = intersect(base, a0, eta - Rational(tmpl.n) * c1(base));
    return pairing > 0 ? -a0 : a0;
}

/* Ample, alpha-orthogonal base polarization component. */
inline DivClass select_HB(const BaseSurface& base, const ConfigTemplate&) {
    if (base.rank < 2) throw std::domain_error("no H_B candidate on a rank-1 base");
    if (base.kind == BaseKind::Hirzebruch)
        return DivClass{Rational(1), Rational(base.param + 1)};
    return c1(base);
}

struct ConditionReport {
    bool parity = false;
    BpfStatus bpf = BpfStatus::Failed;
    bool eta_shift_effective = false;
    bool alpha_nonzero = false;
    bool alpha_orthogonal = false;
    bool nonsplit = false;
    bool polarization = false;
    bool c2e_integral = false;
    bool artamkin = false;

    bool all_ok() const {
        return parity && bpf == BpfStatus::Certified && eta_shift_effective && alpha_nonzero &&
               alpha_orthogonal && nonsplit && polarization && c2e_integral && artamkin;
    }
};

struct Witness {
    DivClass eta;
    ExtensionConfig cfg;
    Int c2E;
    PolarizationData polarization;
    DryEvaluation dry_report;
    ConditionReport condition_report;
    C2V recomputed_c2V;
};

enum class VerdictKind { Realized, NotDry, ExceptionCandidate, Unsupported };

struct ConfigFailure {
    std::string config;
    std::string reason;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Unsupported;
    DryEvaluation dry_report;
    std::optional<Witness> witness;
    std::vector<ConfigFailure> failures;
    std::string reason;
};

namespace detail {

/* Polarization outcome per (construction, alpha sign).  The data depends
 * only on those, never on the candidate, so sweep loops share one cache
 * across the whole region. */
struct PolarOutcome {
    std::optional<PolarizationData> data;
    bool ok = false;
};

using PolarCacheKey = std::tuple<int, int, int, int, bool>;
using PolarCache = std::map<PolarCacheKey, PolarOutcome>;

inline PolarOutcome make_polar_outcome(const BaseSurface& base, const DivClass& alpha,
                                       const DivClass& H_B) {
    PolarOutcome o;
    try {
        o.data = build_polarization(alpha, H_B, base);
    } catch (const std::domain_error&) {
        return o;
    }
    o.ok = check_polarization(*o.data, alpha, base);
    return o;
}

/* Attempt one configuration; fills out or returns the first failing
 * condition's reason code.  pre_spectral and pcache only save recomputation;
 * both carry values attempt_config would otherwise derive itself. */
inline std::optional<std::string> attempt_config(const BaseSurface& base,
                                                 const CandidateClass& cand,
                                                 const ConfigTemplate& tmpl, Witness& out,
                                                 const SpectralCheck* pre_spectral = nullptr,
                                                 PolarCache* pcache = nullptr) {
    if (!parity_admissible(base, tmpl.n, cand.phi, tmpl.two_lambda)) return "parity";

    const DivClass a0 = alpha_candidate(base, tmpl.twist);
    const bool flipped =
        intersect(base, a0, cand.phi - Rational(tmpl.n) * c1(base)) > 0;
    const DivClass alpha = flipped ? -a0 : a0;
    if (alpha.is_zero()) return "alpha-zero";
    const DivClass H_B = select_HB(base, tmpl);
    if (intersect(base, alpha, H_B) != 0) return "alpha-not-orthogonal";

    const SpectralData s{tmpl.n, cand.phi, tmpl.two_lambda};
    const SpectralCheck sc = pre_spectral ? *pre_spectral : spectral_check(s, base);
    if (sc.bpf == BpfStatus::Failed) return "bpf-failed";
    if (sc.bpf == BpfStatus::Unverified) return "bpf-unverified";
    if (!sc.eta_shift_effective) return "eta-shift-not-effective";

    const ExtensionConfig cfg{tmpl.n, tmpl.r, tmpl.two_lambda, alpha, tmpl.twist};
    if (!nonsplit_ok(cfg, cand.phi, base)) return "split";

    const PolarOutcome* polar = nullptr;
    PolarOutcome local;
    if (pcache) {
        const PolarCacheKey key{tmpl.n, tmpl.r, tmpl.two_lambda,
                                static_cast<int>(tmpl.twist), flipped};
        auto [it, inserted] = pcache->try_emplace(key);
        if (inserted) it->second = make_polar_outcome(base, alpha, H_B);
        polar = &it->second;
    } else {
        local = make_polar_outcome(base, alpha, H_B);
        polar = &local;
    }
    if (!polar->data || !polar->ok) return "polarization";

    const Rational need = required_c2E(cfg, s, cand.omega, base);
    if (!is_integer(need)) return "c2e-not-integral";
    const Int c2E = num(need);
    if (c2E < artamkin_floor(cfg.r)) return "artamkin";

    out.eta = cand.phi;
    out.cfg = cfg;
    out.c2E = c2E;
    out.polarization = *polar->data;
    out.condition_report =
        ConditionReport{true, sc.bpf, true, true, true, true, true, true, true};
    out.recomputed_c2V = c2_V(cfg, s, c2E, base);
    return std::nullopt;
}

}  // namespace detail

/* realize over an explicit construction list; the public entry point
 * passes the case table, the atlas module passes subsets (and, for census
 * sweeps, a shared polarization cache). */
inline Verdict realize_with(const BaseSurface& base, const CandidateClass& cand,
                            const std::vector<ConfigTemplate>& configs,
                            detail::PolarCache* pcache = nullptr) {
    Verdict verdict;
    verdict.dry_report = evaluate_dry(base, cand);
    if (!verdict.dry_report.dry) {
        verdict.kind = VerdictKind::NotDry;
        return verdict;
    }
    if (configs.empty()) {
        verdict.kind = VerdictKind::Unsupported;
        verdict.reason = "no construction covers N=" + std::to_string(cand.N) + " on " + base.name;
        return verdict;
    }
    /* spectral_check depends on the configuration only through (n, 2*lambda),
     * which the case tables often repeat; share it across such configs. */
    std::map<std::pair<int, int>, SpectralCheck> spectral;
    for (const auto& tmpl : configs) {
        const auto key = std::make_pair(tmpl.n, tmpl.two_lambda);
        auto it = spectral.find(key);
        if (it == spectral.end())
            it = spectral
                     .emplace(key, spectral_check(SpectralData{tmpl.n, cand.phi, tmpl.two_lambda},
                                                  base))
                     .first;
        Witness w;
        auto failure = detail::attempt_config(base, cand, tmpl, w, &it->second, pcache);
        if (!failure) {
            w.dry_report = verdict.dry_report;
            verdict.kind = VerdictKind::Realized;
            verdict.witness = std::move(w);
            return verdict;
        }
        verdict.failures.push_back(ConfigFailure{tmpl.label(), *failure});
    }
    verdict.kind = VerdictKind::ExceptionCandidate;
    return verdict;
}

inline Verdict realize(const BaseSurface& base, const CandidateClass& cand) {
    return realize_with(base, cand, case_table(cand.N, base));
}

/* Independent re-audit of a certificate: every condition is recomputed
 * from the witness fields; nothing is trusted from the construction. */
inline bool verify_witness(const BaseSurface& base, const Witness& w,
                           const CandidateClass& cand) {
    try {
        validate_config(w.cfg);
        if (cand.N < 1) return false;
        if (!cand.phi.is_integral() || !w.eta.is_integral()) return false;
        if (!parity_admissible(base, w.cfg.n, w.eta, w.cfg.two_lambda)) return false;
        const SpectralData s{w.cfg.n, w.eta, w.cfg.two_lambda};
        if (!spectral_valid(s, base)) return false;
        if (w.cfg.alpha.is_zero()) return false;
        if (intersect(base, w.cfg.alpha, w.polarization.H_B) != 0) return false;
        if (!nonsplit_ok(w.cfg, w.eta, base)) return false;
        if (!check_polarization(w.polarization, w.cfg.alpha, base)) return false;
        if (w.c2E < artamkin_floor(w.cfg.r)) return false;
        const C2V v = c2_V(w.cfg, s, w.c2E, base);
        if (v.sigma_part != cand.phi) return false;
        if (v.fiber_part != Rational(cand.omega)) return false;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace drycert
