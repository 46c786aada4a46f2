#pragma once

#include <drycert/base_surface.hpp>

#include <optional>
#include <stdexcept>

namespace drycert {

/* Candidate (phi, omega, N): phi is the horizontal part of a prospective
 * second Chern class, omega the fiber-degree coefficient, N the twist scale. */
struct CandidateClass {
    DivClass phi;
    Int omega;
    long long N = 1;
};

struct DryEvaluation {
    Rational R;
    Rational q;
    bool phi_shift_ample = false;
    std::optional<Rational> b_max;
    std::optional<Rational> omega0_at_bmax;
    std::optional<Rational> threshold;
    bool dry = false;
};

inline void require_twist_scale(long long N) {
    if (N < 1) throw std::domain_error("twist scale N must be at least 1");
}

/* psi = phi - (N/2)c1, the ample-shift class all conditions revolve around. */
inline DivClass phi_shift(const BaseSurface& base, const DivClass& phi, long long N) {
    require_twist_scale(N);
    return phi - Rational(N, 2) * c1(base);
}

inline Rational r_value(const BaseSurface& base, const DivClass& phi, long long N) {
    require_twist_scale(N);
    const DivClass k = c1(base);
    return intersect(base, phi, k) / Rational(2 * N) + self_intersect(base, k) / Rational(6) +
           Rational(1, 2);
}

inline Rational q_value(const BaseSurface& base, const DivClass& phi, long long N) {
    require_twist_scale(N);
    const DivClass psi = phi_shift(base, phi, N);
    return self_intersect(base, psi) /
           (Rational(N) * Rational(N) * self_intersect(base, c1(base)));
}

/* Supremum of b with phi - N(1/2 + b)c1 ample, by ray-shooting against the
 * Mori generators; the feasible set is the open interval (0, b_max). */
inline Rational b_max(const BaseSurface& base, const DivClass& phi, long long N) {
    require_twist_scale(N);
    const DivClass psi = phi_shift(base, phi, N);
    if (!is_ample(base, psi))
        throw std::domain_error("phi - (N/2)c1 is not ample; no feasible shift interval");
    detail::SmallCoords sc;
    if (N <= 1048576 && detail::pairing_cache_ok(base, psi) &&
        base.mori_c1.size() == base.mori.size() && detail::small_coords(psi, sc)) {
        long long bdot = 0, bden = 1;
        bool first = true, degenerate = false;
        for (std::size_t i = 0; i < base.mori_rows.size(); ++i) {
            const long long kc = base.mori_c1[i];
            if (kc <= 0) {
                degenerate = true;
                break;
            }
            const long long dot = detail::row_dot(base.mori_rows[i], sc, base.rank);
            const long long d = sc.den * N * kc;
            if (first || static_cast<__int128>(dot) * bden < static_cast<__int128>(bdot) * d) {
                bdot = dot;
                bden = d;
                first = false;
            }
        }
        if (!degenerate && !first) return Rational(Int(bdot), Int(bden));
    }
    const DivClass k = c1(base);
    std::optional<Rational> best;
    for (const auto& curve : base.mori) {
        const Rational kc = intersect(base, k, curve);
        if (kc <= 0)
            throw std::domain_error("anticanonical class must be positive on Mori generators");
        const Rational ratio = intersect(base, psi, curve) / (Rational(N) * kc);
        if (!best || ratio < *best) best = ratio;
    }
    return *best;
}

inline Rational omega0(const BaseSurface& base, const DivClass& phi, long long N,
                       const Rational& b) {
    if (b <= 0) throw std::domain_error("omega0 requires b > 0");
    return r_value(base, phi, N) +
           self_intersect(base, c1(base)) / Rational(4) * (b + q_value(base, phi, N) / b);
}

inline Rational dry_threshold(const BaseSurface& base, const DivClass& phi, long long N) {
    const Rational b = b_max(base, phi, N);
    return Rational(N) * (r_value(base, phi, N) +
                          self_intersect(base, c1(base)) / Rational(4) *
                              (b + q_value(base, phi, N) / b));
}

inline DryEvaluation evaluate_dry(const BaseSurface& base, const CandidateClass& cand) {
    require_twist_scale(cand.N);
    DryEvaluation ev;
    ev.R = r_value(base, cand.phi, cand.N);
    ev.q = q_value(base, cand.phi, cand.N);
    ev.phi_shift_ample = is_ample(base, phi_shift(base, cand.phi, cand.N));
    if (ev.phi_shift_ample) {
        ev.b_max = b_max(base, cand.phi, cand.N);
        ev.omega0_at_bmax = ev.R + self_intersect(base, c1(base)) / Rational(4) *
                                       (*ev.b_max + ev.q / *ev.b_max);
        ev.threshold = Rational(cand.N) * *ev.omega0_at_bmax;
        ev.dry = Rational(cand.omega) > *ev.threshold;
    }
    return ev;
}

inline bool is_dry(const BaseSurface& base, const CandidateClass& cand) {
    return evaluate_dry(base, cand).dry;
}

/* Necessary bound omega > N(R + sqrt(c1^2 psi^2)/(2N^2)), decided by exact
 * squared comparison: with L = omega - N*R, it reads L > 0 and
 * 4 N^2 L^2 > c1^2 psi^2. */
inline bool corollary_lower_bound_holds(const BaseSurface& base, const CandidateClass& cand) {
    require_twist_scale(cand.N);
    const DivClass psi = phi_shift(base, cand.phi, cand.N);
    if (!is_ample(base, psi))
        throw std::domain_error("phi - (N/2)c1 is not ample; no feasible shift interval");
    const Rational L = Rational(cand.omega) - Rational(cand.N) * r_value(base, cand.phi, cand.N);
    if (L <= 0) return false;
    const Rational lhs = Rational(4) * Rational(cand.N) * Rational(cand.N) * L * L;
    const Rational rhs = self_intersect(base, c1(base)) * self_intersect(base, psi);
    return lhs > rhs;
}

}  // namespace drycert
