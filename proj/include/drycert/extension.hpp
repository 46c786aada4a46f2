#pragma once

#include <drycert/spectral.hpp>

#include <stdexcept>

namespace drycert {

enum class Twist { Standard, Balanced };

/* Numerical data of the extension bundle V built from rank-n W and a
 * rank-r factor twisted along D = pi* alpha. */
struct ExtensionConfig {
    int n = 0;
    int r = 0;
    int two_lambda = 1;
    DivClass alpha;
    Twist twist = Twist::Standard;

    int m() const { return n + r; }
};

inline void validate_config(const ExtensionConfig& cfg) {
    if (cfg.n < 1 || cfg.r < 1) throw std::domain_error("extension ranks must be positive");
    if (cfg.twist == Twist::Standard && cfg.r < cfg.n)
        throw std::domain_error("standard twist requires r >= n");
    if (cfg.twist == Twist::Balanced && cfg.r != cfg.n)
        throw std::domain_error("balanced twist requires r = n");
}

/* Total relative twist between the two extension factors: m for the
 * standard shape (-nD, rD), 2 for the balanced shape (-D, D). */
inline int twist_gap(const ExtensionConfig& cfg) {
    validate_config(cfg);
    return cfg.twist == Twist::Standard ? cfg.m() : 2;
}

/* Holomorphic Euler characteristic index I_X = r(-lambda eta + tau alpha)(eta - n c1). */
inline Rational index_IX(const ExtensionConfig& cfg, const DivClass& eta,
                         const BaseSurface& base) {
    if (!parity_admissible(base, cfg.n, eta, cfg.two_lambda))
        throw std::domain_error("spectral parity is not admissible");
    const Rational tau(twist_gap(cfg));
    const Rational lam(cfg.two_lambda, 2);
    const DivClass factor = Rational(-1) * lam * eta + tau * cfg.alpha;
    return Rational(cfg.r) * intersect(base, factor, eta - Rational(cfg.n) * c1(base));
}

/* Nonsplitting forces I_X < 0, i.e. (lambda eta - tau alpha)(eta - n c1) > 0. */
inline bool nonsplit_ok(const ExtensionConfig& cfg, const DivClass& eta,
                        const BaseSurface& base) {
    return index_IX(cfg, eta, base) < 0;
}

/* Polarization H = eps H0 + pi* H_B with H0 = x sigma + pi* rho; eps is
 * existential and never materialized. */
struct PolarizationData {
    DivClass H_B;
    Int x = 0;
    DivClass rho;
    DivClass h;
    Int t = 0;
};

inline bool check_polarization(const PolarizationData& p, const DivClass& alpha,
                               const BaseSurface& base) {
    if (!is_ample(base, p.H_B)) return false;
    if (intersect(base, alpha, p.H_B) != 0) return false;
    if (p.x <= 0) return false;
    const DivClass xc1 = Rational(p.x) * c1(base);
    if (!is_ample(base, p.rho - xc1)) return false;
    if (intersect(base, Rational(2) * p.rho - xc1, alpha) <= 0) return false;
    return true;
}

namespace detail {

/* Least positive integer t with t*num_dir + offset ample: ray-shoot
 * t > (-offset . C)/(num_dir . C) over the Mori generators. */
inline Int minimal_ample_scale(const BaseSurface& base, const DivClass& num_dir,
                               const DivClass& offset) {
    SmallCoords dir_sc, off_sc;
    if (pairing_cache_ok(base, num_dir) && pairing_cache_ok(base, offset) &&
        small_coords(num_dir, dir_sc) && small_coords(offset, off_sc)) {
        long long t = 1;
        bool ok = true;
        for (const auto& row : base.mori_rows) {
            const long long dir_dot = row_dot(row, dir_sc, base.rank);
            if (dir_dot <= 0)
                throw std::domain_error("scaling direction must be positive on Mori generators");
            const __int128 a = -static_cast<__int128>(row_dot(row, off_sc, base.rank)) * dir_sc.den;
            const __int128 b = static_cast<__int128>(dir_dot) * off_sc.den;
            __int128 q = a / b;
            if (a % b != 0 && (a < 0)) --q;
            const __int128 lo = q + 1;
            if (lo > (static_cast<__int128>(1) << 62)) {
                ok = false;
                break;
            }
            if (static_cast<long long>(lo) > t) t = static_cast<long long>(lo);
        }
        if (ok) return Int(t);
    }
    Int t = 1;
    for (const auto& curve : base.mori) {
        const Rational dir = intersect(base, num_dir, curve);
        if (dir <= 0)
            throw std::domain_error("scaling direction must be positive on Mori generators");
        const Int lo = floor_int(-intersect(base, offset, curve) / dir) + 1;
        if (lo > t) t = lo;
    }
    return t;
}

}  // namespace detail

/* Deterministic polarization: h = -alpha + T H_B with minimal T making h
 * ample (h.alpha = -alpha^2 > 0), then minimal t with t h - c1 ample;
 * x = 2 and rho = t h + c1, so 2 rho - x c1 = 2t h pairs positively
 * with alpha.  Requires alpha^2 < 0 and alpha orthogonal to ample H_B. */
inline PolarizationData build_polarization(const DivClass& alpha, const DivClass& H_B,
                                           const BaseSurface& base) {
    if (alpha.is_zero() || self_intersect(base, alpha) >= 0)
        throw std::domain_error("alpha must have negative self-intersection");
    if (intersect(base, alpha, H_B) != 0)
        throw std::domain_error("H_B must be alpha-orthogonal");
    if (!is_ample(base, H_B)) throw std::domain_error("H_B must be ample");

    PolarizationData p;
    p.H_B = H_B;
    const Int T = detail::minimal_ample_scale(base, H_B, -alpha);
    p.h = -alpha + Rational(T) * H_B;
    p.t = detail::minimal_ample_scale(base, p.h, -c1(base));
    p.x = 2;
    p.rho = Rational(p.t) * p.h + c1(base);
    return p;
}

inline void require_consistent(const ExtensionConfig& cfg, const SpectralData& s) {
    if (cfg.n != s.n || cfg.two_lambda != s.two_lambda)
        throw std::invalid_argument("extension config and spectral data disagree on (n, lambda)");
}

/* Fiber-degree shift contributed by the alpha twist. */
inline Rational twist_term(const ExtensionConfig& cfg, const BaseSurface& base) {
    validate_config(cfg);
    const Rational a2 = self_intersect(base, cfg.alpha);
    if (cfg.twist == Twist::Balanced) return a2;
    return Rational(cfg.r) * Rational(cfg.n) * Rational(cfg.m()) / Rational(2) * a2;
}

/* Solve the fiber part of c2(V) = omega for c2(E). */
inline Rational required_c2E(const ExtensionConfig& cfg, const SpectralData& s,
                             const Int& omega_target, const BaseSurface& base) {
    require_consistent(cfg, s);
    return Rational(omega_target) - c2_W(s, base).fiber_part + twist_term(cfg, base);
}

struct C2V {
    DivClass sigma_part;
    Rational fiber_part;
};

/* c2(V) = c2(W) + c2(pi* E) - twist term; exact inverse of required_c2E. */
inline C2V c2_V(const ExtensionConfig& cfg, const SpectralData& s, const Int& c2E,
                const BaseSurface& base) {
    require_consistent(cfg, s);
    C2V out;
    out.sigma_part = s.eta;
    out.fiber_part = Rational(c2E) + c2_W(s, base).fiber_part - twist_term(cfg, base);
    return out;
}

/* Existence threshold for stable rank-r E with c1(E) = 0 on these bases. */
inline Int artamkin_floor(int r) { return Int(r) + 2; }

/* Minimal realizable omega for the configuration; with 2 lambda = +-1 the
 * eta-dependent term of c2(W) vanishes, leaving
 * omega_min = -((n^3-n)/24) c1^2 + (r+2) - twist term. */
inline Int omega_min(const ExtensionConfig& cfg, const BaseSurface& base) {
    validate_config(cfg);
    if (cfg.two_lambda != 1 && cfg.two_lambda != -1)
        throw std::domain_error("omega_min requires 2*lambda = +-1");
    const Rational n(cfg.n);
    const Rational value = -(n * n * n - n) / Rational(24) * self_intersect(base, c1(base)) +
                           Rational(artamkin_floor(cfg.r)) - twist_term(cfg, base);
    if (!is_integer(value))
        throw std::domain_error("omega_min is not integral for this configuration");
    return num(value);
}

}  // namespace drycert
