#pragma once

#include <drycert/base_surface.hpp>

#include <stdexcept>

namespace drycert {

/* Numerical data of a rank-n spectral cover bundle: the surface class
 * eta and the half-integral twist lambda, stored as 2*lambda. */
struct SpectralData {
    int n = 1;
    DivClass eta;
    int two_lambda = 1;
};

inline Rational lambda_of(const SpectralData& s) { return Rational(s.two_lambda, 2); }

struct LineClassCoeffs {
    Rational sigma_coeff;
    Rational eta_coeff;
    Rational c1_coeff;
    bool integral = false;
};

/* Coefficients of c1(L) = n(1/2+lambda) sigma + (1/2-lambda) eta + (1/2+n lambda) c1.
 * The class is integral exactly when the parity rules admit (n, eta, lambda). */
inline LineClassCoeffs line_class_coeffs(const SpectralData& s, const BaseSurface& base) {
    if (s.n < 1) throw std::domain_error("spectral rank n must be at least 1");
    const Rational lam = lambda_of(s);
    LineClassCoeffs out;
    out.sigma_coeff = Rational(s.n) * (Rational(1, 2) + lam);
    out.eta_coeff = Rational(1, 2) - lam;
    out.c1_coeff = Rational(1, 2) + Rational(s.n) * lam;
    const DivClass horizontal = out.eta_coeff * s.eta + out.c1_coeff * c1(base);
    out.integral = is_integer(out.sigma_coeff) && horizontal.is_integral();
    return out;
}

enum class BpfStatus { Certified, Failed, Unverified };

/* Base-point freeness of |eta|.  Nef is exact on the toric bases (P2 and
 * F_g).  On dP_k nef is necessary; sufficiency is certified through the
 * Reider-style criterion eta = K_B + A with A = eta + c1, A^2 >= 5 and
 * A.C >= 2 on every Mori generator.  Nef classes missing that certificate
 * are reported Unverified rather than guessed. */
inline BpfStatus bpf_status(const BaseSurface& base, const DivClass& eta) {
    if (!is_nef(base, eta)) return BpfStatus::Failed;
    if (base.kind != BaseKind::DelPezzo || base.param == 0) return BpfStatus::Certified;
    const DivClass a = eta + c1(base);
    if (self_intersect(base, a) < 5) return BpfStatus::Unverified;
    long long sden = 1;
    if (const auto m = detail::scaled_mori_min(base, a, sden))
        return *m >= 2 * sden ? BpfStatus::Certified : BpfStatus::Unverified;
    for (const auto& curve : base.mori)
        if (intersect(base, a, curve) < 2) return BpfStatus::Unverified;
    return BpfStatus::Certified;
}

struct SpectralCheck {
    BpfStatus bpf = BpfStatus::Failed;
    bool eta_shift_effective = false;
    bool parity = false;
};

inline SpectralCheck spectral_check(const SpectralData& s, const BaseSurface& base) {
    SpectralCheck out;
    out.bpf = bpf_status(base, s.eta);
    out.eta_shift_effective = is_effective(base, s.eta - Rational(s.n) * c1(base));
    out.parity = parity_admissible(base, s.n, s.eta, s.two_lambda);
    return out;
}

inline bool spectral_valid(const SpectralData& s, const BaseSurface& base) {
    const SpectralCheck check = spectral_check(s, base);
    return check.bpf == BpfStatus::Certified && check.eta_shift_effective && check.parity;
}

struct C2W {
    DivClass sigma_part;
    Rational fiber_part;
};

/* c2(W) split into sigma and fiber components:
 * sigma part eta, fiber part -((n^3-n)/24) c1^2 + (lambda^2 - 1/4)(n/2) eta(eta - n c1). */
inline C2W c2_W(const SpectralData& s, const BaseSurface& base) {
    if (!parity_admissible(base, s.n, s.eta, s.two_lambda))
        throw std::domain_error("spectral parity is not admissible");
    const Rational lam = lambda_of(s);
    const Rational n(s.n);
    const DivClass k = c1(base);
    C2W out;
    out.sigma_part = s.eta;
    out.fiber_part = -(n * n * n - n) / Rational(24) * self_intersect(base, k) +
                     (lam * lam - Rational(1, 4)) * n / Rational(2) *
                         intersect(base, s.eta, s.eta - n * k);
    return out;
}

}  // namespace drycert
