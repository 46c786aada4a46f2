#include <chrono>
#include <cstdio>

#include "drycert/atlas.hpp"

using namespace drycert;
using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main() {
    const BaseSurface dp8 = make_del_pezzo(8);
    DivClass phi = DivClass::zero(9);
    phi.c[0] = 12;
    for (int i = 1; i < 9; ++i) phi.c[static_cast<std::size_t>(i)] = -4;
    const CandidateClass cand{phi, Int(7), 6};
    const auto configs = case_table(6, dp8);

    const int R = 20000;
    volatile int sink = 0;

    auto t0 = Clock::now();
    for (int i = 0; i < R; ++i) sink += static_cast<int>(realize_with(dp8, cand, configs).failures.size());
    std::printf("realize_with:      %7.1f ns/call\n", ms_since(t0) * 1e6 / R);

    t0 = Clock::now();
    for (int i = 0; i < R; ++i) sink += evaluate_dry(dp8, cand).dry ? 1 : 0;
    std::printf("evaluate_dry:      %7.1f ns/call\n", ms_since(t0) * 1e6 / R);

    t0 = Clock::now();
    for (int i = 0; i < R; ++i) {
        Witness w;
        auto f = detail::attempt_config(dp8, cand, configs[0], w);
        sink += f ? 1 : 0;
    }
    std::printf("attempt bal:       %7.1f ns/call\n", ms_since(t0) * 1e6 / R);

    t0 = Clock::now();
    for (int i = 0; i < R; ++i) {
        Witness w;
        auto f = detail::attempt_config(dp8, cand, configs[1], w);
        sink += f ? 1 : 0;
    }
    std::printf("attempt std:       %7.1f ns/call\n", ms_since(t0) * 1e6 / R);

    const DivClass psi = phi_shift(dp8, phi, 6);
    t0 = Clock::now();
    for (int i = 0; i < R; ++i) sink += is_ample(dp8, psi) ? 1 : 0;
    std::printf("is_ample:          %7.1f ns/call\n", ms_since(t0) * 1e6 / R);

    t0 = Clock::now();
    for (int i = 0; i < R; ++i) sink += b_max(dp8, phi, 6) > 0 ? 1 : 0;
    std::printf("b_max:             %7.1f ns/call\n", ms_since(t0) * 1e6 / R);

    t0 = Clock::now();
    for (int i = 0; i < R; ++i) sink += dry_threshold(dp8, phi, 6) > 0 ? 1 : 0;
    std::printf("dry_threshold:     %7.1f ns/call\n", ms_since(t0) * 1e6 / R);

    const SpectralData s{3, phi, 1};
    t0 = Clock::now();
    for (int i = 0; i < R; ++i) sink += spectral_check(s, dp8).eta_shift_effective ? 1 : 0;
    std::printf("spectral_check:    %7.1f ns/call\n", ms_since(t0) * 1e6 / R);

    const DivClass alpha = select_alpha(dp8, phi, configs[0]);
    const DivClass HB = select_HB(dp8, configs[0]);
    t0 = Clock::now();
    for (int i = 0; i < R; ++i) {
        auto p = build_polarization(alpha, HB, dp8);
        sink += p.x > 0 ? 1 : 0;
    }
    std::printf("build_polar:       %7.1f ns/call\n", ms_since(t0) * 1e6 / R);

    {
        const auto p = build_polarization(alpha, HB, dp8);
        t0 = Clock::now();
        for (int i = 0; i < R; ++i) sink += check_polarization(p, alpha, dp8) ? 1 : 0;
        std::printf("check_polar:       %7.1f ns/call\n", ms_since(t0) * 1e6 / R);
    }

    const ExtensionConfig cfg{3, 3, 1, alpha, Twist::Balanced};
    t0 = Clock::now();
    for (int i = 0; i < R; ++i) sink += nonsplit_ok(cfg, phi, dp8) ? 1 : 0;
    std::printf("nonsplit:          %7.1f ns/call\n", ms_since(t0) * 1e6 / R);

    t0 = Clock::now();
    for (int i = 0; i < R; ++i) sink += is_integer(required_c2E(cfg, s, Int(7), dp8)) ? 1 : 0;
    std::printf("required_c2E:      %7.1f ns/call\n", ms_since(t0) * 1e6 / R);

    t0 = Clock::now();
    for (int i = 0; i < R; ++i) {
        detail::SmallCoords sc;
        sink += detail::small_coords(psi, sc) ? 1 : 0;
    }
    std::printf("small_coords:      %7.1f ns/call\n", ms_since(t0) * 1e6 / R);

    return sink == -1 ? 1 : 0;
}
