#include <cassert>
#include <cstdio>

#include "drycert/atlas.hpp"

using namespace drycert;

int main() {
    auto p2 = make_projective_plane();
    auto f0 = make_hirzebruch(0);
    auto f1 = make_hirzebruch(1);
    auto dp7 = make_del_pezzo(7);

    {
        auto v = enumerate_phis(6, p2, Int(29));
        std::printf("p2 bound 29: %zu\n", v.size());
        v = enumerate_phis(6, p2, Int(30));
        std::printf("p2 bound 30: %zu", v.size());
        for (const auto& p : v) std::printf(" (%s)", format_rational(p.c[0]).c_str());
        std::printf("\n");
        v = enumerate_phis(6, p2, Int(36));
        std::printf("p2 bound 36: %zu", v.size());
        for (const auto& p : v) std::printf(" (%s)", format_rational(p.c[0]).c_str());
        std::printf("\n");
        v = enumerate_phis(5, p2, Int(30));
        std::printf("p2 N=5 bound 30: %zu", v.size());
        for (const auto& p : v) std::printf(" (%s)", format_rational(p.c[0]).c_str());
        std::printf("\n");
    }
    {
        auto v = enumerate_phis(6, f1, Int(28));
        std::printf("f1 bound 28: %zu\n", v.size());
        v = enumerate_phis(6, f1, Int(29));
        std::printf("f1 bound 29: %zu", v.size());
        for (const auto& p : v)
            std::printf(" (%s,%s)", format_rational(p.c[0]).c_str(),
                        format_rational(p.c[1]).c_str());
        std::printf("\n");
    }
    {
        auto v = enumerate_phis(6, f0, Int(40));
        std::printf("f0 bound 40: %zu\n", v.size());
        std::size_t brute = 0;
        for (int e = 1; e <= 25; ++e)
            for (int f = 1; f <= 25; ++f) {
                if (e > 6 && f > 6 && 2 * (e + f) <= 40) ++brute;
            }
        std::printf("f0 brute: %zu\n", brute);
        assert(v.size() == brute);
    }
    {
        const auto report = detail::exception_census_over(
            6, dp7, {ConfigTemplate{3, 3, 1, Twist::Standard}}, std::optional<Int>(Int(8)));
        std::printf("dp7 std-only bound 8: entries=%zu complete=%d\n", report.entries.size(),
                    (int)report.complete);
        for (const auto& e : report.entries) {
            std::printf("  phi=(");
            for (std::size_t i = 0; i < e.phi.size(); ++i)
                std::printf("%s%s", i ? "," : "", format_rational(e.phi.c[i]).c_str());
            std::printf(") omegas=%zu first=%s last=%s fail=%s:%s\n", e.omegas.size(),
                        e.omegas.front().str().c_str(), e.omegas.back().str().c_str(),
                        e.failures[0].config.c_str(), e.failures[0].reason.c_str());
        }
        const Int sweep_std = detail::sweep_bound_over(
            6, dp7, {ConfigTemplate{3, 3, 1, Twist::Standard}});
        std::printf("dp7 std-only sweep bound: %s\n", sweep_std.str().c_str());
    }
    {
        std::printf("dp7 thr(4c1): %s\n",
                    format_rational(dry_threshold(dp7, Rational(4) * c1(dp7), 6)).c_str());
        std::printf("dp7 M: %s\n", detail::min_omega_min(6, dp7, case_table(6, dp7)).str().c_str());
    }
    std::puts("CHK_ATLAS_DONE");
    return 0;
}
