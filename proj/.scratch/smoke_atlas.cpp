#include <chrono>
#include <cstdio>

#include "drycert/atlas.hpp"

using namespace drycert;

static double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int main() {
    auto t0 = std::chrono::steady_clock::now();

    const BaseSurface f0 = make_hirzebruch(0);
    std::printf("sweep F0 N=6: %s\n", sweep_bound(6, f0).str().c_str());
    for (long long N : {4LL, 6LL, 8LL, 10LL, 12LL}) {
        auto rep = exception_census(N, f0, std::nullopt);
        std::printf("census F0 N=%lld: entries=%zu complete=%d bound=%s [%.0f ms]\n", N,
                    rep.entries.size(), rep.complete ? 1 : 0, rep.phi_bound.str().c_str(), ms_since(t0));
    }

    auto e0 = enumerate_phis(6, f0, Int(0));
    auto e26 = enumerate_phis(6, f0, Int(26));
    auto e28 = enumerate_phis(6, f0, Int(28));
    std::printf("enumerate F0 N=6: |bound 0|=%zu |bound 26|=%zu |bound 28|=%zu", e0.size(), e26.size(), e28.size());
    if (!e28.empty()) {
        std::printf(" first=(%s,%s)", e28.front().c[0].str().c_str(), e28.front().c[1].str().c_str());
    }
    std::printf("\n");

    for (int k = 1; k <= 6; ++k) {
        auto t1 = std::chrono::steady_clock::now();
        const BaseSurface dp = make_del_pezzo(k);
        auto rep = exception_census(6, dp, std::nullopt);
        std::printf("census dP%d N=6: bound=%s entries=%zu complete=%d [%.0f ms]\n", k,
                    rep.phi_bound.str().c_str(), rep.entries.size(), rep.complete ? 1 : 0, ms_since(t1));
    }

    {
        auto t1 = std::chrono::steady_clock::now();
        const BaseSurface dp7 = make_del_pezzo(7);
        auto phis = enumerate_phis(6, dp7, Int(12));
        std::printf("enumerate dP7 N=6 bound 12: %zu classes [%.0f ms]\n", phis.size(), ms_since(t1));
        t1 = std::chrono::steady_clock::now();
        auto rep = exception_census(6, dp7, std::nullopt);
        std::printf("census dP7 N=6: bound=%s entries=%zu complete=%d [%.0f ms]\n",
                    rep.phi_bound.str().c_str(), rep.entries.size(), rep.complete ? 1 : 0, ms_since(t1));
    }

    {
        auto t1 = std::chrono::steady_clock::now();
        const BaseSurface dp8 = make_del_pezzo(8);
        auto rep = exception_census(6, dp8, std::nullopt);
        std::printf("census dP8 N=6: bound=%s entries=%zu complete=%d [%.0f ms]\n",
                    rep.phi_bound.str().c_str(), rep.entries.size(), rep.complete ? 1 : 0, ms_since(t1));
        std::size_t total_pairs = 0;
        for (const auto& e : rep.entries) total_pairs += e.omegas.size();
        std::printf("census dP8 pairs=%zu", total_pairs);
        if (!rep.entries.empty()) {
            const auto& e = rep.entries.front();
            std::printf(" first_phi=(");
            for (std::size_t i = 0; i < e.phi.c.size(); ++i) {
                std::printf("%s%s", i ? "," : "", e.phi.c[i].str().c_str());
            }
            std::printf(") omegas=");
            for (std::size_t i = 0; i < e.omegas.size(); ++i) {
                std::printf("%s%s", i ? "," : "", e.omegas[i].str().c_str());
            }
            if (!e.failures.empty()) {
                std::printf(" fail0=%s:%s", e.failures[0].config.c_str(), e.failures[0].reason.c_str());
            }
        }
        std::printf("\n");
    }

    std::printf("total %.0f ms\n", ms_since(t0));
    return 0;
}
