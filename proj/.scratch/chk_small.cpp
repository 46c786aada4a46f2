#include <cstdio>

#include "drycert/atlas.hpp"

using namespace drycert;

static void show(const char* tag, const std::vector<DivClass>& v) {
    std::printf("%s: %zu\n", tag, v.size());
    for (const auto& p : v) {
        std::printf("  (");
        for (std::size_t i = 0; i < p.size(); ++i)
            std::printf("%s%s", i ? "," : "", format_rational(p.c[i]).c_str());
        std::printf(")\n");
    }
}

int main() {
    const BaseSurface dp3 = make_del_pezzo(3);
    show("dP3 N=6 bound 24", enumerate_phis(6, dp3, Int(24)));
    show("dP3 N=6 bound 26", enumerate_phis(6, dp3, Int(26)));

    /* forced big-int DFS instantiation vs the public path */
    const Int bound(26);
    const Int csq = num(self_intersect(dp3, c1(dp3)));
    const Int ucap = 2 * bound - 6 * csq;
    std::vector<DivClass> via_int;
    auto emit = [&](const DivClass& p) { via_int.push_back(p); };
    const std::optional<Int> noM;
    detail::DelPezzoScan<Int, decltype(emit)>{dp3, 6, ucap, csq, Int(0), noM, emit}.run();
    std::sort(via_int.begin(), via_int.end(), detail::lex_less);
    const auto pub = enumerate_phis(6, dp3, bound);
    std::printf("int-instantiation match: %s\n", via_int == pub ? "yes" : "NO");

    /* attempt boundary on dP3 balanced: omega_min = 7 */
    const auto configs = case_table(6, dp3);
    std::printf("dP3 case table:");
    for (const auto& t : configs) std::printf(" %s", t.label().c_str());
    std::printf("\n");
    DivClass phi4 = DivClass::zero(4);
    phi4.c[0] = 12;
    for (int i = 1; i < 4; ++i) phi4.c[static_cast<std::size_t>(i)] = -4;
    for (long long w : {6LL, 7LL, 24LL, 25LL}) {
        Witness wit;
        auto f = detail::attempt_config(dp3, CandidateClass{phi4, Int(w), 6}, configs[0], wit);
        std::printf("attempt bal 4c1 w=%lld: %s c2E=%s\n", w, f ? f->c_str() : "ok",
                    f ? "-" : wit.c2E.str().c_str());
        const Verdict v = realize(dp3, CandidateClass{phi4, Int(w), 6});
        std::printf("realize 4c1 w=%lld: kind=%d\n", w, static_cast<int>(v.kind));
    }
    return 0;
}
