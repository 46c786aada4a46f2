#include <chrono>
#include <cstdio>

#include "drycert/atlas.hpp"

using namespace drycert;

static long long g_nodes = 0;
static long long g_leaves = 0;
static long long g_ample = 0;
static long long g_window = 0;
static long long g_expanded = 0;

namespace drycert {
namespace detail {

/* Instrumented copy of the del Pezzo scan internals. */
template <class Fn>
struct ProbeScan {
    const BaseSurface& base;
    long long N;
    Int ucap;
    const std::optional<Int>& censusM;
    Fn& emit;

    int k = base.rank - 1;
    Int csq = num(self_intersect(base, c1(base)));
    Int delta = (N % 2 != 0) ? Int(1) : Int(2);
    Int window_const = censusM ? 12 * (*censusM - 1) - 5 * Int(N) * csq - 6 * Int(N) : Int(0);

    Int A = 0;
    std::vector<Int> d = std::vector<Int>(static_cast<std::size_t>(k));

    bool window_possible(const Int& s, const Int& q, int chosen) const {
        if (!censusM) return true;
        const Int m = k - chosen;
        Int qf = A * A - 1 - q;
        if (qf < 0) return false;
        const Int per = (A - 1) * (A - 1);
        if (qf > m * per) qf = m * per;
        const Int sf_min = -(isqrt(m * qf) + 1);
        const Int uc_min = 3 * A + s + sf_min;
        const Int best = window_const - 3 * uc_min;
        if (best <= 0) return false;
        const Int usq_min = A * A - q - qf;
        return 9 * usq_min * csq < best * best;
    }

    void run() {
        if (ucap < 1) return;
        Int a_max;
        const Int disc = Int(k) * (ucap * ucap - (9 - k));
        if (disc < 0) {
            a_max = ucap / 3;
        } else {
            a_max = (3 * ucap + isqrt(disc)) / (9 - k) + 1;
        }
        std::printf("a_max=%s\n", a_max.str().c_str());
        for (A = (N % 2 != 0) ? Int(1) : Int(2); A <= a_max; A += 2) {
            if (3 * A > ucap) {
                const Int t = 3 * A - ucap;
                if (t * t > Int(k) * (A * A - 1)) continue;
            }
            if (!window_possible(Int(0), Int(0), 0)) continue;
            long long before = g_nodes;
            node(0, Int(0), Int(0), -delta);
            if (g_nodes - before > 100000) {
                std::printf("A=%s nodes_in_A=%lld total=%lld leaves=%lld\n", A.str().c_str(),
                            g_nodes - before, g_nodes, g_leaves);
            }
        }
    }

    void node(int idx, const Int& s, const Int& q, const Int& prev) {
        ++g_nodes;
        if (idx == k) {
            leaf(s, q);
            return;
        }
        const Int m = Int(k - idx - 1);
        Int lo = 1 - A;
        if (k >= 2) {
            lo += (idx == k - 1) ? -prev : delta;
        }
        if (lo < -(A - 1)) lo = -(A - 1);
        if (((lo % 2) != 0) != ((delta % 2) != 0)) lo += 1;
        for (Int v = prev; v >= lo; v -= 2) {
            const Int nq = q + v * v;
            const Int ns = s + v;
            if (nq + m * delta * delta > A * A - 1) break;
            if (m >= 2 && 2 * v < 1 - A) break;
            if (3 * A + ns + m * v < 1) break;
            if (3 * A + ns > ucap) {
                const Int t = 3 * A + ns - ucap;
                if (t * t > m * (A * A - 1 - nq)) continue;
            }
            if (!window_possible(ns, nq, idx + 1)) continue;
            d[static_cast<std::size_t>(idx)] = v;
            node(idx + 1, ns, nq, v);
        }
    }

    void leaf(const Int& s, const Int& q) {
        ++g_leaves;
        const Int uc = 3 * A + s;
        if (uc < 1 || uc > ucap) return;
        if (A * A - q < 1) return;
        if (k >= 2) {
            if (A + d[static_cast<std::size_t>(k - 2)] + d[static_cast<std::size_t>(k - 1)] < 1) return;
        } else if (A + d[0] < 1) {
            return;
        }
        DivClass rep = DivClass::zero(static_cast<std::size_t>(k) + 1);
        rep.c[0] = Rational(A + 3 * Int(N), Int(2));
        for (int i = 0; i < k; ++i) {
            rep.c[static_cast<std::size_t>(i) + 1] = Rational(d[static_cast<std::size_t>(i)] - Int(N), Int(2));
        }
        const DivClass shift_rep = rep - Rational(N, 2) * c1(base);
        if (!is_ample(base, shift_rep)) return;
        ++g_ample;
        if (censusM && !census_window_nonempty(dry_threshold(base, rep, N), *censusM)) return;
        ++g_window;
        std::vector<Int> perm = d;
        std::sort(perm.begin(), perm.end());
        do {
            ++g_expanded;
            DivClass phi = DivClass::zero(static_cast<std::size_t>(k) + 1);
            phi.c[0] = rep.c[0];
            for (int i = 0; i < k; ++i) {
                phi.c[static_cast<std::size_t>(i) + 1] =
                    Rational(perm[static_cast<std::size_t>(i)] - Int(N), Int(2));
            }
            emit(phi);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
};

}  // namespace detail
}  // namespace drycert

int main() {
    const BaseSurface dp8 = make_del_pezzo(8);
    const long long N = 6;
    const Int bound = sweep_bound(N, dp8);
    const Int csq = num(self_intersect(dp8, c1(dp8)));
    const Int ucap = 2 * bound - Int(N) * csq;
    const std::optional<Int> M(detail::min_omega_min(N, dp8, case_table(N, dp8)));
    std::printf("bound=%s ucap=%s M=%s\n", bound.str().c_str(), ucap.str().c_str(), M->str().c_str());

    auto t0 = std::chrono::steady_clock::now();
    long long classes = 0;
    auto fn = [&](const DivClass&) { ++classes; };
    detail::ProbeScan<decltype(fn)>{dp8, N, ucap, M, fn}.run();
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("scan done: nodes=%lld leaves=%lld ample=%lld window=%lld expanded=%lld classes=%lld [%.0f ms]\n",
                g_nodes, g_leaves, g_ample, g_window, g_expanded, classes, ms);
    return 0;
}
