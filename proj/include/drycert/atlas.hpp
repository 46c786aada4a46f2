#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "drycert/base_surface.hpp"
#include "drycert/dry.hpp"
#include "drycert/extension.hpp"
#include "drycert/witness.hpp"

namespace drycert {

/* One unrealized class: a base divisor part phi together with every level
 * omega in the census window at which realize failed, plus the per-config
 * reasons recorded at the lowest failing level. */
struct CensusEntry {
    DivClass phi;
    std::vector<Int> omegas;
    std::vector<ConfigFailure> failures;
};

struct CensusReport {
    std::string base;
    long long N = 0;
    Int phi_bound = 0;
    bool complete = false;
    std::vector<CensusEntry> entries;
};

namespace detail {

inline bool lex_less(const DivClass& a, const DivClass& b) {
    const std::size_t n = std::min(a.c.size(), b.c.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return a.c.size() < b.c.size();
}

inline Int isqrt(const Int& x) { return boost::multiprecision::sqrt(x); }

/* Exact floor sqrt in machine integers (the double estimate is corrected). */
inline long long isqrt(long long x) {
    if (x <= 0) return 0;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline UnsupportedError unsupported_pair(long long N, const BaseSurface& base) {
    return UnsupportedError("no construction covers N=" + std::to_string(N) + " on " + base.name);
}

/* Smallest realizable level over the given construction templates, with each
 * template's default twisting class (sign irrelevant: omega_min is even in alpha). */
inline Int min_omega_min(long long N, const BaseSurface& base,
                         const std::vector<ConfigTemplate>& configs) {
    if (configs.empty()) throw unsupported_pair(N, base);
    std::optional<Int> best;
    for (const auto& tmpl : configs) {
        ExtensionConfig cfg{tmpl.n, tmpl.r, tmpl.two_lambda,
                            alpha_candidate(base, tmpl.twist), tmpl.twist};
        const Int w = omega_min(cfg, base);
        if (!best || w < *best) best = w;
    }
    return *best;
}

inline Int sweep_bound_over(long long N, const BaseSurface& base,
                            const std::vector<ConfigTemplate>& configs) {
    require_twist_scale(N);
    const Int m = min_omega_min(N, base, configs);
    const Rational csq = self_intersect(base, c1(base));
    const Rational bound = Rational(2) * (Rational(m) - Rational(N, 6) * csq - Rational(N, 2));
    if (bound <= 0) return Int(0);
    return floor_int(bound);
}

/* The census window for phi is the set of integers strictly between
 * dry_threshold(phi) and M; it is nonempty iff floor(thr) + 1 <= M - 1. */
inline bool census_window_nonempty(const Rational& thr, const Int& M) {
    return floor_int(thr) + 1 <= M - 1;
}

/* Region scan in doubled coordinates u = 2(phi - (N/2)c1): u ranges over
 * integral classes congruent to N*c1 mod 2 with u ample and u.c1 <= ucap.
 * Each scanner emits the corresponding phi. When censusM is set, classes
 * whose census window is provably empty are skipped. */

template <class Fn>
void scan_rank_one(const BaseSurface& base, long long N, const Int& ucap,
                   const std::optional<Int>& censusM, Fn&& emit) {
    const Int deg = num(c1(base).c[0]);
    Int u = (N % 2 != 0) ? Int(1) : Int(2);
    for (; deg * u <= ucap; u += 2) {
        DivClass phi = DivClass::zero(1);
        phi.c[0] = Rational(u + Int(N) * deg, Int(2));
        if (censusM && !census_window_nonempty(dry_threshold(base, phi, N), *censusM)) continue;
        emit(phi);
    }
}

template <class Fn>
void scan_hirzebruch(const BaseSurface& base, long long N, const Int& ucap,
                     const std::optional<Int>& censusM, Fn&& emit) {
    const Int g = base.param;
    /* u = (p, q): ample iff p >= 1 and q - g p >= 1; u.c1 = (2-g)p + 2q.
     * Parity: p even always (N*2 is even), q congruent to N(g+2) mod 2.
     * u.c1 at the least admissible q is (2+g)p + 2, increasing in p. */
    const bool q_odd = ((Int(N) * (g + 2)) % 2) != 0;
    for (Int p = 2; (2 + g) * p + 2 <= ucap; p += 2) {
        Int q = g * p + 1;
        if (((q % 2) != 0) != q_odd) q += 1;
        for (; (2 - g) * p + 2 * q <= ucap; q += 2) {
            DivClass phi = DivClass::zero(2);
            phi.c[0] = Rational(p + 2 * Int(N), Int(2));
            phi.c[1] = Rational(q + Int(N) * (g + 2), Int(2));
            if (censusM && !census_window_nonempty(dry_threshold(base, phi, N), *censusM)) continue;
            emit(phi);
        }
    }
}

/* Del Pezzo scan. The Mori set of dP_k is stable under permuting the k
 * exceptional coordinates, so ampleness and dry_threshold depend only on the
 * multiset of exceptional coefficients. The search runs over representatives
 * u = (A, d_1 >= ... >= d_k) and expands distinct permutations only after a
 * representative passes the ample check (and, in census mode, has a nonempty
 * window); that keeps the tree far below the size of the expanded region.
 *
 * The integer type I is long long whenever scan_region's range gate holds
 * (every intermediate is then provably below 2^62) and Int otherwise. */
template <class I, class Fn>
struct DelPezzoScan {
    const BaseSurface& base;
    long long N;
    I ucap;
    I csq;
    /* For the window prune: an integer omega lies in (thr, M) only if
     * 3*sqrt(u^2 c1^2) < 12(M-1) - 3 u.c1 - 5 N c1^2 - 6N, since
     * thr >= N R + (1/2) sqrt(psi^2 c1^2) by AM-GM. */
    I window_const;
    const std::optional<Int>& censusM;
    Fn& emit;

    int k = base.rank - 1;
    I delta = (N % 2 != 0) ? I(1) : I(2);
    I A = I(0);
    std::vector<I> d = std::vector<I>(static_cast<std::size_t>(k));

    bool window_possible(const I& s, const I& q, int chosen) const {
        if (!censusM) return true;
        const I m = I(k - chosen);
        I qf = A * A - 1 - q;
        if (qf < 0) return false;
        const I per = (A - 1) * (A - 1);
        if (qf > m * per) qf = m * per;
        const I sf_min = -(isqrt(m * qf) + 1);
        const I uc_min = 3 * A + s + sf_min;
        const I best = window_const - 3 * uc_min;
        if (best <= 0) return false;
        const I usq_min = A * A - q - qf;
        return 9 * usq_min * csq < best * best;
    }

    void run() {
        if (ucap < 1) return;
        /* Hard ceiling on A: for 3A > ucap, feasibility of sum(d) <= ucap - 3A
         * with sum(d^2) <= A^2 - 1 needs (3A - ucap)^2 <= k (A^2 - 1). */
        I a_max;
        const I disc = I(k) * (ucap * ucap - (9 - k));
        if (disc < 0) {
            a_max = ucap / 3;
        } else {
            a_max = (3 * ucap + isqrt(disc)) / (9 - k) + 1;
        }
        for (A = (N % 2 != 0) ? I(1) : I(2); A <= a_max; A += 2) {
            if (3 * A > ucap) {
                const I t = 3 * A - ucap;
                if (t * t > I(k) * (A * A - 1)) continue;
            }
            if (!window_possible(I(0), I(0), 0)) continue;
            node(0, I(0), I(0), -delta);
        }
    }

    void node(int idx, const I& s, const I& q, const I& prev) {
        if (idx == k) {
            leaf(s, q);
            return;
        }
        const I m = I(k - idx - 1);
        I lo = 1 - A;
        if (k >= 2) {
            /* Every pair of exceptional coefficients obeys A + d_i + d_j >= 1;
             * the last coordinate pairs with its predecessor, earlier ones
             * pair with some coordinate at most -delta. */
            lo += (idx == k - 1) ? -prev : delta;
        }
        if (lo < -(A - 1)) lo = -(A - 1);
        if (((lo % 2) != 0) != ((delta % 2) != 0)) lo += 1;
        for (I v = prev; v >= lo; v -= 2) {
            const I nq = q + v * v;
            const I ns = s + v;
            if (nq + m * delta * delta > A * A - 1) break;
            if (m >= 2 && 2 * v < 1 - A) break;
            if (3 * A + ns + m * v < 1) break;
            if (3 * A + ns > ucap) {
                const I t = 3 * A + ns - ucap;
                if (t * t > m * (A * A - 1 - nq)) continue;
            }
            if (!window_possible(ns, nq, idx + 1)) continue;
            d[static_cast<std::size_t>(idx)] = v;
            node(idx + 1, ns, nq, v);
        }
    }

    void leaf(const I& s, const I& q) {
        const I uc = 3 * A + s;
        if (uc < 1 || uc > ucap) return;
        if (A * A - q < 1) return;
        if (k >= 2) {
            if (A + d[static_cast<std::size_t>(k - 2)] + d[static_cast<std::size_t>(k - 1)] < 1) return;
        } else if (A + d[0] < 1) {
            return;
        }
        DivClass rep = DivClass::zero(static_cast<std::size_t>(k) + 1);
        rep.c[0] = Rational(Int(A) + 3 * Int(N), Int(2));
        for (int i = 0; i < k; ++i) {
            rep.c[static_cast<std::size_t>(i) + 1] =
                Rational(Int(d[static_cast<std::size_t>(i)]) - Int(N), Int(2));
        }
        const DivClass shift_rep = rep - Rational(N, 2) * c1(base);
        if (!is_ample(base, shift_rep)) return;
        if (censusM && !census_window_nonempty(dry_threshold(base, rep, N), *censusM)) return;
        std::vector<I> perm = d;
        std::sort(perm.begin(), perm.end());
        do {
            DivClass phi = DivClass::zero(static_cast<std::size_t>(k) + 1);
            phi.c[0] = rep.c[0];
            for (int i = 0; i < k; ++i) {
                phi.c[static_cast<std::size_t>(i) + 1] =
                    Rational(Int(perm[static_cast<std::size_t>(i)]) - Int(N), Int(2));
            }
            emit(phi);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
};

template <class Fn>
void scan_region(const BaseSurface& base, long long N, const Int& bound,
                 const std::optional<Int>& censusM, Fn&& emit) {
    require_twist_scale(N);
    if (bound < 0) throw std::invalid_argument("enumeration bound must be nonnegative");
    const Int csq = num(self_intersect(base, c1(base)));
    const Int ucap = 2 * bound - Int(N) * csq;
    if (base.rank == 1) {
        scan_rank_one(base, N, ucap, censusM, emit);
    } else if (base.kind == BaseKind::Hirzebruch) {
        scan_hirzebruch(base, N, ucap, censusM, emit);
    } else {
        const Int wc = censusM ? 12 * (*censusM - 1) - 5 * Int(N) * csq - 6 * Int(N) : Int(0);
        /* With ucap <= 1e5 (so A <= ~6e5, |sum d| <= 8A) and |wc| <= 2e8,
         * every square or product in the scan stays below 2^62. */
        if (ucap <= 100000 && N <= 1000000 && wc >= -200000000 && wc <= 200000000) {
            DelPezzoScan<long long, Fn>{base,
                                        N,
                                        ucap.convert_to<long long>(),
                                        csq.convert_to<long long>(),
                                        wc.convert_to<long long>(),
                                        censusM,
                                        emit}
                .run();
        } else {
            DelPezzoScan<Int, Fn>{base, N, ucap, csq, wc, censusM, emit}.run();
        }
    }
}

inline CensusReport exception_census_over(long long N, const BaseSurface& base,
                                          const std::vector<ConfigTemplate>& configs,
                                          const std::optional<Int>& bound_override) {
    if (configs.empty()) throw unsupported_pair(N, base);
    const Int sweep = sweep_bound_over(N, base, configs);
    const Int bound = bound_override ? *bound_override : sweep;
    if (bound < 0) throw std::invalid_argument("census bound must be nonnegative");
    const Int M = min_omega_min(N, base, configs);

    CensusReport report;
    report.base = base.name;
    report.N = N;
    report.phi_bound = bound;
    report.complete = bound >= sweep;
    PolarCache pcache;
    scan_region(base, N, bound, std::optional<Int>(M), [&](const DivClass& phi) {
        const Rational thr = dry_threshold(base, phi, N);
        CensusEntry entry;
        entry.phi = phi;
        for (Int w = floor_int(thr) + 1; w <= M - 1; ++w) {
            const CandidateClass cand{phi, w, N};
            const Verdict verdict = realize_with(base, cand, configs, &pcache);
            if (verdict.kind == VerdictKind::ExceptionCandidate) {
                if (entry.omegas.empty()) entry.failures = verdict.failures;
                entry.omegas.push_back(w);
            }
        }
        if (!entry.omegas.empty()) report.entries.push_back(std::move(entry));
    });
    std::sort(report.entries.begin(), report.entries.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return lex_less(a.phi, b.phi); });
    return report;
}

}  // namespace detail

/* Past this bound on phi.c1 every DRY level omega already clears the smallest
 * realizable level, so the exception region is confined to phi.c1 <= bound. */
inline Int sweep_bound(long long N, const BaseSurface& base) {
    return detail::sweep_bound_over(N, base, case_table(N, base));
}

/* All integral phi with phi - (N/2)c1 ample and phi.c1 <= bound, in
 * lexicographic coefficient order. */
inline std::vector<DivClass> enumerate_phis(long long N, const BaseSurface& base, const Int& bound) {
    std::vector<DivClass> out;
    detail::scan_region(base, N, bound, std::nullopt,
                        [&](const DivClass& phi) { out.push_back(phi); });
    std::sort(out.begin(), out.end(), detail::lex_less);
    return out;
}

inline CensusReport exception_census(long long N, const BaseSurface& base,
                                     const std::optional<Int>& bound_override = std::nullopt) {
    return detail::exception_census_over(N, base, case_table(N, base), bound_override);
}

}  // namespace drycert
