#pragma once

#include <drycert/rational.hpp>

#include <array>
#include <vector>

namespace drycert {
namespace detail {

/* Phase-1 simplex feasibility: does target lie in the cone of nonnegative
 * combinations of the given generators?  Exact rational pivoting, Bland's
 * rule, so termination is unconditional.  Sizes here are tiny (rank <= 9,
 * up to 240 generators). */
inline bool cone_contains(const std::vector<std::vector<Rational>>& gens,
                          const std::vector<Rational>& target) {
    const std::size_t m = target.size();
    const std::size_t n = gens.size();
    bool all_zero = true;
    for (const auto& t : target)
        if (t != 0) { all_zero = false; break; }
    if (all_zero) return true;
    if (n == 0) return false;

    /* Columns: n generators, m artificials, then the rhs. */
    const std::size_t cols = n + m + 1;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = target[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = flip ? -gens[j][i] : gens[j][i];
        t[i][n + i] = 1;
        t[i][cols - 1] = flip ? -target[i] : target[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    /* w row: reduced costs for minimizing the artificial sum. */
    std::vector<Rational> w(cols, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < cols; ++j) w[j] += t[i][j];
    for (std::size_t i = 0; i < m; ++i) w[n + i] = 0;

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < n + m; ++j)
            if (w[j] > 0) { enter = j; break; }
        if (enter == cols) break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave]))
                { leave = i; best = ratio; }
        }
        if (leave == m) break; /* unbounded column; cannot improve */

        const Rational piv = t[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        if (w[enter] != 0) {
            const Rational f = w[enter];
            for (std::size_t j = 0; j < cols; ++j) w[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return w[cols - 1] == 0;
}

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

/* Signature of a symmetric rational matrix by congruence diagonalization
 * (Sylvester's law of inertia); handles zero pivots via row/column moves. */
inline Signature symmetric_signature(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Signature sig;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i] == 0) {
            std::size_t swap_j = n;
            for (std::size_t j = i + 1; j < n; ++j)
                if (m[j][j] != 0) { swap_j = j; break; }
            if (swap_j < n) {
                std::swap(m[i], m[swap_j]);
                for (auto& row : m) std::swap(row[i], row[swap_j]);
            } else {
                std::size_t off = n;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (m[i][j] != 0) { off = j; break; }
                if (off == n) { ++sig.zero; continue; }
                /* row/col i += row/col off turns the 0 pivot into 2*m[i][off] */
                for (std::size_t j = 0; j < n; ++j) m[i][j] += m[off][j];
                for (std::size_t j = 0; j < n; ++j) m[j][i] += m[j][off];
            }
        }
        const Rational piv = m[i][i];
        if (piv > 0) ++sig.positive; else ++sig.negative;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m[j][i] == 0) continue;
            const Rational f = m[j][i] / piv;
            for (std::size_t k = 0; k < n; ++k) m[j][k] -= f * m[i][k];
            for (std::size_t k = 0; k < n; ++k) m[k][j] -= f * m[k][i];
        }
    }
    return sig;
}

}  // namespace detail
}  // namespace drycert
