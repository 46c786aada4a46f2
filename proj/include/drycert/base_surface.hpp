#pragma once

#include <drycert/detail/exact_linalg.hpp>
#include <drycert/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drycert {

/* Divisor class in the fixed integral basis of the base surface.
 * Coefficients are rational so midpoint classes like phi - (N/2)c1 stay exact. */
struct DivClass {
    std::vector<Rational> c;

    DivClass() = default;
    explicit DivClass(std::vector<Rational> coeffs) : c(std::move(coeffs)) {}
    DivClass(std::initializer_list<Rational> coeffs) : c(coeffs) {}

    static DivClass zero(std::size_t rank) { return DivClass(std::vector<Rational>(rank, Rational(0))); }

    std::size_t size() const { return c.size(); }
    const Rational& operator[](std::size_t i) const { return c[i]; }
    Rational& operator[](std::size_t i) { return c[i]; }

    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }
    bool is_integral() const {
        for (const auto& x : c)
            if (!is_integer(x)) return false;
        return true;
    }

    friend bool operator==(const DivClass& a, const DivClass& b) { return a.c == b.c; }
    friend bool operator!=(const DivClass& a, const DivClass& b) { return !(a == b); }
};

inline void require_same_rank(const DivClass& a, const DivClass& b) {
    if (a.size() != b.size()) throw std::invalid_argument("divisor class rank mismatch");
}

inline DivClass operator+(const DivClass& a, const DivClass& b) {
    require_same_rank(a, b);
    DivClass r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.c[i] += b.c[i];
    return r;
}

inline DivClass operator-(const DivClass& a, const DivClass& b) {
    require_same_rank(a, b);
    DivClass r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

inline DivClass operator-(const DivClass& a) {
    DivClass r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

inline DivClass operator*(const Rational& s, const DivClass& a) {
    DivClass r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

inline DivClass operator*(const DivClass& a, const Rational& s) { return s * a; }

enum class BaseKind { ProjectivePlane, Hirzebruch, DelPezzo };

/* A base surface carries its intersection form and the generators of its
 * cone of curves; on these surfaces that cone is also the effective cone.
 * mori_rows/mori_c1 cache Gram * C and c1 . C per generator so that cone
 * scans over small integral classes run in machine integers. */
struct BaseSurface {
    BaseKind kind = BaseKind::ProjectivePlane;
    int param = 0; /* g for Hirzebruch, number of blown-up points for del Pezzo */
    int rank = 1;
    std::vector<std::vector<Rational>> gram;
    std::vector<DivClass> mori;
    std::vector<std::vector<long long>> gram_rows;
    std::vector<std::vector<long long>> mori_rows;
    std::vector<long long> mori_c1;
    std::string name;
};

namespace detail {

/* Exact machine-integer view of a class: coords as numerators over one
 * common denominator.  The bounds keep every product against the cached
 * integer Gram rows inside __int128 (|num| < 2^40, den <= 2^20, and the
 * cache entries are capped at 2^9). */
struct SmallCoords {
    long long n[16] = {0};
    long long den = 1;
};

inline bool small_coords(const DivClass& d, SmallCoords& out) {
    if (d.size() > 16) return false;
    constexpr long long kDenCap = 1048576;
    const Int num_cap = Int(1) << 40;
    long long l = 1;
    for (const auto& x : d.c) {
        const Int dn = den(x);
        if (dn > kDenCap) return false;
        const long long dl = dn.convert_to<long long>();
        const long long g = std::gcd(l, dl);
        l = l / g * dl;
        if (l > kDenCap) return false;
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        const Int scaled = num(d.c[i]) * (l / den(d.c[i]).convert_to<long long>());
        if (scaled > num_cap || scaled < -num_cap) return false;
        out.n[i] = scaled.convert_to<long long>();
    }
    out.den = l;
    return true;
}

/* Usable only when the cache rows exist and match the generator list. */
inline bool pairing_cache_ok(const BaseSurface& base, const DivClass& d) {
    return !base.mori_rows.empty() && base.mori_rows.size() == base.mori.size() &&
           d.size() == static_cast<std::size_t>(base.rank);
}

inline long long row_dot(const std::vector<long long>& row, const SmallCoords& sc, int rank) {
    long long dot = 0;
    for (int i = 0; i < rank; ++i) dot += sc.n[i] * row[static_cast<std::size_t>(i)];
    return dot;
}

/* min over Mori generators of den * (d . C), in machine integers. */
inline std::optional<long long> scaled_mori_min(const BaseSurface& base, const DivClass& d,
                                                long long& out_den) {
    SmallCoords sc;
    if (!pairing_cache_ok(base, d) || !small_coords(d, sc)) return std::nullopt;
    long long best = 0;
    bool first = true;
    for (const auto& row : base.mori_rows) {
        const long long dot = row_dot(row, sc, base.rank);
        if (first || dot < best) best = dot;
        first = false;
    }
    if (first) return std::nullopt;
    out_den = sc.den;
    return best;
}

}  // namespace detail

inline Rational intersect(const BaseSurface& base, const DivClass& a, const DivClass& b) {
    if (a.size() != static_cast<std::size_t>(base.rank) ||
        b.size() != static_cast<std::size_t>(base.rank))
        throw std::invalid_argument("divisor class rank does not match base surface");
    if (!base.gram_rows.empty()) {
        detail::SmallCoords sa, sb;
        if (detail::small_coords(a, sa) && detail::small_coords(b, sb)) {
            __int128 total = 0;
            for (int i = 0; i < base.rank; ++i) {
                if (sa.n[i] == 0) continue;
                total += static_cast<__int128>(sa.n[i]) *
                         detail::row_dot(base.gram_rows[static_cast<std::size_t>(i)], sb, base.rank);
            }
            return Rational(Int(total), Int(sa.den) * sb.den);
        }
    }
    Rational total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (base.gram[i][j] == 0 || b.c[j] == 0) continue;
            total += a.c[i] * base.gram[i][j] * b.c[j];
        }
    }
    return total;
}

inline Rational self_intersect(const BaseSurface& base, const DivClass& a) {
    return intersect(base, a, a);
}

/* Anticanonical class in the fixed basis. */
inline DivClass c1(const BaseSurface& base) {
    switch (base.kind) {
        case BaseKind::ProjectivePlane:
            return DivClass{Rational(3)};
        case BaseKind::Hirzebruch:
            return DivClass{Rational(2), Rational(base.param + 2)};
        case BaseKind::DelPezzo: {
            DivClass d = DivClass::zero(base.rank);
            d.c[0] = 3;
            for (int i = 1; i < base.rank; ++i) d.c[i] = -1;
            return d;
        }
    }
    throw std::domain_error("unknown base kind");
}

namespace detail {

/* Enumerate classes a*l + sum b_i E_i with self-intersection -1 and
 * anticanonical degree 1:  sum b_i = 1 - 3a,  sum b_i^2 = a^2 + 1. */
inline void neg_one_curves_rec(int k, int idx, long long sum_left, long long sq_left,
                               std::vector<Rational>& coords, std::vector<DivClass>& out) {
    const int remaining = k - idx;
    if (remaining == 0) {
        if (sum_left == 0 && sq_left == 0) out.push_back(DivClass(coords));
        return;
    }
    if (sq_left < 0) return;
    /* Cauchy-Schwarz: (sum of the rest)^2 <= remaining * (squares of the rest) */
    if (sum_left * sum_left > static_cast<long long>(remaining) * sq_left) return;
    int limit = 0;
    while (static_cast<long long>(limit + 1) * (limit + 1) <= sq_left) ++limit;
    for (int b = limit; b >= -limit; --b) {
        coords[static_cast<std::size_t>(idx) + 1] = b;
        neg_one_curves_rec(k, idx + 1, sum_left - b, sq_left - static_cast<long long>(b) * b,
                           coords, out);
    }
    coords[static_cast<std::size_t>(idx) + 1] = 0;
}

}  // namespace detail

inline std::vector<DivClass> neg_one_curves(int k) {
    if (k < 1 || k > 8) throw std::domain_error("neg_one_curves expects 1..8 blown-up points");
    std::vector<DivClass> out;
    std::vector<Rational> coords(static_cast<std::size_t>(k) + 1, Rational(0));
    for (int a = 0; a <= 6; ++a) {
        coords[0] = a;
        detail::neg_one_curves_rec(k, 0, 1 - 3LL * a, static_cast<long long>(a) * a + 1,
                                   coords, out);
    }
    return out;
}

namespace detail {

/* Populate the integer pairing caches: the Gram matrix itself plus, per
 * Mori generator C, the row Gram * C and the degree c1 . C.  Everything
 * here is integral and tiny by construction, but the caches stay empty
 * (and the rational scans take over) if any entry falls outside budget. */
inline void fill_pairing_cache(BaseSurface& b) {
    b.gram_rows.clear();
    b.mori_rows.clear();
    b.mori_c1.clear();
    for (int i = 0; i < b.rank; ++i) {
        std::vector<long long> grow(static_cast<std::size_t>(b.rank), 0);
        for (int j = 0; j < b.rank; ++j) {
            const Rational& g = b.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!is_integer(g) || num(g) > 512 || num(g) < -512) {
                b.gram_rows.clear();
                return;
            }
            grow[static_cast<std::size_t>(j)] = num(g).convert_to<long long>();
        }
        b.gram_rows.push_back(std::move(grow));
    }
    const DivClass k = c1(b);
    for (const auto& curve : b.mori) {
        std::vector<long long> row(static_cast<std::size_t>(b.rank), 0);
        for (int i = 0; i < b.rank; ++i) {
            Rational v = 0;
            for (int j = 0; j < b.rank; ++j)
                v += b.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     curve.c[static_cast<std::size_t>(j)];
            if (!is_integer(v) || num(v) > 512 || num(v) < -512) {
                b.mori_rows.clear();
                b.mori_c1.clear();
                return;
            }
            row[static_cast<std::size_t>(i)] = num(v).convert_to<long long>();
        }
        const Rational deg = intersect(b, k, curve);
        if (!is_integer(deg) || num(deg) > 4096 || num(deg) < -4096) {
            b.mori_rows.clear();
            b.mori_c1.clear();
            return;
        }
        b.mori_rows.push_back(std::move(row));
        b.mori_c1.push_back(num(deg).convert_to<long long>());
    }
}

}  // namespace detail

inline BaseSurface make_projective_plane() {
    BaseSurface b;
    b.kind = BaseKind::ProjectivePlane;
    b.param = 0;
    b.rank = 1;
    b.gram = {{Rational(1)}};
    b.mori = {DivClass{Rational(1)}};
    b.name = "P2";
    detail::fill_pairing_cache(b);
    return b;
}

inline BaseSurface make_hirzebruch(int g) {
    if (g < 0 || g > 255) throw std::invalid_argument("Hirzebruch index out of range");
    BaseSurface b;
    b.kind = BaseKind::Hirzebruch;
    b.param = g;
    b.rank = 2;
    b.gram = {{Rational(-g), Rational(1)}, {Rational(1), Rational(0)}};
    b.mori = {DivClass{Rational(1), Rational(0)}, DivClass{Rational(0), Rational(1)}};
    b.name = "F" + std::to_string(g);
    detail::fill_pairing_cache(b);
    return b;
}

inline BaseSurface make_del_pezzo(int k) {
    if (k < 0 || k > 8) throw std::invalid_argument("del Pezzo degree out of range");
    BaseSurface b;
    b.kind = BaseKind::DelPezzo;
    b.param = k;
    b.rank = k + 1;
    b.gram.assign(static_cast<std::size_t>(k) + 1,
                  std::vector<Rational>(static_cast<std::size_t>(k) + 1, Rational(0)));
    b.gram[0][0] = 1;
    for (int i = 1; i <= k; ++i) b.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;
    if (k == 0) {
        b.mori = {DivClass{Rational(1)}};
    } else if (k == 1) {
        b.mori = {DivClass{Rational(0), Rational(1)}, DivClass{Rational(1), Rational(-1)}};
    } else {
        b.mori = neg_one_curves(k);
    }
    b.name = "dP" + std::to_string(k);
    detail::fill_pairing_cache(b);
    return b;
}

inline BaseSurface parse_base(const std::string& s) {
    auto parse_index = [&](std::size_t off) -> int {
        if (off >= s.size()) throw std::invalid_argument("base name missing index: " + s);
        long long v = 0;
        for (std::size_t i = off; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad base name: " + s);
            v = v * 10 + (s[i] - '0');
            if (v > 100000) throw std::invalid_argument("base index out of range: " + s);
        }
        if (s.size() - off > 1 && s[off] == '0') throw std::invalid_argument("bad base name: " + s);
        return static_cast<int>(v);
    };
    if (s == "P2") return make_projective_plane();
    if (s.size() >= 2 && s[0] == 'F') {
        const int g = parse_index(1);
        /* only the Fano range is meaningful downstream */
        if (g > 1) throw std::invalid_argument("unsupported Hirzebruch surface: " + s);
        return make_hirzebruch(g);
    }
    if (s.size() >= 3 && s.compare(0, 2, "dP") == 0) {
        const int k = parse_index(2);
        if (k > 8) throw std::invalid_argument("del Pezzo degree out of range: " + s);
        return make_del_pezzo(k);
    }
    throw std::invalid_argument("unrecognized base surface: " + s);
}

inline bool is_nef(const BaseSurface& base, const DivClass& d) {
    long long sden = 1;
    if (const auto m = detail::scaled_mori_min(base, d, sden)) return *m >= 0;
    for (const auto& curve : base.mori)
        if (intersect(base, d, curve) < 0) return false;
    return true;
}

/* Kleiman: positivity against every Mori generator; the cones here are
 * rational polyhedral so the generators decide it. */
inline bool is_ample(const BaseSurface& base, const DivClass& d) {
    long long sden = 1;
    if (const auto m = detail::scaled_mori_min(base, d, sden)) return *m > 0;
    for (const auto& curve : base.mori)
        if (intersect(base, d, curve) <= 0) return false;
    return true;
}

/* Membership in the effective cone.  Nef classes are effective on these
 * surfaces (Riemann-Roch with rational vanishing), which settles most
 * callers without the simplex; otherwise decide exactly by LP over the
 * cone generators. */
inline bool is_effective(const BaseSurface& base, const DivClass& d) {
    if (d.size() != static_cast<std::size_t>(base.rank))
        throw std::invalid_argument("divisor class rank does not match base surface");
    if (d.is_zero()) return true;
    if (is_nef(base, d)) return true;
    std::vector<std::vector<Rational>> gens;
    gens.reserve(base.mori.size());
    for (const auto& g : base.mori) gens.push_back(g.c);
    return detail::cone_contains(gens, d.c);
}

inline bool is_even_class(const DivClass& d) {
    for (const auto& x : d.c) {
        if (!is_integer(x)) return false;
        if (num(x) % 2 != 0) return false;
    }
    return true;
}

inline bool congruent_mod_2(const DivClass& a, const DivClass& b) {
    require_same_rank(a, b);
    return is_even_class(a - b);
}

/* Parity rules making the spectral line class integral:
 * n odd needs 2*lambda odd; n even with 2*lambda even needs eta = c1 (mod 2);
 * n even with 2*lambda odd needs c1 even. */
inline bool parity_admissible(const BaseSurface& base, int n, const DivClass& eta,
                              int two_lambda) {
    if (n < 1) throw std::domain_error("spectral rank n must be at least 1");
    if (!eta.is_integral()) throw std::domain_error("eta must be an integral class");
    const bool tl_odd = (two_lambda % 2 != 0);
    if (n % 2 != 0) return tl_odd;
    if (!tl_odd) return congruent_mod_2(eta, c1(base));
    return is_even_class(c1(base));
}

inline detail::Signature gram_signature(const BaseSurface& base) {
    return detail::symmetric_signature(base.gram);
}

}  // namespace drycert
