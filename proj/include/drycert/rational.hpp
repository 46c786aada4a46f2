#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace drycert {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

/* Round toward minus infinity. */
inline Int floor_int(const Rational& r) {
    Int q = num(r) / den(r);
    if (num(r) < 0 && q * den(r) != num(r)) --q;
    return q;
}

inline Int ceil_int(const Rational& r) {
    Int q = num(r) / den(r);
    if (num(r) > 0 && q * den(r) != num(r)) ++q;
    return q;
}

/* "p", "-p", or "p/q" with q > 0 after normalization. */
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

/* Inverse of parse_rational; integers carry no "/1" suffix. */
inline std::string format_rational(const Rational& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

}  // namespace drycert
