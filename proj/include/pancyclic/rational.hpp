#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <string>

namespace pancyclic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

/// "p/q" in lowest terms with a positive denominator; integers render as "p/1".
inline std::string to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Decimal rendering with 12 fractional digits, used for floats in reports.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

/// C(n, 2) as an exact rational.
inline Rational choose2(long long n) { return Rational(n * (n - 1), 2); }

}  // namespace pancyclic
