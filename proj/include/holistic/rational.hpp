#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace holistic {

/// Arbitrary-precision exact rational scalar used by the symbolic constructor.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational(long long num, long long den = 1) { return Rational(num, den); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline long double to_long_double(const Rational& r) { return r.convert_to<long double>(); }

/// "p/q" (or just "p" when q == 1), the exact form used in JSON output.
inline std::string to_fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace holistic
