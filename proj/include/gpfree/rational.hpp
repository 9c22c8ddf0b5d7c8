#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace gpfree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// Fixed 50-significant-digit decimal used for running products.
using Decimal50 = boost::multiprecision::cpp_dec_float_50;

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline BigInt ipow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

/// "p/q" in lowest terms ("p" when q == 1).
inline std::string to_fraction_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Decimal50 to_decimal(const Rational& r) {
    return Decimal50(boost::multiprecision::numerator(r)) / Decimal50(boost::multiprecision::denominator(r));
}

inline double to_double(const Rational& r) { return static_cast<double>(to_decimal(r)); }

/// Rounds to `digits` significant digits; printing the result with the
/// shortest round-trip form never shows more than `digits` digits.
inline double round_significant(double x, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::stod(buf);
}

inline std::string fixed_decimal(const Decimal50& x, int places) { return x.str(places, std::ios_base::fixed); }

}  // namespace gpfree
