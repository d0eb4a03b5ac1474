#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "ldlab/errors.hpp"

namespace ldlab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational arithmetic.  Used wherever a threshold comparison must not
/// depend on floating-point rounding: relative distances, radius floors,
/// full-rank probabilities, average-distance certificates.
using Rational = boost::rational<BigInt>;

inline Rational make_rational(std::int64_t num, std::int64_t den) {
    return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& r) {
    return static_cast<double>(boost::multiprecision::cpp_rational(r.numerator(), r.denominator()));
}

/// floor(r) for any sign of r.
inline BigInt floor_rational(const Rational& r) {
    BigInt q = r.numerator() / r.denominator();
    if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
    return q;
}

inline BigInt ceil_rational(const Rational& r) {
    return -floor_rational(-r);
}

/// Parses a plain decimal literal ("0.4", "-3", "12.", ".5") to an exact
/// rational.  Scientific notation is deliberately not accepted.
Rational parse_decimal(const std::string& text);

/// Exact rational value of a double (every finite double is m * 2^e).
Rational rational_from_double(double x);

/// q^e as BigInt (e >= 0).
BigInt big_pow(std::uint64_t base, std::uint64_t exp);

/// Renders with up to 17 significant digits, shortest form ("0.5", "64").
/// All floating-point values persisted by the library go through this.
std::string format_double(double x);

}  // namespace ldlab
