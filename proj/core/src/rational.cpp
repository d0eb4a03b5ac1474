#include "ldlab/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace ldlab {

Rational parse_decimal(const std::string& text) {
    if (text.empty()) throw ConfigError("empty decimal literal");
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    BigInt digits = 0;
    std::size_t frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_dot) throw ConfigError("bad decimal literal: " + text);
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits = digits * 10 + (c - '0');
            if (seen_dot) ++frac_digits;
            seen_digit = true;
        } else {
            throw ConfigError("bad decimal literal: " + text);
        }
    }
    if (!seen_digit) throw ConfigError("bad decimal literal: " + text);
    Rational r(digits, big_pow(10, frac_digits));
    return neg ? -r : r;
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw ConfigError("non-finite value has no rational form");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    // 53 doublings make the mantissa integral
    BigInt num = static_cast<std::int64_t>(std::ldexp(m, 53));
    exp -= 53;
    if (exp >= 0) return Rational(num << exp, 1);
    return Rational(num, BigInt(1) << -exp);
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    // trim to the shortest representation that round-trips
    for (int prec = 1; prec < 17; ++prec) {
        char s[64];
        std::snprintf(s, sizeof s, "%.*g", prec, x);
        if (std::strtod(s, nullptr) == x) return s;
    }
    return buf;
}

}  // namespace ldlab
