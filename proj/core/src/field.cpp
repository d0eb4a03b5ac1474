#include "ldlab/field.hpp"

#include <array>
#include <string>

namespace ldlab {

bool PrimeField::is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(Symbol q) : q_(q) {
    if (!is_prime(q)) throw NonPrimeModulus("field order " + std::to_string(q) + " is not prime");
}

Symbol PrimeField::pow(Symbol a, std::uint64_t e) const {
    check_(a);
    std::uint64_t r = 1, b = a;
    while (e) {
        if (e & 1) r = r * b % q_;
        b = b * b % q_;
        e >>= 1;
    }
    return Symbol(r);
}

Symbol PrimeField::inv(Symbol a) const {
    if (check_(a) == 0) throw InverseOfZero("inverse of zero in F_" + std::to_string(q_));
    return pow(a, q_ - 2);
}

namespace {

// One irreducible polynomial per degree 1..16: the lexicographically smallest
// irreducible of each degree (except degree 1, where x+1 keeps 1 as the unit).
constexpr std::array<std::uint32_t, 17> kDefaultModulus = {
    0,
    0b11,                 // x + 1
    0b111,                // x^2 + x + 1
    0b1011,               // x^3 + x + 1
    0b10011,              // x^4 + x + 1
    0b100101,             // x^5 + x^2 + 1
    0b1000011,            // x^6 + x + 1
    0b10000011,           // x^7 + x + 1
    0b100011011,          // x^8 + x^4 + x^3 + x + 1
    0b1000000011,         // x^9 + x + 1
    0b10000001001,        // x^10 + x^3 + 1
    0b100000000101,       // x^11 + x^2 + 1
    0b1000000001001,      // x^12 + x^3 + 1
    0b10000000011011,     // x^13 + x^4 + x^3 + x + 1
    0b100000000100001,    // x^14 + x^5 + 1
    0b1000000000000011,   // x^15 + x + 1
    0b10000000000101011,  // x^16 + x^5 + x^3 + x + 1
};

unsigned poly_degree(std::uint32_t p) {
    unsigned d = 0;
    while (p > 1) {
        p >>= 1;
        ++d;
    }
    return d;
}

// Product of two F_2[x] polynomials, no reduction.
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

std::uint64_t polymod(std::uint64_t a, std::uint64_t m) {
    const int dm = m ? 63 - __builtin_clzll(m) : 0;
    while (a >> dm) {
        const int da = 63 - __builtin_clzll(a);
        a ^= m << (da - dm);
    }
    return a;
}

}  // namespace

bool BinaryExtField::is_irreducible(std::uint32_t poly, unsigned degree) {
    if (poly_degree(poly) != degree || degree == 0) return false;
    if (degree == 1) return true;
    // exhaustive factor search: any factorization has a factor of degree <= k/2
    for (std::uint32_t f = 2; poly_degree(f) <= degree / 2; ++f) {
        if (polymod(poly, f) == 0) return false;
    }
    return true;
}

BinaryExtField::BinaryExtField(unsigned degree) : k_(degree) {
    if (degree < 1 || degree > 16) throw ConfigError("extension degree must be in 1..16");
    mod_ = kDefaultModulus[degree];
    if (!is_irreducible(mod_, degree))
        throw ReducibleModulus("built-in modulus table is broken for degree " +
                               std::to_string(degree));
}

BinaryExtField::BinaryExtField(unsigned degree, std::uint32_t modulus) : k_(degree), mod_(modulus) {
    if (degree < 1 || degree > 16) throw ConfigError("extension degree must be in 1..16");
    if (!is_irreducible(modulus, degree))
        throw ReducibleModulus("modulus is not an irreducible polynomial of degree " +
                               std::to_string(degree));
}

std::uint32_t BinaryExtField::mul(std::uint32_t a, std::uint32_t b) const {
    return std::uint32_t(polymod(clmul(check_(a), check_(b)), mod_));
}

std::uint32_t BinaryExtField::pow(std::uint32_t a, std::uint64_t e) const {
    check_(a);
    std::uint32_t r = 1, b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::uint32_t BinaryExtField::inv(std::uint32_t a) const {
    if (check_(a) == 0) throw InverseOfZero("inverse of zero in GF(2^k)");
    return pow(a, (std::uint64_t(1) << k_) - 2);
}

}  // namespace ldlab
