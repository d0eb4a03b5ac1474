#pragma once

#include <cstdint>
#include <vector>

#include "ldlab/errors.hpp"

namespace ldlab {

/// Symbol of a q-ary alphabet, represented as a residue 0..q-1.
using Symbol = std::uint32_t;

/// Exact arithmetic in the prime field F_q.  Immutable after construction;
/// safe for unrestricted concurrent reads.
class PrimeField {
public:
    /// Throws NonPrimeModulus unless q is prime (checked by trial division).
    explicit PrimeField(Symbol q);

    Symbol order() const { return q_; }

    Symbol add(Symbol a, Symbol b) const { return reduce_(std::uint64_t(check_(a)) + check_(b)); }
    Symbol sub(Symbol a, Symbol b) const { return reduce_(std::uint64_t(check_(a)) + q_ - check_(b)); }
    Symbol neg(Symbol a) const { return sub(0, a); }
    Symbol mul(Symbol a, Symbol b) const {
        return Symbol(std::uint64_t(check_(a)) * check_(b) % q_);
    }

    /// a^e by square-and-multiply.
    Symbol pow(Symbol a, std::uint64_t e) const;

    /// Multiplicative inverse via Fermat: a^(q-2).  Throws InverseOfZero.
    Symbol inv(Symbol a) const;

    static bool is_prime(std::uint64_t n);

private:
    Symbol check_(Symbol a) const {
        if (a >= q_) throw SymbolOutOfRange("symbol out of range for F_q");
        return a;
    }
    Symbol reduce_(std::uint64_t v) const { return Symbol(v >= q_ ? v - q_ : v); }

    Symbol q_;
};

/// The binary extension field GF(2^k), elements as k-bit masks, for the
/// Wozencraft ensemble.  The modulus is an irreducible degree-k polynomial
/// over F_2 stored as a bitmask (bit i = coefficient of x^i).
class BinaryExtField {
public:
    /// Built-in modulus for the given degree (1 <= k <= 16).
    explicit BinaryExtField(unsigned degree);

    /// User-supplied modulus; must have degree `degree` and be irreducible
    /// (checked by exhaustive factor search over degrees <= k/2).
    BinaryExtField(unsigned degree, std::uint32_t modulus);

    unsigned degree() const { return k_; }
    std::uint32_t modulus() const { return mod_; }
    std::uint32_t size() const { return 1u << k_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return check_(a) ^ check_(b); }

    /// Carry-less polynomial product reduced modulo the field modulus.
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;

    static bool is_irreducible(std::uint32_t poly, unsigned degree);

private:
    std::uint32_t check_(std::uint32_t a) const {
        if (a >= size()) throw SymbolOutOfRange("element out of range for GF(2^k)");
        return a;
    }

    unsigned k_;
    std::uint32_t mod_;
};

}  // namespace ldlab
