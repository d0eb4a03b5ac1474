#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ldlab/field.hpp"
#include "ldlab/rational.hpp"

namespace ldlab {

/// A q-ary word: length-n vector of residues.
using Word = std::vector<Symbol>;

/// Default cap on exhaustively enumerated codewords (q^k).
inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t(1) << 24;

/// A linear code given by its k x n generator matrix over F_q, q prime.
/// The codeword collection is always treated as the multiset { xG : x in
/// F_q^k } of size exactly q^k: duplicates from a rank-deficient G are kept.
/// Immutable; safe for concurrent use.
class LinearCode {
public:
    LinearCode(Symbol q, std::size_t k, std::size_t n, std::vector<Symbol> generator);

    Symbol q() const { return field_.order(); }
    const PrimeField& field() const { return field_; }
    std::size_t length() const { return n_; }
    std::size_t dimension() const { return k_; }

    Symbol gen(std::size_t row, std::size_t col) const { return gen_[row * n_ + col]; }
    const std::vector<Symbol>& generator() const { return gen_; }

    /// q^k fits in cap?
    bool size_within(std::uint64_t cap) const;
    /// q^k; throws SizeOverBudget when it does not fit the given cap.
    std::uint64_t num_codewords(std::uint64_t cap = kEnumerationBudget) const;

    /// message. G (multiset semantics: no rank requirement).
    Word encode(const Word& message) const;

    /// Message with the given lexicographic index (base-q digits, most
    /// significant first), so index 0 is the zero message.
    Word message_at(std::uint64_t index) const;
    Word codeword_at(std::uint64_t index) const;

private:
    PrimeField field_;
    std::size_t k_, n_;
    std::vector<Symbol> gen_;
};

struct Codeword {
    Word symbols;
    Word message;
};

/// Walks the codeword multiset in lexicographic message order in O(n) per
/// step (each odometer carry adds one generator row mod q).
class CodewordEnumerator {
public:
    explicit CodewordEnumerator(const LinearCode& code);

    const Word& symbols() const { return word_; }
    const Word& message() const { return digits_; }
    std::uint64_t index() const { return index_; }

    /// Advances to the next message; false once the multiset is exhausted.
    bool advance();

private:
    const LinearCode* code_;
    Word digits_, word_;
    std::uint64_t index_ = 0;
};

struct WeightProfile {
    /// weight -> number of codewords of that weight (with multiplicity);
    /// values sum to q^k and counts[0] >= 1.
    std::map<std::size_t, std::uint64_t> counts;
};

struct HammingDistance {
    std::size_t count;
    Rational relative;
};

/// Counts disagreeing coordinates; exact relative distance count/n.
HammingDistance hamming_distance(const Word& x, const Word& y);

/// Generator with i.i.d. uniform entries over F_q, drawn column by column
/// from the seeded deterministic RNG.
LinearCode random_generator(Symbol q, std::size_t k, std::size_t n, std::uint64_t seed);

/// All q^k codewords in lexicographic message order, repeats retained.
std::vector<Codeword> enumerate_codewords(const LinearCode& code,
                                          std::uint64_t budget = kEnumerationBudget);

/// Binary Reed-Muller code RM(r, m): n = 2^m, rows are evaluation vectors of
/// the monomials of degree <= r.  Point order: m-bit integers ascending with
/// variable x_j = bit j.  Monomial order: by degree, then lexicographic on
/// the sorted variable index sets.
LinearCode reed_muller(unsigned r, unsigned m);

std::size_t min_distance(const LinearCode& code, std::uint64_t budget = kEnumerationBudget);
WeightProfile weight_profile(const LinearCode& code, std::uint64_t budget = kEnumerationBudget);
/// Codewords of weight <= w, zero word included.
std::uint64_t low_weight_count(const LinearCode& code, std::size_t w,
                               std::uint64_t budget = kEnumerationBudget);

enum class PunctureVariant {
    /// n_out coordinates drawn i.i.d. uniformly with replacement (the default).
    multiset,
    /// every coordinate kept independently with probability n_out/n;
    /// output length is random with mean n_out.
    keep_independent,
};

/// Randomly punctured code: generator columns at the drawn positions, in draw
/// order.  The declared dimension stays k even if the rank drops.
LinearCode puncture(const LinearCode& code, std::size_t n_out, std::uint64_t seed,
                    PunctureVariant variant = PunctureVariant::multiset);

/// Deterministic variant used by tests and by `puncture` internally.
LinearCode puncture_with_positions(const LinearCode& code, const std::vector<std::size_t>& positions);

/// Wozencraft ensemble member: message x in GF(2^k) maps to the bit expansion
/// of (x, a_1 x, ..., a_r x), little-endian within each k-bit block.  The
/// multipliers a_j are i.i.d. uniform field elements drawn from the seed.
LinearCode wozencraft(unsigned k, unsigned r, std::uint64_t seed);
LinearCode wozencraft_with_multipliers(const BinaryExtField& field,
                                       const std::vector<std::uint32_t>& multipliers);

/// P(rank(G) = k) for uniform G in F_q^{k x n}: prod_{r=0}^{k-1} (1 - q^{r-n}),
/// as an exact rational.  Returns 0 when k > n.
Rational full_rank_probability(Symbol q, std::size_t k, std::size_t n);

/// .gen file format: line 1 "q k n", then k lines of n space-separated
/// residues.  store(load(x)) is byte-identical for canonical input.
std::string to_gen_string(const LinearCode& code);
LinearCode from_gen_string(const std::string& text);
void save_generator(const LinearCode& code, const std::string& path);
LinearCode load_generator(const std::string& path);

}  // namespace ldlab
