#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ldlab/code.hpp"

namespace ldlab {

using Complex = std::complex<double>;
using ComplexVec = std::vector<Complex>;

/// Simplex encoding of a word: block i holds (w^{x_i a})_{a=1..q-1} with
/// w = e^{2 pi i / q}; total length n(q-1).  Every entry has modulus 1.
ComplexVec encode_word(Symbol q, const Word& x);

/// Hermitian inner product <phi(x), phi(y)> computed exactly through the
/// agreement-count identity: (q-1)n - q * disagreements.  This is the default
/// path; certificates are built on these exact integers.
std::int64_t simplex_inner_product(Symbol q, const Word& x, const Word& y);

/// Cross-check path: direct summation sum_i phi(x)_i * conj(phi(y)_i).
/// The imaginary part vanishes up to rounding.
Complex simplex_inner_product_complex(Symbol q, const Word& x, const Word& y);

/// x in Sigma_L: the L-sparse binary indicator of `support` (strictly
/// increasing message indices).
struct SparsePattern {
    std::vector<std::uint64_t> support;
};

/// Validates strict increase and range; throws IndexOutOfRange.
SparsePattern make_pattern(std::vector<std::uint64_t> support, std::uint64_t num_columns);

double l1_norm(const ComplexVec& v);
double l2_norm_sq(const ComplexVec& v);

/// The n(q-1) x N matrix phi(C), held implicitly: columns are regenerated
/// from the generator on demand and never stored densely.
class SimplexMatrix {
public:
    explicit SimplexMatrix(LinearCode code) : code_(std::move(code)) {}

    const LinearCode& code() const { return code_; }
    std::size_t rows() const { return code_.length() * (code_.q() - 1); }
    std::uint64_t columns(std::uint64_t budget = kEnumerationBudget) const {
        return code_.num_codewords(budget);
    }

    /// Column for message index j, i.e. encode_word(codeword_at(j)).
    ComplexVec column(std::uint64_t index) const;

    /// Phi x: the sum of the selected columns.
    ComplexVec apply(const SparsePattern& pattern, std::uint64_t budget = kEnumerationBudget) const;

    /// ||Phi x||_2^2 through the exact Gram expansion
    /// sum_{i,j in support} <phi(c_i), phi(c_j)>.
    std::int64_t l2_norm_sq_exact(const SparsePattern& pattern,
                                  std::uint64_t budget = kEnumerationBudget) const;

private:
    LinearCode code_;
};

}  // namespace ldlab
