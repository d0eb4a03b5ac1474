#include "ldlab/simplex.hpp"

#include <cmath>
#include <numbers>

namespace ldlab {

namespace {

/// w^j for j in 0..q-1.
std::vector<Complex> root_powers(Symbol q) {
    std::vector<Complex> w(q);
    for (Symbol j = 0; j < q; ++j) {
        const double arg = 2.0 * std::numbers::pi * double(j) / double(q);
        w[j] = Complex(std::cos(arg), std::sin(arg));
    }
    return w;
}

}  // namespace

ComplexVec encode_word(Symbol q, const Word& x) {
    const auto w = root_powers(q);
    ComplexVec out;
    out.reserve(x.size() * (q - 1));
    for (Symbol s : x) {
        if (s >= q) throw SymbolOutOfRange("word symbol out of range");
        for (Symbol a = 1; a < q; ++a) out.push_back(w[std::uint64_t(s) * a % q]);
    }
    return out;
}

std::int64_t simplex_inner_product(Symbol q, const Word& x, const Word& y) {
    const auto d = hamming_distance(x, y);  // also validates lengths
    const std::int64_t n = std::int64_t(x.size());
    return (std::int64_t(q) - 1) * n - std::int64_t(q) * std::int64_t(d.count);
}

Complex simplex_inner_product_complex(Symbol q, const Word& x, const Word& y) {
    if (x.size() != y.size()) throw LengthMismatch("words of unequal length");
    const ComplexVec fx = encode_word(q, x), fy = encode_word(q, y);
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < fx.size(); ++i) acc += fx[i] * std::conj(fy[i]);
    return acc;
}

SparsePattern make_pattern(std::vector<std::uint64_t> support, std::uint64_t num_columns) {
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i] >= num_columns) throw IndexOutOfRange("pattern index out of range");
        if (i > 0 && support[i] <= support[i - 1])
            throw IndexOutOfRange("pattern support must be strictly increasing");
    }
    return SparsePattern{std::move(support)};
}

double l1_norm(const ComplexVec& v) {
    double s = 0.0;
    for (const Complex& z : v) s += std::abs(z);
    return s;
}

double l2_norm_sq(const ComplexVec& v) {
    double s = 0.0;
    for (const Complex& z : v) s += std::norm(z);
    return s;
}

ComplexVec SimplexMatrix::column(std::uint64_t index) const {
    return encode_word(code_.q(), code_.codeword_at(index));
}

ComplexVec SimplexMatrix::apply(const SparsePattern& pattern, std::uint64_t budget) const {
    const std::uint64_t cols = columns(budget);
    ComplexVec acc(rows(), Complex(0.0, 0.0));
    std::uint64_t prev = 0;
    bool first = true;
    for (std::uint64_t j : pattern.support) {
        if (j >= cols) throw IndexOutOfRange("pattern index out of range");
        if (!first && j <= prev) throw IndexOutOfRange("pattern support must be strictly increasing");
        prev = j;
        first = false;
        const ComplexVec col = column(j);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += col[i];
    }
    return acc;
}

std::int64_t SimplexMatrix::l2_norm_sq_exact(const SparsePattern& pattern,
                                             std::uint64_t budget) const {
    const std::uint64_t cols = columns(budget);
    std::vector<Word> words;
    words.reserve(pattern.support.size());
    for (std::uint64_t j : pattern.support) {
        if (j >= cols) throw IndexOutOfRange("pattern index out of range");
        words.push_back(code_.codeword_at(j));
    }
    std::int64_t acc = 0;
    for (const Word& a : words)
        for (const Word& b : words) acc += simplex_inner_product(code_.q(), a, b);
    return acc;
}

}  // namespace ldlab
