#pragma once

#include <cstddef>
#include <vector>

#include "ldlab/field.hpp"

namespace ldlab {

/// Reduced row echelon form over F_q with deterministic lowest-index pivots.
struct GfRref {
    std::vector<Symbol> mat;  // rows x cols, row-major
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

GfRref gf_rref(const PrimeField& field, std::vector<Symbol> mat, std::size_t rows,
               std::size_t cols);

std::size_t gf_rank(const PrimeField& field, const std::vector<Symbol>& mat, std::size_t rows,
                    std::size_t cols);

/// Eigenvalues of a dense real symmetric matrix by cyclic Jacobi rotations,
/// iterated until the off-diagonal Frobenius norm drops below `offdiag_tol`.
/// Suited to the small Gram matrices this project produces (dim <= ~32).
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t dim,
                                       double offdiag_tol = 1e-9);

}  // namespace ldlab
