#include "ldlab/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "ldlab/errors.hpp"

namespace ldlab {

GfRref gf_rref(const PrimeField& field, std::vector<Symbol> mat, std::size_t rows,
               std::size_t cols) {
    if (mat.size() != rows * cols) throw ConfigError("matrix size mismatch");
    GfRref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (mat[i * cols + c] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(mat[pivot * cols + j], mat[r * cols + j]);
        const Symbol inv = field.inv(mat[r * cols + c]);
        for (std::size_t j = 0; j < cols; ++j)
            mat[r * cols + j] = field.mul(inv, mat[r * cols + j]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Symbol f = mat[i * cols + c];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                mat[i * cols + j] = field.sub(mat[i * cols + j], field.mul(f, mat[r * cols + j]));
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.mat = std::move(mat);
    return out;
}

std::size_t gf_rank(const PrimeField& field, const std::vector<Symbol>& mat, std::size_t rows,
                    std::size_t cols) {
    return gf_rref(field, mat, rows, cols).rank;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t dim,
                                       double offdiag_tol) {
    if (a.size() != dim * dim) throw ConfigError("matrix size mismatch");
    if (dim == 0) return {};
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t p = 0; p < dim; ++p)
            for (std::size_t q = p + 1; q < dim; ++q) s += 2.0 * a[p * dim + q] * a[p * dim + q];
        return std::sqrt(s);
    };
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && off_norm() > offdiag_tol; ++sweep) {
        for (std::size_t p = 0; p < dim; ++p) {
            for (std::size_t q = p + 1; q < dim; ++q) {
                const double apq = a[p * dim + q];
                if (apq == 0.0) continue;
                const double theta = (a[q * dim + q] - a[p * dim + p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t i = 0; i < dim; ++i) {
                    const double aip = a[i * dim + p], aiq = a[i * dim + q];
                    a[i * dim + p] = c * aip - s * aiq;
                    a[i * dim + q] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < dim; ++i) {
                    const double api = a[p * dim + i], aqi = a[q * dim + i];
                    a[p * dim + i] = c * api - s * aqi;
                    a[q * dim + i] = s * api + c * aqi;
                }
            }
        }
    }
    std::vector<double> eig(dim);
    for (std::size_t i = 0; i < dim; ++i) eig[i] = a[i * dim + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace ldlab
