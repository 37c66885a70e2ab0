#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"
#include "matrix.hpp"

namespace chainseidel {

inline constexpr std::size_t kNumericCap = 2000;
inline constexpr double kResidualTolerance = 1e-10;

/// Ascending eigenvalues of a symmetric integer matrix by dense
/// self-adjoint eigendecomposition. Used as an independent floating-point
/// oracle for the exact routines.
inline std::vector<double> numeric_spectrum(const IntMatrix& m) {
    require(m.is_symmetric(), ErrorCode::invalid_argument, "numeric oracle needs a symmetric matrix");
    const std::size_t n = m.rows();
    require(n <= kNumericCap, ErrorCode::size_cap, "numeric oracle is limited to order 2000");
    if (n == 0) return {};

    Eigen::MatrixXd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(m(i, j));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    require(solver.info() == Eigen::Success, ErrorCode::numeric, "symmetric eigensolver did not converge");

    const Eigen::VectorXd& values = solver.eigenvalues();
    const Eigen::MatrixXd& vectors = solver.eigenvectors();
    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    const double residual = (a * vectors - vectors * values.asDiagonal()).colwise().norm().maxCoeff();
    require(residual <= kResidualTolerance * scale, ErrorCode::numeric, "eigenpair residual above tolerance");

    std::vector<double> out(values.data(), values.data() + values.size());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<double> numeric_spectrum(const SeidelMatrix& s) { return numeric_spectrum(s.matrix()); }

} // namespace chainseidel
