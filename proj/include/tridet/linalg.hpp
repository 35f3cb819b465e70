#pragma once

#include <vector>

#include "tridet/complex_matrix.hpp"

namespace tridet {

// Numerical tolerances shared by the dense kernels. Matrices in scope stay
// small (at most 64x64 sums, (d^2-1)x(d^2-1) unfoldings with d <= 5), so the
// kernels favour robustness over asymptotics.
inline constexpr double kHermitianTol = 1e-10;      // precondition for eigensolves
inline constexpr double kSingularClampRel = 1e-12;  // sigma < rel*sigma_max -> 0
inline constexpr double kJacobiOffTol = 1e-13;      // rotation threshold, relative
inline constexpr int kJacobiSweepFactor = 100;      // sweep cap = factor * n

/// Singular values of a dense complex matrix, sorted descending.
/// One-sided Jacobi: orthogonalizes columns of the (possibly adjointed)
/// input; values below kSingularClampRel * sigma_max are clamped to 0.
/// Throws ConvergenceFailure if the sweep budget is exhausted.
std::vector<double> singular_values(const ComplexMatrix& a);

/// Trace norm: sum of singular values.
double trace_norm(const ComplexMatrix& a);

/// Real spectrum of a Hermitian matrix, sorted descending.
/// Throws NotHermitian if max |A - A^dagger| exceeds kHermitianTol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

}  // namespace tridet
