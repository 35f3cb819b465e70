#include "tridet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace tridet {

namespace {

// Column-major working copy; one-sided Jacobi touches whole columns.
struct Columns {
  std::size_t m = 0, n = 0;
  std::vector<Complex> data;  // column j starts at data[j * m]

  explicit Columns(const ComplexMatrix& a, bool adjoint) {
    if (!adjoint) {
      m = a.rows();
      n = a.cols();
      data.resize(m * n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) data[j * m + i] = a(i, j);
    } else {
      m = a.cols();
      n = a.rows();
      data.resize(m * n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) data[j * m + i] = std::conj(a(j, i));
    }
  }

  Complex* col(std::size_t j) { return data.data() + j * m; }
};

}  // namespace

std::vector<double> singular_values(const ComplexMatrix& a) {
  if (!a.is_finite()) throw ConvergenceFailure("non-finite entries in singular_values input");
  if (a.rows() == 0 || a.cols() == 0) return {};

  // Work on the shape with fewer columns; singular values are adjoint-invariant.
  Columns w(a, a.cols() > a.rows());
  const std::size_t m = w.m, n = w.n;

  const int max_sweeps = kJacobiSweepFactor * static_cast<int>(n);
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    converged = true;

    // Columns whose norm fell below clamp level are exact zeros from here on;
    // rotating them only spins rounding noise and stalls convergence on
    // rank-deficient input.
    double max_norm2 = 0.0;
    std::vector<double> norm2(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const Complex* cj = w.col(j);
      for (std::size_t i = 0; i < m; ++i) norm2[j] += std::norm(cj[i]);
      max_norm2 = std::max(max_norm2, norm2[j]);
    }
    const double floor2 = kJacobiOffTol * kJacobiOffTol * max_norm2;
    for (std::size_t j = 0; j < n; ++j) {
      if (norm2[j] > 0.0 && norm2[j] <= floor2) {
        Complex* cj = w.col(j);
        for (std::size_t i = 0; i < m; ++i) cj[i] = Complex(0.0, 0.0);
        norm2[j] = 0.0;
      }
    }

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (norm2[p] == 0.0 || norm2[q] == 0.0) continue;
        Complex* cp = w.col(p);
        Complex* cq = w.col(q);
        double app = 0.0, aqq = 0.0;
        Complex apq(0.0, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
          app += std::norm(cp[i]);
          aqq += std::norm(cq[i]);
          apq += std::conj(cp[i]) * cq[i];
        }
        const double off = std::abs(apq);
        if (off <= kJacobiOffTol * std::sqrt(app * aqq) || off == 0.0) continue;
        converged = false;

        // Unitary 2x2 rotation diagonalizing the Gram block [[app, apq],[conj, aqq]].
        const Complex phase = apq / off;
        const double tau = (aqq - app) / (2.0 * off);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const Complex vp = cp[i];
          const Complex vq = cq[i];
          cp[i] = c * vp - s * std::conj(phase) * vq;
          cq[i] = s * phase * vp + c * vq;
        }
      }
    }
  }
  if (!converged) throw ConvergenceFailure("one-sided Jacobi SVD did not converge");

  std::vector<double> sigma(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double norm2 = 0.0;
    const Complex* cj = w.col(j);
    for (std::size_t i = 0; i < m; ++i) norm2 += std::norm(cj[i]);
    sigma[j] = std::sqrt(norm2);
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  if (!sigma.empty() && sigma.front() > 0.0) {
    const double clamp = kSingularClampRel * sigma.front();
    for (auto& s : sigma) {
      if (s < clamp) s = 0.0;
    }
  }
  return sigma;
}

double trace_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (double s : singular_values(a)) sum += s;
  return sum;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw NotHermitian("non-square matrix");
  if (!a.is_finite()) throw NotHermitian("non-finite entries");
  if (a.hermiticity_defect() > kHermitianTol) {
    throw NotHermitian("matrix exceeds Hermiticity tolerance");
  }

  const std::size_t n = a.rows();
  if (n == 0) return {};

  // Classical two-sided Jacobi with complex rotations; eigenvalues only.
  ComplexMatrix w = a;
  // Symmetrize away the sub-tolerance defect so rotations see an exactly
  // Hermitian block.
  for (std::size_t i = 0; i < n; ++i) {
    w(i, i) = Complex(w(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (w(i, j) + std::conj(w(j, i)));
      w(i, j) = avg;
      w(j, i) = std::conj(avg);
    }
  }

  double scale = w.max_abs();
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  const int max_sweeps = kJacobiSweepFactor * static_cast<int>(n);
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double off = std::abs(w(p, q));
        if (off <= kJacobiOffTol * scale || off == 0.0) continue;
        converged = false;

        const Complex phase = w(p, q) / off;
        const double tau = (w(q, q).real() - w(p, p).real()) / (2.0 * off);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;

        // W <- J^dagger W J with J = [[c, s*phase],[-s*conj(phase), c]] acting
        // on rows/columns p, q.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex wkp = w(k, p);
          const Complex wkq = w(k, q);
          w(k, p) = c * wkp - s * std::conj(phase) * wkq;
          w(k, q) = s * phase * wkp + c * wkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex wpk = w(p, k);
          const Complex wqk = w(q, k);
          w(p, k) = c * wpk - s * phase * wqk;
          w(q, k) = s * std::conj(phase) * wpk + c * wqk;
        }
        w(p, q) = Complex(0.0, 0.0);
        w(q, p) = Complex(0.0, 0.0);
        w(p, p) = Complex(w(p, p).real(), 0.0);
        w(q, q) = Complex(w(q, q).real(), 0.0);
      }
    }
  }
  if (!converged) throw ConvergenceFailure("Jacobi eigensolve did not converge");

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = w(i, i).real();
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

}  // namespace tridet
