#include "tridet/basis.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace tridet {

std::size_t pair_index(int i, int j, int d) {
  return static_cast<std::size_t>(i) * d + j - 1;
}

std::pair<int, int> pair_from_index(std::size_t idx, int d) {
  const std::size_t flat = idx + 1;
  return {static_cast<int>(flat / d), static_cast<int>(flat % d)};
}

PrincipalBasis::PrincipalBasis(int d) : d_(d) {
  if (d < 2) throw InvalidDimension("basis dimension must be at least 2");
  omega_pow_.resize(d);
  for (int k = 0; k < d; ++k) {
    omega_pow_[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
  }
  // Keep d = 2 exactly real: omega = -1.
  if (d == 2) omega_pow_[1] = Complex(-1.0, 0.0);

  mats_.reserve(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      ComplexMatrix a(d, d);
      for (int m = 0; m < d; ++m) {
        a(m, (m + j) % d) = omega_pow_[(i * m) % d];
      }
      mats_.push_back(std::move(a));
    }
  }
}

Complex PrincipalBasis::omega_pow(long long e) const {
  long long r = e % d_;
  if (r < 0) r += d_;
  return omega_pow_[static_cast<std::size_t>(r)];
}

const ComplexMatrix& PrincipalBasis::element(int i, int j) const {
  return mats_[static_cast<std::size_t>(i) * d_ + j];
}

const PrincipalBasis& principal_basis(int d) {
  if (d < 2) throw InvalidDimension("basis dimension must be at least 2");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<PrincipalBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = std::make_unique<PrincipalBasis>(d);
  return *slot;
}

TransitionMatrix::TransitionMatrix(int d, ComplexMatrix entries) : d_(d), entries_(std::move(entries)) {
  const std::size_t n = static_cast<std::size_t>(d) * d - 1;
  if (entries_.rows() != n || entries_.cols() != n) {
    throw ShapeMismatch("transition matrix must be (d^2-1) x (d^2-1)");
  }
}

TransitionMatrix conjugation_coefficients(const PrincipalBasis& basis, const ComplexMatrix& u) {
  const int d = basis.dim();
  const std::size_t n = static_cast<std::size_t>(d);
  if (u.rows() != n || u.cols() != n) throw NotUnitary("unitary has wrong shape");
  if ((u * dagger(u)).max_abs_diff(ComplexMatrix::identity(n)) > 1e-10) {
    throw NotUnitary("matrix is not unitary within 1e-10");
  }

  const std::size_t nn = n * n - 1;
  ComplexMatrix m(nn, nn);
  const ComplexMatrix udag = dagger(u);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == 0 && j == 0) continue;
      const ComplexMatrix conj = u * basis.element(i, j) * udag;
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          if (k == 0 && l == 0) continue;
          // tr(A(k,l)^dagger conj) / d
          Complex t(0.0, 0.0);
          const ComplexMatrix& a = basis.element(k, l);
          for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
              t += std::conj(a(r, c)) * conj(r, c);
            }
          }
          m(pair_index(i, j, d), pair_index(k, l, d)) = t / static_cast<double>(d);
        }
      }
    }
  }
  return TransitionMatrix(d, std::move(m));
}

}  // namespace tridet
