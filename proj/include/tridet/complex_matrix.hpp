#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "tridet/errors.hpp"

namespace tridet {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage. Values are immutable in spirit:
/// every operation returns a fresh matrix, so instances can be shared freely
/// across threads.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero-filled rows x cols matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Row-wise construction, mostly for tests and fixed operator tables.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Complex>& entries() const { return entries_; }

  Complex trace() const;
  double max_abs() const;
  /// Largest entrywise |a - b|; shapes must match.
  double max_abs_diff(const ComplexMatrix& other) const;
  bool is_finite() const;
  /// max |A - A^dagger| over entries.
  double hermiticity_defect() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Kronecker product: entry ((i*b.rows+k),(j*b.cols+l)) = a(i,j)*b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace tridet
