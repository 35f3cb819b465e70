#pragma once

#include <cstddef>
#include <vector>

#include "tridet/complex_matrix.hpp"

namespace tridet {

/// Flat position of the index pair (i, j) among the d^2-1 non-identity pairs,
/// ordered lexicographically with (0,0) excluded: (0,1), ..., (0,d-1), (1,0), ...
/// This ordering fixes the row/column layout of every unfolded matrix.
std::size_t pair_index(int i, int j, int d);

/// Inverse of pair_index.
std::pair<int, int> pair_from_index(std::size_t idx, int d);

/// The d^2 shift-and-phase basis matrices for one d-level party:
/// A(i,j) has entries omega^(i*m) at positions (m, m+j mod d), with
/// omega = exp(2*pi*I/d). A(0,0) is the identity and
/// tr(A(i,j) A(k,l)^dagger) = d * delta_ik * delta_jl.
class PrincipalBasis {
 public:
  explicit PrincipalBasis(int d);

  int dim() const { return d_; }
  Complex omega() const { return omega_pow_[1 % d_]; }
  /// omega^e for any integer exponent (reduced mod d).
  Complex omega_pow(long long e) const;

  const ComplexMatrix& element(int i, int j) const;

 private:
  int d_;
  std::vector<Complex> omega_pow_;   // omega^0 .. omega^(d-1)
  std::vector<ComplexMatrix> mats_;  // index i*d + j
};

/// Cached immutable basis for dimension d (>= 2). Throws InvalidDimension.
const PrincipalBasis& principal_basis(int d);

/// Expansion of U A(i,j) U^dagger over the non-identity basis elements:
/// entries m(ij, i'j') = tr(A(i'j')^dagger U A(ij) U^dagger) / d, indexed
/// by pair_index on both axes. Unitary whenever U is.
class TransitionMatrix {
 public:
  TransitionMatrix(int d, ComplexMatrix entries);

  int dim() const { return d_; }
  const ComplexMatrix& matrix() const { return entries_; }

 private:
  int d_;
  ComplexMatrix entries_;  // (d^2-1) x (d^2-1)
};

/// Transition matrix of conjugation by u. Throws NotUnitary if u deviates
/// from unitarity by more than 1e-10.
TransitionMatrix conjugation_coefficients(const PrincipalBasis& basis, const ComplexMatrix& u);

}  // namespace tridet
