#pragma once

#include <string>
#include <vector>

#include "tridet/basis.hpp"
#include "tridet/coefficients.hpp"
#include "tridet/complex_matrix.hpp"
#include "tridet/states.hpp"

namespace tridet {

/// All expansion coefficients of a tripartite density matrix over the
/// principal product basis:
///   rho = 1/d^3 (I + sum u A(x)I(x)I + sum v I(x)A(x)I + sum w I(x)I(x)A
///                  + sum x A(x)A(x)I + sum y A(x)I(x)A + sum z I(x)A(x)A
///                  + sum r A(x)A(x)A),
/// each coefficient being tr(rho * conjugated basis element). Blocks are
/// dense over pair_index (lexicographic, identity pair excluded).
struct CorrelationDecomposition {
  int d = 2;
  std::vector<Complex> u, v, w;     // single-party, length d^2-1
  std::vector<Complex> xt, yt, zt;  // two-party, (d^2-1)^2, row = earlier party
  std::vector<Complex> r;           // three-party, (d^2-1)^3

  std::size_t n() const { return static_cast<std::size_t>(d) * d - 1; }

  Complex r_at(std::size_t p1, std::size_t p2, std::size_t p3) const {
    return r[(p1 * n() + p2) * n() + p3];
  }
};

/// Extract every coefficient of the expansion above.
CorrelationDecomposition decompose(const DensityMatrix& rho);

/// Reassemble the density matrix from its coefficients (round-trip check).
ComplexMatrix reconstruct(const CorrelationDecomposition& dec);

/// One of the unfolded correlation matrices whose trace norm witnesses
/// entanglement across `bipartition`.
struct Unfolding {
  Bipartition bipartition;
  std::string label;
  ComplexMatrix matrix;  // (d^2-1) x (d^2-1) for the qudit N; 3 x 3 for qubit T/S
};

/// Qubit slice T_k (k = 1..3): the three-party coefficients with the single
/// party's pair frozen to (0,1), (1,0), (1,1) respectively. Rows run over the
/// earlier remaining party's pairs, columns over the later one's.
/// Throws UnsupportedDimension unless d = 2.
Unfolding t_matrix(const CorrelationDecomposition& dec, Bipartition bipartition, int k);

/// S = a*T1 + b*T2 + c*T3 (d = 2 only).
Unfolding s_matrix(const CorrelationDecomposition& dec, Bipartition bipartition,
                   const CoefficientTriple& coeffs);

/// Qudit combination over the d slices with the single party's pair frozen to
/// (m, 1), m in Z_d:
///   N(1|23) = sum_m slice_m,
///   N(2|13) = sum_m omega^m slice_m,
///   N(3|12) = sum_m omega^m slice_m.
/// Defined for every d >= 2 (for d = 2 it is a diagnostic only).
Unfolding n_matrix(const CorrelationDecomposition& dec, Bipartition bipartition);

/// Average of the three N trace norms; a diagnostic statistic.
double t_scalar(const CorrelationDecomposition& dec);

/// Covariance check for pair-party rotations at d = 2: compares the T slices
/// of (I (x) u2 (x) u3)-conjugated rho with M^t * T * N built from the
/// conjugation transition matrices. Returns the max entrywise deviation.
double transform_covariance_check(const DensityMatrix& rho, const ComplexMatrix& u2,
                                  const ComplexMatrix& u3);

}  // namespace tridet
