#include "tridet/correlation.hpp"

#include <algorithm>
#include <cmath>

#include "tridet/linalg.hpp"

namespace tridet {

namespace {

// tr(rho * A(i,j)^dagger (x) A(k,l)^dagger (x) A(s,t)^dagger) without
// materializing the product operator: the conjugated element has its only
// nonzero entries at (row + (j,l,t), row) with phase omega^-(i,k,s).row.
Complex coefficient(const DensityMatrix& rho, const PrincipalBasis& basis, int i, int j, int k,
                    int l, int s, int t) {
  const int d = rho.d;
  Complex acc(0.0, 0.0);
  for (int r1 = 0; r1 < d; ++r1) {
    for (int r2 = 0; r2 < d; ++r2) {
      for (int r3 = 0; r3 < d; ++r3) {
        const std::size_t row = flat_index(r1, r2, r3, d);
        const std::size_t col = flat_index((r1 + j) % d, (r2 + l) % d, (r3 + t) % d, d);
        const Complex phase = std::conj(basis.omega_pow(
            static_cast<long long>(i) * r1 + static_cast<long long>(k) * r2 +
            static_cast<long long>(s) * r3));
        acc += rho.matrix(row, col) * phase;
      }
    }
  }
  return acc;
}

void require_qubits(const CorrelationDecomposition& dec) {
  if (dec.d != 2) {
    throw UnsupportedDimension("the T/S unfoldings are defined for qubits (d = 2)");
  }
}

}  // namespace

CorrelationDecomposition decompose(const DensityMatrix& rho) {
  const int d = rho.d;
  const PrincipalBasis& basis = principal_basis(d);
  const std::size_t n = static_cast<std::size_t>(d) * d - 1;

  CorrelationDecomposition dec;
  dec.d = d;
  dec.u.resize(n);
  dec.v.resize(n);
  dec.w.resize(n);
  dec.xt.resize(n * n);
  dec.yt.resize(n * n);
  dec.zt.resize(n * n);
  dec.r.resize(n * n * n);

  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const bool id1 = (i == 0 && j == 0);
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          const bool id2 = (k == 0 && l == 0);
          for (int s = 0; s < d; ++s) {
            for (int t = 0; t < d; ++t) {
              const bool id3 = (s == 0 && t == 0);
              if (id1 && id2 && id3) continue;
              const Complex c = coefficient(rho, basis, i, j, k, l, s, t);
              if (id2 && id3) {
                dec.u[pair_index(i, j, d)] = c;
              } else if (id1 && id3) {
                dec.v[pair_index(k, l, d)] = c;
              } else if (id1 && id2) {
                dec.w[pair_index(s, t, d)] = c;
              } else if (id3) {
                dec.xt[pair_index(i, j, d) * n + pair_index(k, l, d)] = c;
              } else if (id2) {
                dec.yt[pair_index(i, j, d) * n + pair_index(s, t, d)] = c;
              } else if (id1) {
                dec.zt[pair_index(k, l, d) * n + pair_index(s, t, d)] = c;
              } else {
                dec.r[(pair_index(i, j, d) * n + pair_index(k, l, d)) * n +
                      pair_index(s, t, d)] = c;
              }
            }
          }
        }
      }
    }
  }
  return dec;
}

ComplexMatrix reconstruct(const CorrelationDecomposition& dec) {
  const int d = dec.d;
  const PrincipalBasis& basis = principal_basis(d);
  const std::size_t n3 = static_cast<std::size_t>(d) * d * d;
  const ComplexMatrix eye = ComplexMatrix::identity(d);

  ComplexMatrix sum = ComplexMatrix::identity(n3);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == 0 && j == 0) continue;
      const std::size_t p1 = pair_index(i, j, d);
      sum += dec.u[p1] * kron(basis.element(i, j), kron(eye, eye));
      sum += dec.v[p1] * kron(eye, kron(basis.element(i, j), eye));
      sum += dec.w[p1] * kron(eye, kron(eye, basis.element(i, j)));
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          if (k == 0 && l == 0) continue;
          const std::size_t p2 = pair_index(k, l, d);
          sum += dec.xt[p1 * dec.n() + p2] *
                 kron(basis.element(i, j), kron(basis.element(k, l), eye));
          sum += dec.yt[p1 * dec.n() + p2] *
                 kron(basis.element(i, j), kron(eye, basis.element(k, l)));
          sum += dec.zt[p1 * dec.n() + p2] *
                 kron(eye, kron(basis.element(i, j), basis.element(k, l)));
          for (int s = 0; s < d; ++s) {
            for (int t = 0; t < d; ++t) {
              if (s == 0 && t == 0) continue;
              sum += dec.r_at(p1, p2, pair_index(s, t, d)) *
                     kron(basis.element(i, j), kron(basis.element(k, l), basis.element(s, t)));
            }
          }
        }
      }
    }
  }
  sum *= Complex(1.0 / static_cast<double>(n3), 0.0);
  return sum;
}

Unfolding t_matrix(const CorrelationDecomposition& dec, Bipartition bipartition, int k) {
  require_qubits(dec);
  if (k < 1 || k > 3) throw ParameterOutOfRange("T slice index must be 1, 2 or 3");
  const std::size_t n = dec.n();       // 3
  const std::size_t frozen = k - 1;    // pair_index of (0,1), (1,0), (1,1)

  ComplexMatrix m(n, n);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) {
      Complex val;
      switch (bipartition) {
        case Bipartition::OneVs23: val = dec.r_at(frozen, row, col); break;
        case Bipartition::TwoVs13: val = dec.r_at(row, frozen, col); break;
        case Bipartition::ThreeVs12: val = dec.r_at(row, col, frozen); break;
      }
      m(row, col) = val;
    }
  }
  return Unfolding{bipartition, "T" + std::to_string(k), std::move(m)};
}

Unfolding s_matrix(const CorrelationDecomposition& dec, Bipartition bipartition,
                   const CoefficientTriple& coeffs) {
  require_qubits(dec);
  ComplexMatrix m = t_matrix(dec, bipartition, 1).matrix;
  m *= Complex(coeffs.a, 0.0);
  ComplexMatrix t2 = t_matrix(dec, bipartition, 2).matrix;
  t2 *= Complex(coeffs.b, 0.0);
  ComplexMatrix t3 = t_matrix(dec, bipartition, 3).matrix;
  t3 *= Complex(coeffs.c, 0.0);
  m += t2;
  m += t3;
  return Unfolding{bipartition, "S", std::move(m)};
}

Unfolding n_matrix(const CorrelationDecomposition& dec, Bipartition bipartition) {
  const int d = dec.d;
  const PrincipalBasis& basis = principal_basis(d);
  const std::size_t n = dec.n();

  ComplexMatrix m(n, n);
  for (int slice = 0; slice < d; ++slice) {
    const std::size_t frozen = pair_index(slice, 1, d);
    const Complex weight =
        bipartition == Bipartition::OneVs23 ? Complex(1.0, 0.0) : basis.omega_pow(slice);
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t col = 0; col < n; ++col) {
        Complex val;
        switch (bipartition) {
          case Bipartition::OneVs23: val = dec.r_at(frozen, row, col); break;
          case Bipartition::TwoVs13: val = dec.r_at(row, frozen, col); break;
          case Bipartition::ThreeVs12: val = dec.r_at(row, col, frozen); break;
        }
        m(row, col) += weight * val;
      }
    }
  }
  return Unfolding{bipartition, "N", std::move(m)};
}

double t_scalar(const CorrelationDecomposition& dec) {
  double sum = 0.0;
  for (Bipartition b : kAllBipartitions) {
    sum += trace_norm(n_matrix(dec, b).matrix);
  }
  return sum / 3.0;
}

double transform_covariance_check(const DensityMatrix& rho, const ComplexMatrix& u2,
                                  const ComplexMatrix& u3) {
  if (rho.d != 2) throw UnsupportedDimension("covariance check is defined for qubits");
  const PrincipalBasis& basis = principal_basis(2);
  const TransitionMatrix m = conjugation_coefficients(basis, u2);
  const TransitionMatrix n = conjugation_coefficients(basis, u3);

  const DensityMatrix rotated = conjugate_local(rho, ComplexMatrix::identity(2), u2, u3);
  const CorrelationDecomposition dec = decompose(rho);
  const CorrelationDecomposition dec_rot = decompose(rotated);

  // Plain transpose (not the adjoint) of the transition matrix.
  const ComplexMatrix& mm = m.matrix();
  ComplexMatrix m_t(mm.cols(), mm.rows());
  for (std::size_t i = 0; i < mm.rows(); ++i)
    for (std::size_t j = 0; j < mm.cols(); ++j) m_t(j, i) = mm(i, j);

  double deviation = 0.0;
  for (int k = 1; k <= 3; ++k) {
    const ComplexMatrix direct = t_matrix(dec_rot, Bipartition::OneVs23, k).matrix;
    const ComplexMatrix mapped = m_t * t_matrix(dec, Bipartition::OneVs23, k).matrix * n.matrix();
    deviation = std::max(deviation, direct.max_abs_diff(mapped));
  }
  return deviation;
}

}  // namespace tridet
