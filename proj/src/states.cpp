#include "tridet/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tridet/linalg.hpp"

namespace tridet {

namespace {

std::size_t cube(int d) {
  return static_cast<std::size_t>(d) * d * d;
}

double vector_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return std::sqrt(s);
}

void check_dimension(int d) {
  if (d < 2) throw InvalidDimension("local dimension must be at least 2");
}

}  // namespace

int single_party(Bipartition b) {
  switch (b) {
    case Bipartition::OneVs23: return 1;
    case Bipartition::TwoVs13: return 2;
    case Bipartition::ThreeVs12: return 3;
  }
  throw ParameterOutOfRange("bad bipartition");
}

std::pair<int, int> pair_parties(Bipartition b) {
  switch (b) {
    case Bipartition::OneVs23: return {2, 3};
    case Bipartition::TwoVs13: return {1, 3};
    case Bipartition::ThreeVs12: return {1, 2};
  }
  throw ParameterOutOfRange("bad bipartition");
}

std::string to_string(Bipartition b) {
  switch (b) {
    case Bipartition::OneVs23: return "1|23";
    case Bipartition::TwoVs13: return "2|13";
    case Bipartition::ThreeVs12: return "3|12";
  }
  return "?";
}

Bipartition parse_bipartition(std::string_view text) {
  if (text == "1|23" || text == "1") return Bipartition::OneVs23;
  if (text == "2|13" || text == "2") return Bipartition::TwoVs13;
  if (text == "3|12" || text == "3") return Bipartition::ThreeVs12;
  throw ParameterOutOfRange("unrecognized bipartition: " + std::string(text));
}

PureState make_pure_state(int d, std::vector<Complex> amplitudes) {
  check_dimension(d);
  if (amplitudes.size() != cube(d)) {
    throw ShapeMismatch("amplitude vector must have length d^3");
  }
  const double norm = vector_norm(amplitudes);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw InvalidSpectrum("pure state must have unit norm within 1e-12");
  }
  return PureState{d, std::move(amplitudes)};
}

DensityMatrix make_density(int d, ComplexMatrix matrix) {
  check_dimension(d);
  const std::size_t n = cube(d);
  if (matrix.rows() != n || matrix.cols() != n) {
    throw ShapeMismatch("density matrix must be d^3 x d^3");
  }
  if (!matrix.is_finite()) throw ParameterOutOfRange("density matrix has non-finite entries");
  if (matrix.hermiticity_defect() > kDensityHermitianTol) {
    throw NotHermitian("density matrix is not Hermitian within 1e-10");
  }
  if (std::abs(matrix.trace() - Complex(1.0, 0.0)) > kDensityTraceTol) {
    throw ParameterOutOfRange("density matrix trace must be 1 within 1e-10");
  }
  const auto eig = hermitian_eigenvalues(matrix);
  if (eig.back() < kDensityPositivityTol) {
    throw ParameterOutOfRange("density matrix has an eigenvalue below -1e-9");
  }
  return DensityMatrix{d, std::move(matrix)};
}

PureState ghz(int d) {
  check_dimension(d);
  std::vector<Complex> amp(cube(d), Complex(0.0, 0.0));
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) amp[flat_index(k, k, k, d)] = w;
  return PureState{d, std::move(amp)};
}

PureState w3() {
  std::vector<Complex> amp(8, Complex(0.0, 0.0));
  const double w = 1.0 / std::sqrt(3.0);
  amp[flat_index(1, 0, 0, 2)] = w;
  amp[flat_index(0, 1, 0, 2)] = w;
  amp[flat_index(0, 0, 1, 2)] = w;
  return PureState{2, std::move(amp)};
}

DensityMatrix pure_density(const PureState& psi) {
  const std::size_t n = psi.amplitudes.size();
  ComplexMatrix rho(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex ai = psi.amplitudes[i];
    if (ai == Complex(0.0, 0.0)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      rho(i, j) = ai * std::conj(psi.amplitudes[j]);
    }
  }
  // Exact by construction; skip the eigensolve of the general factory.
  return DensityMatrix{psi.d, std::move(rho)};
}

DensityMatrix noisy_state(const NoiseFamily& family) {
  if (family.x < 0.0 || family.x > 1.0) {
    throw ParameterOutOfRange("mixing parameter must lie in [0, 1]");
  }
  PureState target;
  double pure_weight = 0.0;
  switch (family.kind) {
    case NoiseKind::GhzMix:
      target = ghz(family.d);
      pure_weight = 1.0 - family.x;
      break;
    case NoiseKind::WMix:
      if (family.d != 2) throw InvalidDimension("the W mixture is defined for qubits");
      target = w3();
      pure_weight = family.x;
      break;
  }
  const std::size_t n = cube(family.d);
  ComplexMatrix rho = pure_density(target).matrix;
  rho *= Complex(pure_weight, 0.0);
  const double noise = (1.0 - pure_weight) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) rho(i, i) += noise;
  return DensityMatrix{family.d, std::move(rho)};
}

SchmidtSpectrum schmidt_spectrum(const PureState& psi, Bipartition bipartition) {
  const int d = psi.d;
  // d x d^2 unfolding with the single party indexing rows.
  ComplexMatrix unf(d, static_cast<std::size_t>(d) * d);
  const int f = single_party(bipartition);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        const Complex amp = psi.amplitudes[flat_index(a, b, c, d)];
        int row = 0;
        std::size_t col = 0;
        switch (f) {
          case 1: row = a; col = static_cast<std::size_t>(b) * d + c; break;
          case 2: row = b; col = static_cast<std::size_t>(a) * d + c; break;
          case 3: row = c; col = static_cast<std::size_t>(a) * d + b; break;
        }
        unf(row, col) = amp;
      }
    }
  }
  auto sv = singular_values(unf);
  sv.resize(d);
  return SchmidtSpectrum{bipartition, std::move(sv)};
}

PureState canonical_biseparable(CanonicalCase which, Bipartition /*bipartition*/,
                                const std::vector<double>& t, int d) {
  check_dimension(d);
  if (t.empty() || t.size() > static_cast<std::size_t>(d)) {
    throw InvalidSpectrum("Schmidt weight vector must have between 1 and d entries");
  }
  double sum2 = 0.0;
  for (double v : t) {
    if (!(v >= 0.0)) throw InvalidSpectrum("Schmidt weights must be nonnegative");
    sum2 += v * v;
  }
  if (std::abs(sum2 - 1.0) > 1e-10) {
    throw InvalidSpectrum("Schmidt weights must have unit square sum within 1e-10");
  }

  std::vector<Complex> amp(cube(d), Complex(0.0, 0.0));
  for (std::size_t k = 0; k < t.size(); ++k) {
    const int kk = static_cast<int>(k);
    const std::size_t idx = which == CanonicalCase::CaseI ? flat_index(kk, 0, kk, d)
                                                          : flat_index(kk, kk, kk, d);
    amp[idx] = t[k];
  }
  return PureState{d, std::move(amp)};
}

double Rng::uniform() {
  // 53-bit mantissa from the top bits of the engine output.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im);
}

namespace {

std::vector<Complex> random_unit_vector(Rng& rng, std::size_t n) {
  std::vector<Complex> v(n);
  for (auto& a : v) a = rng.complex_gaussian();
  const double norm = vector_norm(v);
  for (auto& a : v) a /= norm;
  return v;
}

}  // namespace

PureState random_pure(Rng& rng, int d) {
  check_dimension(d);
  return PureState{d, random_unit_vector(rng, cube(d))};
}

PureState random_biseparable(Rng& rng, int d, Bipartition bipartition) {
  check_dimension(d);
  const auto single = random_unit_vector(rng, static_cast<std::size_t>(d));
  const auto pair = random_unit_vector(rng, static_cast<std::size_t>(d) * d);
  const int f = single_party(bipartition);
  const auto [g, h] = pair_parties(bipartition);

  std::vector<Complex> amp(cube(d));
  int idx[4] = {0, 0, 0, 0};  // 1-based party values
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        idx[1] = a; idx[2] = b; idx[3] = c;
        amp[flat_index(a, b, c, d)] =
            single[idx[f]] * pair[static_cast<std::size_t>(idx[g]) * d + idx[h]];
      }
    }
  }
  return PureState{d, std::move(amp)};
}

ComplexMatrix random_unitary(Rng& rng, int d) {
  check_dimension(d);
  const std::size_t n = static_cast<std::size_t>(d);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.complex_gaussian();

  // Modified Gram-Schmidt over columns.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex proj(0.0, 0.0);
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(m(i, k)) * m(i, j);
      for (std::size_t i = 0; i < n; ++i) m(i, j) -= proj * m(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(m(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) m(i, j) /= norm;
  }
  return m;
}

PureState apply_local_unitary(const PureState& psi, int party, const ComplexMatrix& u) {
  const int d = psi.d;
  if (party < 1 || party > 3) throw ParameterOutOfRange("party must be 1, 2 or 3");
  if (u.rows() != static_cast<std::size_t>(d) || u.cols() != static_cast<std::size_t>(d)) {
    throw ShapeMismatch("unitary has wrong shape for this state");
  }
  std::vector<Complex> out(psi.amplitudes.size(), Complex(0.0, 0.0));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        const Complex amp = psi.amplitudes[flat_index(a, b, c, d)];
        if (amp == Complex(0.0, 0.0)) continue;
        const int src = party == 1 ? a : party == 2 ? b : c;
        for (int k = 0; k < d; ++k) {
          const Complex w = u(k, src);
          if (w == Complex(0.0, 0.0)) continue;
          const std::size_t idx = party == 1 ? flat_index(k, b, c, d)
                                 : party == 2 ? flat_index(a, k, c, d)
                                              : flat_index(a, b, k, d);
          out[idx] += w * amp;
        }
      }
    }
  }
  return PureState{d, std::move(out)};
}

DensityMatrix conjugate_local(const DensityMatrix& rho, const ComplexMatrix& u1,
                              const ComplexMatrix& u2, const ComplexMatrix& u3) {
  const ComplexMatrix u = kron(u1, kron(u2, u3));
  ComplexMatrix out = u * rho.matrix * dagger(u);
  return DensityMatrix{rho.d, std::move(out)};
}

}  // namespace tridet
