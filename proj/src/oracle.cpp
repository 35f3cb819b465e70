#include "tridet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "tridet/correlation.hpp"
#include "tridet/criteria.hpp"
#include "tridet/linalg.hpp"

namespace tridet {

ComplexMatrix partial_transpose(const DensityMatrix& rho, int party) {
  if (party < 1 || party > 3) throw ParameterOutOfRange("party must be 1, 2 or 3");
  const int d = rho.d;
  const std::size_t n = static_cast<std::size_t>(d) * d * d;
  ComplexMatrix out(n, n);
  for (int a1 = 0; a1 < d; ++a1)
    for (int a2 = 0; a2 < d; ++a2)
      for (int a3 = 0; a3 < d; ++a3)
        for (int b1 = 0; b1 < d; ++b1)
          for (int b2 = 0; b2 < d; ++b2)
            for (int b3 = 0; b3 < d; ++b3) {
              int r1 = a1, r2 = a2, r3 = a3, c1 = b1, c2 = b2, c3 = b3;
              if (party == 1) std::swap(r1, c1);
              if (party == 2) std::swap(r2, c2);
              if (party == 3) std::swap(r3, c3);
              out(flat_index(r1, r2, r3, d), flat_index(c1, c2, c3, d)) =
                  rho.matrix(flat_index(a1, a2, a3, d), flat_index(b1, b2, b3, d));
            }
  return out;
}

PptReport ppt_report(const DensityMatrix& rho, Bipartition bipartition) {
  const ComplexMatrix pt = partial_transpose(rho, single_party(bipartition));
  const auto eig = hermitian_eigenvalues(pt);
  const double min_eig = eig.back();
  return PptReport{bipartition, min_eig, min_eig < kNptTol};
}

double ppt_transition(NoiseKind kind, int d, Bipartition bipartition, double tol) {
  const auto min_eig = [&](double x) {
    const DensityMatrix rho = noisy_state(NoiseFamily{kind, d, x});
    return ppt_report(rho, bipartition).min_eigenvalue;
  };
  double lo = 0.0, hi = 1.0;
  double elo = min_eig(lo);
  const double ehi = min_eig(hi);
  if ((elo < 0.0) == (ehi < 0.0)) {
    throw NoCrossing("partial-transpose spectrum does not change sign on [0, 1]");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double emid = min_eig(mid);
    if ((emid < 0.0) == (elo < 0.0)) {
      lo = mid;
      elo = emid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> brute_force_singular_values(const ComplexMatrix& m) {
  const ComplexMatrix gram = dagger(m) * m;
  auto eig = hermitian_eigenvalues(gram);
  std::vector<double> sv(eig.size());
  for (std::size_t i = 0; i < eig.size(); ++i) sv[i] = std::sqrt(std::max(eig[i], 0.0));
  return sv;
}

namespace {

std::vector<double> random_weights(Rng& rng, int d) {
  std::vector<double> t(d);
  double sum2 = 0.0;
  for (auto& v : t) {
    v = std::abs(rng.gaussian());
    sum2 += v * v;
  }
  const double norm = std::sqrt(sum2);
  for (auto& v : t) v /= norm;
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

double closed_form_bound(int d, CanonicalCase which, Bipartition bipartition,
                         const CoefficientTriple& coeffs, std::string& note) {
  if (d == 2) {
    // Maxima of the closed forms over the weight simplex (t0*t1 <= 1/2).
    if (which == CanonicalCase::CaseII) {
      const double mu = coeffs.mu();
      note = "sqrt(b^2 + mu^2)";
      return std::sqrt(coeffs.b * coeffs.b + mu * mu);
    }
    if (bipartition == Bipartition::TwoVs13) {
      note = "3|b|";
      return 3.0 * std::abs(coeffs.b);
    }
    note = "sqrt(a^2 + b^2 + c^2)";
    return std::sqrt(coeffs.a * coeffs.a + coeffs.b * coeffs.b + coeffs.c * coeffs.c);
  }
  const double dd = static_cast<double>(d);
  if (which == CanonicalCase::CaseI && bipartition != Bipartition::TwoVs13) {
    note = "sqrt(d^3(d-1))/2";
    return std::sqrt(dd * dd * dd * (dd - 1.0)) / 2.0;
  }
  note = "d^2/2";
  return dd * dd / 2.0;
}

}  // namespace

BoundValidation validate_bounds(std::uint64_t seed, int d, CanonicalCase which,
                                Bipartition bipartition, std::size_t samples,
                                const CoefficientTriple& coeffs, bool rotate_single_party,
                                const std::vector<double>* fixed_weights) {
  if (samples < 1) throw ParameterOutOfRange("need at least one sample");
  Rng rng(seed);
  const auto [g, h] = pair_parties(bipartition);
  const int f = single_party(bipartition);

  BoundValidation report;
  report.which = which;
  report.bipartition = bipartition;
  report.d = d;
  report.samples = samples;
  report.bound = closed_form_bound(d, which, bipartition, coeffs, report.note);

  for (std::size_t i = 0; i < samples; ++i) {
    const std::vector<double> t = fixed_weights ? *fixed_weights : random_weights(rng, d);
    PureState psi = canonical_biseparable(which, bipartition, t, d);
    psi = apply_local_unitary(psi, g, random_unitary(rng, d));
    psi = apply_local_unitary(psi, h, random_unitary(rng, d));
    if (rotate_single_party) {
      psi = apply_local_unitary(psi, f, random_unitary(rng, d));
    }
    const auto dec = decompose(pure_density(psi));
    const double witness = d == 2 ? trace_norm(s_matrix(dec, bipartition, coeffs).matrix)
                                  : trace_norm(n_matrix(dec, bipartition).matrix);
    report.max_witness = std::max(report.max_witness, witness);
  }
  report.excess = std::max(0.0, report.max_witness - report.bound);
  report.violation = report.max_witness > report.bound + kBoundValidationTol;
  return report;
}

}  // namespace tridet
