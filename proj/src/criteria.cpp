#include "tridet/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "tridet/linalg.hpp"

namespace tridet {

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::Corollary1: return "cor1";
    case Criterion::Corollary2: return "cor2";
    case Criterion::Theorem2: return "thm2";
  }
  return "?";
}

double theorem1_value(CanonicalCase which, Bipartition bipartition,
                      const CoefficientTriple& coeffs, double t0, double t1) {
  if (t0 < 0.0 || t1 < 0.0 || std::abs(t0 * t0 + t1 * t1 - 1.0) > 1e-10) {
    throw InvalidSpectrum("weights must be nonnegative with t0^2 + t1^2 = 1");
  }
  const double tt = t0 * t1;
  if (which == CanonicalCase::CaseII) {
    // The printed sqrt((t0^2-t1^2)^2) is just the absolute value.
    return std::abs(coeffs.b) * std::abs(t0 * t0 - t1 * t1) + 2.0 * coeffs.mu() * tt;
  }
  if (bipartition == Bipartition::TwoVs13) {
    return std::abs(coeffs.b) * (1.0 + 4.0 * tt);
  }
  return std::sqrt(4.0 * (coeffs.a * coeffs.a + coeffs.c * coeffs.c) * tt * tt +
                   coeffs.b * coeffs.b);
}

Verdict corollary1_detect(const DensityMatrix& rho, const CoefficientTriple& coeffs) {
  if (rho.d != 2) throw UnsupportedDimension("corollary 1 applies to qubits");
  const double mu = coeffs.mu();
  if (coeffs.b == 0.0 || mu == 0.0) {
    throw PreconditionViolated("corollary 1 needs b != 0 and mu != 0");
  }
  const double bound = 3.0 * std::abs(coeffs.b);
  if (!(bound < mu)) {
    throw PreconditionViolated("corollary 1 needs 3|b| < mu");
  }
  const auto dec = decompose(rho);
  const double witness = trace_norm(s_matrix(dec, Bipartition::TwoVs13, coeffs).matrix);
  return make_verdict(Bipartition::TwoVs13, Criterion::Corollary1, witness, bound);
}

std::array<Verdict, 3> corollary2_detect(const DensityMatrix& rho,
                                         const CoefficientTriple& coeffs) {
  if (rho.d != 2) throw UnsupportedDimension("corollary 2 applies to qubits");
  if (coeffs.c != 0.0) throw PreconditionViolated("corollary 2 needs c = 0");
  if (coeffs.b == 0.0) throw PreconditionViolated("corollary 2 needs b != 0");
  if (!(std::abs(coeffs.a / coeffs.b) < kCorollary2Slope)) {
    throw PreconditionViolated("corollary 2 needs |a/b| < 1.6248");
  }
  const double bound = std::sqrt(coeffs.b * coeffs.b + 4.0 * coeffs.a * coeffs.a);
  const auto dec = decompose(rho);
  std::array<Verdict, 3> out{};
  int idx = 0;
  for (Bipartition b : kAllBipartitions) {
    const double witness = trace_norm(s_matrix(dec, b, coeffs).matrix);
    out[idx++] = make_verdict(b, Criterion::Corollary2, witness, bound);
  }
  return out;
}

double f_delta(double delta) {
  const double d2 = delta * delta;
  const double inner = std::sqrt(25.0 + 16.0 * d2);
  const double denom = std::sqrt(8.0) + std::sqrt(13.0 + 8.0 * d2 + inner) +
                       std::sqrt(13.0 + 8.0 * d2 - inner);
  return std::sqrt(18.0) * std::sqrt(1.0 + 4.0 * d2) / denom;
}

double ghz_threshold(const CoefficientTriple& coeffs) {
  const double mu = coeffs.mu();
  if (mu == 0.0) throw DegenerateCoefficients("mu = |a+c| + |a-c| must be nonzero");
  return std::clamp(1.0 - 3.0 * std::abs(coeffs.b) / mu, 0.0, 1.0);
}

namespace {

std::array<QuditVerdict, 3> theorem2_impl(const DensityMatrix& rho) {
  const double d = static_cast<double>(rho.d);
  const double cap_ii = d * d / 2.0;
  const double cap_i = std::sqrt(d * d * d * (d - 1.0)) / 2.0;
  const auto dec = decompose(rho);

  std::array<QuditVerdict, 3> out{};
  int idx = 0;
  for (Bipartition b : kAllBipartitions) {
    const double witness = trace_norm(n_matrix(dec, b).matrix);
    // The operative bound is the larger of the two case values, which is
    // always d^2/2; the 2|13 cut only ever realizes that one.
    const double case_i_bound = b == Bipartition::TwoVs13 ? cap_ii : cap_i;
    QuditVerdict qv;
    qv.verdict = make_verdict(b, Criterion::Theorem2, witness, cap_ii);
    qv.case_i_bound = case_i_bound;
    qv.case_ii_bound = cap_ii;
    out[idx++] = qv;
  }
  return out;
}

}  // namespace

std::array<QuditVerdict, 3> theorem2_check(const PureState& psi) {
  if (psi.d < 3) throw UnsupportedDimension("the qudit test requires d >= 3");
  return theorem2_impl(pure_density(psi));
}

std::array<QuditVerdict, 3> theorem2_check(const DensityMatrix& rho, bool assume_convexity) {
  if (rho.d < 3) throw UnsupportedDimension("the qudit test requires d >= 3");
  if (!assume_convexity) {
    throw PreconditionViolated(
        "mixed-state input requires opting into the convexity extension");
  }
  return theorem2_impl(rho);
}

namespace {

double criterion_gap(const NoiseFamily& family, Criterion criterion,
                     const CoefficientTriple& coeffs, double x) {
  NoiseFamily probe = family;
  probe.x = x;
  const DensityMatrix rho = noisy_state(probe);
  switch (criterion) {
    case Criterion::Corollary1: {
      const Verdict v = corollary1_detect(rho, coeffs);
      return v.witness - v.bound;
    }
    case Criterion::Corollary2: {
      double gap = -1.0;
      for (const Verdict& v : corollary2_detect(rho, coeffs)) {
        gap = std::max(gap, v.witness - v.bound);
      }
      return gap;
    }
    case Criterion::Theorem2:
      break;
  }
  throw PreconditionViolated("sweeps support the two qubit criteria");
}

}  // namespace

double sweep_threshold(const NoiseFamily& family, Criterion criterion,
                       const CoefficientTriple& coeffs) {
  double lo = 0.0, hi = 1.0;
  double glo = criterion_gap(family, criterion, coeffs, lo);
  const double ghi = criterion_gap(family, criterion, coeffs, hi);
  if ((glo > 0.0) == (ghi > 0.0)) {
    throw NoCrossing(glo > 0.0 ? "criterion fires on the whole interval"
                               : "criterion never fires on [0, 1]");
  }
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double gmid = criterion_gap(family, criterion, coeffs, mid);
    if ((gmid > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = gmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace tridet
