#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "tridet/coefficients.hpp"
#include "tridet/correlation.hpp"
#include "tridet/states.hpp"

namespace tridet {

enum class Criterion { Corollary1, Corollary2, Theorem2 };

std::string to_string(Criterion c);

/// A verdict never claims separability: either the witness exceeds the bound
/// (entangled across the bipartition) or the test is inconclusive.
struct Verdict {
  Bipartition bipartition;
  Criterion criterion;
  double witness = 0.0;
  double bound = 0.0;
  bool entangled = false;

  std::string conclusion() const { return entangled ? "entangled" : "inconclusive"; }
};

/// Margin on witness > bound; avoids false positives at exact-equality
/// boundary cases (the canonical qudit family meets its bound exactly at
/// balanced weights).
inline constexpr double kDetectionMargin = 1e-12;

inline Verdict make_verdict(Bipartition b, Criterion c, double witness, double bound) {
  return Verdict{b, c, witness, bound, witness > bound + kDetectionMargin};
}

/// Closed-form trace norm of the combined unfolding S for the canonical
/// two-term states (d = 2):
///   CaseI : 1|23, 3|12 -> sqrt(4(a^2+c^2)t0^2t1^2 + b^2);  2|13 -> |b|(1+4t0t1)
///   CaseII: every cut  -> |b||t0^2-t1^2| + 2 mu t0 t1
/// Requires t0, t1 >= 0 with t0^2 + t1^2 = 1 within 1e-10.
double theorem1_value(CanonicalCase which, Bipartition bipartition,
                      const CoefficientTriple& coeffs, double t0, double t1);

/// Mixed-state test on the 2|13 unfolding: witness ||S(2|13)||_tr against
/// bound 3|b|. Preconditions: b != 0, mu != 0 and 3|b| < mu.
Verdict corollary1_detect(const DensityMatrix& rho, const CoefficientTriple& coeffs);

/// Mixed-state test with c = 0 on all three cuts: witness ||a T1 + b T2||_tr
/// against bound sqrt(b^2 + 4a^2). Preconditions: c = 0, b != 0 and
/// |a/b| < 1.6248. Any single entangled verdict suffices.
std::array<Verdict, 3> corollary2_detect(const DensityMatrix& rho,
                                         const CoefficientTriple& coeffs);

/// Largest admissible |a/b| for corollary2_detect; the detection threshold
/// f_delta crosses 1 here.
inline constexpr double kCorollary2Slope = 1.6248;

/// Detection threshold for the W-noise family as a function of delta = a/b:
/// the family is detected for x > f_delta(delta).
double f_delta(double delta);

/// Analytic detection threshold for the GHZ-noise family:
/// entangled verdicts for x < 1 - 3|b|/mu (clamped to [0, 1]).
/// Throws DegenerateCoefficients if mu = 0.
double ghz_threshold(const CoefficientTriple& coeffs);

/// Pure-state qudit test (d >= 3): witness ||N||_tr per cut against the
/// biseparable maximum d^2/2. The tighter case-specific cap
/// sqrt(d^3(d-1))/2 for the 1|23 and 3|12 cuts is reported alongside.
struct QuditVerdict {
  Verdict verdict;
  double case_i_bound = 0.0;   // sqrt(d^3(d-1))/2 where applicable, else d^2/2
  double case_ii_bound = 0.0;  // d^2/2
  /// Which stated cap is the operative (larger) one.
  const char* binding_case() const { return case_i_bound >= case_ii_bound ? "i" : "ii"; }
};

std::array<QuditVerdict, 3> theorem2_check(const PureState& psi);

/// Mixed-state extension of the qudit test. The bound is proved for pure
/// states; extending it to mixtures uses convexity of trace norms of affine
/// maps, which the caller must opt into explicitly.
std::array<QuditVerdict, 3> theorem2_check(const DensityMatrix& rho, bool assume_convexity);

/// Bisection (60 iterations on [0, 1], reported to 1e-6) for the mixing
/// parameter where the criterion's witness crosses its bound. Requires the
/// witness to be monotone in x, which holds for these families (witnesses
/// scale linearly with the pure-state weight). Throws NoCrossing when the
/// criterion never fires on [0, 1].
double sweep_threshold(const NoiseFamily& family, Criterion criterion,
                       const CoefficientTriple& coeffs);

}  // namespace tridet
