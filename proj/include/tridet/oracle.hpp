#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tridet/coefficients.hpp"
#include "tridet/states.hpp"

namespace tridet {

/// Negative-partial-transpose evidence. One-sided: is_npt certifies
/// entanglement across the cut, a nonnegative spectrum certifies nothing.
struct PptReport {
  Bipartition bipartition;
  double min_eigenvalue = 0.0;
  bool is_npt = false;  // min_eigenvalue < -1e-9
};

/// NPT threshold; matches the density-matrix positivity tolerance, so
/// borderline states within rounding report is_npt = false with the raw
/// eigenvalue attached.
inline constexpr double kNptTol = -1e-9;

/// Transpose the indices of one party (1-based) under the standard
/// flattening. Preserves trace and Hermiticity.
ComplexMatrix partial_transpose(const DensityMatrix& rho, int party);

PptReport ppt_report(const DensityMatrix& rho, Bipartition bipartition);

/// Mixing parameter in [0, 1] where the minimum partial-transpose eigenvalue
/// of the noise family crosses zero across `bipartition`, bisected to `tol`.
/// Throws NoCrossing if the sign never changes.
double ppt_transition(NoiseKind kind, int d, Bipartition bipartition, double tol = 1e-6);

/// sqrt of the Hermitian spectrum of M^dagger M; the slow road to singular
/// values, kept independent of the one-sided Jacobi path it cross-checks.
std::vector<double> brute_force_singular_values(const ComplexMatrix& m);

/// Monte-Carlo search for witness values beyond the closed-form biseparable
/// maxima. Samples the canonical two-term family with random weights, rotated
/// by independent unitaries on the two pair parties of the examined cut (the
/// trace norm is provably invariant under exactly those rotations, so the
/// closed-form caps apply sample by sample). With rotate_single_party the
/// remaining party is rotated as well; the caps are not invariant in that
/// direction and observed excesses are reported, never hidden.
struct BoundValidation {
  CanonicalCase which;
  Bipartition bipartition;
  int d = 2;
  std::size_t samples = 0;
  double max_witness = 0.0;
  double bound = 0.0;
  bool violation = false;  // max_witness > bound + 1e-8
  double excess = 0.0;     // max(0, max_witness - bound)
  std::string note;
};

inline constexpr double kBoundValidationTol = 1e-8;

BoundValidation validate_bounds(std::uint64_t seed, int d, CanonicalCase which,
                                Bipartition bipartition, std::size_t samples,
                                const CoefficientTriple& coeffs,
                                bool rotate_single_party = false,
                                const std::vector<double>* fixed_weights = nullptr);

}  // namespace tridet
