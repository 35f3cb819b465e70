#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tridet/complex_matrix.hpp"

namespace tridet {

/// Split of the three parties into one party f and the remaining pair gh.
enum class Bipartition { OneVs23, TwoVs13, ThreeVs12 };

inline constexpr Bipartition kAllBipartitions[] = {
    Bipartition::OneVs23, Bipartition::TwoVs13, Bipartition::ThreeVs12};

/// 1-based single party f of the split.
int single_party(Bipartition b);
/// 1-based pair (g, h), ascending.
std::pair<int, int> pair_parties(Bipartition b);
std::string to_string(Bipartition b);
/// Accepts "1|23", "2|13", "3|12" or just the single party "1".."3".
Bipartition parse_bipartition(std::string_view text);

/// Flat index of the product basis ket |abc> with party 1 most significant:
/// index = a*d^2 + b*d + c. Every unfolding and partial transpose uses this.
inline std::size_t flat_index(int a, int b, int c, int d) {
  return (static_cast<std::size_t>(a) * d + b) * d + c;
}

/// Pure state of three d-level parties; unit norm within 1e-12.
struct PureState {
  int d = 2;
  std::vector<Complex> amplitudes;  // length d^3
};

/// Validating factory; throws InvalidDimension / ShapeMismatch / InvalidSpectrum.
PureState make_pure_state(int d, std::vector<Complex> amplitudes);

/// Trace-one positive-semidefinite Hermitian matrix on (C^d)^{x3}.
struct DensityMatrix {
  int d = 2;
  ComplexMatrix matrix;  // d^3 x d^3
};

/// Validating factory: Hermitian within 1e-10, trace 1 within 1e-10,
/// min eigenvalue >= -1e-9.
DensityMatrix make_density(int d, ComplexMatrix matrix);

inline constexpr double kDensityHermitianTol = 1e-10;
inline constexpr double kDensityTraceTol = 1e-10;
inline constexpr double kDensityPositivityTol = -1e-9;

struct SchmidtSpectrum {
  Bipartition bipartition;
  std::vector<double> coefficients;  // descending, sum of squares 1 within 1e-10
};

enum class NoiseKind {
  GhzMix,  // x/d^3 * I + (1-x) * |GHZ><GHZ|   (x = white-noise weight)
  WMix,    // (1-x)/8 * I + x * |W><W|         (x = state weight; d = 2 only)
};

/// One-parameter mixture family. The two kinds use opposite conventions for
/// x on purpose; they are preserved as stated so thresholds stay directly
/// comparable.
struct NoiseFamily {
  NoiseKind kind = NoiseKind::GhzMix;
  int d = 2;
  double x = 0.0;
};

/// The two canonical two-term families behind the closed-form trace norms:
/// CaseI:  sum_k t_k |k, 0, k>   (middle party decoupled)
/// CaseII: sum_k t_k |k, k, k>   (GHZ-aligned)
enum class CanonicalCase { CaseI, CaseII };

PureState ghz(int d);
PureState w3();

DensityMatrix pure_density(const PureState& psi);
DensityMatrix noisy_state(const NoiseFamily& family);

SchmidtSpectrum schmidt_spectrum(const PureState& psi, Bipartition bipartition);

/// Canonical states above with Schmidt weights t (length <= d, nonnegative,
/// sum of squares 1 within 1e-10). The same state serves every bipartition;
/// the argument only tags the unfolding it is meant to feed.
PureState canonical_biseparable(CanonicalCase which, Bipartition bipartition,
                                const std::vector<double>& t, int d);

/// Seedable generator with a pinned algorithm (mt19937_64 + explicit
/// Box-Muller), so sampled states are reproducible across platforms.
/// State is caller-owned; use one generator per worker.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  /// Derived stream for worker `index` (splitting rule: seed + odd constant * (index+1)).
  Rng split(std::uint64_t index) const {
    return Rng(seed_ + 0x9e3779b97f4a7c15ULL * (index + 1));
  }

  double uniform();            // [0, 1)
  double gaussian();           // standard normal, Box-Muller
  Complex complex_gaussian();  // independent N(0,1) real and imaginary parts

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

PureState random_pure(Rng& rng, int d);
/// Product of a random single-party state on f and a random pair state on gh.
PureState random_biseparable(Rng& rng, int d, Bipartition bipartition);
/// Haar-like d x d unitary via orthonormalized complex-Gaussian columns.
ComplexMatrix random_unitary(Rng& rng, int d);

/// Apply u on one party (1-based) of a pure state.
PureState apply_local_unitary(const PureState& psi, int party, const ComplexMatrix& u);
/// Conjugate a density matrix by u1 (x) u2 (x) u3.
DensityMatrix conjugate_local(const DensityMatrix& rho, const ComplexMatrix& u1,
                              const ComplexMatrix& u2, const ComplexMatrix& u3);

}  // namespace tridet
