#pragma once

#include <cmath>

namespace tridet {

/// Free real weights (a, b, c) of the combined unfolding
/// S = a*T1 + b*T2 + c*T3 for one bipartition.
struct CoefficientTriple {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  /// mu = |a+c| + |a-c|, the derived weight entering the analytic bounds.
  double mu() const { return std::abs(a + c) + std::abs(a - c); }
};

}  // namespace tridet
