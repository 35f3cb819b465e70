#pragma once

#include <stdexcept>

namespace tridet {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidDimension : Error { using Error::Error; };
struct UnsupportedDimension : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };
struct ParameterOutOfRange : Error { using Error::Error; };
struct InvalidSpectrum : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct DegenerateCoefficients : Error { using Error::Error; };
struct NoCrossing : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct ToleranceExceeded : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace tridet
