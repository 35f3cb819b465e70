#pragma once

#include <iosfwd>
#include <string>

#include "tridet/complex_matrix.hpp"
#include "tridet/states.hpp"

namespace tridet {

/// Plain-text matrix block:
///   matrix <rows> <cols>
///   <rows x cols entries RE{+|-}IMj, whitespace separated>
/// Entries are written with 17 significant digits so a write/read cycle is
/// value-exact for doubles.
void write_matrix(std::ostream& os, const ComplexMatrix& m);
ComplexMatrix read_matrix(std::istream& is);

std::string format_complex(Complex z);
Complex parse_complex(const std::string& token);

/// Density-matrix file: a `dims d d d` line followed by a matrix block.
void write_density(std::ostream& os, const DensityMatrix& rho);
DensityMatrix read_density(std::istream& is);

}  // namespace tridet
