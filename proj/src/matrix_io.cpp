#include "tridet/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>

namespace tridet {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + text.size() || text.empty()) {
    throw IoError("malformed number: '" + text + "'");
  }
  return v;
}

}  // namespace

std::string format_complex(Complex z) {
  const double re = z.real();
  const double im = z.imag();
  std::string out = format_double(re);
  out += std::signbit(im) ? '-' : '+';
  out += format_double(std::abs(im));
  out += 'j';
  return out;
}

Complex parse_complex(const std::string& token) {
  if (token.empty()) throw IoError("empty complex entry");
  if (token.back() != 'j') {
    return Complex(parse_double(token), 0.0);
  }
  const std::string body = token.substr(0, token.size() - 1);
  // Split at the last sign that does not follow an exponent marker.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    return Complex(0.0, parse_double(body));  // pure imaginary
  }
  const double re = parse_double(body.substr(0, split));
  const double im = parse_double(body.substr(split));
  return Complex(re, im);
}

void write_matrix(std::ostream& os, const ComplexMatrix& m) {
  os << "matrix " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << format_complex(m(i, j));
    }
    os << '\n';
  }
}

ComplexMatrix read_matrix(std::istream& is) {
  std::string tag;
  if (!(is >> tag) || tag != "matrix") throw IoError("expected 'matrix <rows> <cols>' header");
  std::size_t rows = 0, cols = 0;
  if (!(is >> rows >> cols)) throw IoError("bad matrix dimensions");
  ComplexMatrix m(rows, cols);
  std::string token;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!(is >> token)) throw IoError("matrix body ended early");
      m(i, j) = parse_complex(token);
    }
  }
  if (!m.is_finite()) throw IoError("matrix contains non-finite entries");
  return m;
}

void write_density(std::ostream& os, const DensityMatrix& rho) {
  os << "dims " << rho.d << ' ' << rho.d << ' ' << rho.d << '\n';
  write_matrix(os, rho.matrix);
}

DensityMatrix read_density(std::istream& is) {
  std::string tag;
  if (!(is >> tag) || tag != "dims") throw IoError("expected 'dims d d d' header");
  int d1 = 0, d2 = 0, d3 = 0;
  if (!(is >> d1 >> d2 >> d3)) throw IoError("bad dims line");
  if (d1 != d2 || d2 != d3) {
    throw IoError("subsystem dimensions must be equal");
  }
  ComplexMatrix m = read_matrix(is);
  return make_density(d1, std::move(m));
}

}  // namespace tridet
