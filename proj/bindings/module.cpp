#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>
#include <vector>

#include "tridet/basis.hpp"
#include "tridet/correlation.hpp"
#include "tridet/criteria.hpp"
#include "tridet/linalg.hpp"
#include "tridet/oracle.hpp"
#include "tridet/states.hpp"

namespace py = pybind11;
using namespace tridet;

namespace {

ComplexMatrix matrix_from_array(const py::array_t<std::complex<double>>& arr) {
  const auto buf = arr.request();
  if (buf.ndim != 2) throw ShapeMismatch("expected a 2-d array");
  ComplexMatrix m(static_cast<std::size_t>(buf.shape[0]), static_cast<std::size_t>(buf.shape[1]));
  const auto view = arr.unchecked<2>();
  for (py::ssize_t i = 0; i < buf.shape[0]; ++i)
    for (py::ssize_t j = 0; j < buf.shape[1]; ++j) m(i, j) = view(i, j);
  return m;
}

py::array_t<std::complex<double>> array_from_matrix(const ComplexMatrix& m) {
  py::array_t<std::complex<double>> arr({m.rows(), m.cols()});
  auto view = arr.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) view(i, j) = m(i, j);
  return arr;
}

DensityMatrix density_from_array(const py::array_t<std::complex<double>>& arr, int d) {
  return make_density(d, matrix_from_array(arr));
}

int infer_dim(py::ssize_t n) {
  for (int d = 2; d <= 8; ++d) {
    if (static_cast<py::ssize_t>(d) * d * d == n) return d;
  }
  throw ShapeMismatch("length is not d^3 for any d in 2..8");
}

PureState pure_from_array(const py::array_t<std::complex<double>>& arr) {
  const auto buf = arr.request();
  if (buf.ndim != 1) throw ShapeMismatch("expected a 1-d amplitude array");
  const int d = infer_dim(buf.shape[0]);
  std::vector<Complex> amp(static_cast<std::size_t>(buf.shape[0]));
  const auto view = arr.unchecked<1>();
  for (py::ssize_t i = 0; i < buf.shape[0]; ++i) amp[static_cast<std::size_t>(i)] = view(i);
  return make_pure_state(d, std::move(amp));
}

NoiseKind parse_kind(const std::string& kind) {
  if (kind == "ghz") return NoiseKind::GhzMix;
  if (kind == "w") return NoiseKind::WMix;
  throw ParameterOutOfRange("noise kind must be 'ghz' or 'w'");
}

py::dict verdict_dict(const Verdict& v) {
  py::dict out;
  out["bipartition"] = to_string(v.bipartition);
  out["criterion"] = to_string(v.criterion);
  out["witness"] = v.witness;
  out["bound"] = v.bound;
  out["entangled"] = v.entangled;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tripartite entanglement detection via correlation-matrix trace norms";

  py::register_exception<Error>(m, "TridetError");

  m.def("trace_norm",
        [](const py::array_t<std::complex<double>>& a) { return trace_norm(matrix_from_array(a)); },
        py::arg("matrix"), "Sum of singular values.");
  m.def("singular_values",
        [](const py::array_t<std::complex<double>>& a) {
          return singular_values(matrix_from_array(a));
        },
        py::arg("matrix"), "Singular values, descending.");
  m.def("hermitian_eigenvalues",
        [](const py::array_t<std::complex<double>>& a) {
          return hermitian_eigenvalues(matrix_from_array(a));
        },
        py::arg("matrix"), "Real spectrum of a Hermitian matrix, descending.");

  m.def("basis_element",
        [](int d, int i, int j) { return array_from_matrix(principal_basis(d).element(i, j)); },
        py::arg("d"), py::arg("i"), py::arg("j"),
        "Shift-and-phase basis matrix A(i, j) for dimension d.");

  m.def("ghz", [](int d) { return ghz(d).amplitudes; }, py::arg("d") = 2,
        "Amplitudes of the d-level GHZ state.");
  m.def("w_state", [] { return w3().amplitudes; }, "Amplitudes of the three-qubit W state.");
  m.def("noisy_state",
        [](const std::string& kind, double x, int d) {
          return array_from_matrix(noisy_state(NoiseFamily{parse_kind(kind), d, x}).matrix);
        },
        py::arg("kind"), py::arg("x"), py::arg("d") = 2,
        "Density matrix of the ghz (x = noise weight) or w (x = state weight) mixture.");

  m.def("schmidt_spectrum",
        [](const py::array_t<std::complex<double>>& psi, const std::string& bipartition) {
          return schmidt_spectrum(pure_from_array(psi), parse_bipartition(bipartition))
              .coefficients;
        },
        py::arg("amplitudes"), py::arg("bipartition"));

  m.def("s_matrix",
        [](const py::array_t<std::complex<double>>& rho, int d, const std::string& bipartition,
           double a, double b, double c) {
          const auto dec = decompose(density_from_array(rho, d));
          return array_from_matrix(
              s_matrix(dec, parse_bipartition(bipartition), CoefficientTriple{a, b, c}).matrix);
        },
        py::arg("rho"), py::arg("d"), py::arg("bipartition"), py::arg("a"), py::arg("b"),
        py::arg("c") = 0.0, "Combined qubit unfolding a*T1 + b*T2 + c*T3.");
  m.def("n_matrix",
        [](const py::array_t<std::complex<double>>& rho, int d, const std::string& bipartition) {
          const auto dec = decompose(density_from_array(rho, d));
          return array_from_matrix(n_matrix(dec, parse_bipartition(bipartition)).matrix);
        },
        py::arg("rho"), py::arg("d"), py::arg("bipartition"), "Qudit unfolding N.");
  m.def("t_scalar",
        [](const py::array_t<std::complex<double>>& rho, int d) {
          return t_scalar(decompose(density_from_array(rho, d)));
        },
        py::arg("rho"), py::arg("d"), "Average of the three N trace norms.");

  m.def("corollary1",
        [](const py::array_t<std::complex<double>>& rho, double a, double b, double c) {
          return verdict_dict(corollary1_detect(density_from_array(rho, 2),
                                                CoefficientTriple{a, b, c}));
        },
        py::arg("rho"), py::arg("a"), py::arg("b"), py::arg("c"),
        "Witness ||S(2|13)|| against 3|b| (needs 3|b| < mu).");
  m.def("corollary2",
        [](const py::array_t<std::complex<double>>& rho, double a, double b) {
          py::list out;
          for (const Verdict& v :
               corollary2_detect(density_from_array(rho, 2), CoefficientTriple{a, b, 0.0})) {
            out.append(verdict_dict(v));
          }
          return out;
        },
        py::arg("rho"), py::arg("a"), py::arg("b"),
        "Witness ||a T1 + b T2|| against sqrt(b^2 + 4a^2) on all three cuts.");
  m.def("theorem2",
        [](const py::array_t<std::complex<double>>& psi) {
          py::list out;
          for (const QuditVerdict& qv : theorem2_check(pure_from_array(psi))) {
            py::dict v = verdict_dict(qv.verdict);
            v["case_i_bound"] = qv.case_i_bound;
            v["case_ii_bound"] = qv.case_ii_bound;
            out.append(v);
          }
          return out;
        },
        py::arg("amplitudes"), "Pure-state qudit test (d >= 3): ||N|| against d^2/2 per cut.");

  m.def("f_delta", &f_delta, py::arg("delta"),
        "Detection threshold for the w family at slope delta = a/b.");
  m.def("ghz_threshold",
        [](double a, double b, double c) { return ghz_threshold(CoefficientTriple{a, b, c}); },
        py::arg("a"), py::arg("b"), py::arg("c"),
        "Analytic threshold 1 - 3|b|/mu, clamped to [0, 1].");
  m.def("theorem1_value",
        [](const std::string& which, const std::string& bipartition, double a, double b, double c,
           double t0, double t1) {
          const CanonicalCase cc = which == "i" ? CanonicalCase::CaseI : CanonicalCase::CaseII;
          return theorem1_value(cc, parse_bipartition(bipartition), CoefficientTriple{a, b, c},
                                t0, t1);
        },
        py::arg("case"), py::arg("bipartition"), py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("t0"), py::arg("t1"),
        "Closed-form ||S|| for the canonical two-term states.");
  m.def("sweep_threshold",
        [](const std::string& family, double a, double b, double c) {
          const bool is_ghz = family == "ghz";
          const NoiseFamily nf{parse_kind(family), 2, 0.0};
          return sweep_threshold(nf, is_ghz ? Criterion::Corollary1 : Criterion::Corollary2,
                                 CoefficientTriple{a, b, c});
        },
        py::arg("family"), py::arg("a"), py::arg("b"), py::arg("c") = 0.0,
        "Bisected detection threshold for the ghz/w noise families.");

  m.def("partial_transpose",
        [](const py::array_t<std::complex<double>>& rho, int d, int party) {
          return array_from_matrix(partial_transpose(density_from_array(rho, d), party));
        },
        py::arg("rho"), py::arg("d"), py::arg("party"));
  m.def("ppt_min_eigenvalue",
        [](const py::array_t<std::complex<double>>& rho, int d, const std::string& bipartition) {
          return ppt_report(density_from_array(rho, d), parse_bipartition(bipartition))
              .min_eigenvalue;
        },
        py::arg("rho"), py::arg("d"), py::arg("bipartition"),
        "Minimum eigenvalue after transposing the single party of the cut.");

  m.def("canonical_biseparable",
        [](const std::string& which, const std::string& bipartition, const std::vector<double>& t,
           int d) {
          const CanonicalCase cc = which == "i" ? CanonicalCase::CaseI : CanonicalCase::CaseII;
          return canonical_biseparable(cc, parse_bipartition(bipartition), t, d).amplitudes;
        },
        py::arg("case"), py::arg("bipartition"), py::arg("t"), py::arg("d"),
        "Canonical two-term family: sum_k t_k |k,0,k> (case i) or |k,k,k> (case ii).");
}
