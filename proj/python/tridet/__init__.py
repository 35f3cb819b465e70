"""Tripartite entanglement detection via correlation-matrix trace norms.

Thin re-export of the compiled core. States live in numpy arrays: amplitude
vectors of length d**3 with party 1 most significant, density matrices of
shape (d**3, d**3).
"""

from tridet._core import (
    TridetError,
    basis_element,
    canonical_biseparable,
    corollary1,
    corollary2,
    f_delta,
    ghz,
    ghz_threshold,
    hermitian_eigenvalues,
    n_matrix,
    noisy_state,
    partial_transpose,
    ppt_min_eigenvalue,
    s_matrix,
    schmidt_spectrum,
    singular_values,
    sweep_threshold,
    t_scalar,
    theorem1_value,
    theorem2,
    trace_norm,
    w_state,
)

__all__ = [
    "TridetError",
    "basis_element",
    "canonical_biseparable",
    "corollary1",
    "corollary2",
    "f_delta",
    "ghz",
    "ghz_threshold",
    "hermitian_eigenvalues",
    "n_matrix",
    "noisy_state",
    "partial_transpose",
    "ppt_min_eigenvalue",
    "s_matrix",
    "schmidt_spectrum",
    "singular_values",
    "sweep_threshold",
    "t_scalar",
    "theorem1_value",
    "theorem2",
    "trace_norm",
    "w_state",
]
