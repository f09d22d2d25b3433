"""Spectra of multivariate Vandermonde matrices on the torus and separation bounds."""

from ._core import (
    ComputationError,
    Error,
    FeasibilityError,
    InvalidInput,
    PreconditionError,
    ResourceError,
    bounds,
    gen_equispaced,
    gen_quasi_grid,
    gen_random_separated,
    h_for_p_rule,
    psi_at_zero,
    psi_eval,
    psi_hat,
    ratio_closed_form,
    separation,
    sharpness_upper,
    spectrum,
    table2,
    wrap_distance,
)

__all__ = [
    "ComputationError",
    "Error",
    "FeasibilityError",
    "InvalidInput",
    "PreconditionError",
    "ResourceError",
    "bounds",
    "gen_equispaced",
    "gen_quasi_grid",
    "gen_random_separated",
    "h_for_p_rule",
    "psi_at_zero",
    "psi_eval",
    "psi_hat",
    "ratio_closed_form",
    "separation",
    "sharpness_upper",
    "spectrum",
    "table2",
    "wrap_distance",
]
