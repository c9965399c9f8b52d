"""Exact closed forms and oracles for eccentricity matrices of wheel graphs.

Rational values are returned as fractions.Fraction, matrices as lists of rows.
"""

from ._eccwheel import (
    DimensionError,
    DomainError,
    NonConvergenceError,
    NotSymmetricError,
    SingularMatrixError,
    bareiss_det,
    check_names,
    det_B,
    det_E,
    det_E_minus_edge,
    det_T,
    distance_matrix,
    ecc_matrix,
    ecc_matrix_definitional,
    ecc_matrix_minus_edge,
    edm_witness,
    edm_witness_value,
    inertia_E,
    inertia_E_minus_edge,
    inertia_exact,
    inverse,
    laplacian_hat,
    laplacian_tilde,
    null_vectors,
    penrose_check,
    pinv,
    power_iteration_rho,
    rank_E,
    rank_exact,
    spectral_radius,
    verify,
    weight_w,
)

__all__ = [name for name in dir() if not name.startswith("_")]
