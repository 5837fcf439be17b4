"""Exact scalars, univariate polynomials and dense linear algebra."""

from .fields import QQ, Cyc, FieldError, FieldSpec, Fp, UnsupportedOperation, field_of
from .linalg import (
    Subspace,
    identity,
    mat_inverse,
    mat_kernel,
    mat_mul,
    mat_rref,
    mat_vec,
    rank,
    solve_linear,
    transpose,
)
from .unipoly import UniPoly, cyclotomic_polynomial, euler_phi, roots_in_field

__all__ = [
    "QQ",
    "Cyc",
    "FieldError",
    "FieldSpec",
    "Fp",
    "Subspace",
    "UniPoly",
    "UnsupportedOperation",
    "cyclotomic_polynomial",
    "euler_phi",
    "field_of",
    "identity",
    "mat_inverse",
    "mat_kernel",
    "mat_mul",
    "mat_rref",
    "mat_vec",
    "rank",
    "roots_in_field",
    "solve_linear",
    "transpose",
]
