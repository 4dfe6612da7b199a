"""Bicomplex algebra: values, idempotent decomposition, conjugations, norms."""

from .bicomplex import (
    I,
    J,
    ONE,
    P_MINUS,
    P_PLUS,
    ZERO,
    Bicomplex,
    IdempotentArray,
    IdempotentPair,
    as_bicomplex,
    bc_conj,
    bc_norm,
    bicomplexify,
    complex_conj,
    idempotent_conj,
    from_idempotent,
    is_complex_embedded,
    mul,
    mul_cartesian,
    to_idempotent,
)

__all__ = [
    "Bicomplex",
    "IdempotentPair",
    "IdempotentArray",
    "as_bicomplex",
    "to_idempotent",
    "from_idempotent",
    "mul",
    "mul_cartesian",
    "bc_conj",
    "complex_conj",
    "idempotent_conj",
    "bc_norm",
    "bicomplexify",
    "is_complex_embedded",
    "ONE",
    "ZERO",
    "J",
    "I",
    "P_PLUS",
    "P_MINUS",
]
