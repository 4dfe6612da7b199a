"""
Error types shared across the toolkit.

Text records live in ``src.tools.serialization``; import that module by path,
since it depends on the field packages which in turn depend on these errors.
"""

from .errors import (
    AnnihilationError,
    BoundaryDataError,
    DomainError,
    EllipticityError,
    QuadratureConvergenceError,
    SerializationError,
    SolvabilityError,
    StencilError,
)

__all__ = [
    "AnnihilationError",
    "BoundaryDataError",
    "DomainError",
    "EllipticityError",
    "QuadratureConvergenceError",
    "SerializationError",
    "SolvabilityError",
    "StencilError",
]
