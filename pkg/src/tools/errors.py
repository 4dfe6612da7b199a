"""Exception types raised across the bicomplex disk toolkit.

Argument problems subclass ``ValueError`` and numerical failures subclass
``RuntimeError`` so callers can keep catching the builtin families.
"""


class EllipticityError(ValueError):
    """A coefficient violates the ellipticity bound (norm or modulus >= 1)."""


class DomainError(ValueError):
    """An evaluation point or radius lies outside the open unit disk."""


class StencilError(DomainError):
    """A finite-difference stencil reaches outside the closed unit disk."""


class BoundaryDataError(ValueError):
    """Boundary data is malformed or not of the required kind."""


class SerializationError(ValueError):
    """A text record or literal could not be parsed."""


class AnnihilationError(ValueError):
    """A field is not annihilated by the requested Beltrami iterate."""


class QuadratureConvergenceError(RuntimeError):
    """Principal-value refinement disagrees beyond the requested tolerance."""


class SolvabilityError(RuntimeError):
    """Dirichlet data failed the compatibility check."""


__all__ = [
    "EllipticityError",
    "DomainError",
    "StencilError",
    "BoundaryDataError",
    "SerializationError",
    "AnnihilationError",
    "QuadratureConvergenceError",
    "SolvabilityError",
]
