"""Point-evaluable bicomplex fields backed by callables."""

from __future__ import annotations

from typing import Callable, Protocol, Union, runtime_checkable

import numpy as np

from ..algebra.bicomplex import Bicomplex, IdempotentArray, IdempotentPair, from_idempotent

ComplexCallable = Callable[[np.ndarray], np.ndarray]


@runtime_checkable
class BicomplexField(Protocol):
    """Anything that evaluates to idempotent component arrays at points of the disk."""

    def evaluate(self, z) -> IdempotentArray:  # pragma: no cover - protocol
        ...


class PointField:
    """
    Bicomplex field defined by a pointwise rule.

    Args:
        rule: Callable mapping an array of points to an ``IdempotentArray``.
        label: Optional description used in logs and reports.
    """

    def __init__(self, rule: Callable[[np.ndarray], IdempotentArray], label: str = "") -> None:
        self._rule = rule
        self.label = label

    @classmethod
    def from_components(cls, plus: ComplexCallable, minus: ComplexCallable, label: str = "") -> "PointField":
        def rule(z: np.ndarray) -> IdempotentArray:
            return IdempotentArray(np.asarray(plus(z), dtype=complex), np.asarray(minus(z), dtype=complex))

        return cls(rule, label)

    @classmethod
    def from_complex(cls, function: ComplexCallable, label: str = "") -> "PointField":
        """Complex-embedded field: both components equal ``function``."""

        def rule(z: np.ndarray) -> IdempotentArray:
            values = np.asarray(function(z), dtype=complex)
            return IdempotentArray(values, values.copy())

        return cls(rule, label)

    def evaluate(self, z) -> IdempotentArray:
        z = np.asarray(z, dtype=complex)
        values = self._rule(z)
        return IdempotentArray(
            np.broadcast_to(np.asarray(values.plus, dtype=complex), z.shape),
            np.broadcast_to(np.asarray(values.minus, dtype=complex), z.shape),
        )

    def eval(self, z: complex) -> Bicomplex:
        values = self.evaluate(np.asarray(complex(z)))
        return from_idempotent(IdempotentPair(complex(values.plus), complex(values.minus)))

    def component(self, sign: str) -> ComplexCallable:
        """Complex callable for the ``"plus"`` or ``"minus"`` component."""
        if sign not in ("plus", "minus"):
            raise ValueError(f"Unknown idempotent component {sign!r}")
        return lambda z: getattr(self.evaluate(z), sign)

    def __repr__(self) -> str:
        return f"PointField({self.label or 'rule'})"


def as_complex_callable(field: Union[ComplexCallable, object]) -> ComplexCallable:
    """Normalize complex fields (polynomials, callables) to a vectorized callable."""
    if hasattr(field, "evaluate"):
        evaluate = field.evaluate  # type: ignore[attr-defined]
        return lambda z: np.asarray(evaluate(z), dtype=complex)
    if callable(field):
        return lambda z: np.broadcast_to(np.asarray(field(np.asarray(z, dtype=complex)), dtype=complex), np.shape(z))
    raise TypeError(f"{type(field).__name__} is not a point-evaluable complex field")


__all__ = ["PointField", "BicomplexField", "as_complex_callable", "ComplexCallable"]
