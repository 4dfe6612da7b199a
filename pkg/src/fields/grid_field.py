"""Polar sampling grids and sampled bicomplex fields."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..algebra.bicomplex import IdempotentArray
from ..tools.errors import DomainError
from .point_field import BicomplexField


@dataclass(frozen=True)
class PolarGrid:
    """Cell-centred radii in (0, 1) times uniform angles on [0, 2*pi)."""

    n_r: int = 64
    n_theta: int = 256

    def __post_init__(self) -> None:
        if self.n_r < 1 or self.n_theta < 1:
            raise ValueError("Grid sizes must be positive")

    @property
    def radii(self) -> np.ndarray:
        return (np.arange(self.n_r) + 0.5) / self.n_r

    @property
    def angles(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.n_theta) / self.n_theta

    def points(self) -> np.ndarray:
        return self.radii[:, None] * np.exp(1j * self.angles)[None, :]


@dataclass(frozen=True)
class GridField:
    """Bicomplex values sampled on a polar grid (rows are radii)."""

    radii: np.ndarray
    angles: np.ndarray
    values: IdempotentArray = field(repr=False)

    def __post_init__(self) -> None:
        radii = np.asarray(self.radii, dtype=float)
        if radii.ndim != 1 or np.any(radii <= 0) or np.any(radii >= 1):
            raise DomainError("Grid radii must lie strictly inside (0, 1)")
        if np.any(np.diff(radii) <= 0):
            raise ValueError("Grid radii must be strictly increasing")
        shape = (radii.size, np.asarray(self.angles).size)
        if self.values.plus.shape != shape or self.values.minus.shape != shape:
            raise ValueError(f"Sample array shape must be {shape}")

    @property
    def shape(self):
        return self.values.plus.shape

    def points(self) -> np.ndarray:
        return np.asarray(self.radii)[:, None] * np.exp(1j * np.asarray(self.angles))[None, :]

    def norms(self) -> np.ndarray:
        return self.values.norm()

    def max_abs_difference(self, other: "GridField") -> float:
        return float((self.values - other.values).norm().max())


def sample(f: BicomplexField, grid: PolarGrid | None = None) -> GridField:
    """Evaluate a bicomplex field on every node of a polar grid."""
    grid = grid or PolarGrid()
    values = f.evaluate(grid.points())
    return GridField(grid.radii, grid.angles, IdempotentArray(np.asarray(values.plus), np.asarray(values.minus)))


__all__ = ["PolarGrid", "GridField", "sample"]
