"""
Run configuration for solves and acceptance runs.

The config file is a flat ``key=value`` file read with python-dotenv::

    n_r=128
    n_theta=512
    tol_pde=1e-4
    radii=0.5,0.9,0.99,0.999

Keys are matched case-insensitively to ``RunConfig`` fields.  Command-line
overrides are applied on top of the file values.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from dotenv import dotenv_values
from pydantic import BaseModel, Field, field_validator

from config import Config

from ..fields.wirtinger import DEFAULT_STEP
from ..operators.quadrature import DiskQuadrature

logger = logging.getLogger(__name__)

TOLERANCE_FIELDS = ("tol_pde", "tol_boundary", "tol_algebra")
MIN_ANGLES = 64


class RunConfig(BaseModel):
    """Numerical settings, tolerances and output location for one run."""

    n_r: int = Field(default=Config.DEFAULT_N_R, ge=2)
    n_theta: int = Config.DEFAULT_N_THETA
    eps_factor: float = Field(default=0.5, ge=0)
    tol_pde: float = 1e-4
    tol_boundary: float = 1e-3
    tol_algebra: float = 1e-10
    series_cap: int = Field(default=40, ge=1)
    radii: Tuple[float, ...] = (0.5, 0.9, 0.99, 0.999)
    output_dir: str = Config.DEFAULT_OUTPUT_DIR
    seed: int = Field(default=Config.DEFAULT_SEED, ge=0)
    fd_step: float = Field(default=DEFAULT_STEP, gt=0)
    probe_count: int = Field(default=50, ge=1)
    max_workers: int = Field(default=Config.MAX_CONCURRENT_ITEMS, ge=1)
    alpha_terms: int = Field(default=12, ge=1)

    @field_validator("radii", mode="before")
    @classmethod
    def _parse_radii(cls, value: Any) -> Tuple[float, ...]:
        if isinstance(value, str):
            value = [item for item in value.split(",") if item.strip()]
        radii = tuple(float(r) for r in value)
        if not radii or any(not 0 < r < 1 for r in radii):
            raise ValueError("radii must be a non-empty list of values in (0, 1)")
        return radii

    # ------------------------------------------------------------------
    # Loading
    # ------------------------------------------------------------------
    @classmethod
    def from_mapping(cls, values: Mapping[str, Any]) -> "RunConfig":
        """
        Build a config from loosely keyed values, ignoring ``None`` entries.

        Raises:
            ValueError: On unknown keys.
            pydantic.ValidationError: On values of the wrong type or range.
        """
        known = set(cls.model_fields)
        cleaned: Dict[str, Any] = {}
        for key, value in values.items():
            name = key.strip().lower()
            if name not in known:
                raise ValueError(f"Unknown config key {key!r}")
            if value is not None and value != "":
                cleaned[name] = value
        return cls(**cleaned)

    @classmethod
    def load(
        cls, path: Optional[Union[str, Path]] = None, overrides: Optional[Mapping[str, Any]] = None
    ) -> "RunConfig":
        """
        Load the config file (``path`` or ``BCDISK_CONFIG``) and apply overrides.

        Raises:
            FileNotFoundError: If an explicitly named config file is missing.
        """
        values: Dict[str, Any] = {}
        source = path or Config.BCDISK_CONFIG or None
        if source:
            source = Path(source)
            if not source.exists():
                raise FileNotFoundError(f"Config file not found: {source}")
            values.update(dotenv_values(source))
            logger.info("Loaded run config from %s", source)
        for key, value in (overrides or {}).items():
            if value is not None:
                values[key] = value
        return cls.from_mapping(values)

    # ------------------------------------------------------------------
    # Validation and derived objects
    # ------------------------------------------------------------------
    def validation_issues(self) -> List[str]:
        """Problems that make some results meaningless; an empty list means the config is sound."""
        issues = []
        if self.n_theta < MIN_ANGLES or self.n_theta & (self.n_theta - 1):
            issues.append(f"n_theta must be a power of two >= {MIN_ANGLES}, got {self.n_theta}")
        for name in TOLERANCE_FIELDS:
            if not getattr(self, name) > 0:
                issues.append(f"{name} must be positive, got {getattr(self, name)}")
        return issues

    def has_valid_grid(self) -> bool:
        return self.n_theta >= MIN_ANGLES and not self.n_theta & (self.n_theta - 1)

    def quadrature(self) -> DiskQuadrature:
        return DiskQuadrature(self.n_r, self.n_theta, self.eps_factor)

    def provenance(self) -> Dict[str, Any]:
        """JSON-ready copy of every setting for report headers."""
        payload = self.model_dump()
        payload["radii"] = list(self.radii)
        return payload


__all__ = ["RunConfig", "TOLERANCE_FIELDS"]
