"""Assembly and extraction for higher-order iterated Beltrami equations."""

from .hoib_bundle import (
    HoibBundle,
    assemble,
    extract_components,
    hoib_hardy_seminorms,
    hoib_membership_check,
    random_bundle,
    random_mu,
)

__all__ = [
    "HoibBundle",
    "assemble",
    "extract_components",
    "hoib_hardy_seminorms",
    "hoib_membership_check",
    "random_bundle",
    "random_mu",
]
