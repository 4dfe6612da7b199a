"""Conjugate-Beltrami, Vekua and GFOE residuals and the transform pair linking them."""

from .residuals import (
    GfoeCoefficients,
    conj_beltrami_residual,
    gfoe_component_equations,
    gfoe_residual,
    real_coefficient,
    vekua_residual,
)
from .vekua_link import (
    AlphaField,
    alpha_from_mu,
    conjbel_to_vekua,
    hardy_preservation_profile,
    vekua_link_check,
    vekua_to_conjbel,
)

__all__ = [
    "GfoeCoefficients",
    "real_coefficient",
    "conj_beltrami_residual",
    "vekua_residual",
    "gfoe_residual",
    "gfoe_component_equations",
    "AlphaField",
    "alpha_from_mu",
    "conjbel_to_vekua",
    "vekua_to_conjbel",
    "vekua_link_check",
    "hardy_preservation_profile",
]
