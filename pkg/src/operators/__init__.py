"""Kernels, quadrature rules and the integral operators of the solution formulas."""

from .area_operators import (
    pi_operator,
    pi_operator_poly,
    pi_operator_refinement,
    pompeiu_operator,
    pompeiu_poly,
    schwarz_area_conj_poly,
    schwarz_area_operator,
    schwarz_area_operator_conj,
    schwarz_area_poly,
    t_bicomplex,
)
from .boundary_integrals import IntegralField, cauchy_integral, contour_integral, schwarz_integral
from .kernels import conj_poisson_kernel, poisson_kernel, schwarz_kernel
from .quadrature import DiskQuadrature, boundary_nodes

__all__ = [
    "DiskQuadrature",
    "IntegralField",
    "boundary_nodes",
    "poisson_kernel",
    "conj_poisson_kernel",
    "schwarz_kernel",
    "schwarz_integral",
    "cauchy_integral",
    "contour_integral",
    "pompeiu_operator",
    "pompeiu_poly",
    "schwarz_area_operator",
    "schwarz_area_operator_conj",
    "schwarz_area_poly",
    "schwarz_area_conj_poly",
    "pi_operator",
    "pi_operator_poly",
    "pi_operator_refinement",
    "t_bicomplex",
]
