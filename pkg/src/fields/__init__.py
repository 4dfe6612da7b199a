"""Function representations on the disk and the differential operators acting on them."""

from .boundary_data import BicomplexBoundaryData, BoundaryData
from .component_poly import ComponentPoly
from .grid_field import GridField, PolarGrid, sample
from .point_field import BicomplexField, PointField, as_complex_callable
from .poly_field import (
    PolyField,
    bc_del,
    bc_delbar,
    beltrami_apply,
    beltrami_power,
    check_ellipticity,
    d_z,
    d_zstar,
    eval_field,
)
from .wirtinger import fd_bicomplex_cartesian, fd_del, fd_delbar, fd_wirtinger

__all__ = [
    "BoundaryData",
    "BicomplexBoundaryData",
    "ComponentPoly",
    "PolyField",
    "PointField",
    "BicomplexField",
    "GridField",
    "PolarGrid",
    "as_complex_callable",
    "sample",
    "d_z",
    "d_zstar",
    "bc_del",
    "bc_delbar",
    "beltrami_apply",
    "beltrami_power",
    "check_ellipticity",
    "eval_field",
    "fd_wirtinger",
    "fd_delbar",
    "fd_del",
    "fd_bicomplex_cartesian",
]
