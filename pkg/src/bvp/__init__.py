"""Schwarz and Dirichlet boundary value problems with residual-gated verdicts."""

from .dirichlet_solver import (
    DirichletSolver,
    check_complex,
    dirichlet_solvability_check,
    faber_polynomials,
    fit_complex,
    particular_solution,
    solve_dirichlet_bicomplex,
    solve_dirichlet_complex,
)
from .problems import (
    VERDICT_FAILED,
    VERDICT_PASSED,
    VERDICT_REFUSED,
    DirichletCheckReport,
    DirichletProblem,
    SchwarzProblem,
    SolveReport,
)
from .schwarz_solver import (
    SchwarzSolver,
    solve_schwarz_bicomplex,
    solve_schwarz_complex,
    solve_schwarz_dbar,
    solve_schwarz_dbar_bicomplex,
)

__all__ = [
    "SchwarzProblem",
    "DirichletProblem",
    "SolveReport",
    "DirichletCheckReport",
    "SchwarzSolver",
    "DirichletSolver",
    "solve_schwarz_complex",
    "solve_schwarz_dbar",
    "solve_schwarz_bicomplex",
    "solve_schwarz_dbar_bicomplex",
    "particular_solution",
    "faber_polynomials",
    "fit_complex",
    "check_complex",
    "solve_dirichlet_complex",
    "dirichlet_solvability_check",
    "solve_dirichlet_bicomplex",
    "VERDICT_PASSED",
    "VERDICT_FAILED",
    "VERDICT_REFUSED",
]
