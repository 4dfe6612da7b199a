"""
Acceptance suite: property checks of every toolkit layer at desk scale.

Each criterion is a function ``(config, rng) -> CriterionResult`` built from a
list of individual checks.  A check compares one measured value against a
bound (``le``, ``lt`` or ``ge``); the criterion passes when all of its checks
pass, and its headline ``measured``/``bound`` are those of the worst check.
Bounds that depend on a run tolerance are capped by it, so a zero tolerance
fails every criterion that uses it.

Criteria run on a thread pool, each with its own generator seeded from
``(seed, criterion id)``; the summary is sorted by id and carries no timings.
"""

from __future__ import annotations

import hashlib
import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field

from ..algebra.bicomplex import (
    P_MINUS,
    P_PLUS,
    Bicomplex,
    IdempotentPair,
    bc_norm,
    from_idempotent,
    mul_cartesian,
)
from ..bvp.diagnostics import probe_points, sup_difference
from ..bvp.dirichlet_solver import DirichletSolver
from ..bvp.problems import SchwarzProblem
from ..bvp.schwarz_solver import SchwarzSolver
from ..fields.boundary_data import BoundaryData
from ..fields.component_poly import ComponentPoly
from ..fields.poly_field import PolyField, beltrami_power
from ..fields.wirtinger import fd_del, fd_delbar
from ..hardy.profiler import boundary_gap_profile, boundary_trace, idempotent_hardy_check, radial_profile
from ..hoib.hoib_bundle import HoibBundle, assemble, extract_components, random_bundle
from ..transforms.vekua_link import conjbel_to_vekua, vekua_link_check, vekua_to_conjbel
from .run_config import RunConfig

logger = logging.getLogger(__name__)

COMPARATORS: Dict[str, Callable[[float, float], bool]] = {
    "le": lambda measured, bound: measured <= bound,
    "lt": lambda measured, bound: measured < bound,
    "ge": lambda measured, bound: measured >= bound,
}


class Check(BaseModel):
    name: str
    measured: float
    bound: float
    comparator: str = "le"
    passed: bool = False


class CriterionResult(BaseModel):
    """Outcome of one acceptance criterion."""

    id: int
    name: str
    measured: float
    bound: float
    passed: bool
    details: Dict[str, Any] = Field(default_factory=dict)


class SuiteSummary(BaseModel):
    """Machine-readable result of a suite run."""

    seed: int
    config: Dict[str, Any]
    config_issues: List[str] = Field(default_factory=list)
    criteria: List[CriterionResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.criteria)

    def failed_ids(self) -> List[int]:
        return [c.id for c in self.criteria if not c.passed]

    def digest(self) -> str:
        """SHA-256 of the canonical JSON form of the criterion results."""
        payload = json.dumps([c.model_dump() for c in self.criteria], sort_keys=True)
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _check(name: str, measured: float, bound: float, comparator: str = "le") -> Check:
    measured, bound = float(measured), float(bound)
    passed = bool(np.isfinite(measured) and COMPARATORS[comparator](measured, bound))
    return Check(name=name, measured=measured, bound=bound, comparator=comparator, passed=passed)


def _severity(check: Check) -> float:
    if not check.passed:
        return np.inf
    if check.comparator == "ge":
        return check.bound / check.measured if check.measured > 0 else 0.0
    if check.bound > 0:
        return check.measured / check.bound
    return 1.0


def _result(criterion_id: int, name: str, checks: Sequence[Check], **details: Any) -> CriterionResult:
    worst = max(checks, key=_severity)
    details["checks"] = [c.model_dump() for c in checks]
    return CriterionResult(
        id=criterion_id,
        name=name,
        measured=worst.measured,
        bound=worst.bound,
        passed=all(c.passed for c in checks),
        details=details,
    )


def _capped(spec_bound: float, tolerance: float) -> float:
    return min(spec_bound, tolerance)


def _random_bicomplex(rng: np.random.Generator, size: int) -> List[Bicomplex]:
    parts = rng.uniform(-1.0, 1.0, size=(size, 4))
    return [Bicomplex(complex(a, b), complex(c, d)) for a, b, c, d in parts]


def _random_points(rng: np.random.Generator, count: int, r_max: float = 0.9) -> np.ndarray:
    radii = r_max * np.sqrt(rng.uniform(0.0, 1.0, count))
    return radii * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, count))


def _schwarz_solver(config: RunConfig) -> SchwarzSolver:
    return SchwarzSolver(
        quadrature=config.quadrature(),
        probe_count=config.probe_count,
        fd_step=config.fd_step,
        boundary_tol=config.tol_boundary,
    )


# ----------------------------------------------------------------------
# Criteria
# ----------------------------------------------------------------------
def algebra_suite(config: RunConfig, rng: np.random.Generator, triples: int = 10_000) -> CriterionResult:
    a_list, b_list, c_list = (_random_bicomplex(rng, triples) for _ in range(3))
    ring_error = 0.0
    cartesian_error = 0.0
    norm_violations = 0
    for a, b, c in zip(a_list, b_list, c_list):
        scale = max(1.0, 2 * bc_norm(a) * bc_norm(b) * bc_norm(c), bc_norm(a) * (bc_norm(b) + bc_norm(c)))
        errors = (
            bc_norm((a * b) * c - a * (b * c)),
            bc_norm(a * b - b * a),
            bc_norm(a * (b + c) - (a * b + a * c)),
        )
        ring_error = max(ring_error, max(errors) / scale)
        cartesian_error = max(cartesian_error, bc_norm(a * b - mul_cartesian(a, b)) / max(1.0, 2 * bc_norm(a) * bc_norm(b)))
        slack = 1e-12 * max(1.0, bc_norm(a) + bc_norm(b))
        if bc_norm(a * b) > np.sqrt(2) * bc_norm(a) * bc_norm(b) + slack:
            norm_violations += 1
        if bc_norm(a + b) > bc_norm(a) + bc_norm(b) + slack:
            norm_violations += 1
        lower = max(abs(a.plus), abs(a.minus)) / np.sqrt(2)
        upper = (abs(a.plus) + abs(a.minus)) / np.sqrt(2)
        if not lower - slack <= bc_norm(a) <= upper + slack:
            norm_violations += 1

    idempotent_error = max(
        bc_norm(P_PLUS * P_PLUS - P_PLUS),
        bc_norm(P_MINUS * P_MINUS - P_MINUS),
        bc_norm(P_PLUS * P_MINUS),
        bc_norm(P_PLUS + P_MINUS - 1),
    )
    bound = _capped(1e-14, config.tol_algebra)
    checks = [
        _check("ring_identities_relative", ring_error, bound),
        _check("cartesian_product_relative", cartesian_error, bound),
        _check("idempotent_identities", idempotent_error, 0.0),
        _check("norm_bound_violations", norm_violations, 0),
    ]
    return _result(1, "algebra", checks, triples=triples)


def operator_consistency(config: RunConfig, rng: np.random.Generator, degree: int = 6, points: int = 100) -> CriterionResult:
    coeffs = {}
    for m in range(degree + 1):
        for n in range(degree + 1 - m):
            a, b, c, d = rng.uniform(-1.0, 1.0, 4) / (1 + m + n)
            coeffs[(m, n)] = Bicomplex(complex(a, b), complex(c, d))
    field = PolyField.from_coeffs(coeffs)
    z = _random_points(rng, points)
    delbar_gap = sup_difference(field.bc_delbar().evaluate(z), fd_delbar(field, z, config.fd_step))
    del_gap = sup_difference(field.bc_del().evaluate(z), fd_del(field, z, config.fd_step))
    bound = _capped(1e-6, config.tol_pde)
    checks = [_check("delbar_vs_finite_difference", delbar_gap, bound), _check("del_vs_finite_difference", del_gap, bound)]
    return _result(2, "operator_consistency", checks, degree=degree, points=points)


def schwarz_oracle(config: RunConfig, rng: np.random.Generator) -> CriterionResult:
    solver = _schwarz_solver(config)
    gamma = BoundaryData.cosine()
    series_report = solver.solve_complex(0j, None, gamma, 0.0, cap=config.series_cap)
    dbar_report = solver.solve_dbar(None, gamma, 0.0)
    probes = probe_points(config.probe_count)
    exact = probes
    oracle_gap = float(np.abs(series_report.solution.evaluate(probes) - exact).max())
    path_gap = float(np.abs(series_report.solution.evaluate(probes) - dbar_report.solution.evaluate(probes)).max())
    bound = _capped(1e-6, config.tol_pde)
    checks = [
        _check("sup_error_vs_z", oracle_gap, bound),
        _check("series_vs_dbar_path", path_gap, bound),
        _check("pde_residual", series_report.pde_residual_max, bound),
    ]
    return _result(
        3,
        "schwarz_oracle",
        checks,
        quadrature=series_report.quadrature,
        verdict=series_report.verdict,
    )


def manufactured_schwarz(config: RunConfig, rng: np.random.Generator, mu_norm: float = 0.3) -> CriterionResult:
    angles = rng.uniform(0.0, 2 * np.pi, 2)
    mu = from_idempotent(IdempotentPair(mu_norm * np.exp(1j * angles[0]), mu_norm * np.exp(1j * angles[1])))
    target = PolyField.zhat() + PolyField.zhat_star().scale(mu)
    problem = SchwarzProblem(
        mu=mu,
        gamma1=BoundaryData.real_trace_of(target.plus),
        gamma2=BoundaryData.real_trace_of(target.minus),
        a1=float(complex(target.plus.evaluate(0j)).imag),
        a2=float(complex(target.minus.evaluate(0j)).imag),
        series_cap=config.series_cap,
    )
    report = _schwarz_solver(config).solve_bicomplex(problem)
    probes = probe_points(config.probe_count)
    sup_error = sup_difference(report.solution.evaluate(probes), target.evaluate(probes))
    checks = [
        _check("sup_error", sup_error, _capped(1e-4, config.tol_pde)),
        _check("pde_residual", report.pde_residual_max, _capped(1e-4, config.tol_pde)),
        _check("boundary_error_r099", report.boundary_error, _capped(1e-3, config.tol_boundary)),
    ]
    return _result(
        4,
        "manufactured_schwarz",
        checks,
        mu_norm=bc_norm(mu),
        series_terms=report.series_terms_used,
        verdict=report.verdict,
    )


def series_decay(config: RunConfig, rng: np.random.Generator, rates: Tuple[float, ...] = (0.3, 0.6)) -> CriterionResult:
    solver = _schwarz_solver(config)
    amplitude = float(rng.uniform(0.5, 2.0))
    gamma = BoundaryData.cosine(amplitude)
    checks, ratios = [], {}
    for c in rates:
        report = solver.solve_complex(c, None, gamma, 0.0, tol=1e-8, cap=max(config.series_cap, 60))
        observed = report.series_decay
        ratios[str(c)] = observed
        worst = max(observed) if observed else np.inf
        checks.append(_check(f"decay_ratio_c{c}", worst, c + 0.05))
        checks.append(_check(f"decay_terms_c{c}", len(observed), 3, "ge"))
    return _result(5, "series_decay", checks, amplitude=amplitude, ratios=ratios)


def dirichlet_gate(config: RunConfig, rng: np.random.Generator) -> CriterionResult:
    solver = DirichletSolver(quadrature=config.quadrature(), probe_count=config.probe_count, fd_step=config.fd_step)
    compatible = solver.check_complex(0j, None, BoundaryData.trace_of(ComponentPoly.z()))
    incompatible = solver.check_complex(0j, None, BoundaryData.trace_of(ComponentPoly.zstar()))
    checks = [
        _check("compatible_gap", compatible.compatibility_gap, 1e-6),
        _check("incompatible_gap", incompatible.compatibility_gap, 1e-2, "ge"),
    ]
    return _result(
        6,
        "dirichlet_gate",
        checks,
        compatible_identity_gap=compatible.identity_gap,
        incompatible_identity_gap=incompatible.identity_gap,
    )


def hoib_round_trip(config: RunConfig, rng: np.random.Generator, bundles: int = 20) -> CriterionResult:
    round_trip, annihilation = 0.0, 0.0
    orders = []
    for _ in range(bundles):
        n = int(rng.integers(1, 5))
        degree = int(rng.integers(0, 6))
        bundle = random_bundle(rng, n, degree)
        w = bundle.assembled
        components = extract_components(w, bundle.mu, n)
        rebuilt = assemble(HoibBundle(mu=bundle.mu, components=components))
        round_trip = max(round_trip, (rebuilt - w).max_coeff_norm())
        annihilation = max(annihilation, beltrami_power(w, bundle.mu, n).max_coeff_norm())
        orders.append(n)
    checks = [
        _check("assemble_extract_assemble", round_trip, _capped(1e-10, config.tol_algebra)),
        _check("nth_iterate_annihilation", annihilation, _capped(1e-12, config.tol_algebra)),
    ]
    return _result(7, "hoib_round_trip", checks, orders=orders)


def vekua_link(config: RunConfig, rng: np.random.Generator, points: int = 1000) -> CriterionResult:
    coefficients = [Bicomplex(complex(a, b), complex(c, d)) for a, b, c, d in rng.uniform(-1.0, 1.0, (4, 4))]
    f = PolyField.mu_holomorphic(coefficients, 0.0) + PolyField.zhat_star().scale(coefficients[0])
    linear = (PolyField.zhat() + PolyField.zhat_star()) * 0.5
    poly_mu = PolyField.constant(0.2) + linear * 0.3
    z = _random_points(rng, points, r_max=0.95)
    back = vekua_to_conjbel(conjbel_to_vekua(f, poly_mu), poly_mu)
    round_trip = sup_difference(back.evaluate(z), f.evaluate(z))

    constant_mu = float(rng.uniform(-0.6, 0.6))
    holomorphic = PolyField.mu_holomorphic(coefficients, 0.0)
    solution = vekua_to_conjbel(holomorphic, constant_mu)
    constant_check = vekua_link_check(solution, constant_mu, h=config.fd_step, terms=config.alpha_terms)

    constant_f = PolyField.constant(coefficients[1])
    poly_check = vekua_link_check(constant_f, poly_mu, h=config.fd_step, terms=config.alpha_terms)

    checks = [
        _check("pointwise_round_trip", round_trip, _capped(1e-12, config.tol_algebra)),
        _check("constant_mu_conj_beltrami", constant_check["conj_beltrami_residual"], _capped(1e-8, config.tol_pde)),
        _check("constant_mu_vekua", constant_check["vekua_residual"], _capped(1e-8, config.tol_pde)),
        _check("polynomial_mu_vekua", poly_check["vekua_residual"], _capped(1e-4, config.tol_pde)),
    ]
    return _result(
        8,
        "vekua_link",
        checks,
        constant_mu=constant_mu,
        constant_path=constant_check["path"],
        polynomial_path=poly_check["path"],
    )


def hardy_profiling(config: RunConfig, rng: np.random.Generator, ladder: Tuple[float, ...] = (0.9, 0.99, 0.999)) -> CriterionResult:
    w = PolyField.zhat()
    p = float(rng.choice([1.0, 2.0, 4.0]))
    profile = radial_profile(w, p, config.radii, config.n_theta)
    mean_error = max(abs(m - r) for m, r in zip(profile.means, profile.radii))

    gaps = boundary_gap_profile(w, boundary_trace(w), p, ladder, config.n_theta).gaps
    steps = max(b - a for a, b in zip(gaps, gaps[1:]))
    gap_ratio = max(g / (2 * (1 - r)) for g, r in zip(gaps, ladder))

    chain = idempotent_hardy_check(w, p, config.radii, config.n_theta)
    checks = [
        _check("circle_mean_vs_radius", mean_error, _capped(1e-12, config.tol_algebra)),
        _check("gap_increment", steps, 0.0, "lt"),
        _check("gap_over_two_one_minus_r", gap_ratio, 1.0),
        _check("comparability_violations", chain.holds.count(False), 0),
    ]
    return _result(9, "hardy_profiling", checks, p=p, gaps=gaps, means=profile.means)


CRITERIA: Dict[int, Callable[[RunConfig, np.random.Generator], CriterionResult]] = {
    1: algebra_suite,
    2: operator_consistency,
    3: schwarz_oracle,
    4: manufactured_schwarz,
    5: series_decay,
    6: dirichlet_gate,
    7: hoib_round_trip,
    8: vekua_link,
    9: hardy_profiling,
}
DETERMINISM_ID = 10


# ----------------------------------------------------------------------
# Runner
# ----------------------------------------------------------------------
def criterion_rng(seed: int, criterion_id: int) -> np.random.Generator:
    return np.random.default_rng([seed, criterion_id])


def _run_one(criterion_id: int, config: RunConfig) -> CriterionResult:
    criterion = CRITERIA[criterion_id]
    started = time.perf_counter()
    try:
        result = criterion(config, criterion_rng(config.seed, criterion_id))
    except Exception as exc:  # a crashing criterion is a failed criterion
        logger.exception("Criterion %d raised", criterion_id)
        result = CriterionResult(
            id=criterion_id,
            name=criterion.__name__,
            measured=float("inf"),
            bound=0.0,
            passed=False,
            details={"error": f"{type(exc).__name__}: {exc}"},
        )
    logger.debug("Criterion %d finished in %.2fs", criterion_id, time.perf_counter() - started)
    log = logger.info if result.passed else logger.warning
    log("Criterion %d (%s): %s", result.id, result.name, "passed" if result.passed else "FAILED")
    return result


def run_criteria(config: RunConfig, ids: Optional[Sequence[int]] = None) -> List[CriterionResult]:
    """Run the selected criteria concurrently and return them sorted by id."""
    ids = sorted(CRITERIA) if ids is None else sorted(set(ids))
    unknown = [i for i in ids if i not in CRITERIA]
    if unknown:
        raise ValueError(f"Unknown criterion ids: {unknown}")
    with ThreadPoolExecutor(max_workers=config.max_workers) as executor:
        results = list(executor.map(lambda i: _run_one(i, config), ids))
    return sorted(results, key=lambda r: r.id)


def run_suite(config: RunConfig, ids: Optional[Sequence[int]] = None, check_determinism: bool = True) -> SuiteSummary:
    """
    Execute the acceptance suite.

    The determinism criterion reruns the selected criteria with the same
    seed and compares the canonical digests of both runs.

    Raises:
        ValueError: If the quadrature grid is invalid or an id is unknown.
    """
    issues = config.validation_issues()
    if not config.has_valid_grid():
        raise ValueError("; ".join(issues))
    for issue in issues:
        logger.warning("Config issue: %s", issue)

    selected = sorted(CRITERIA) if ids is None else [i for i in sorted(set(ids)) if i != DETERMINISM_ID]
    summary = SuiteSummary(seed=config.seed, config=config.provenance(), config_issues=issues)
    summary.criteria = run_criteria(config, selected)

    if check_determinism and (ids is None or DETERMINISM_ID in ids):
        rerun = SuiteSummary(seed=config.seed, config=summary.config, criteria=run_criteria(config, selected))
        first, second = summary.digest(), rerun.digest()
        mismatched = [a.id for a, b in zip(summary.criteria, rerun.criteria) if a.model_dump() != b.model_dump()]
        summary.criteria.append(
            CriterionResult(
                id=DETERMINISM_ID,
                name="determinism",
                measured=float(len(mismatched)),
                bound=0.0,
                passed=first == second,
                details={"digest": first, "rerun_digest": second, "mismatched_ids": mismatched},
            )
        )
    logger.info("Suite finished: %d criteria, failed %s", len(summary.criteria), summary.failed_ids() or "none")
    return summary


__all__ = [
    "Check",
    "CriterionResult",
    "SuiteSummary",
    "CRITERIA",
    "DETERMINISM_ID",
    "criterion_rng",
    "run_criteria",
    "run_suite",
]
