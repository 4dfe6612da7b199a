"""
Command-line entry point.

Usage::

    python -m src.main solve schwarz --mu "0.3|0" --f zero --gamma1 g1.txt --gamma2 g2.txt --tol 1e-6
    python -m src.main solve dirichlet --mu 0 --gamma trace.txt --check-only
    python -m src.main hoib roundtrip --n 3 --degree 4
    python -m src.main hoib extract --field w.txt --mu "0.25|0" --n 2
    python -m src.main transform conjbel-to-vekua --mu-file mu.txt --f-file f.txt --probe-grid 64x256
    python -m src.main hardy profile --field w.txt --p 2
    python -m src.main suite run --seed 7

Exit status: 0 on success, 1 when a verdict or criterion fails, 2 on I/O or
configuration errors.  Reports are JSON, profiles CSV, fields text records.
Solve commands also write the radial profile of the solution as CSV.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import ValidationError

from config import Config

from .algebra.bicomplex import bc_norm
from .bvp.dirichlet_solver import DirichletSolver
from .bvp.problems import DirichletProblem, SchwarzProblem
from .bvp.schwarz_solver import SchwarzSolver
from .fields.boundary_data import BicomplexBoundaryData, BoundaryData
from .fields.grid_field import PolarGrid
from .fields.poly_field import PolyField, beltrami_power
from .hardy.profiler import boundary_gap_profile, boundary_trace, idempotent_hardy_check
from .hoib.hoib_bundle import HoibBundle, assemble, extract_components, random_bundle
from .tools.errors import AnnihilationError, EllipticityError, SerializationError
from .tools.serialization import RecordReader, parse_bicomplex, write_record
from .transforms.vekua_link import conjbel_to_vekua, vekua_link_check, vekua_to_conjbel
from .workflow.acceptance_suite import run_suite
from .workflow.report_store import ReportStore
from .workflow.run_config import RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_IO = 2

ZERO_SOURCE = "zero"
PROFILE_P = 2.0


# ----------------------------------------------------------------------
# Argument parsing
# ----------------------------------------------------------------------
def _config_flags() -> argparse.ArgumentParser:
    """Parent parser with one override flag per ``RunConfig`` key."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--config", type=Path, help="Run config file (defaults to $BCDISK_CONFIG)")
    parent.add_argument("--log-level", default=Config.LOG_LEVEL, help="Logging level")
    group = parent.add_argument_group("run config overrides")
    for name in RunConfig.model_fields:
        group.add_argument(f"--{name.replace('_', '-')}", dest=f"cfg_{name}", default=None, metavar="VALUE")
    return parent


def _grid_size(text: str) -> PolarGrid:
    try:
        n_r, n_theta = (int(part) for part in text.lower().split("x"))
        return PolarGrid(n_r, n_theta)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"Expected RADIIxANGLES, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = _config_flags()
    parser = argparse.ArgumentParser(prog="bcdisk", description="Bicomplex Beltrami, Hardy and boundary value toolkit")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="Solve a boundary value problem").add_subparsers(dest="kind", required=True)
    schwarz = solve.add_parser("schwarz", parents=[common], help="Bicomplex Schwarz problem")
    schwarz.add_argument("--mu", required=True, help="Bicomplex literal, e.g. '0.3|0' or 'idem:0.2|0.1i'")
    schwarz.add_argument("--gamma1", type=Path, required=True, help="Real boundary record for Re w+")
    schwarz.add_argument("--gamma2", type=Path, required=True, help="Real boundary record for Re w-")
    schwarz.add_argument("--f", default=ZERO_SOURCE, help="Source field record, or 'zero'")
    schwarz.add_argument("--a1", type=float, default=0.0)
    schwarz.add_argument("--a2", type=float, default=0.0)
    schwarz.add_argument("--tol", type=float, default=SchwarzProblem.model_fields["tol"].default, help="Neumann series tolerance")
    schwarz.add_argument("--out", default="schwarz_report")

    dirichlet = solve.add_parser("dirichlet", parents=[common], help="Bicomplex Dirichlet problem")
    dirichlet.add_argument("--mu", required=True)
    dirichlet.add_argument("--gamma", type=Path, required=True, help="Complex or bicomplex boundary record")
    dirichlet.add_argument("--f", default=ZERO_SOURCE, help="Source field record, or 'zero'")
    dirichlet.add_argument("--kernel-constant", help="Bicomplex literal for the shifted kernel constant")
    dirichlet.add_argument("--tol", type=float, default=DirichletProblem.model_fields["tol"].default, help="Series tolerance")
    dirichlet.add_argument("--check-only", action="store_true", help="Only run the compatibility check")
    dirichlet.add_argument("--out", default="dirichlet_report")

    hoib = commands.add_parser("hoib", help="Higher-order iterated Beltrami tools").add_subparsers(dest="kind", required=True)
    roundtrip = hoib.add_parser("roundtrip", parents=[common], help="Random bundle assemble/extract round trip")
    roundtrip.add_argument("--n", type=int, default=3)
    roundtrip.add_argument("--degree", type=int, default=4)
    roundtrip.add_argument("--mu", help="Bicomplex literal; random when omitted")
    roundtrip.add_argument("--out", default="hoib_roundtrip")
    extract = hoib.add_parser("extract", parents=[common], help="Extract the first-order components of a field")
    extract.add_argument("--field", type=Path, required=True)
    extract.add_argument("--mu", required=True)
    extract.add_argument("--n", type=int, required=True)
    extract.add_argument("--out", default="hoib_components")

    transform = commands.add_parser("transform", help="Conjugate-Beltrami / Vekua transforms").add_subparsers(
        dest="kind", required=True
    )
    for name in ("conjbel-to-vekua", "vekua-to-conjbel"):
        sub = transform.add_parser(name, parents=[common])
        sub.add_argument("--f-file", "--field", dest="field", type=Path, required=True)
        sub.add_argument("--mu", help="Real constant coefficient")
        sub.add_argument("--mu-file", "--mu-field", dest="mu_field", type=Path, help="Real-valued coefficient field record")
        sub.add_argument("--probe-grid", type=_grid_size, help="Polar probe grid as RADIIxANGLES, e.g. 64x256")
        sub.add_argument("--out", default=name.replace("-", "_"))

    hardy = commands.add_parser("hardy", help="Hardy-norm profiling").add_subparsers(dest="kind", required=True)
    profile = hardy.add_parser("profile", parents=[common], help="Circle means and boundary gaps over the radii ladder")
    profile.add_argument("--field", type=Path, required=True)
    profile.add_argument("--p", type=float, default=2.0)
    profile.add_argument("--out", default="hardy_profile")

    suite = commands.add_parser("suite", help="Acceptance suite").add_subparsers(dest="kind", required=True)
    run = suite.add_parser("run", parents=[common], help="Run the acceptance criteria")
    run.add_argument("--criteria", help="Comma list of criterion ids (default: all)")
    run.add_argument("--out", default="suite_summary")
    return parser


def _load_config(args: argparse.Namespace) -> RunConfig:
    overrides = {key[4:]: value for key, value in vars(args).items() if key.startswith("cfg_") and value is not None}
    return RunConfig.load(args.config, overrides)


def _read_source(reader: RecordReader, value: Optional[str]) -> Optional[PolyField]:
    if value is None or value.strip().lower() == ZERO_SOURCE:
        return None
    return reader.read_polyfield(Path(value))


def _write_profile(store: ReportStore, name: str, report, trace, config: RunConfig) -> None:
    """CSV of circle means and gaps of the solution against a boundary trace."""
    profile = boundary_gap_profile(report.solution, trace, PROFILE_P, config.radii, config.n_theta)
    store.write_csv(f"{name}_profile", profile.to_rows())


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------
def _solve_schwarz(args, config: RunConfig, store: ReportStore, reader: RecordReader) -> int:
    problem = SchwarzProblem(
        mu=parse_bicomplex(args.mu),
        f=_read_source(reader, args.f),
        gamma1=reader.read_boundary(args.gamma1),
        gamma2=reader.read_boundary(args.gamma2),
        a1=args.a1,
        a2=args.a2,
        series_cap=config.series_cap,
        tol=args.tol,
    )
    solver = SchwarzSolver(
        quadrature=config.quadrature(),
        probe_count=config.probe_count,
        fd_step=config.fd_step,
        boundary_tol=config.tol_boundary,
    )
    report = solver.solve_bicomplex(problem)
    store.write_json(args.out, {"config": config.provenance(), "report": report.to_json_dict()})
    write_record(store.base_dir / f"{args.out}_solution.txt", report.solution)
    _write_profile(store, args.out, report, boundary_trace(report.solution), config)
    return EXIT_OK if report.passed else EXIT_FAILED


def _solve_dirichlet(args, config: RunConfig, store: ReportStore, reader: RecordReader) -> int:
    gamma = reader.read_boundary(args.gamma)
    if isinstance(gamma, BoundaryData):
        gamma = BicomplexBoundaryData.from_complex(gamma)
    problem = DirichletProblem(
        mu=parse_bicomplex(args.mu),
        f=_read_source(reader, args.f),
        gamma=gamma,
        kernel_constant=parse_bicomplex(args.kernel_constant) if args.kernel_constant else None,
        series_cap=config.series_cap,
        tol=args.tol,
    )
    solver = DirichletSolver(
        quadrature=config.quadrature(),
        probe_count=config.probe_count,
        fd_step=config.fd_step,
        boundary_tol=config.tol_boundary,
    )
    if args.check_only:
        check = solver.check(problem)
        store.write_json(args.out, {"config": config.provenance(), "check": check.summary()})
        return EXIT_OK if check.solvable else EXIT_FAILED
    report = solver.solve(problem)
    store.write_json(args.out, {"config": config.provenance(), "report": report.to_json_dict()})
    if report.solution is not None:
        write_record(store.base_dir / f"{args.out}_solution.txt", report.solution)
        _write_profile(store, args.out, report, problem.gamma, config)
    return EXIT_OK if report.passed else EXIT_FAILED


def _hoib_roundtrip(args, config: RunConfig, store: ReportStore, reader: RecordReader) -> int:
    rng = np.random.default_rng(config.seed)
    bundle = random_bundle(rng, args.n, args.degree, mu=parse_bicomplex(args.mu) if args.mu else None)
    w = bundle.assembled
    rebuilt = assemble(HoibBundle(mu=bundle.mu, components=extract_components(w, bundle.mu, args.n)))
    round_trip = (rebuilt - w).max_coeff_norm()
    annihilation = beltrami_power(w, bundle.mu, args.n).max_coeff_norm()
    passed = round_trip <= config.tol_algebra and annihilation <= config.tol_algebra
    store.write_json(
        args.out,
        {
            "order": args.n,
            "degree": args.degree,
            "mu": [bundle.mu.sc, bundle.mu.vec],
            "mu_norm": bc_norm(bundle.mu),
            "round_trip_error": round_trip,
            "annihilation": annihilation,
            "passed": passed,
        },
    )
    write_record(store.base_dir / f"{args.out}_field.txt", w)
    return EXIT_OK if passed else EXIT_FAILED


def _hoib_extract(args, config: RunConfig, store: ReportStore, reader: RecordReader) -> int:
    w = reader.read_polyfield(args.field)
    mu = parse_bicomplex(args.mu)
    try:
        components = extract_components(w, mu, args.n, tol=config.tol_algebra)
    except AnnihilationError as exc:
        logger.error("%s", exc)
        store.write_json(args.out, {"error": str(exc), "passed": False})
        return EXIT_FAILED
    paths = [str(write_record(store.base_dir / f"{args.out}_{k}.txt", c)) for k, c in enumerate(components)]
    store.write_json(args.out, {"order": args.n, "components": paths, "passed": True})
    return EXIT_OK


def _grid_rows(field, grid: PolarGrid) -> List[Dict[str, float]]:
    """Field values on every grid node as ``{r, theta, sc_re, sc_im, vec_re, vec_im}`` rows."""
    radii, angles = np.meshgrid(grid.radii, grid.angles, indexing="ij")
    values = field.evaluate(grid.points().ravel())
    rows = []
    for r, theta, s, v in zip(radii.ravel(), angles.ravel(), values.sc, values.vec):
        rows.append(
            {
                "r": float(r),
                "theta": float(theta),
                "sc_re": float(s.real),
                "sc_im": float(s.imag),
                "vec_re": float(v.real),
                "vec_im": float(v.imag),
            }
        )
    return rows


def _transform(args, config: RunConfig, store: ReportStore, reader: RecordReader) -> int:
    if (args.mu is None) == (args.mu_field is None):
        raise ValueError("Give exactly one of --mu or --mu-file")
    mu = reader.read_polyfield(args.mu_field) if args.mu_field else float(args.mu)
    field = reader.read_polyfield(args.field)
    forward = args.kind == "conjbel-to-vekua"
    result = conjbel_to_vekua(field, mu) if forward else vekua_to_conjbel(field, mu)
    conj_side = field if forward else result
    probes = args.probe_grid.points().ravel() if args.probe_grid else None
    check = vekua_link_check(conj_side, mu, probes, h=config.fd_step, terms=config.alpha_terms)
    payload: Dict[str, Any] = {"direction": args.kind, "link_check": check}
    if args.probe_grid:
        payload["samples"] = _grid_rows(result, args.probe_grid)
    if isinstance(result, PolyField):
        payload["field"] = str(write_record(store.base_dir / f"{args.out}_field.txt", result))
    store.write_json(args.out, payload)
    passed = check["conj_beltrami_residual"] <= config.tol_pde and check["vekua_residual"] <= config.tol_pde
    return EXIT_OK if passed else EXIT_FAILED


def _hardy_profile(args, config: RunConfig, store: ReportStore, reader: RecordReader) -> int:
    w = reader.read_polyfield(args.field)
    profile = boundary_gap_profile(w, boundary_trace(w), args.p, config.radii, config.n_theta)
    chain = idempotent_hardy_check(w, args.p, config.radii, config.n_theta)
    store.write_csv(args.out, profile.to_rows())
    store.write_json(args.out, {"profile": profile.model_dump(), "comparability": chain.model_dump()})
    return EXIT_OK if chain.passed else EXIT_FAILED


def _suite_run(args, config: RunConfig, store: ReportStore, reader: RecordReader) -> int:
    ids = [int(item) for item in args.criteria.split(",")] if args.criteria else None
    summary = run_suite(config, ids)
    payload = summary.model_dump()
    payload["passed"] = summary.passed
    store.write_json(args.out, payload)
    for result in summary.criteria:
        status = "PASS" if result.passed else "FAIL"
        print(f"[{status}] {result.id:>2} {result.name:<22} measured={result.measured:.3e} bound={result.bound:.3e}")
    return EXIT_OK if summary.passed else EXIT_FAILED


HANDLERS = {
    ("solve", "schwarz"): _solve_schwarz,
    ("solve", "dirichlet"): _solve_dirichlet,
    ("hoib", "roundtrip"): _hoib_roundtrip,
    ("hoib", "extract"): _hoib_extract,
    ("transform", "conjbel-to-vekua"): _transform,
    ("transform", "vekua-to-conjbel"): _transform,
    ("hardy", "profile"): _hardy_profile,
    ("suite", "run"): _suite_run,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        config = _load_config(args)
        store = ReportStore(config.output_dir)
        return HANDLERS[(args.command, args.kind)](args, config, store, RecordReader())
    except (OSError, SerializationError, ValidationError, EllipticityError, ValueError) as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
