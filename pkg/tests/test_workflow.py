"""
Tests for the run configuration, report persistence and the acceptance suite.

Suite tests use a small quadrature so each criterion finishes quickly.
"""

import json
import os
import shutil
import tempfile
from unittest.mock import patch

import numpy as np
import pytest
from pydantic import ValidationError

from config import Config
from src.fields.poly_field import PolyField
from src.hardy.profiler import radial_profile
from src.workflow.acceptance_suite import (
    CRITERIA,
    DETERMINISM_ID,
    SuiteSummary,
    algebra_suite,
    criterion_rng,
    dirichlet_gate,
    hardy_profiling,
    operator_consistency,
    run_criteria,
    run_suite,
    schwarz_oracle,
    series_decay,
)
from src.workflow.report_store import ReportStore
from src.workflow.run_config import RunConfig


def small_config(**overrides):
    values = {"n_r": 32, "n_theta": 128, "probe_count": 10, "max_workers": 2}
    values.update(overrides)
    return RunConfig(**values)


@pytest.mark.unit
class TestRunConfig:
    """Loading and validating run configurations."""

    def setup_method(self):
        self.test_dir = tempfile.mkdtemp()

    def teardown_method(self):
        shutil.rmtree(self.test_dir, ignore_errors=True)

    def test_defaults(self):
        config = RunConfig()
        assert config.tol_pde == 1e-4
        assert config.tol_boundary == 1e-3
        assert config.tol_algebra == 1e-10
        assert config.series_cap == 40
        assert config.fd_step == 1e-4
        assert config.radii == (0.5, 0.9, 0.99, 0.999)
        assert config.validation_issues() == []

    def test_from_mapping(self):
        config = RunConfig.from_mapping({"N_R": "16", "radii": "0.5, 0.9", "tol_pde": "", "seed": None})
        assert config.n_r == 16
        assert config.radii == (0.5, 0.9)
        assert config.tol_pde == 1e-4
        assert config.seed == Config.DEFAULT_SEED

    def test_unknown_key(self):
        with pytest.raises(ValueError, match="Unknown config key"):
            RunConfig.from_mapping({"resolution": 3})

    def test_invalid_values(self):
        with pytest.raises(ValidationError):
            RunConfig(radii="0.5,1.0")
        with pytest.raises(ValidationError):
            RunConfig(radii="")
        with pytest.raises(ValidationError):
            RunConfig(seed=-1)

    def test_load_file_with_overrides(self):
        path = os.path.join(self.test_dir, "run.env")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write("n_r=24\nn_theta=128\n# comment\nradii=0.5,0.75\n")
        config = RunConfig.load(path, {"seed": 3, "n_r": None})
        assert config.n_r == 24
        assert config.n_theta == 128
        assert config.radii == (0.5, 0.75)
        assert config.seed == 3

    def test_load_without_file(self):
        with patch.object(Config, "BCDISK_CONFIG", ""):
            config = RunConfig.load(overrides={"n_theta": "256"})
        assert config.n_theta == 256

    def test_missing_file(self):
        with pytest.raises(FileNotFoundError):
            RunConfig.load(os.path.join(self.test_dir, "missing.env"))

    def test_validation_issues(self):
        config = RunConfig(n_theta=100, tol_pde=0.0)
        issues = config.validation_issues()
        assert len(issues) == 2
        assert not config.has_valid_grid()
        assert not RunConfig(n_theta=32).has_valid_grid()
        assert RunConfig(n_theta=64).has_valid_grid()

    def test_derived_objects(self):
        config = RunConfig(n_r=20, n_theta=64)
        quadrature = config.quadrature()
        assert (quadrature.n_r, quadrature.n_theta) == (20, 64)
        provenance = config.provenance()
        assert provenance["radii"] == [0.5, 0.9, 0.99, 0.999]
        json.dumps(provenance)


@pytest.mark.unit
class TestReportStore:
    """JSON and CSV persistence."""

    def setup_method(self):
        self.test_dir = tempfile.mkdtemp()
        self.store = ReportStore(os.path.join(self.test_dir, "output", "run"))

    def teardown_method(self):
        shutil.rmtree(self.test_dir, ignore_errors=True)

    def test_base_dir_is_created(self):
        assert self.store.base_dir.is_dir()

    def test_json_with_complex_and_numpy_values(self):
        path = self.store.write_json("report", {"value": 1 + 2j, "pair": (1, 2), "scale": np.float64(0.5)})
        assert path.name == "report.json"
        loaded = self.store.load_json("report")
        assert loaded == {"pair": [1, 2], "scale": 0.5, "value": {"re": 1.0, "im": 2.0}}

    def test_json_from_model(self):
        self.store.write_json("config.json", RunConfig(n_r=12))
        assert self.store.load_json("config")["n_r"] == 12

    def test_suffix_is_replaced(self):
        path = self.store.write_json("summary.txt", {"ok": True})
        assert path.name == "summary.json"

    def test_csv_profile(self):
        rows = radial_profile(PolyField.zhat(), 2.0, radii=(0.5, 0.9)).to_rows()
        path = self.store.write_csv("profile", rows)
        assert path.suffix == ".csv"
        loaded = self.store.load_csv("profile")
        assert [row["r"] for row in loaded] == ["0.5", "0.9"]
        assert loaded[0]["gap_p"] == ""

    def test_empty_csv(self):
        path = self.store.write_csv("empty", [])
        assert path.stat().st_size == 0
        assert self.store.load_csv("empty") == []


@pytest.mark.unit
class TestConfig:
    """Environment-level settings."""

    def test_defaults_are_valid(self):
        with patch.object(Config, "BCDISK_CONFIG", ""):
            results = Config.validate_config()
        assert results["valid"]

    def test_missing_config_file(self):
        with patch.object(Config, "BCDISK_CONFIG", "/nonexistent/bcdisk.env"):
            results = Config.validate_config()
        assert not results["valid"]
        assert "BCDISK_CONFIG" in results["errors"][0]

    def test_worker_count(self):
        with patch.object(Config, "BCDISK_CONFIG", ""), patch.object(Config, "MAX_CONCURRENT_ITEMS", 0):
            results = Config.validate_config()
        assert not results["valid"]


@pytest.mark.unit
class TestCriteria:
    """Individual acceptance criteria."""

    def setup_method(self):
        self.config = small_config()

    def test_algebra(self):
        result = algebra_suite(self.config, criterion_rng(1, 1), triples=300)
        assert result.id == 1
        assert result.passed
        assert len(result.details["checks"]) == 4
        checks = {c["name"]: c for c in result.details["checks"]}
        assert checks["norm_bound_violations"]["measured"] == 0

    def test_operator_consistency(self):
        result = operator_consistency(self.config, criterion_rng(1, 2))
        assert result.passed
        assert result.measured <= result.bound

    def test_zero_tolerance_fails(self):
        result = operator_consistency(small_config(tol_pde=0.0), criterion_rng(1, 2))
        assert not result.passed
        assert result.bound == 0.0
        assert result.measured > 0.0

    def test_dirichlet_gate(self):
        result = dirichlet_gate(self.config, criterion_rng(1, 6))
        assert result.passed
        checks = {c["name"]: c for c in result.details["checks"]}
        assert checks["incompatible_gap"]["measured"] == pytest.approx(1.0)

    def test_hardy_profiling(self):
        result = hardy_profiling(self.config, criterion_rng(1, 9))
        assert result.passed
        assert result.details["p"] in (1.0, 2.0, 4.0)
        assert len(result.details["gaps"]) == 3

    def test_criteria_table(self):
        assert sorted(CRITERIA) == list(range(1, 10))
        assert DETERMINISM_ID == 10


@pytest.mark.integration
class TestSchwarzCriteria:
    """Criteria that run Schwarz solves."""

    def setup_method(self):
        self.config = small_config()

    def test_schwarz_oracle(self):
        result = schwarz_oracle(self.config, criterion_rng(1, 3))
        assert result.passed
        assert result.details["verdict"] == "passed"

    def test_series_decay(self):
        result = series_decay(self.config, criterion_rng(1, 5))
        assert result.passed
        for rate, ratios in result.details["ratios"].items():
            np.testing.assert_allclose(ratios, float(rate), rtol=1e-6)


@pytest.mark.unit
class TestSuiteRunner:
    """Concurrent runs, summaries and determinism."""

    def setup_method(self):
        self.config = small_config()

    def test_results_are_sorted(self):
        results = run_criteria(self.config, [9, 6])
        assert [r.id for r in results] == [6, 9]

    def test_unknown_criterion(self):
        with pytest.raises(ValueError):
            run_criteria(self.config, [42])

    def test_determinism_criterion(self):
        summary = run_suite(self.config, ids=[9, DETERMINISM_ID])
        assert [c.id for c in summary.criteria] == [9, DETERMINISM_ID]
        determinism = summary.criteria[-1]
        assert determinism.passed
        assert determinism.details["digest"] == determinism.details["rerun_digest"]
        assert summary.passed

    def test_determinism_only_when_requested(self):
        summary = run_suite(self.config, ids=[9])
        assert [c.id for c in summary.criteria] == [9]
        assert summary.seed == self.config.seed

    def test_invalid_grid_is_rejected(self):
        with pytest.raises(ValueError):
            run_suite(small_config(n_theta=100), ids=[9])

    def test_zero_tolerance_run(self):
        summary = run_suite(small_config(tol_pde=0.0), ids=[2])
        assert not summary.passed
        assert summary.failed_ids() == [2]
        assert summary.config_issues

    def test_crashing_criterion_is_a_failure(self, monkeypatch):
        def exploding(config, rng):
            raise RuntimeError("boom")

        monkeypatch.setitem(CRITERIA, 9, exploding)
        (result,) = run_criteria(self.config, [9])
        assert not result.passed
        assert result.details["error"] == "RuntimeError: boom"

    def test_digest_is_stable(self):
        first = SuiteSummary(seed=1, config={}, criteria=run_criteria(self.config, [6, 9]))
        second = SuiteSummary(seed=1, config={}, criteria=run_criteria(self.config, [6, 9]))
        assert first.digest() == second.digest()
        assert len(first.digest()) == 64
