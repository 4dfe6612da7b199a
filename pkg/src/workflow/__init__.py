"""Run configuration, acceptance suite and report persistence."""

from .acceptance_suite import CRITERIA, CriterionResult, SuiteSummary, run_criteria, run_suite
from .report_store import ReportStore
from .run_config import RunConfig

__all__ = ["CRITERIA", "CriterionResult", "SuiteSummary", "run_criteria", "run_suite", "ReportStore", "RunConfig"]
