"""
Environment-level settings for the bicomplex disk toolkit.

Values come from the process environment (optionally a ``.env`` file loaded
with python-dotenv).  Per-run numerical settings live in
``src.workflow.run_config.RunConfig``; this module only carries defaults and
locations.
"""

import os
from typing import Any, Dict

from dotenv import load_dotenv

load_dotenv()


class Config:
    """Process-wide settings read once from the environment."""

    # Run configuration
    BCDISK_CONFIG: str = os.getenv("BCDISK_CONFIG", "")
    DEFAULT_OUTPUT_DIR: str = os.getenv("DEFAULT_OUTPUT_DIR", "output")
    DEFAULT_SEED: int = int(os.getenv("BCDISK_SEED", "20240601"))

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

    # Quadrature defaults
    DEFAULT_N_R: int = int(os.getenv("BCDISK_N_R", "128"))
    DEFAULT_N_THETA: int = int(os.getenv("BCDISK_N_THETA", "512"))

    # Performance
    MAX_CONCURRENT_ITEMS: int = int(os.getenv("MAX_CONCURRENT_ITEMS", "4"))

    @classmethod
    def validate_config(cls) -> Dict[str, Any]:
        """
        Validate the environment settings.

        Returns:
            Dictionary with ``valid``, ``errors`` and ``warnings``.
        """
        results: Dict[str, Any] = {"valid": True, "errors": [], "warnings": []}

        if cls.BCDISK_CONFIG and not os.path.exists(cls.BCDISK_CONFIG):
            results["errors"].append(f"BCDISK_CONFIG points at a missing file: {cls.BCDISK_CONFIG}")
            results["valid"] = False

        if not os.path.exists(cls.DEFAULT_OUTPUT_DIR):
            results["warnings"].append(f"Output directory does not exist yet: {cls.DEFAULT_OUTPUT_DIR}")

        if cls.MAX_CONCURRENT_ITEMS <= 0:
            results["errors"].append("MAX_CONCURRENT_ITEMS must be positive")
            results["valid"] = False

        if cls.DEFAULT_N_R < 2:
            results["errors"].append("BCDISK_N_R must be at least 2")
            results["valid"] = False

        if cls.LOG_LEVEL.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            results["warnings"].append(f"Unknown LOG_LEVEL {cls.LOG_LEVEL!r}; falling back to INFO")

        return results


config = Config()
