"""Persistence of JSON reports and CSV profiles under the run output directory."""

from __future__ import annotations

import csv
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Union

from pydantic import BaseModel

logger = logging.getLogger(__name__)

Payload = Union[BaseModel, Mapping[str, Any]]


def _jsonable(value: Any) -> Any:
    """Replace values ``json`` cannot write (complex numbers, numpy scalars, tuples)."""
    if isinstance(value, BaseModel):
        return _jsonable(value.model_dump())
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if hasattr(value, "item") and callable(value.item):
        return _jsonable(value.item())
    return value


class ReportStore:
    """Writes and reads run artifacts as files under ``base_dir``."""

    def __init__(self, base_dir: Union[str, Path] = "output") -> None:
        self.base_dir = Path(base_dir)
        self.base_dir.mkdir(parents=True, exist_ok=True)

    # ------------------------------------------------------------------
    # JSON reports
    # ------------------------------------------------------------------
    def write_json(self, name: str, payload: Payload) -> Path:
        path = self._path(name, ".json")
        with path.open("w", encoding="utf-8") as handle:
            json.dump(_jsonable(payload), handle, indent=2, sort_keys=True)
        logger.info("Wrote report %s", path)
        return path

    def load_json(self, name: str) -> Dict[str, Any]:
        path = self._path(name, ".json")
        with path.open("r", encoding="utf-8") as handle:
            return json.load(handle)

    # ------------------------------------------------------------------
    # CSV profiles
    # ------------------------------------------------------------------
    def write_csv(self, name: str, rows: Iterable[Mapping[str, Any]]) -> Path:
        """Write ``rows`` with the keys of the first row as header; an empty iterable writes an empty file."""
        rows = list(rows)
        path = self._path(name, ".csv")
        with path.open("w", encoding="utf-8", newline="") as handle:
            if rows:
                writer = csv.DictWriter(handle, fieldnames=list(rows[0].keys()))
                writer.writeheader()
                writer.writerows(_jsonable(row) for row in rows)
        logger.info("Wrote profile %s (%d rows)", path, len(rows))
        return path

    def load_csv(self, name: str) -> List[Dict[str, str]]:
        path = self._path(name, ".csv")
        with path.open("r", encoding="utf-8", newline="") as handle:
            return list(csv.DictReader(handle))

    # ------------------------------------------------------------------
    # Internal helpers
    # ------------------------------------------------------------------
    def _path(self, name: str, suffix: str) -> Path:
        path = Path(name)
        if path.suffix != suffix:
            path = path.with_suffix(suffix)
        return path if path.is_absolute() else self.base_dir / path


__all__ = ["ReportStore"]
