"""
Text records for fields, boundary data and bicomplex literals.

Records are line-oriented and start with a version header::

    # bcdisk polyfield v1
    # m n sc_re sc_im vec_re vec_im
    1 0 1.0 0.0 0.0 0.0

    # bcdisk boundary v1
    kind complex
    # k re im
    1 1.0 0.0

Bicomplex boundary records list ``k sc_re sc_im vec_re vec_im``.  Blank
lines and ``#`` comments after the header are ignored.  Bicomplex literals
are written ``a+bi|c+di`` (scalar part, vector part) or ``idem:p|q``
(idempotent components).
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Iterator, List, Tuple, Union

from ..algebra.bicomplex import Bicomplex, IdempotentPair, from_idempotent
from ..fields.boundary_data import BicomplexBoundaryData, BoundaryData
from ..fields.poly_field import PolyField
from .errors import BoundaryDataError, SerializationError

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
POLYFIELD_HEADER = f"# bcdisk polyfield v{FORMAT_VERSION}"
BOUNDARY_HEADER = f"# bcdisk boundary v{FORMAT_VERSION}"

AnyBoundary = Union[BoundaryData, BicomplexBoundaryData]


# ----------------------------------------------------------------------
# Literals
# ----------------------------------------------------------------------
def _parse_complex(text: str) -> complex:
    cleaned = text.strip().replace(" ", "")
    if not cleaned:
        raise SerializationError("Empty complex literal")
    if cleaned[-1] in "iI":
        # only the trailing imaginary unit; "inf" and "nan" keep their letters
        cleaned = cleaned[:-1] + "j"
    try:
        return complex(cleaned)
    except ValueError as exc:
        raise SerializationError(f"Malformed complex literal {text!r}") from exc


def format_complex(value: complex) -> str:
    value = complex(value)
    return f"{value.real:.17g}{value.imag:+.17g}i"


def parse_bicomplex(text: str) -> Bicomplex:
    """
    Parse ``a+bi|c+di``, ``idem:p|q`` or a plain complex number.

    Raises:
        SerializationError: If the literal is malformed.
    """
    text = text.strip()
    if text.lower().startswith("idem:"):
        parts = text[5:].split("|")
        if len(parts) != 2:
            raise SerializationError(f"Idempotent literal {text!r} needs exactly two components")
        return from_idempotent(IdempotentPair(_parse_complex(parts[0]), _parse_complex(parts[1])))
    parts = text.split("|")
    if len(parts) == 1:
        return Bicomplex(_parse_complex(parts[0]), 0j)
    if len(parts) == 2:
        return Bicomplex(_parse_complex(parts[0]), _parse_complex(parts[1]))
    raise SerializationError(f"Malformed bicomplex literal {text!r}")


def format_bicomplex(w: Bicomplex) -> str:
    return f"{format_complex(w.sc)}|{format_complex(w.vec)}"


# ----------------------------------------------------------------------
# Record helpers
# ----------------------------------------------------------------------
def _records(text: str, header: str) -> Iterator[Tuple[int, List[str]]]:
    lines = text.splitlines()
    if not lines or lines[0].strip() != header:
        found = lines[0].strip() if lines else ""
        raise SerializationError(f"Expected header {header!r}, found {found!r}")
    for number, line in enumerate(lines[1:], start=2):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, stripped.split()


def _floats(fields: List[str], number: int) -> List[float]:
    try:
        return [float(x) for x in fields]
    except ValueError as exc:
        raise SerializationError(f"Line {number}: non-numeric value in {' '.join(fields)!r}") from exc


def _ints(fields: List[str], number: int) -> List[int]:
    try:
        return [int(x) for x in fields]
    except ValueError as exc:
        raise SerializationError(f"Line {number}: expected integer exponents, got {' '.join(fields)!r}") from exc


# ----------------------------------------------------------------------
# PolyField
# ----------------------------------------------------------------------
def dump_polyfield(field: PolyField) -> str:
    lines = [POLYFIELD_HEADER, "# m n sc_re sc_im vec_re vec_im"]
    for (m, n), c in field.to_coeffs().items():
        lines.append(f"{m} {n} {c.sc.real:.17g} {c.sc.imag:.17g} {c.vec.real:.17g} {c.vec.imag:.17g}")
    return "\n".join(lines) + "\n"


def load_polyfield(text: str) -> PolyField:
    coeffs: Dict[Tuple[int, int], Bicomplex] = {}
    for number, fields in _records(text, POLYFIELD_HEADER):
        if len(fields) != 6:
            raise SerializationError(f"Line {number}: expected 6 columns, got {len(fields)}")
        m, n = _ints(fields[:2], number)
        if m < 0 or n < 0:
            raise SerializationError(f"Line {number}: exponents must be non-negative")
        a, b, c, d = _floats(fields[2:], number)
        coeffs[(m, n)] = coeffs.get((m, n), Bicomplex()) + Bicomplex(complex(a, b), complex(c, d))
    return PolyField.from_coeffs(coeffs)


# ----------------------------------------------------------------------
# Boundary data
# ----------------------------------------------------------------------
def dump_boundary(data: AnyBoundary) -> str:
    lines = [BOUNDARY_HEADER, f"kind {data.kind}"]
    if isinstance(data, BicomplexBoundaryData):
        lines.append("# k sc_re sc_im vec_re vec_im")
        for k, c in data.coefficients().items():
            lines.append(f"{k} {c.sc.real:.17g} {c.sc.imag:.17g} {c.vec.real:.17g} {c.vec.imag:.17g}")
    else:
        lines.append("# k re im")
        for k, c in sorted(data.coefficients().items()):
            lines.append(f"{k} {c.real:.17g} {c.imag:.17g}")
    return "\n".join(lines) + "\n"


def load_boundary(text: str) -> AnyBoundary:
    records = list(_records(text, BOUNDARY_HEADER))
    if not records or records[0][1][0] != "kind" or len(records[0][1]) != 2:
        raise SerializationError("Boundary record must declare 'kind real|complex|bicomplex' first")
    kind = records[0][1][1]
    width = {"real": 3, "complex": 3, "bicomplex": 5}.get(kind)
    if width is None:
        raise SerializationError(f"Unknown boundary kind {kind!r}")

    values: Dict[int, object] = {}
    for number, fields in records[1:]:
        if len(fields) != width:
            raise SerializationError(f"Line {number}: expected {width} columns, got {len(fields)}")
        (k,) = _ints(fields[:1], number)
        numbers = _floats(fields[1:], number)
        if kind == "bicomplex":
            values[k] = Bicomplex(complex(numbers[0], numbers[1]), complex(numbers[2], numbers[3]))
        else:
            values[k] = complex(numbers[0], numbers[1])
    try:
        if kind == "bicomplex":
            return BicomplexBoundaryData.from_fourier(values)
        return BoundaryData.from_fourier(values, kind=kind)
    except BoundaryDataError as exc:
        raise SerializationError(f"Invalid boundary record: {exc}") from exc


# ----------------------------------------------------------------------
# Files
# ----------------------------------------------------------------------
class RecordReader:
    """Reads field and boundary records from disk, dispatching on the header line."""

    def __init__(self) -> None:
        self.supported_headers = {POLYFIELD_HEADER: load_polyfield, BOUNDARY_HEADER: load_boundary}

    def read(self, path: Union[str, Path]):
        """
        Load a record file.

        Raises:
            FileNotFoundError: If the file does not exist.
            SerializationError: If the header or a record line is malformed.
        """
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Record file not found: {path}")
        text = path.read_text(encoding="utf-8")
        header = text.splitlines()[0].strip() if text else ""
        loader = self.supported_headers.get(header)
        if loader is None:
            raise SerializationError(f"{path}: unsupported header {header!r}")
        logger.debug("Reading %s", path)
        return loader(text)

    def read_polyfield(self, path: Union[str, Path]) -> PolyField:
        record = self.read(path)
        if not isinstance(record, PolyField):
            raise SerializationError(f"{path} does not hold a field record")
        return record

    def read_boundary(self, path: Union[str, Path]) -> AnyBoundary:
        record = self.read(path)
        if isinstance(record, PolyField):
            raise SerializationError(f"{path} does not hold a boundary record")
        return record


def write_record(path: Union[str, Path], record: Union[PolyField, AnyBoundary]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = dump_polyfield(record) if isinstance(record, PolyField) else dump_boundary(record)
    path.write_text(text, encoding="utf-8")
    return path


__all__ = [
    "FORMAT_VERSION",
    "parse_bicomplex",
    "format_bicomplex",
    "format_complex",
    "dump_polyfield",
    "load_polyfield",
    "dump_boundary",
    "load_boundary",
    "RecordReader",
    "write_record",
]
