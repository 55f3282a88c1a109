"""Shipped polynomial data files and their integrity checks.

The three polynomials travel as auditable text files: the quintic, its
sextic resolvent, and the degree-48 polynomial whose factorization patterns
see the full order-480 group.  Loading validates structural fingerprints so
a corrupted file fails fast instead of producing silently wrong reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .polyfactor import degree, parse_poly_text

F5_COEFFS = (-1, -1, 0, 0, 0, 1)
G_COEFFS = (9, 7, -31, 30, -10, -1, 1)
H_DEGREE = 48
H_SECOND_COEFF = 3952905035040  # coefficient of X^46


class DataError(Exception):
    """A shipped data file is missing or fails its integrity check."""


@dataclass(frozen=True)
class DataBundle:
    f5: tuple
    g: tuple
    h: tuple


def _read(data_dir: Path | None, name: str) -> str:
    if data_dir is not None:
        path = Path(data_dir) / name
        if not path.is_file():
            raise DataError(f"data file missing: {path}")
        return path.read_text()
    ref = resources.files("xnx1").joinpath("data", name)
    if not ref.is_file():
        raise DataError(f"packaged data file missing: {name}")
    return ref.read_text()


def load_bundle(data_dir: Path | None = None) -> DataBundle:
    f5 = tuple(parse_poly_text(_read(data_dir, "f5.poly")))
    g = tuple(parse_poly_text(_read(data_dir, "g.poly")))
    h = tuple(parse_poly_text(_read(data_dir, "h.poly")))
    if f5 != F5_COEFFS:
        raise DataError("quintic data file does not match X^5 - X - 1")
    if g != G_COEFFS:
        raise DataError("sextic resolvent data file corrupted")
    if degree(list(h)) != H_DEGREE or h[-1] != 1:
        raise DataError("degree-48 polynomial must be monic of degree 48")
    if any(c != 0 for d, c in enumerate(h) if d % 2 == 1):
        raise DataError("degree-48 polynomial must have even-degree terms only")
    if h[46] != H_SECOND_COEFF:
        raise DataError("degree-48 polynomial fingerprint coefficient mismatch")
    return DataBundle(f5, g, h)
