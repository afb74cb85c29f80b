"""JSON formats for polygons, curves, support functions and reports.

* polygon: ``[[re, im], ...]`` vertex pairs in order
* curve / support function: ``{"n": [re, im], ...}`` keyed by signed mode

Floats are written with ``repr`` (shortest round-tripping form), so a
read after a write reproduces every value bit for bit.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from .chernoff import SupportFunction
from .errors import ParameterError
from .polygon import Polygon
from .smooth import FourierCurve


def _pair(v: complex) -> list[float]:
    v = complex(v)
    return [float(v.real), float(v.imag)]


def _complex(item, where: str) -> complex:
    if not (isinstance(item, (list, tuple)) and len(item) == 2):
        raise ParameterError(f"{where}: expected an [re, im] pair, got {item!r}")
    try:
        re, im = float(item[0]), float(item[1])
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"{where}: non-numeric entry {item!r}") from exc
    if not (math.isfinite(re) and math.isfinite(im)):
        raise ParameterError(f"{where}: non-finite entry {item!r}")
    return complex(re, im)


def polygon_to_json(p: Polygon) -> list[list[float]]:
    return [_pair(v) for v in p.z]


def polygon_from_json(data) -> Polygon:
    if not isinstance(data, list):
        raise ParameterError("polygon file must hold a JSON array of [re, im] pairs")
    return Polygon(np.array([_complex(v, f"vertex {i}") for i, v in enumerate(data)]))


def _modes_to_json(mapping: dict[int, complex]) -> dict[str, list[float]]:
    return {str(n): _pair(v) for n, v in sorted(mapping.items())}


def _modes_from_json(data, what: str) -> dict[int, complex]:
    if not isinstance(data, dict):
        raise ParameterError(f"{what} file must hold a JSON object mapping n to [re, im]")
    out = {}
    for key, v in data.items():
        try:
            n = int(key)
        except ValueError as exc:
            raise ParameterError(f"{what}: mode key {key!r} is not an integer") from exc
        out[n] = _complex(v, f"{what} mode {n}")
    if not out:
        raise ParameterError(f"{what}: no coefficients")
    return out


def curve_to_json(c: FourierCurve) -> dict[str, list[float]]:
    return _modes_to_json(c.to_mapping())


def curve_from_json(data) -> FourierCurve:
    return FourierCurve.from_mapping(_modes_from_json(data, "curve"))


def support_to_json(h: SupportFunction) -> dict[str, list[float]]:
    return _modes_to_json(h.to_mapping())


def support_from_json(data) -> SupportFunction:
    """Reads a support function; the conjugate symmetry ``a_{-n} = conj(a_n)`` is enforced."""
    return SupportFunction.from_mapping(_modes_from_json(data, "support function"))


def dumps(obj: Any) -> str:
    return json.dumps(obj, allow_nan=False)


def read_json(path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParameterError(f"{path}: invalid JSON ({exc})") from exc


def write_json(path, obj: Any):
    Path(path).write_text(dumps(obj) + "\n")


def load_polygons(path) -> list[Polygon]:
    """A polygon file, or a JSON array of polygons."""
    data = read_json(path)
    if isinstance(data, list) and data and isinstance(data[0], list) and data[0] and isinstance(data[0][0], list):
        return [polygon_from_json(d) for d in data]
    return [polygon_from_json(data)]


def load_curves(path) -> list[FourierCurve]:
    data = read_json(path)
    if isinstance(data, list):
        return [curve_from_json(d) for d in data]
    return [curve_from_json(data)]


def load_supports(path) -> list[SupportFunction]:
    data = read_json(path)
    if isinstance(data, list):
        return [support_from_json(d) for d in data]
    return [support_from_json(data)]
