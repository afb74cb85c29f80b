"""Inequality reports and the tolerance conventions shared by all evaluators."""

from __future__ import annotations

import math
import os
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable

from .errors import ParameterError

DEFAULT_TOLERANCE = 1e-9
TOLERANCE_ENV_VAR = "ISO_WIRTINGER_TOLERANCE"

# |deficit| must be below this (times scale) for an equality verdict.
EQUALITY_RTOL = 1e-10
# A Fourier mode is active when its coefficient exceeds this fraction of the largest one.
ACTIVE_MODE_RTOL = 1e-9
# Absolute floor for relative comparisons of near-zero quantities.
ABS_FLOOR = 1e-14


def default_tolerance() -> float:
    """Default tolerance, overridable through ``ISO_WIRTINGER_TOLERANCE``."""
    raw = os.environ.get(TOLERANCE_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_TOLERANCE
    try:
        value = float(raw)
    except ValueError:
        value = math.nan
    if not math.isfinite(value) or value <= 0:
        raise ParameterError(f"{TOLERANCE_ENV_VAR} must be a positive number, got {raw!r}")
    return value


def rel_close(a: float, b: float, rtol: float, floor: float = ABS_FLOOR) -> bool:
    """``|a - b| <= rtol * max(|a|, |b|)`` with an absolute floor."""
    return abs(a - b) <= max(rtol * max(abs(a), abs(b)), floor)


@dataclass(frozen=True)
class InequalityReport:
    """Both sides of one inequality instance, its slack and its rigidity verdict.

    ``lhs`` and ``rhs`` are the two displayed sides, evaluated directly from
    the geometric data, and ``direction`` says how they compare when the
    inequality holds (``">="`` means ``lhs >= rhs``).  ``deficit`` is the
    slack oriented so that the inequality holds iff ``deficit >= 0``; it is
    evaluated in the diagonal (Fourier) form of the inequality, where every
    term is a nonnegative multiple of a squared coefficient, so it stays
    accurate on equality cases where the direct difference ``lhs - rhs`` is
    dominated by cancellation.  ``direct_deficit`` is that direct difference,
    oriented the same way, and ``magnitude`` the sum of absolute values of
    the terms it was assembled from (the natural scale of its rounding error).
    """

    theorem_id: str
    k: int | None
    m: int | None
    lhs: float
    rhs: float
    direction: str
    deficit: float
    direct_deficit: float
    magnitude: float
    holds: bool
    equality: bool
    active_modes: tuple[int, ...]
    tolerance: float
    extras: dict[str, Any] = field(default_factory=dict)

    @property
    def scale(self) -> float:
        return max(abs(self.lhs), abs(self.rhs), 1.0)

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        out["active_modes"] = list(self.active_modes)
        out["status"] = "holds" if self.holds else "violated"
        return out


def make_report(
    theorem_id: str,
    *,
    k: int | None,
    m: int | None,
    lhs: float,
    rhs: float,
    direction: str,
    deficit: float,
    magnitude: float,
    active_modes: Iterable[int],
    rigid: bool,
    tolerance: float | None = None,
    deficit_factor: float = 1.0,
    extras: dict[str, Any] | None = None,
) -> InequalityReport:
    """Assemble a report and apply the holds / equality rules.

    ``rigid`` is the spectral half of the equality test (no excluded mode is
    active); the numerical half is ``|deficit| <= EQUALITY_RTOL * scale``.
    ``deficit_factor`` converts the displayed slack to the normalisation the
    deficit is reported in (used where a display is a fixed multiple of the
    underlying quadratic form).
    """
    if direction not in (">=", "<="):
        raise ValueError(f"direction must be '>=' or '<=', got {direction!r}")
    tol = default_tolerance() if tolerance is None else float(tolerance)
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    lhs = float(lhs)
    rhs = float(rhs)
    direct = (lhs - rhs) if direction == ">=" else (rhs - lhs)
    scale = max(abs(lhs), abs(rhs), 1.0)
    deficit = float(deficit)
    holds = deficit >= -tol * scale
    equality = bool(rigid) and abs(deficit) <= EQUALITY_RTOL * scale and holds
    return InequalityReport(
        theorem_id=theorem_id,
        k=k,
        m=m,
        lhs=lhs,
        rhs=rhs,
        direction=direction,
        deficit=deficit,
        direct_deficit=deficit_factor * direct,
        magnitude=float(magnitude),
        holds=bool(holds),
        equality=bool(equality),
        active_modes=tuple(int(v) for v in active_modes),
        tolerance=tol,
        extras=dict(extras or {}),
    )
