"""Discrete Wirtinger and isoperimetric inequalities for k-gons.

Each evaluator returns an :class:`~iso_wirtinger.report.InequalityReport`.
The two displayed sides are computed from the vertices (differences, norms,
area); the deficit is computed from the spectrum, where every inequality of
this family is diagonal:

    deficit = k * sum_{nu != 0} w(nu) |zeta_nu|^2,   w(nu) >= 0.

The weights are products of differences of the symbols ``x_nu = 4 sin^2(nu pi/k)``,
so they vanish exactly on the equality modes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

import numpy as np

from . import fourier
from .coeffs import check_discrete_order, discrete_table
from .errors import HypothesisViolation, ParameterError
from .polygon import (
    Polygon,
    as_polygon,
    curvature_vectors,
    is_equilateral,
    perimeter,
    require_zero_centroid,
    side_length_spread,
    signed_area,
    squared_side_sum,
)
from .report import ACTIVE_MODE_RTOL, InequalityReport, make_report


def _symbols(k: int) -> np.ndarray:
    return fourier.sin_sq_symbol(k)


def _root(k: int, j: int) -> float:
    return float(fourier.sin_sq_symbol(k, j))


def _diff(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z)
    out[:-1] = z[1:] - z[:-1]
    out[-1] = z[0] - z[-1]
    return out


def _derivatives(z: np.ndarray, upto: int) -> list[np.ndarray]:
    """``[z, z', ..., z^(upto)]``."""
    out = [z]
    for _ in range(upto):
        out.append(_diff(out[-1]))
    return out


def _derivative_norms(z: np.ndarray, upto: int) -> list[float]:
    """``[||z||^2, ||z'||^2, ..., ||z^(upto)||^2]`` by repeated differencing."""
    return [fourier.norm_sq(d) for d in _derivatives(z, upto)]


@lru_cache(maxsize=1024)
def q_weights(k: int, m: int) -> np.ndarray:
    """``Q_m(x_nu) = prod_{j=1..m} (x_nu - x_j)`` for every mode, as a product."""
    x = _symbols(k)
    w = np.ones(k)
    for j in range(1, m + 1):
        w = w * (x - x[j])
    w.setflags(write=False)
    return w


def _diagonal(zeta: np.ndarray, weights: np.ndarray) -> float:
    k = zeta.size
    return float(k * np.sum(weights[1:] * np.abs(zeta[1:]) ** 2))


def _modes(zeta: np.ndarray) -> list[int]:
    return fourier.active_modes(zeta, ACTIVE_MODE_RTOL)


def _within(modes, bound: int) -> bool:
    return all(0 < abs(v) <= bound for v in modes)


def _prepare(p, m: int | None, auto_recenter: bool, slack: int = 0):
    p = require_zero_centroid(as_polygon(p), auto_recenter)
    if m is not None:
        check_discrete_order(m, p.k, slack)
    return p, p.z, p.spectrum()


def _s_terms(z: np.ndarray, x1: float, upto: int) -> list[float]:
    """``I_l = ||tau z^(l+1) + x1 z^(l-1)||^2`` for ``l = 1..upto`` (index 0 unused)."""
    d = _derivatives(z, upto + 1)
    return [0.0] + [fourier.norm_sq(np.roll(d[l + 1], 1) + x1 * d[l - 1]) for l in range(1, upto + 1)]


def il_identity(z, l: int) -> tuple[float, float]:
    """Both sides of ``I_l = J_l - 4 sin^2(pi/k) J_{l-1}`` for ``l >= 1``."""
    if l < 1:
        raise ParameterError("l must be at least 1")
    z = fourier.as_sequence(z)
    x1 = _root(z.size, 1)
    n = _derivative_norms(z, l + 1)
    J = [n[j + 1] - x1 * n[j] for j in range(l + 1)]
    return _s_terms(z, x1, l)[l], J[l] - x1 * J[l - 1]


def regularity_defect(p) -> float:
    """``W = ||t - 2i sin(pi/k) e^{i pi/k} z||^2``; zero for a positively oriented regular polygon."""
    p = as_polygon(p)
    k = p.k
    rot = 2j * np.sin(np.pi / k) * np.exp(1j * np.pi / k)
    return fourier.norm_sq(fourier.derivative(p.z, 1) - rot * p.z)


def isoperimetric_deficit(p) -> float:
    """``S - 4 tan(pi/k) F``."""
    p = as_polygon(p)
    return squared_side_sum(p) - 4 * np.tan(np.pi / p.k) * signed_area(p)


# --------------------------------------------------------------------------
# Wirtinger forms


def wirtinger_m(p, m: int, *, auto_recenter: bool = False, tolerance: float | None = None) -> InequalityReport:
    """``sum_j c_{m,j} ||z^(j)||^2 >= 0`` for zero-centroid ``z``, ``1 <= m <= k/2``."""
    p, z, zeta = _prepare(p, m, auto_recenter)
    k = p.k
    tab = discrete_table(m, k)
    n = _derivative_norms(z, m)
    terms = [c * v for c, v in zip(tab.c, n)]
    modes = _modes(zeta)
    return make_report(
        "wirtinger",
        k=k,
        m=m,
        lhs=sum(terms),
        rhs=0.0,
        direction=">=",
        deficit=_diagonal(zeta, q_weights(k, m)),
        magnitude=sum(abs(t) for t in terms),
        active_modes=modes,
        rigid=_within(modes, m),
        tolerance=tolerance,
    )


def wirtinger_lambda_form(p, m: int, *, auto_recenter: bool = False, tolerance: float | None = None) -> InequalityReport:
    """``sum_j lam_{m,j} (||z^(j+1)||^2 - x_1 ||z^(j)||^2) >= 0``."""
    p, z, zeta = _prepare(p, m, auto_recenter)
    k = p.k
    tab = discrete_table(m, k)
    x1 = tab.base
    n = _derivative_norms(z, m)
    terms = [lam * v for lam, v in zip(tab.lam, n[1:])] + [-x1 * lam * v for lam, v in zip(tab.lam, n)]
    modes = _modes(zeta)
    return make_report(
        "wirtinger-lambda",
        k=k,
        m=m,
        lhs=sum(terms),
        rhs=0.0,
        direction=">=",
        deficit=_diagonal(zeta, q_weights(k, m)),
        magnitude=sum(abs(t) for t in terms),
        active_modes=modes,
        rigid=_within(modes, m),
        tolerance=tolerance,
    )


def _s_form_terms(z: np.ndarray, m: int, k: int) -> list[float]:
    tab = discrete_table(m, k)
    x1 = tab.base
    n = _derivative_norms(z, 1)
    I = _s_terms(z, x1, m - 1)
    return [tab.s[0] * n[1], -tab.s[0] * x1 * n[0]] + [tab.s[l] * I[l] for l in range(1, m)]


def wirtinger_s_form(p, m: int, *, auto_recenter: bool = False, tolerance: float | None = None) -> InequalityReport:
    """``0 <= S_{m,0} (||z'||^2 - x_1 ||z||^2) + sum_l S_{m,l} ||tau z^(l+1) + x_1 z^(l-1)||^2``."""
    p, z, zeta = _prepare(p, m, auto_recenter)
    k = p.k
    terms = _s_form_terms(z, m, k)
    modes = _modes(zeta)
    return make_report(
        "wirtinger-s",
        k=k,
        m=m,
        lhs=0.0,
        rhs=sum(terms),
        direction="<=",
        deficit=_diagonal(zeta, q_weights(k, m)),
        magnitude=sum(abs(t) for t in terms),
        active_modes=modes,
        rigid=_within(modes, m),
        tolerance=tolerance,
    )


# --------------------------------------------------------------------------
# stability


def _stability_deficit(zeta: np.ndarray, m: int) -> float:
    k = zeta.size
    return _diagonal(zeta, q_weights(k, m + 1)) / _root(k, m + 1)


def stability_c(p, m: int, *, auto_recenter: bool = False, tolerance: float | None = None) -> InequalityReport:
    """``sum_l C_{m,l} ||z^(l)||^2 <= (1 / x_{m+1}) sum_l C_{m,l} ||z^(l+1)||^2``, ``m <= k/2 - 1``."""
    p, z, zeta = _prepare(p, m, auto_recenter, slack=1)
    k = p.k
    tab = discrete_table(m, k)
    x_next = _root(k, m + 1)
    n = _derivative_norms(z, m + 1)
    lo = [c * v for c, v in zip(tab.c, n)]
    hi = [c * v / x_next for c, v in zip(tab.c, n[1:])]
    modes = _modes(zeta)
    return make_report(
        "stability-c",
        k=k,
        m=m,
        lhs=sum(lo),
        rhs=sum(hi),
        direction="<=",
        deficit=_stability_deficit(zeta, m),
        magnitude=sum(abs(t) for t in lo + hi),
        active_modes=modes,
        rigid=_within(modes, m + 1),
        tolerance=tolerance,
    )


def stability_s(p, m: int, *, auto_recenter: bool = False, tolerance: float | None = None) -> InequalityReport:
    """Stability of the S-form: its value is bounded by ``1/x_{m+1}`` times the next-order bracket.

    For ``m = 1`` this is the bound on the deficit of the discrete Chakerian
    inequality by ``(x_1 J_0 + ||kappa + x_1 z||^2) / x_2``.
    """
    p, z, zeta = _prepare(p, m, auto_recenter, slack=1)
    k = p.k
    tab = discrete_table(m, k)
    x1 = tab.base
    x_next = _root(k, m + 1)
    lo = _s_form_terms(z, m, k)
    n = _derivative_norms(z, 1)
    I = _s_terms(z, x1, m)
    J0 = n[1] - x1 * n[0]
    hi = [x1 * tab.s[0] * J0 / x_next] + [tab.s[l] * I[l + 1] / x_next for l in range(m)]
    modes = _modes(zeta)
    return make_report(
        "stability-s",
        k=k,
        m=m,
        lhs=sum(lo),
        rhs=sum(hi),
        direction="<=",
        deficit=_stability_deficit(zeta, m),
        magnitude=sum(abs(t) for t in lo + hi),
        active_modes=modes,
        rigid=_within(modes, m + 1),
        tolerance=tolerance,
    )


# --------------------------------------------------------------------------
# geometric inequalities


def chakerian_identity(p) -> tuple[float, float]:
    """Both sides of ``||z'||^2 - x_1 ||z||^2 = 2 cos^2(pi/k) (S - 4 tan(pi/k) F) - W``.

    Holds for every polygon; no centroid condition.
    """
    p = as_polygon(p)
    k = p.k
    n = _derivative_norms(p.z, 1)
    left = n[1] - _root(k, 1) * n[0]
    right = 2 * np.cos(np.pi / k) ** 2 * isoperimetric_deficit(p) - regularity_defect(p)
    return float(left), float(right)


def _regular_offset_norm(p: Polygon) -> float:
    """``||z + i e^{-i pi/k} t / (2 sin(pi/k))||^2``."""
    k = p.k
    t = fourier.derivative(p.z, 1)
    return fourier.norm_sq(p.z + 1j * np.exp(-1j * np.pi / k) * t / (2 * np.sin(np.pi / k)))


def chakerian_v1(p, *, auto_recenter: bool = False, tolerance: float | None = None) -> InequalityReport:
    """``S - 4 tan(pi/k) F >= 2 tan^2(pi/k) ||z + i e^{-i pi/k} t / (2 sin(pi/k))||^2``.

    Equality exactly for ``zeta_1 R_1 + zeta_{k-1} R_{k-1}``; degenerate
    (zero-area) members of that class are admitted and flagged in ``extras``.
    """
    p, z, zeta = _prepare(p, None, auto_recenter)
    k = p.k
    b = np.pi / k
    S = squared_side_sum(p)
    F = signed_area(p)
    lhs = S - 4 * np.tan(b) * F
    rhs = 2 * np.tan(b) ** 2 * _regular_offset_norm(p)
    weights = (_symbols(k) - _root(k, 1)) / (2 * np.cos(b) ** 2)
    modes = _modes(zeta)
    return make_report(
        "chakerian-v1",
        k=k,
        m=1,
        lhs=lhs,
        rhs=rhs,
        direction=">=",
        deficit=_diagonal(zeta, weights),
        magnitude=abs(S) + abs(4 * np.tan(b) * F) + abs(rhs),
        active_modes=modes,
        rigid=_within(modes, 1),
        tolerance=tolerance,
        extras={"zero_area": bool(abs(F) <= 1e-10 * max(S, 1e-300))},
    )


def chakerian_v2_weights(k: int) -> np.ndarray:
    """Per-mode slack of ``S - 4 tan F - W/2`` divided by ``k``: zero only for ``nu = 1``."""
    b = np.pi / k
    a = (np.arange(k) - 1) * b
    return 2 * np.sin(a) * (np.sin(a) * np.cos(b) + 2 * np.cos(a) * np.sin(b)) / np.cos(b)


def chakerian_v2(p, *, auto_recenter: bool = False, tolerance: float | None = None) -> InequalityReport:
    """``S - 4 tan(pi/k) F >= 2 sin^2(pi/k) ||z + i e^{-i pi/k} t / (2 sin(pi/k))||^2``.

    Equality exactly for positively oriented regular k-gons ``zeta_1 R_1``.
    """
    p, z, zeta = _prepare(p, None, auto_recenter)
    k = p.k
    b = np.pi / k
    S = squared_side_sum(p)
    F = signed_area(p)
    lhs = S - 4 * np.tan(b) * F
    rhs = 2 * np.sin(b) ** 2 * _regular_offset_norm(p)
    modes = _modes(zeta)
    return make_report(
        "chakerian-v2",
        k=k,
        m=1,
        lhs=lhs,
        rhs=rhs,
        direction=">=",
        deficit=_diagonal(zeta, chakerian_v2_weights(k)),
        magnitude=abs(S) + abs(4 * np.tan(b) * F) + abs(rhs),
        active_modes=modes,
        rigid=all(v == 1 for v in modes),
        tolerance=tolerance,
    )


def isoperimetric_higher(p, m: int, *, auto_recenter: bool = False, tolerance: float | None = None) -> InequalityReport:
    """Higher-order discrete isoperimetric inequality of order ``m``.

    ``0 <= 2 S_{m,0} cos^2(pi/k) (S - 4 tan(pi/k) F) - S_{m,0} W
    + sum_{l=1}^{m-1} S_{m,l} ||D^{l-1}(kappa + x_1 z)||^2``.

    Since ``S_{m,0}`` has sign ``(-1)^(m-1)``, odd ``m`` bounds the
    isoperimetric deficit ``S - 4 tan(pi/k) F`` from below and even ``m`` from
    above; ``extras`` carries that bound.
    """
    p, z, zeta = _prepare(p, m, auto_recenter)
    k = p.k
    tab = discrete_table(m, k)
    x1 = tab.base
    cos2 = np.cos(np.pi / k) ** 2
    D = isoperimetric_deficit(p)
    W = regularity_defect(p)
    v = curvature_vectors(p) + x1 * z
    curv = []
    for l in range(1, m):
        curv.append(tab.s[l] * fourier.norm_sq(v))
        v = _diff(v)
    terms = [2 * tab.s[0] * cos2 * D, -tab.s[0] * W] + curv
    bound = (W - sum(curv) / tab.s[0]) / (2 * cos2)
    modes = _modes(zeta)
    return make_report(
        "discrete-higher",
        k=k,
        m=m,
        lhs=0.0,
        rhs=sum(terms),
        direction="<=",
        deficit=_diagonal(zeta, q_weights(k, m)),
        magnitude=sum(abs(t) for t in terms),
        active_modes=modes,
        rigid=_within(modes, m),
        tolerance=tolerance,
        extras={
            "isoperimetric_deficit": float(D),
            "bound": float(bound),
            "bound_kind": "lower" if m % 2 == 1 else "upper",
        },
    )


def equilateral_bound(p, *, side_rtol: float = 1e-9, tolerance: float | None = None) -> InequalityReport:
    """``L^2 >= 4 k tan(pi/k) |F|`` for equilateral k-gons; equality iff regular.

    ``S`` and ``F`` are translation invariant, so no centroid condition is needed.
    """
    p = as_polygon(p)
    if not is_equilateral(p, side_rtol):
        raise HypothesisViolation("polygon is not equilateral")
    k = p.k
    L = perimeter(p)
    F = signed_area(p)
    rhs = 4 * k * np.tan(np.pi / k) * abs(F)
    # reduce to positive orientation, where S - 4 tan F is diagonal with weights >= 0
    q = p if F >= 0 else p.conjugate()
    zeta = q.spectrum()
    b = np.pi / k
    nu = np.arange(k)
    weights = 4 * np.sin(nu * b) * np.sin((nu - 1) * b) / np.cos(b)
    deficit = k * _diagonal(zeta, weights) - side_length_spread(p)
    modes = _modes(p.spectrum())
    rigid = len(modes) == 1 and abs(modes[0]) == 1
    return make_report(
        "equilateral",
        k=k,
        m=None,
        lhs=L * L,
        rhs=rhs,
        direction=">=",
        deficit=deficit,
        magnitude=L * L + rhs,
        active_modes=modes,
        rigid=rigid,
        tolerance=tolerance,
    )


def length_form_even(p, m: int, *, auto_recenter: bool = False, tolerance: float | None = None) -> InequalityReport:
    """Perimeter version of the even-order bound.

    ``2 cos^2(pi/k) (L^2 - 4 k tan(pi/k) F) <= k W + (k / |S_{m,0}|) sum_l S_{m,l} ||D^{l-1}(kappa + x_1 z)||^2``;
    equality iff ``z = zeta_nu R_nu`` for a single ``0 < |nu| <= m``.
    """
    if m % 2 != 0:
        raise ParameterError(f"length_form_even needs an even order, got m={m}")
    p, z, zeta = _prepare(p, m, auto_recenter)
    k = p.k
    tab = discrete_table(m, k)
    x1 = tab.base
    cos2 = np.cos(np.pi / k) ** 2
    s_abs = abs(tab.s[0])
    L = perimeter(p)
    F = signed_area(p)
    lhs = 2 * cos2 * (L * L - 4 * k * np.tan(np.pi / k) * F)
    v = curvature_vectors(p) + x1 * z
    curv = []
    for l in range(1, m):
        curv.append(k * tab.s[l] * fourier.norm_sq(v) / s_abs)
        v = _diff(v)
    W = k * regularity_defect(p)
    rhs = W + sum(curv)
    deficit = k * _diagonal(zeta, q_weights(k, m)) / s_abs + 2 * cos2 * side_length_spread(p)
    modes = _modes(zeta)
    return make_report(
        "length-even",
        k=k,
        m=m,
        lhs=lhs,
        rhs=rhs,
        direction="<=",
        deficit=deficit,
        magnitude=abs(lhs) + abs(W) + sum(abs(t) for t in curv),
        active_modes=modes,
        rigid=len(modes) == 1 and 0 < abs(modes[0]) <= m,
        tolerance=tolerance,
    )


# --------------------------------------------------------------------------
# sparse-mode lemma


@dataclass(frozen=True)
class SparseModeResult:
    passes: bool
    nonzero_count: int
    max_correlation: float
    correlations: dict[int, complex]


def mode_correlations(a: Mapping[int, complex]) -> dict[int, complex]:
    """``c_n = sum_{p - q = n} a_p conj(a_q)`` for every ``n != 0``."""
    out: dict[int, complex] = {}
    items = [(int(p), complex(v)) for p, v in a.items()]
    for p, ap in items:
        for q, aq in items:
            n = p - q
            if n != 0:
                out[n] = out.get(n, 0j) + ap * aq.conjugate()
    return out


def sparse_mode_check(a: Mapping[int, complex], threshold: float = 1e-12) -> SparseModeResult:
    """Do all off-diagonal correlations of ``a`` vanish (below ``threshold``)?

    When they do, at most one coefficient is nonzero; ``nonzero_count``
    counts coefficients with modulus above ``sqrt(threshold)`` so the
    implication can be checked.
    """
    if any(int(p) == 0 for p in a):
        raise ParameterError("coefficient map must be indexed by nonzero modes")
    corr = mode_correlations(a)
    worst = max((abs(v) for v in corr.values()), default=0.0)
    count = sum(1 for v in a.values() if abs(v) > np.sqrt(threshold))
    return SparseModeResult(worst <= threshold, count, worst, corr)
