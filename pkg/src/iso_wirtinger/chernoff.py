"""Support functions, the operators T_k and A, widths, curvature-centre loci
and the higher-order Chernoff inequalities.

A support function is a real trigonometric polynomial
``h(theta) = sum a_n e^{in theta}`` with ``a_{-n} = conj(a_n)``.  ``T_k`` and
``A = 1 + d^2/dtheta^2`` are diagonal on ``e^{in theta}`` with eigenvalues

    beta_n  = (-1)^(n/k) if k | n else 0
    delta_n = 1 - n^2

so ``(T_k - A)^m`` is diagonal with eigenvalue ``(beta_n - delta_n)^m >= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping

import numpy as np

from .errors import HypothesisViolation, ParameterError
from .report import ACTIVE_MODE_RTOL, InequalityReport, make_report

REALITY_ATOL = 1e-14


@dataclass(frozen=True, eq=False)
class SupportFunction:
    """Coefficients ``a_{-N} .. a_N`` of a real function; ``coeffs[N + n] = a_n``."""

    coeffs: np.ndarray

    def __post_init__(self):
        a = np.array(self.coeffs, dtype=complex).ravel()
        if a.size % 2 == 0:
            raise ParameterError("coefficient array must have odd length 2N+1")
        if not np.all(np.isfinite(a)):
            raise ParameterError("support coefficients must be finite")
        gap = np.abs(a - np.conj(a[::-1])).max()
        if gap > REALITY_ATOL * max(1.0, np.abs(a).max()):
            raise ParameterError(f"coefficients are not conjugate-symmetric (gap {gap:.2e})")
        a.setflags(write=False)
        object.__setattr__(self, "coeffs", a)

    @classmethod
    def from_mapping(cls, coeffs: Mapping[int, complex], degree: int | None = None) -> "SupportFunction":
        """From a full map ``n -> a_n``; both ``n`` and ``-n`` must be present when nonzero."""
        top = max([abs(int(n)) for n in coeffs] + [0])
        N = max(top, degree or 0)
        a = np.zeros(2 * N + 1, dtype=complex)
        for n, v in coeffs.items():
            a[N + int(n)] += complex(v)
        return cls(a)

    @classmethod
    def from_nonnegative(cls, coeffs: Mapping[int, complex]) -> "SupportFunction":
        """From ``a_0`` (real part used) and ``a_n`` for ``n > 0``; negative modes by conjugation."""
        full: dict[int, complex] = {}
        for n, v in coeffs.items():
            n = int(n)
            if n < 0:
                raise ParameterError("from_nonnegative takes modes n >= 0 only")
            if n == 0:
                full[0] = complex(v).real
            else:
                full[n] = complex(v)
                full[-n] = complex(v).conjugate()
        return cls.from_mapping(full)

    @property
    def degree(self) -> int:
        return (self.coeffs.size - 1) // 2

    @property
    def modes(self) -> np.ndarray:
        N = self.degree
        return np.arange(-N, N + 1)

    def coefficient(self, n: int) -> complex:
        return complex(self.coeffs[self.degree + n]) if abs(n) <= self.degree else 0j

    def to_mapping(self) -> dict[int, complex]:
        return {int(n): complex(v) for n, v in zip(self.modes, self.coeffs) if v != 0}

    def derivative_coeffs(self, order: int = 1) -> np.ndarray:
        return (1j * self.modes) ** order * self.coeffs

    def evaluate(self, theta, order: int = 0) -> np.ndarray:
        """``h^(order)(theta)`` (real) by direct summation."""
        theta = np.asarray(theta, dtype=float)
        phase = np.exp(1j * np.multiply.outer(theta, self.modes))
        return (phase @ self.derivative_coeffs(order)).real

    def sample(self, points: int, order: int = 0) -> np.ndarray:
        return self.evaluate(2 * np.pi * np.arange(points) / points, order)

    def scaled(self, factors: np.ndarray) -> "SupportFunction":
        return SupportFunction(self.coeffs * factors)

    def padded(self, degree: int) -> "SupportFunction":
        if degree <= self.degree:
            return self
        return SupportFunction.from_mapping(self.to_mapping(), degree)

    def __add__(self, other: "SupportFunction") -> "SupportFunction":
        N = max(self.degree, other.degree)
        return SupportFunction(self.padded(N).coeffs + other.padded(N).coeffs)

    def __mul__(self, c: float) -> "SupportFunction":
        return SupportFunction(float(c) * self.coeffs)

    __rmul__ = __mul__


def as_support(h) -> SupportFunction:
    if isinstance(h, SupportFunction):
        return h
    if isinstance(h, Mapping):
        return SupportFunction.from_mapping(h)
    return SupportFunction(h)


def support_circle(radius: float = 1.0, center: complex = 0.0) -> SupportFunction:
    """Support function of the circle of the given radius and centre."""
    center = complex(center)
    return SupportFunction(np.array([center / 2, radius, center.conjugate() / 2], dtype=complex))


def translate(h: SupportFunction, shift: complex) -> SupportFunction:
    """Support function of the translated body: ``h + Re(conj(shift) e^{i theta})``."""
    return as_support(h) + support_circle(0.0, shift)


def _check_k(k: int):
    if k < 2:
        raise ParameterError(f"k must be at least 2, got {k}")


def beta(n, k: int) -> np.ndarray:
    """Eigenvalues of ``T_k``: ``(-1)^(n/k)`` when ``k | n``, else 0."""
    _check_k(k)
    n = np.asarray(n, dtype=int)
    q, r = np.divmod(n, k)
    return np.where(r == 0, np.where(q % 2 == 0, 1, -1), 0)


def delta(n) -> np.ndarray:
    """Eigenvalues of ``A``: ``1 - n^2``."""
    n = np.asarray(n, dtype=int)
    return 1 - n * n


def apply_T_k(h, k: int) -> SupportFunction:
    """``T_k[h](theta) = (1/k) sum_{m=1..k} h(theta + (2m-1) pi / k)``."""
    h = as_support(h)
    return h.scaled(beta(h.modes, k))


def apply_A(h) -> SupportFunction:
    """``A[h] = h + h''``, the radius of curvature for a support function."""
    h = as_support(h)
    return h.scaled(delta(h.modes))


def width_k(h, k: int) -> SupportFunction:
    """``w_k(theta) = sum_{j=0}^{k-1} h(theta + 2 j pi / k)``."""
    _check_k(k)
    h = as_support(h)
    return h.scaled(np.where(h.modes % k == 0, k, 0))


def radius_of_curvature(h, points: int | None = None) -> np.ndarray:
    h = as_support(h)
    return apply_A(h).sample(points or 4 * h.degree + 1)


def is_convex(h, points: int | None = None) -> bool:
    """Certificate ``h + h'' > 0`` on a ``4N+1`` point grid."""
    return bool(radius_of_curvature(h, points).min() > 0)


def mixed_area(h1, h2, j: int = 0) -> float:
    """``(1/2) int (h1^(j) h2^(j) - h1^(j+1) h2^(j+1)) dtheta``.

    Equals ``pi sum_n n^(2j) (1 - n^2) Re(a_n conj(b_n))``.
    """
    if j < 0:
        raise ParameterError("locus order must be nonnegative")
    h1 = as_support(h1)
    h2 = as_support(h2)
    N = max(h1.degree, h2.degree)
    a = h1.padded(N).coeffs
    b = h2.padded(N).coeffs
    n = np.arange(-N, N + 1).astype(float)
    return float(np.pi * np.sum(n ** (2 * j) * (1 - n * n) * (a * np.conj(b)).real))


def locus_area(h, j: int = 0) -> float:
    """Algebraic area of the ``j``-th locus of curvature centres, ``pi sum n^(2j)(1-n^2)|a_n|^2``."""
    return mixed_area(h, h, j)


def support_curve_points(h, samples: int, order: int = 0) -> np.ndarray:
    """Points of ``gamma_(order)``: ``e^{i theta} (i^j h^(j) + i^(j+1) h^(j+1))``.

    ``order = 0`` is ``gamma = h n + h' t``; ``order = 1`` is the locus of
    curvature centres ``h' t - h'' n``.
    """
    if samples < 3:
        raise ParameterError("need at least 3 samples")
    if order < 0:
        raise ParameterError("locus order must be nonnegative")
    h = as_support(h)
    theta = 2 * np.pi * np.arange(samples) / samples
    hj = h.evaluate(theta, order)
    hj1 = h.evaluate(theta, order + 1)
    return np.exp(1j * theta) * (1j**order * hj + 1j ** (order + 1) * hj1)


def _quad_grid(h: SupportFunction, extra: int = 0) -> int:
    return 4 * (h.degree + extra) + 4


def _periodic_mean(values: np.ndarray) -> float:
    return float(np.mean(values))


def odd_width_integral(h, k: int) -> float:
    """``(1/k) int_0^{pi/k} w_k(theta) w_k(theta + pi/k) dtheta`` (trapezoid, exact here)."""
    h = as_support(h)
    w = width_k(h, k)
    pts = _quad_grid(h)
    theta = (np.pi / k) * np.arange(pts) / pts
    vals = w.evaluate(theta) * w.evaluate(theta + np.pi / k)
    # the integrand has period pi/k
    return (np.pi / k) * _periodic_mean(vals) / k


def even_width_integral(h, k: int) -> float:
    """``(1/2k) int_0^{2pi/k} w_k(theta)^2 dtheta``."""
    h = as_support(h)
    w = width_k(h, k)
    pts = _quad_grid(h)
    theta = (2 * np.pi / k) * np.arange(pts) / pts
    return (2 * np.pi / k) * _periodic_mean(w.evaluate(theta) ** 2) / (2 * k)


def _quadrature(values: np.ndarray) -> float:
    return 2 * np.pi * float(np.mean(values))


def chernoff_multipliers(n, k: int, m: int) -> np.ndarray:
    """``(beta_n - delta_n)^m`` in exact integer arithmetic."""
    return np.array([float((int(b) - int(d)) ** m) for b, d in zip(beta(n, k), delta(n))])


def chernoff_deficit(h: SupportFunction, k: int, m: int) -> float:
    """``2 pi sum_n (beta_n - delta_n)^m |a_n|^2``, a sum of nonnegative terms."""
    return float(2 * np.pi * np.sum(chernoff_multipliers(h.modes, k, m) * np.abs(h.coeffs) ** 2))


def _circle_modes(h: SupportFunction) -> tuple[list[int], bool]:
    mags = np.abs(h.coeffs)
    top = mags.max()
    if top == 0:
        return [], True
    active = [int(n) for n in h.modes[mags > ACTIVE_MODE_RTOL * top]]
    return active, all(abs(n) <= 1 for n in active)


def _check_order(k: int, m: int):
    _check_k(k)
    if m < 1:
        raise ParameterError(f"order m must be at least 1, got {m}")


def chernoff_core(h, k: int, m: int, *, tolerance: float | None = None) -> InequalityReport:
    """``int_0^{2pi} h (T_k - A)^m [h] dtheta >= 0``; equality iff ``h`` has modes ``|n| <= 1`` only."""
    _check_order(k, m)
    h = as_support(h)
    g = h.scaled(chernoff_multipliers(h.modes, k, m))
    pts = _quad_grid(h)
    hv = h.sample(pts)
    gv = g.sample(pts)
    modes, rigid = _circle_modes(h)
    return make_report(
        "chernoff-core",
        k=k,
        m=m,
        lhs=_quadrature(hv * gv),
        rhs=0.0,
        direction=">=",
        deficit=chernoff_deficit(h, k, m),
        magnitude=_quadrature(np.abs(hv * gv)),
        active_modes=modes,
        rigid=rigid,
        tolerance=tolerance,
    )


def _mixed_sum(h: SupportFunction, other: SupportFunction, p: int) -> float:
    """``sum_{r=0}^{p-1} (-1)^r C(p-1, r) F[h_(r), other_(r)]``."""
    return sum((-1) ** r * comb(p - 1, r) * mixed_area(h, other, r) for r in range(p))


@dataclass(frozen=True)
class ChernoffTerms:
    area_sum: float  # sum_r (-1)^r C(m-1, r) F[gamma_(r)]
    width_term: float
    even_mixed: float  # sum over even j of C(m, j) * mixed sum with T_k^2 gamma
    odd_mixed: float  # same over odd j with T_k gamma


def chernoff_terms(h, k: int, m: int) -> ChernoffTerms:
    _check_order(k, m)
    h = as_support(h)
    Th = apply_T_k(h, k)
    TTh = apply_T_k(Th, k)
    area = _mixed_sum(h, h, m)
    width = odd_width_integral(h, k) if m % 2 == 1 else even_width_integral(h, k)
    even = sum(comb(m, j) * _mixed_sum(h, TTh, m - j) for j in range(2, m, 2))
    odd = sum(comb(m, j) * _mixed_sum(h, Th, m - j) for j in range(1, m, 2))
    return ChernoffTerms(area, width, even, odd)


def chernoff_theorem(
    h, k: int, m: int, *, require_convex: bool = False, tolerance: float | None = None
) -> InequalityReport:
    """Higher-order Chernoff inequality in terms of loci areas, mixed areas and widths.

    Odd ``m``::

        sum_r (-1)^r C(m-1,r) F[gamma_(r)]
            <= (1/k) int_0^{pi/k} w_k(t) w_k(t + pi/k) dt - M_even + M_odd

    Even ``m``::

        -sum_r (-1)^r C(m-1,r) F[gamma_(r)]
            <= (1/2k) int_0^{2pi/k} w_k^2 dt + M_even - M_odd

    where ``M_even`` (``M_odd``) collects the mixed areas of the loci of
    ``gamma`` with those of ``T_k^2 gamma`` (``T_k gamma``).  Either side is
    half of ``int h (T_k - A)^m [h]``, so the deficit is reported as twice
    the displayed slack and coincides with :func:`chernoff_core`.  For
    ``m = 1`` this is ``F <= (1/k) int_0^{pi/k} w_k w_k(. + pi/k)``.
    """
    _check_order(k, m)
    h = as_support(h)
    convex = is_convex(h)
    if require_convex and not convex:
        raise HypothesisViolation("support function fails the convexity certificate h + h'' > 0")
    t = chernoff_terms(h, k, m)
    sign = 1 if m % 2 == 1 else -1
    lhs = sign * t.area_sum
    rhs = t.width_term - sign * t.even_mixed + sign * t.odd_mixed
    modes, rigid = _circle_modes(h)
    return make_report(
        "chernoff",
        k=k,
        m=m,
        lhs=lhs,
        rhs=rhs,
        direction="<=",
        deficit=chernoff_deficit(h, k, m),
        magnitude=2 * (abs(t.area_sum) + abs(t.width_term) + abs(t.even_mixed) + abs(t.odd_mixed)),
        active_modes=modes,
        rigid=rigid,
        tolerance=tolerance,
        deficit_factor=2.0,
        extras={
            "convex": convex,
            "T_k_convex": is_convex(apply_T_k(h, k)) if convex else None,
        },
    )


def binomial_area_identity(h, m: int) -> tuple[float, float]:
    """Both sides of ``int h A^m[h] dtheta = 2 sum_{r<m} (-1)^r C(m-1,r) F[gamma_(r)]``."""
    if m < 1:
        raise ParameterError(f"order m must be at least 1, got {m}")
    h = as_support(h)
    pts = _quad_grid(h)
    left = _quadrature(h.sample(pts) * h.scaled(delta(h.modes) ** m).sample(pts))
    return left, 2 * _mixed_sum(h, h, m)


def random_support(degree: int, *, seed=None, rng=None, roughness: float = 0.9) -> SupportFunction:
    """``h = 1 + sum_{2<=|n|<=N} a_n e^{in theta}`` with ``sum (n^2 - 1)|a_n| <= roughness/2``.

    The radius of curvature ``h + h''`` then stays above ``1 - roughness``,
    so the function is the support function of a smooth convex body.
    Translations (modes +-1) are random too.
    """
    if degree < 1:
        raise ParameterError("degree must be at least 1")
    if not 0 <= roughness < 1:
        raise ParameterError("roughness must lie in [0, 1)")
    if rng is None:
        rng = np.random.default_rng(seed)
    pos = {}
    n = np.arange(2, degree + 1)
    a = rng.normal(size=n.size) + 1j * rng.normal(size=n.size)
    weight = 2 * np.sum((n * n - 1) * np.abs(a))
    if weight > 0:
        a *= roughness * rng.uniform(0.2, 1.0) / weight
    pos.update({int(v): complex(c) for v, c in zip(n, a)})
    pos[1] = complex(rng.normal(), rng.normal())
    pos[0] = 1.0
    return SupportFunction.from_nonnegative(pos).padded(degree)
