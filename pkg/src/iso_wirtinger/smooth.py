"""Smooth closed curves as truncated Fourier series ``z(t) = sum a_n e^{int}``.

Every ``L^2`` integral over ``[0, 2pi]`` is a coefficient sum
(``int |sum b_n e^{int}|^2 dt = 2 pi sum |b_n|^2``), so the Wirtinger-type
inequalities become finite identities in the coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np
from scipy.interpolate import PchipInterpolator

from .coeffs import smooth_table, theorem_constant
from .errors import DegenerateCurveError, HypothesisViolation, OrientationError, ParameterError
from .report import ACTIVE_MODE_RTOL, InequalityReport, make_report

SPEED_RTOL = 1e-8
MEAN_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class FourierCurve:
    """Coefficients ``a_{-N} .. a_N`` stored densely; ``coeffs[N + n] = a_n``."""

    coeffs: np.ndarray

    def __post_init__(self):
        a = np.array(self.coeffs, dtype=complex).ravel()
        if a.size % 2 == 0:
            raise ParameterError("coefficient array must have odd length 2N+1")
        if a.size < 3:
            raise ParameterError("truncation degree must be at least 1")
        if not np.all(np.isfinite(a)):
            raise ParameterError("curve coefficients must be finite")
        a.setflags(write=False)
        object.__setattr__(self, "coeffs", a)

    @classmethod
    def from_mapping(cls, coeffs: Mapping[int, complex], degree: int | None = None) -> "FourierCurve":
        top = max([abs(int(n)) for n in coeffs] + [1])
        N = max(top, degree or 0)
        a = np.zeros(2 * N + 1, dtype=complex)
        for n, v in coeffs.items():
            a[N + int(n)] += complex(v)
        return cls(a)

    @property
    def degree(self) -> int:
        return (self.coeffs.size - 1) // 2

    @property
    def modes(self) -> np.ndarray:
        N = self.degree
        return np.arange(-N, N + 1)

    def coefficient(self, n: int) -> complex:
        N = self.degree
        return complex(self.coeffs[N + n]) if abs(n) <= N else 0j

    def to_mapping(self) -> dict[int, complex]:
        return {int(n): complex(v) for n, v in zip(self.modes, self.coeffs) if v != 0}

    def derivative_coeffs(self, order: int = 1) -> np.ndarray:
        return (1j * self.modes) ** order * self.coeffs

    def derivative(self, order: int = 1) -> "FourierCurve":
        return FourierCurve(self.derivative_coeffs(order))

    def evaluate(self, t, order: int = 0) -> np.ndarray:
        """``z^(order)(t)`` by direct summation at arbitrary parameters."""
        t = np.asarray(t, dtype=float)
        phase = np.exp(1j * np.multiply.outer(t, self.modes))
        return phase @ self.derivative_coeffs(order)

    def sample(self, points: int, order: int = 0) -> np.ndarray:
        """``z^(order)`` on the uniform grid ``t_j = 2 pi j / points``."""
        N = self.degree
        if points < 2 * N + 1:
            return self.evaluate(2 * np.pi * np.arange(points) / points, order)
        spec = np.zeros(points, dtype=complex)
        spec[self.modes % points] = self.derivative_coeffs(order)
        return np.fft.ifft(spec) * points

    def recentered(self) -> "FourierCurve":
        a = self.coeffs.copy()
        a[self.degree] = 0
        return FourierCurve(a)

    def reversed(self) -> "FourierCurve":
        """Same image traversed backwards, ``t -> -t``."""
        return FourierCurve(self.coeffs[::-1])

    def __add__(self, other: "FourierCurve") -> "FourierCurve":
        N = max(self.degree, other.degree)
        out = np.zeros(2 * N + 1, dtype=complex)
        out[N - self.degree : N + self.degree + 1] += self.coeffs
        out[N - other.degree : N + other.degree + 1] += other.coeffs
        return FourierCurve(out)

    def __mul__(self, c) -> "FourierCurve":
        return FourierCurve(complex(c) * self.coeffs)

    __rmul__ = __mul__


def circle(radius: complex = 1.0, center: complex = 0.0) -> FourierCurve:
    """``center + radius e^{it}``."""
    return FourierCurve(np.array([0, center, radius], dtype=complex))


def as_curve(c) -> FourierCurve:
    if isinstance(c, FourierCurve):
        return c
    if isinstance(c, Mapping):
        return FourierCurve.from_mapping(c)
    return FourierCurve(c)


def _grid_size(c: FourierCurve) -> int:
    return max(8 * c.degree + 1, 257)


def l2_integral(coeffs) -> float:
    """``int_0^{2pi} |sum b_n e^{int}|^2 dt = 2 pi sum |b_n|^2``."""
    return float(2 * np.pi * np.sum(np.abs(np.asarray(coeffs)) ** 2))


def speed(c: FourierCurve, points: int | None = None) -> np.ndarray:
    return np.abs(c.sample(points or _grid_size(c), 1))


def speed_deviation(c: FourierCurve, points: int | None = None) -> float:
    """``max | |z'| - mean |z'| | / mean |z'|`` on a uniform grid."""
    v = speed(c, points)
    mean = v.mean()
    if mean == 0:
        return math.inf
    return float(np.abs(v - mean).max() / mean)


def has_constant_speed(c: FourierCurve, rtol: float = SPEED_RTOL) -> bool:
    return speed_deviation(c) <= rtol


def curve_length(c, points: int | None = None) -> float:
    """``int_0^{2pi} |z'(t)| dt`` by the trapezoid rule on ``>= 8N+1`` points."""
    c = as_curve(c)
    v = speed(c, points)
    return float(2 * np.pi * v.mean())


def curve_area(c) -> float:
    """Signed enclosed area ``pi sum n |a_n|^2``."""
    c = as_curve(c)
    return float(np.pi * np.sum(c.modes * np.abs(c.coeffs) ** 2))


def _require_zero_mean(c: FourierCurve, auto_recenter: bool) -> FourierCurve:
    top = np.abs(c.coeffs).max()
    if abs(c.coefficient(0)) <= MEAN_RTOL * max(top, 1e-300):
        return c
    if auto_recenter:
        return c.recentered()
    raise HypothesisViolation(f"curve has nonzero mean a_0 = {c.coefficient(0):.3e}")


def wirtinger_weights(modes: np.ndarray, m: int) -> np.ndarray:
    """``prod_{j=1..m} (n^2 - j^2)`` with exact integer arithmetic."""
    out = []
    for n in modes:
        w = 1
        for j in range(1, m + 1):
            w *= int(n) * int(n) - j * j
        out.append(float(w))
    return np.array(out)


def _active(c: FourierCurve) -> list[int]:
    mags = np.abs(c.coeffs)
    top = mags.max()
    if top == 0:
        return []
    return [int(n) for n in c.modes[mags > ACTIVE_MODE_RTOL * top]]


def wirtinger_deficit(c: FourierCurve, m: int) -> float:
    """``2 pi sum_n prod_j (n^2 - j^2) |a_n|^2``: every term is nonnegative."""
    return float(2 * np.pi * np.sum(wirtinger_weights(c.modes, m) * np.abs(c.coeffs) ** 2))


def _gen_terms(c: FourierCurve, m: int) -> list[float]:
    tab = smooth_table(m)
    n = c.modes
    a = c.coeffs
    # int (|z'|^2 - |z|^2) dt, then int |z^(l+1) + z^(l-1)|^2 dt
    first = tab.leading * (l2_integral(1j * n * a) - l2_integral(a))
    rest = [tab.s[l] * l2_integral((1j * n) ** (l - 1) * (1 - n * n) * a) for l in range(1, m)]
    return [first] + rest


def gen_wirtinger(c, m: int, *, auto_recenter: bool = False, tolerance: float | None = None) -> InequalityReport:
    """``0 <= P_m(1) int (|z'|^2 - |z|^2) + sum_l s_{m,l} int |z^(l+1) + z^(l-1)|^2`` for zero-mean ``z``."""
    if m < 1:
        raise ParameterError(f"order m must be at least 1, got {m}")
    c = _require_zero_mean(as_curve(c), auto_recenter)
    terms = _gen_terms(c, m)
    modes = _active(c)
    return make_report(
        "gen-wirtinger",
        k=None,
        m=m,
        lhs=0.0,
        rhs=sum(terms),
        direction="<=",
        deficit=wirtinger_deficit(c, m),
        magnitude=sum(abs(t) for t in terms),
        active_modes=modes,
        rigid=all(0 < abs(v) <= m for v in modes),
        tolerance=tolerance,
    )


@dataclass(frozen=True)
class SmoothTerms:
    """Geometric quantities of a constant-speed curve, from the t-domain identities."""

    length: float
    area: float
    normal_term: float  # int_C |z - (L/2pi) n|^2 ds
    curvature_terms: tuple[float, ...]  # int_C |(d/ds)^(l-1)(z + (L/2pi)^2 kappa)|^2 ds, l = 1..


def smooth_terms(c: FourierCurve, upto: int) -> SmoothTerms:
    """``L``, ``F`` and the arclength integrals, for a constant-speed parametrization.

    With ``t = 2 pi s / L`` one has ``z + (L/2pi)^2 kappa = z + z''(t)``,
    ``(L/2pi) n = -i z'(t)`` and ``ds = (L/2pi) dt``.
    """
    n = c.modes
    a = c.coeffs
    L = curve_length(c)
    r = L / (2 * np.pi)
    normal = r * l2_integral((1 - n) * a)
    curv = tuple(
        r ** (3 - 2 * l) * l2_integral((1j * n) ** (l - 1) * (1 - n * n) * a) for l in range(1, upto + 1)
    )
    return SmoothTerms(L, curve_area(c), normal, curv)


def kl_expression(c: FourierCurve) -> float:
    """``int_C |z - (L/2pi) n|^2 + (1/3) int_C |z + (L/2pi)^2 kappa|^2 - (L / 2pi^2)(L^2 - 4 pi F)``."""
    t = smooth_terms(c, 1)
    L = t.length
    return t.normal_term + t.curvature_terms[0] / 3 - L / (2 * np.pi**2) * (L * L - 4 * np.pi * t.area)


def smooth_isoperimetric(
    c,
    m: int,
    *,
    auto_recenter: bool = False,
    auto_reparametrize: bool = False,
    tolerance: float | None = None,
) -> InequalityReport:
    """Higher-order isoperimetric inequality for a closed curve with centroid 0.

    ``0 <= sum_l s_{m,l} (L/2pi)^(2l-3) int_C |(d/ds)^(l-1)(z + (L/2pi)^2 kappa)|^2 ds
    - ((-1)^m / 2)(m-1)!(m+1)! ((L^2 - 4 pi F)/pi - (2pi/L) int_C |z - (L/2pi) n|^2 ds)``.

    The input must be a constant-speed, positively oriented parametrization.
    Its value equals the zero-mean Wirtinger form of the same coefficients,
    so the deficit is the same nonnegative coefficient sum.  Simplicity of
    the curve is not checked (it is not used by the computation).
    """
    if m < 1:
        raise ParameterError(f"order m must be at least 1, got {m}")
    c = as_curve(c)
    if not has_constant_speed(c):
        if not auto_reparametrize:
            raise HypothesisViolation(
                f"curve speed deviates by {speed_deviation(c):.2e} from constant; "
                "pass auto_reparametrize=True to reparametrize by arclength"
            )
        c = reparametrize_by_arclength(c)
    if curve_area(c) <= 0:
        raise OrientationError("curve is not positively oriented (signed area <= 0)")
    c = _require_zero_mean(c, auto_recenter)
    tab = smooth_table(m)
    geo = smooth_terms(c, m - 1)
    L, F = geo.length, geo.area
    r = L / (2 * np.pi)
    curv = [tab.s[l] * r ** (2 * l - 3) * geo.curvature_terms[l - 1] for l in range(1, m)]
    iso = (L * L - 4 * np.pi * F) / np.pi
    normal = geo.normal_term / r
    const = theorem_constant(m)
    terms = curv + [const * iso, -const * normal]
    modes = _active(c)
    return make_report(
        "smooth-higher",
        k=None,
        m=m,
        lhs=0.0,
        rhs=sum(terms),
        direction="<=",
        deficit=wirtinger_deficit(c, m),
        magnitude=sum(abs(t) for t in terms),
        active_modes=modes,
        rigid=modes == [1],
        tolerance=tolerance,
        extras={
            "length": L,
            "area": F,
            "speed_deviation": speed_deviation(c),
            "simplicity_checked": False,
        },
    )


# --------------------------------------------------------------------------
# arclength reparametrization


def _arclength_series(c: FourierCurve, points: int):
    """Speed samples and its Fourier coefficients (negligible tail dropped)."""
    v = np.abs(c.sample(points, 1))
    if v.min() <= 1e-10 * v.max():
        raise DegenerateCurveError("curve speed vanishes on the sampling grid")
    sig = np.fft.fft(v) / points
    half = points // 2
    mags = np.abs(sig[:half])
    keep = np.nonzero(mags > 1e-15 * mags[0])[0]
    top = min(int(keep.max()) + 4, half - 1)
    return float(sig[0].real), sig, top


def _arclength_on_grid(mean: float, sig: np.ndarray) -> np.ndarray:
    """``s(t_j) = int_0^{t_j} |z'|`` on the sampling grid, via the FFT."""
    points = sig.size
    n = np.fft.fftfreq(points, 1.0 / points)
    anti = np.zeros(points, dtype=complex)
    nz = (n != 0) & (np.abs(n) != points // 2)
    anti[nz] = sig[nz] / (1j * n[nz])
    periodic = (np.fft.ifft(anti) * points).real
    t = 2 * np.pi * np.arange(points) / points
    return mean * t + periodic - periodic[0]


def _arclength_at(t, mean: float, sig: np.ndarray, top: int) -> np.ndarray:
    """``s(t)`` at arbitrary parameters from the first ``top`` speed modes."""
    t = np.asarray(t, dtype=float)
    base = np.exp(1j * t)
    phase = np.cumprod(np.broadcast_to(base[:, None], (t.size, top)), axis=1)
    n = np.arange(1, top + 1)
    periodic = 2 * ((phase - 1) @ (sig[1 : top + 1] / (1j * n))).real
    return mean * t + periodic


def _inverse_arclength(c: FourierCurve, points: int, newton_steps: int) -> np.ndarray:
    """Parameters ``t(u_j)`` with ``s(t(u_j)) = L u_j / 2pi`` on a uniform ``u`` grid."""
    mean, sig, top = _arclength_series(c, points)
    L = 2 * np.pi * mean
    grid = 2 * np.pi * np.arange(points + 1) / points
    s_grid = np.append(_arclength_on_grid(mean, sig), L)
    target = L * np.arange(points) / points
    t = PchipInterpolator(s_grid, grid)(target)
    for _ in range(newton_steps):
        step = (_arclength_at(t, mean, sig, top) - target) / np.abs(c.evaluate(t, 1))
        t = t - step
        if np.abs(step).max() < 1e-15:
            break
    return t


def reparametrize_by_arclength(
    c, target_degree: int | None = None, *, rtol: float = SPEED_RTOL, newton_steps: int = 4
) -> FourierCurve:
    """Same image, traversed at constant speed, re-expanded to ``target_degree``.

    The curve is sampled on ``max(16 * degree, 4096)`` points, the cumulative
    arclength is inverted by monotone interpolation refined with Newton
    steps, and the composition is transformed back to coefficients.  With
    ``target_degree=None`` the degree is the smallest one past which the
    coefficients are below ``1e-14`` of the largest.
    """
    c = as_curve(c)
    if target_degree is not None and target_degree < 1:
        raise ParameterError("target_degree must be at least 1")
    if has_constant_speed(c, min(rtol, 1e-12)):
        return c if target_degree is None else FourierCurve.from_mapping(c.to_mapping(), target_degree)
    points = max(16 * (target_degree or 0), 4096)
    t = _inverse_arclength(c, points, newton_steps)
    spec = np.fft.fft(c.evaluate(t)) / points
    if target_degree is None:
        n = np.fft.fftfreq(points, 1.0 / points).astype(int)
        big = np.abs(spec) > 1e-14 * np.abs(spec).max()
        degree = max(int(np.abs(n[big]).max()), c.degree)
        degree = min(degree, points // 16)
    else:
        degree = target_degree
    modes = np.arange(-degree, degree + 1)
    out = FourierCurve(spec[modes % points])
    dev = speed_deviation(out)
    if dev > rtol:
        raise DegenerateCurveError(
            f"speed deviation {dev:.2e} after reparametrization exceeds {rtol:g} at degree {degree}"
        )
    return out


def random_curve(degree: int, *, seed=None, rng=None, perturbation: float = 0.5) -> FourierCurve:
    """``e^{it}`` plus random modes with ``sum_{n != 1} |n| |a_n| = perturbation < 1``.

    The speed stays above ``1 - perturbation`` and the tangent winds once,
    so the curve is immersed with positive signed area.  Zero mean.
    """
    if degree < 1:
        raise ParameterError("degree must be at least 1")
    if not 0 <= perturbation < 1:
        raise ParameterError("perturbation must lie in [0, 1)")
    if rng is None:
        rng = np.random.default_rng(seed)
    n = np.arange(-degree, degree + 1)
    a = (rng.normal(size=n.size) + 1j * rng.normal(size=n.size)) / (1.0 + np.abs(n)) ** 2
    a[(n == 0) | (n == 1)] = 0
    weight = np.sum(np.abs(n) * np.abs(a))
    if weight > 0:
        a *= perturbation / weight
    a[n == 1] = 1.0
    return FourierCurve(a)


def equality_curve(m: int, *, seed=None, rng=None) -> FourierCurve:
    """Random zero-mean curve supported on ``1 <= |n| <= m``."""
    if m < 1:
        raise ParameterError("m must be at least 1")
    if rng is None:
        rng = np.random.default_rng(seed)
    n = np.arange(-m, m + 1)
    a = rng.normal(size=n.size) + 1j * rng.normal(size=n.size)
    a[n == 0] = 0
    return FourierCurve(a)
