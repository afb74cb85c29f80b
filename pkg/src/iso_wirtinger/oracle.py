"""Slow reference implementations used to cross-check the fast paths.

Everything here is a literal loop over the defining sums or a trapezoid
rule on a uniform grid.  Nothing calls into the transform, polygon or
coefficient code it is meant to check.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import ParameterError


def direct_dft(z) -> np.ndarray:
    """``zeta_nu = (1/k) sum_j z_j exp(-2 pi i nu j / k)`` by a double loop."""
    z = [complex(v) for v in z]
    k = len(z)
    out = np.zeros(k, dtype=complex)
    for nu in range(k):
        acc = 0j
        for j in range(k):
            acc += z[j] * cmath.exp(-2j * math.pi * nu * j / k)
        out[nu] = acc / k
    return out


def direct_inverse_dft(zeta) -> np.ndarray:
    zeta = [complex(v) for v in zeta]
    k = len(zeta)
    out = np.zeros(k, dtype=complex)
    for j in range(k):
        acc = 0j
        for nu in range(k):
            acc += zeta[nu] * cmath.exp(2j * math.pi * nu * j / k)
        out[j] = acc
    return out


def direct_difference(z, order: int = 1) -> list[complex]:
    """Repeated ``z_{j+1} - z_j`` with explicit index wrap-around."""
    z = [complex(v) for v in z]
    for _ in range(order):
        k = len(z)
        z = [z[(j + 1) % k] - z[j] for j in range(k)]
    return z


def direct_norm_sq(z) -> float:
    return float(sum(abs(complex(v)) ** 2 for v in z))


def direct_inner(z, w) -> complex:
    return sum(complex(a) * complex(b).conjugate() for a, b in zip(z, w))


def direct_forms(z) -> tuple[float, float, float]:
    """``(F, S, L)`` of a polygon by loops over its vertices.

    ``F = (1/4i) sum (z_{j+1} conj z_j - z_j conj z_{j+1})``,
    ``S = sum |z_{j+1} - z_j|^2``, ``L = sum |z_{j+1} - z_j|``.
    """
    z = [complex(v) for v in z]
    k = len(z)
    F = 0j
    S = 0.0
    L = 0.0
    for j in range(k):
        a, b = z[j], z[(j + 1) % k]
        F += b * a.conjugate() - a * b.conjugate()
        S += abs(b - a) ** 2
        L += abs(b - a)
    return float((F / 4j).real), S, L


def wirtinger_spectral_sum(z, m: int) -> float:
    """``k sum_{nu=m+1}^{k-m-1} prod_{j=1}^m (|1-w_nu|^2 - |1-w_j|^2) |zeta_nu|^2``."""
    zeta = direct_dft(z)
    k = len(zeta)
    total = 0.0
    for nu in range(m + 1, k - m):
        x_nu = abs(1 - cmath.exp(2j * math.pi * nu / k)) ** 2
        prod = 1.0
        for j in range(1, m + 1):
            prod *= x_nu - abs(1 - cmath.exp(2j * math.pi * j / k)) ** 2
        total += prod * abs(zeta[nu]) ** 2
    return k * total


def quadrature(samples, period: float = 2 * math.pi) -> float:
    """Trapezoid rule for periodic samples on a uniform grid covering one period."""
    samples = np.asarray(samples)
    if samples.size < 3:
        raise ParameterError("quadrature needs at least 3 samples")
    return float(period * np.sum(samples).real / samples.size)


def grid(points: int, period: float = 2 * math.pi) -> np.ndarray:
    return period * np.arange(points) / points


def beta_cosine_sum(n: int, k: int) -> float:
    """``(1/k) sum_{m=1}^{k} cos(n (2m-1) pi / k)``."""
    return sum(math.cos(n * (2 * m - 1) * math.pi / k) for m in range(1, k + 1)) / k


def pointwise_operator(h, op: str, points: int, k: int | None = None) -> np.ndarray:
    """Apply ``T_k``, ``A`` or ``width_k`` to ``h`` by its defining formula on a grid.

    ``h`` is evaluated only through ``h.evaluate(theta, order)``; shifts are
    applied to the angle, never to the coefficients.
    """
    theta = grid(points)
    if op == "A":
        return h.evaluate(theta) + h.evaluate(theta, 2)
    if k is None or k < 2:
        raise ParameterError(f"operator {op!r} needs k >= 2")
    if op == "T_k":
        return sum(h.evaluate(theta + (2 * m - 1) * math.pi / k) for m in range(1, k + 1)) / k
    if op == "width_k":
        return sum(h.evaluate(theta + 2 * j * math.pi / k) for j in range(k))
    raise ParameterError(f"unknown operator {op!r}")


def locus_area_quadrature(h, j: int, points: int) -> float:
    """``(1/2) int (h^(j)^2 - h^(j+1)^2)``."""
    theta = grid(points)
    return 0.5 * quadrature(h.evaluate(theta, j) ** 2 - h.evaluate(theta, j + 1) ** 2)


def mixed_area_quadrature(h1, h2, j: int, points: int) -> float:
    theta = grid(points)
    f = h1.evaluate(theta, j) * h2.evaluate(theta, j) - h1.evaluate(theta, j + 1) * h2.evaluate(theta, j + 1)
    return 0.5 * quadrature(f)


def chernoff_core_quadrature(h, k: int, m: int, points: int) -> float:
    """``int h (T_k - A)^m [h]`` with the operators applied pointwise on the grid.

    ``T_k`` shifts a sampled function; ``A`` uses a spectral second derivative
    of the sampled values (exact for trigonometric polynomials below Nyquist).
    """
    theta = grid(points)
    freq = np.fft.fftfreq(points, 1.0 / points)

    def op_A(vals):
        return vals + np.fft.ifft(-(freq**2) * np.fft.fft(vals)).real

    def op_T(vals):
        spec = np.fft.fft(vals)
        out = np.zeros(points)
        for mm in range(1, k + 1):
            shift = (2 * mm - 1) * math.pi / k
            out += np.fft.ifft(spec * np.exp(1j * freq * shift)).real
        return out / k

    hv = h.evaluate(theta)
    g = hv.copy()
    for _ in range(m):
        g = op_T(g) - op_A(g)
    return quadrature(hv * g)


def shoelace(points) -> float:
    """Signed area of a closed polyline."""
    p = [complex(v) for v in points]
    total = 0.0
    for a, b in zip(p, p[1:] + p[:1]):
        total += a.real * b.imag - b.real * a.imag
    return 0.5 * total


def curve_forms_quadrature(c, points: int) -> dict[str, float]:
    """Length, area and the two arclength integrals of a curve, from pointwise geometry.

    Uses the unit outward normal ``n = -i z'/|z'|`` and the curvature vector
    ``kappa = d^2 z / ds^2`` formed at each sample, with ``ds = |z'| dt``.
    Valid for any regular positively oriented parametrization.
    """
    t = grid(points)
    z = c.evaluate(t)
    d1 = c.evaluate(t, 1)
    d2 = c.evaluate(t, 2)
    sp = np.abs(d1)
    L = quadrature(sp)
    F = -0.5 * quadrature((z * np.conj(d1)).imag)
    normal = -1j * d1 / sp
    dsp = (d2 * np.conj(d1)).real / sp
    kappa = (d2 * sp - d1 * dsp) / sp**3
    r = L / (2 * math.pi)
    normal_term = quadrature(np.abs(z - r * normal) ** 2 * sp)
    curvature_term = quadrature(np.abs(z + r * r * kappa) ** 2 * sp)
    return {"length": L, "area": F, "normal_term": normal_term, "curvature_term": curvature_term}


def kl_quadrature(c, points: int) -> float:
    """``int |z - (L/2pi) n|^2 ds + (1/3) int |z + (L/2pi)^2 kappa|^2 ds - (L/2pi^2)(L^2 - 4 pi F)``."""
    f = curve_forms_quadrature(c, points)
    L = f["length"]
    return f["normal_term"] + f["curvature_term"] / 3 - L / (2 * math.pi**2) * (L * L - 4 * math.pi * f["area"])
