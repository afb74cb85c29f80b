"""Polygons as points of C^k: polygonal forms, tangent/curvature vectors, generators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from . import fourier
from .errors import HypothesisViolation, ParameterError

CENTROID_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class Polygon:
    """An ordered k-tuple of complex vertices, k >= 3.

    Non-simple and non-convex polygons are allowed; the area is always the
    signed (algebraic) one.
    """

    vertices: np.ndarray

    def __post_init__(self):
        z = np.array(self.vertices, dtype=complex).ravel()
        if z.size < 3:
            raise ParameterError(f"a polygon needs at least 3 vertices, got {z.size}")
        if not np.all(np.isfinite(z)):
            raise ParameterError("polygon vertices must be finite")
        z.setflags(write=False)
        object.__setattr__(self, "vertices", z)

    @property
    def k(self) -> int:
        return self.vertices.size

    @property
    def z(self) -> np.ndarray:
        return self.vertices

    def spectrum(self) -> np.ndarray:
        return fourier.forward_transform(self.vertices)

    def __len__(self) -> int:
        return self.k

    def __add__(self, other):
        if isinstance(other, Polygon):
            return Polygon(self.vertices + other.vertices)
        return Polygon(self.vertices + complex(other))

    def __mul__(self, c):
        return Polygon(complex(c) * self.vertices)

    __rmul__ = __mul__

    def conjugate(self) -> "Polygon":
        return Polygon(np.conj(self.vertices))

    def shift(self, n: int = 1) -> "Polygon":
        return Polygon(fourier.cyclic_shift(self.vertices, n))

    def __repr__(self) -> str:
        return f"Polygon(k={self.k}, vertices={np.array2string(self.vertices, precision=4)})"


def as_polygon(p) -> Polygon:
    return p if isinstance(p, Polygon) else Polygon(p)


def signed_area(p) -> float:
    """``F(P) = (1/4i) sum (z_{j+1} conj(z_j) - z_j conj(z_{j+1}))``."""
    z = as_polygon(p).z
    return 0.5 * float(np.sum(np.roll(z, -1) * np.conj(z)).imag)


def squared_side_sum(p) -> float:
    """``S(P) = ||z'||^2``, the sum of squared side lengths."""
    return fourier.norm_sq(fourier.derivative(as_polygon(p).z, 1))


def side_lengths(p) -> np.ndarray:
    return np.abs(fourier.derivative(as_polygon(p).z, 1))


def perimeter(p) -> float:
    return float(np.sum(side_lengths(p)))


def side_length_spread(p) -> float:
    """``k*S - L^2``, evaluated as ``k * sum (l_j - mean l)^2`` (no cancellation)."""
    ell = side_lengths(p)
    return float(ell.size * np.sum((ell - ell.mean()) ** 2))


def is_equilateral(p, rtol: float = 1e-9) -> bool:
    ell = side_lengths(p)
    top = ell.max()
    return bool(top > 0 and (top - ell.min()) <= rtol * top)


def tangent_vectors(p) -> np.ndarray:
    """``t = z'``: the side vector leaving each vertex."""
    return fourier.derivative(as_polygon(p).z, 1)


def curvature_vectors(p) -> np.ndarray:
    """``kappa = tau z''``: change of tangent across each vertex."""
    z = as_polygon(p).z
    return np.roll(z, -1) - 2.0 * z + np.roll(z, 1)


def centroid(p) -> complex:
    return complex(np.mean(as_polygon(p).z))


def recenter(p) -> Polygon:
    z = as_polygon(p).z
    return Polygon(z - z.mean())


def has_zero_centroid(p, rtol: float = CENTROID_RTOL) -> bool:
    z = as_polygon(p).z
    return abs(z.mean()) <= rtol * max(np.abs(z).max(), 1e-300)


def require_zero_centroid(p, auto_recenter: bool = False) -> Polygon:
    """Return a zero-centroid polygon, recentring only when explicitly allowed."""
    p = as_polygon(p)
    if has_zero_centroid(p):
        return p
    if auto_recenter:
        return recenter(p)
    raise HypothesisViolation(
        f"polygon centroid {centroid(p):.3e} is not zero; pass auto_recenter=True to recentre"
    )


def make_regular(n: int, k: int, scale: complex = 1.0) -> Polygon:
    """``scale * R_n``: vertex j is ``scale * exp(2 pi i n j / k)``."""
    if k < 3:
        raise ParameterError("k must be at least 3")
    j = np.arange(k)
    return Polygon(complex(scale) * np.exp(2j * np.pi * ((n * j) % k) / k))


def regular_area(nu, k: int):
    """``F(R_nu) = k sin(nu pi/k) cos(nu pi/k)``."""
    a = np.asarray(nu) * np.pi / k
    return k * np.sin(a) * np.cos(a)


def regular_side_sum(nu, k: int):
    """``S(R_nu) = 4 k sin^2(nu pi/k)``."""
    return k * fourier.sin_sq_symbol(k, nu)


def polygon_from_modes(k: int, modes: Mapping[int, complex]) -> Polygon:
    """Polygon ``sum_nu zeta_nu R_nu`` from a (possibly signed) mode map."""
    zeta = np.zeros(k, dtype=complex)
    for nu, c in modes.items():
        zeta[int(nu) % k] += complex(c)
    return Polygon(fourier.inverse_transform(zeta))


def random_spectrum(k: int, mode_bound: int | None = None, rng=None, seed=None) -> np.ndarray:
    """Coefficients uniform in the unit disc on ``0 < nu < k``, zero mean.

    With ``mode_bound`` set, only the modes ``nu <= mode_bound`` and
    ``nu >= k - mode_bound`` are kept.
    """
    if k < 3:
        raise ParameterError("k must be at least 3")
    if mode_bound is None:
        mode_bound = k - 1
    if not 1 <= mode_bound <= k - 1:
        raise ParameterError(f"mode_bound must lie in [1, {k - 1}], got {mode_bound}")
    if rng is None:
        rng = np.random.default_rng(seed)
    radius = np.sqrt(rng.uniform(size=k))
    phase = rng.uniform(0.0, 2 * np.pi, size=k)
    zeta = radius * np.exp(1j * phase)
    nu = np.arange(k)
    keep = (nu > 0) & ((nu <= mode_bound) | (nu >= k - mode_bound))
    return np.where(keep, zeta, 0.0)


def random_polygon(k: int, mode_bound: int | None = None, seed: int | None = None, rng=None) -> Polygon:
    """Zero-centroid random polygon sampled through its spectrum."""
    return Polygon(fourier.inverse_transform(random_spectrum(k, mode_bound, rng=rng, seed=seed)))


def random_equilateral(k: int, seed: int | None = None, rng=None) -> Polygon:
    """Zero-centroid equilateral k-gon with unit sides in random directions.

    Sides come in opposite pairs (plus one equilateral triple when ``k`` is
    odd), shuffled, so they sum to zero.
    """
    if k < 3:
        raise ParameterError("k must be at least 3")
    if rng is None:
        rng = np.random.default_rng(seed)
    angles = []
    pairs = k // 2
    if k % 2 == 1:
        base = rng.uniform(0, 2 * np.pi)
        angles += [base, base + 2 * np.pi / 3, base + 4 * np.pi / 3]
        pairs -= 1
    for phi in rng.uniform(0, 2 * np.pi, size=pairs):
        angles += [phi, phi + np.pi]
    sides = np.exp(1j * rng.permutation(np.array(angles)))
    z = np.concatenate([[0], np.cumsum(sides)[:-1]])
    return recenter(Polygon(z))
