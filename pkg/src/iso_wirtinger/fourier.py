"""Finite Fourier analysis on C^k.

Sequences and spectra are 1-D complex numpy arrays.  The normalisation is

    zeta_nu = (1/k) * sum_j z_j * conj(omega_nu)**j,     omega_nu = exp(2*pi*i*nu/k)
    z_j     = sum_nu zeta_nu * omega_nu**j

i.e. the *forward* transform carries the 1/k (numpy's ``fft`` puts it on the
inverse).  Index arithmetic is cyclic, so ``zeta[k - l]`` is the coefficient
of mode ``-l``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import DimensionMismatchError, ParameterError

# Below this length the transform is a direct matrix product.
DIRECT_DFT_MAX = 16


def as_sequence(z) -> np.ndarray:
    arr = np.asarray(z, dtype=complex)
    if arr.ndim != 1 or arr.size < 1:
        raise ParameterError("expected a non-empty 1-D sequence")
    return arr


def roots_of_unity(k: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(k) / k)


@lru_cache(maxsize=64)
def _dft_matrix(k: int) -> np.ndarray:
    jn = np.outer(np.arange(k), np.arange(k)) % k
    mat = np.exp(-2j * np.pi * jn / k)
    mat.setflags(write=False)
    return mat


def forward_transform(z) -> np.ndarray:
    """Fourier coefficients ``zeta_0 .. zeta_{k-1}`` of ``z``."""
    z = as_sequence(z)
    k = z.size
    if k < DIRECT_DFT_MAX:
        return _dft_matrix(k) @ z / k
    return np.fft.fft(z) / k


def inverse_transform(zeta) -> np.ndarray:
    """Vertices ``z_j = sum_n zeta_n exp(2 pi i n j / k)``."""
    zeta = as_sequence(zeta)
    k = zeta.size
    if k < DIRECT_DFT_MAX:
        return np.conj(_dft_matrix(k)) @ zeta
    return np.fft.ifft(zeta) * k


def cyclic_shift(z, n: int = 1) -> np.ndarray:
    """``tau^n z``: entries move ``n`` places to the right (negative ``n`` moves left)."""
    return np.roll(as_sequence(z), n)


def derivative(z, order: int = 1) -> np.ndarray:
    """Iterated forward difference ``z_{j+1} - z_j`` (cyclic)."""
    if order < 0:
        raise ParameterError("derivative order must be nonnegative")
    out = as_sequence(z).copy()
    for _ in range(order):
        out = np.roll(out, -1) - out
    return out


def derivative_multipliers(k: int, order: int = 1) -> np.ndarray:
    """Spectral symbol ``(omega_nu - 1)**order`` of ``derivative``."""
    return (roots_of_unity(k) - 1.0) ** order


def spectral_derivative(z, order: int = 1) -> np.ndarray:
    """Same as :func:`derivative`, computed through the spectrum."""
    z = as_sequence(z)
    return inverse_transform(forward_transform(z) * derivative_multipliers(z.size, order))


def inner_product(z, w) -> complex:
    """Hermitian product ``sum_j z_j * conj(w_j)``."""
    z = as_sequence(z)
    w = as_sequence(w)
    if z.size != w.size:
        raise DimensionMismatchError(f"incompatible polygon sizes {z.size} and {w.size}")
    return complex(np.vdot(w, z))


def norm_sq(z) -> float:
    z = as_sequence(z)
    return float(np.vdot(z, z).real)


def folded_mode(nu, k: int):
    """Representative of ``nu`` in ``[0, k/2]`` up to sign (``nu`` and ``k - nu`` fold together)."""
    nu = np.asarray(nu) % k
    return np.minimum(nu, k - nu)


def signed_mode(nu, k: int):
    """Representative of ``nu`` in ``(-k/2, k/2]``."""
    nu = np.asarray(nu) % k
    return np.where(nu > k // 2, nu - k, nu)


@lru_cache(maxsize=256)
def _symbols(k: int) -> np.ndarray:
    out = 4.0 * np.sin(folded_mode(np.arange(k), k) * np.pi / k) ** 2
    out.setflags(write=False)
    return out


def sin_sq_symbol(k: int, nu=None) -> np.ndarray:
    """``|1 - omega_nu|^2 = 4 sin^2(nu pi / k)``.

    Evaluated on the folded index so that modes ``nu`` and ``k - nu`` get
    bit-identical values; differences of these symbols then vanish exactly.
    """
    if nu is None:
        return _symbols(k)
    return 4.0 * np.sin(folded_mode(nu, k) * np.pi / k) ** 2


def parseval_norm(z, order: int = 0) -> float:
    """``||z^(order)||^2`` computed from the spectrum of ``z``."""
    if order < 0:
        raise ParameterError("order must be nonnegative")
    z = as_sequence(z)
    k = z.size
    zeta = forward_transform(z)
    return float(k * np.sum(sin_sq_symbol(k) ** order * np.abs(zeta) ** 2))


def active_modes(zeta, rtol: float = 1e-9) -> list[int]:
    """Signed indices of coefficients larger than ``rtol`` times the largest one."""
    zeta = as_sequence(zeta)
    mags = np.abs(zeta)
    top = mags.max()
    if top == 0.0:
        return []
    idx = np.nonzero(mags > rtol * top)[0]
    return sorted(int(v) for v in signed_mode(idx, zeta.size))
