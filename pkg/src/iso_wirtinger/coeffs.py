"""Coefficient polynomials of the higher-order Wirtinger inequalities.

Discrete family (depends on k), with roots ``x_j = 4 sin^2(j pi / k)``::

    Q_m(x)  = prod_{j=1..m} (x - x_j)            = sum_j c[j] x^j
    P_m(x)  = prod_{j=2..m} (x - x_j)            = sum_j lam[j] x^j      (P_1 = 1)
    S_m(x)  = (P_m(x) - P_m(x_1)) / (x - x_1)    = sum_{l>=1} s[l] x^(l-1)
    s[0]    = P_m(x_1)

Smooth family: the same construction with roots ``j^2`` and base point 1.
Uppercase S in the discrete case and lowercase s in the smooth case share
the ``s`` field here.  Coefficient lists are dense, lowest degree first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CoefficientConsistencyError, OrderOutOfRangeError, ParameterError

IDENTITY_RTOL = 1e-12


@dataclass(frozen=True)
class CoefficientTable:
    m: int
    k: int | None
    roots: tuple[float, ...]
    c: tuple[float, ...]
    lam: tuple[float, ...]
    s: tuple[float, ...]

    @property
    def family(self) -> str:
        return "smooth" if self.k is None else "discrete"

    @property
    def base(self) -> float:
        """The root removed from Q_m to form P_m (``4 sin^2(pi/k)``, or 1)."""
        return self.roots[0]

    @property
    def leading(self) -> float:
        """``s[0] = P_m(base)``."""
        return self.s[0]

    def Q(self, x):
        return np.polynomial.polynomial.polyval(x, self.c)

    def P(self, x):
        return np.polynomial.polynomial.polyval(x, self.lam)

    def S(self, x):
        """Quotient polynomial ``(P_m(x) - P_m(base)) / (x - base)``."""
        if self.m == 1:
            return np.zeros_like(np.asarray(x, dtype=float))
        return np.polynomial.polynomial.polyval(x, self.s[1:])

    def rows(self):
        """(family, m, k, name+index, value) rows for CSV export."""
        k = "" if self.k is None else self.k
        for name, seq in (("c", self.c), ("lambda", self.lam), ("s", self.s)):
            for i, v in enumerate(seq):
                yield self.family, self.m, k, f"{name}_{i}", v


def poly_from_roots(roots) -> np.ndarray:
    """Coefficients (low to high) of ``prod (x - r)``, by repeated monomial multiplication."""
    coeffs = np.array([1.0])
    for r in roots:
        nxt = np.zeros(coeffs.size + 1)
        nxt[1:] += coeffs
        nxt[:-1] -= r * coeffs
        coeffs = nxt
    return coeffs


def synthetic_division(coeffs, root: float) -> tuple[np.ndarray, float]:
    """Divide ``sum coeffs[i] x^i`` by ``(x - root)``; return (quotient, remainder)."""
    coeffs = np.asarray(coeffs, dtype=float)
    n = coeffs.size - 1
    if n == 0:
        return np.zeros(0), float(coeffs[0])
    quot = np.zeros(n)
    quot[n - 1] = coeffs[n]
    for i in range(n - 1, 0, -1):
        quot[i - 1] = coeffs[i] + root * quot[i]
    rem = coeffs[0] + root * quot[0]
    return quot, float(rem)


def discrete_roots(m: int, k: int) -> np.ndarray:
    j = np.arange(1, m + 1)
    return 4.0 * np.sin(j * np.pi / k) ** 2


def _at(seq, i):
    return seq[i] if 0 <= i < len(seq) else 0.0


def _check(ok: bool, what: str, m: int, k):
    if not ok:
        raise CoefficientConsistencyError(f"{what} failed for m={m}, k={k}")


def _close(a, b, rtol=IDENTITY_RTOL) -> bool:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    scale = np.maximum(np.maximum(np.abs(a), np.abs(b)), 1.0)
    return bool(np.all(np.abs(a - b) <= rtol * scale))


def _build(m: int, k: int | None, roots: np.ndarray, leading_product: float) -> CoefficientTable:
    base = roots[0]
    c = poly_from_roots(roots)
    lam = poly_from_roots(roots[1:])
    quot, rem = synthetic_division(lam, base)
    s = np.concatenate([[rem], quot])

    # the proof identities double as self-checks
    _check(_close(rem, leading_product), "P_m(base) from division vs product", m, k)
    _check(
        _close(c, [_at(lam, j - 1) - base * _at(lam, j) for j in range(m + 1)]),
        "c_j = lam_{j-1} - base*lam_j",
        m,
        k,
    )
    _check(
        _close(lam, [_at(s, l) - base * _at(s, l + 1) for l in range(m)]),
        "lam_l = s_l - base*s_{l+1}",
        m,
        k,
    )
    _check(c[-1] == 1.0, "Q_m monic", m, k)
    return CoefficientTable(
        m=m,
        k=k,
        roots=tuple(float(r) for r in roots),
        c=tuple(float(v) for v in c),
        lam=tuple(float(v) for v in lam),
        s=tuple(float(v) for v in s),
    )


def check_discrete_order(m: int, k: int, slack: int = 0):
    if k < 3:
        raise ParameterError(f"k must be at least 3, got {k}")
    if m < 1:
        raise ParameterError(f"order m must be at least 1, got {m}")
    if m > k // 2 - slack:
        raise OrderOutOfRangeError(f"order m={m} exceeds floor(k/2){' - ' + str(slack) if slack else ''} for k={k}")


@lru_cache(maxsize=None)
def discrete_table(m: int, k: int) -> CoefficientTable:
    """Coefficients of Q_m, P_m and S_m for polygons with k vertices."""
    check_discrete_order(m, k)
    roots = discrete_roots(m, k)
    leading = float(np.prod(roots[0] - roots[1:]))
    return _build(m, k, roots, leading)


@lru_cache(maxsize=None)
def smooth_table(m: int) -> CoefficientTable:
    """Coefficients for the smooth family (roots ``j^2``, base point 1)."""
    if m < 1:
        raise ParameterError(f"order m must be at least 1, got {m}")
    roots = np.arange(1, m + 1, dtype=float) ** 2
    leading = float(np.prod(1.0 - roots[1:]))
    table = _build(m, None, roots, leading)
    _check(_close(table.leading, theorem_constant(m)), "P_m(1) vs factorial constant", m, None)
    return table


def theorem_constant(m: int) -> float:
    """``-(-1)^m (m-1)! (m+1)! / 2``, which equals ``P_m(1)``."""
    return -((-1) ** m) * math.factorial(m - 1) * math.factorial(m + 1) / 2


def stability_recurrences_hold(m: int, k: int, rtol: float = IDENTITY_RTOL) -> bool:
    """Check ``c_{m+1,l} = c_{m,l-1} - x_{m+1} c_{m,l}`` and the same for ``S`` (l >= 1)."""
    check_discrete_order(m, k, slack=1)
    cur = discrete_table(m, k)
    nxt = discrete_table(m + 1, k)
    x_next = nxt.roots[m]
    c_pred = [_at(cur.c, l - 1) - x_next * _at(cur.c, l) for l in range(m + 2)]
    s_pred = [_at(cur.s, l - 1) - x_next * _at(cur.s, l) for l in range(1, m + 1)]
    return _close(nxt.c, c_pred, rtol) and _close(nxt.s[1:], s_pred, rtol)
