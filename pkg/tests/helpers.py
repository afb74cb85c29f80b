"""Equality-class fixtures shared by the discrete tests and the acceptance suite."""

import numpy as np

from iso_wirtinger import discrete
from iso_wirtinger.polygon import polygon_from_modes

# name -> (evaluator taking (p, m), order slack, allowed-mode bound as a function of m)
ORDERED = {
    "wirtinger": (discrete.wirtinger_m, 0, lambda m: m),
    "wirtinger-lambda": (discrete.wirtinger_lambda_form, 0, lambda m: m),
    "wirtinger-s": (discrete.wirtinger_s_form, 0, lambda m: m),
    "discrete-higher": (discrete.isoperimetric_higher, 0, lambda m: m),
    "stability-c": (discrete.stability_c, 1, lambda m: m + 1),
    "stability-s": (discrete.stability_s, 1, lambda m: m + 1),
}


def random_coefficient(rng):
    return complex(rng.normal(), rng.normal())


def band_polygon(k, bound, rng):
    """Zero-centroid polygon with every mode 0 < |nu| <= bound populated."""
    modes = {}
    for nu in range(1, bound + 1):
        modes[nu] = random_coefficient(rng)
        modes[-nu] = random_coefficient(rng)
    return polygon_from_modes(k, modes)


def forbidden_mode(k, bound):
    """A mode strictly between bound and k - bound, or None if the band covers every mode."""
    nu = bound + 1
    return nu if nu < k - bound else None


def perturb(p, nu, eps, rng):
    zeta = p.spectrum().copy()
    size = np.abs(zeta).max()
    zeta[nu % p.k] += eps * size * np.exp(2j * np.pi * rng.uniform())
    return polygon_from_modes(p.k, {i: v for i, v in enumerate(zeta)})


def equality_cases(k, rng):
    """Yield (label, thunk, perturbed thunk or None) for every evaluator and order at this k."""
    for name, (fn, slack, bound_of) in ORDERED.items():
        for m in range(1, k // 2 - slack + 1):
            bound = bound_of(m)
            p = band_polygon(k, bound, rng)
            nu = forbidden_mode(k, bound)
            q = perturb(p, nu, 1e-3, rng) if nu is not None else None
            yield (
                f"{name} m={m}",
                lambda fn=fn, p=p, m=m: fn(p, m),
                None if q is None else (lambda fn=fn, q=q, m=m: fn(q, m)),
            )
    p = band_polygon(k, 1, rng)
    q = perturb(p, 2, 1e-3, rng) if k > 3 else None
    yield "chakerian-v1", lambda: discrete.chakerian_v1(p), None if q is None else (lambda: discrete.chakerian_v1(q))
    p = polygon_from_modes(k, {1: random_coefficient(rng)})
    q = perturb(p, -1, 1e-3, rng)
    yield "chakerian-v2", lambda: discrete.chakerian_v2(p), lambda: discrete.chakerian_v2(q)
    for m in range(2, k // 2 + 1, 2):
        nu = int(rng.integers(1, m + 1)) * int(rng.choice([-1, 1]))
        p = polygon_from_modes(k, {nu: random_coefficient(rng)})
        other = nu + 1 if nu + 1 != 0 and (nu + 1) % k != 0 else nu + 2
        q = perturb(p, other, 1e-3, rng)
        yield (
            f"length-even m={m} nu={nu}",
            lambda p=p, m=m: discrete.length_form_even(p, m),
            lambda q=q, m=m: discrete.length_form_even(q, m),
        )
