"""Acceptance criteria, one test each, at the stated tolerances.

Each test prints a single PASS/FAIL line.  Run directly with
``python tests/test_acceptance.py`` for the summary without pytest output.
"""

import math
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from iso_wirtinger import chernoff, coeffs, discrete, fourier, oracle, smooth  # noqa: E402
from iso_wirtinger.polygon import (  # noqa: E402
    make_regular,
    random_polygon,
    regular_area,
    regular_side_sum,
    signed_area,
    squared_side_sum,
)

from helpers import equality_cases  # noqa: E402

RESULTS = []


def record(number, title, ok, detail, capsys=None):
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    RESULTS.append(line)
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    assert ok, line


class Worst:
    """Tracks the largest relative error seen."""

    def __init__(self):
        self.value = 0.0

    def add(self, a, b, scale):
        err = abs(a - b) / max(scale, 1e-300)
        self.value = max(self.value, float(err))
        return err


def criterion_1():
    rng = np.random.default_rng(101)
    start = time.perf_counter()
    norms, trips = Worst(), Worst()
    for _ in range(1000):
        k = int(rng.integers(3, 65))
        z = rng.normal(size=k) + 1j * rng.normal(size=k)
        for order in range(5):
            direct = oracle.direct_norm_sq(oracle.direct_difference(z, order))
            norms.add(fourier.parseval_norm(z, order), direct, direct)
        back = fourier.inverse_transform(fourier.forward_transform(z))
        trips.add(0, np.abs(back - z).max(), np.abs(z).max())
    elapsed = time.perf_counter() - start
    ok = norms.value <= 1e-12 and trips.value <= 1e-12 and elapsed < 5
    return ok, f"max norm err {norms.value:.1e}, round trip {trips.value:.1e}, {elapsed:.2f} s"


def criterion_2():
    rng = np.random.default_rng(102)
    law = Worst()
    for _ in range(500):
        k = int(rng.integers(3, 65))
        p = random_polygon(k, rng=rng)
        w = np.abs(p.spectrum()) ** 2
        nu = np.arange(k)
        S = squared_side_sum(p)
        law.add(signed_area(p), np.sum(w * regular_area(nu, k)), S)
        law.add(S, np.sum(w * regular_side_sum(nu, k)), S)
    exact = 0.0
    for k in range(3, 33):
        for nu in range(k):
            r = make_regular(nu, k)
            exact = max(exact, abs(signed_area(r) - k * math.sin(nu * math.pi / k) * math.cos(nu * math.pi / k)))
            exact = max(exact, abs(squared_side_sum(r) - 4 * k * math.sin(nu * math.pi / k) ** 2))
    ok = law.value <= 1e-12 and exact <= 1e-12
    return ok, f"spectral law err {law.value:.1e}, regular-polygon err {exact:.1e}"


def criterion_3():
    rng = np.random.default_rng(103)
    start = time.perf_counter()
    worst_deficit = math.inf
    agree = Worst()
    failures = []
    count = 0
    for k in range(3, 25):
        for _ in range(200):
            p = random_polygon(k, rng=rng)
            reports = [discrete.chakerian_v1(p), discrete.chakerian_v2(p)]
            for m in range(1, k // 2 + 1):
                a = discrete.wirtinger_m(p, m)
                b = discrete.wirtinger_lambda_form(p, m)
                c = discrete.wirtinger_s_form(p, m)
                mag = max(a.magnitude, b.magnitude, c.magnitude)
                agree.add(a.lhs, b.lhs, mag)
                agree.add(a.lhs, c.rhs, mag)
                agree.add(b.lhs, c.rhs, mag)
                reports += [a, b, c, discrete.isoperimetric_higher(p, m)]
                if m <= k // 2 - 1:
                    reports += [discrete.stability_c(p, m), discrete.stability_s(p, m)]
            for r in reports:
                count += 1
                worst_deficit = min(worst_deficit, r.deficit / r.scale)
                if r.deficit < -1e-9 * r.scale:
                    failures.append((r.theorem_id, k, r.m))
    elapsed = time.perf_counter() - start
    ok = not failures and agree.value <= 1e-12 and elapsed < 60
    return ok, (
        f"{count} reports, min deficit/scale {worst_deficit:.1e}, "
        f"form agreement {agree.value:.1e}, {len(failures)} failures, {elapsed:.1f} s"
    )


def criterion_4():
    rng = np.random.default_rng(104)
    fixtures = perturbed = 0
    bad = []
    for k in range(3, 25):
        for label, good, worse in equality_cases(k, rng):
            r = good()
            fixtures += 1
            if not (r.equality and abs(r.deficit) <= 1e-10 * r.scale):
                bad.append(f"k={k} {label}")
            if worse is not None:
                r = worse()
                perturbed += 1
                if r.equality or not r.deficit > 1e-8 * r.scale:
                    bad.append(f"k={k} {label} (perturbed)")
    for k in range(3, 25):
        r = discrete.equilateral_bound(make_regular(1, k, scale=complex(*rng.normal(size=2))))
        fixtures += 1
        if not (r.equality and abs(r.deficit) <= 1e-10 * r.scale):
            bad.append(f"k={k} equilateral")
    for m in range(1, 6):
        for c in (smooth.circle(1.7 - 0.4j), smooth.equality_curve(m, rng=rng)):
            r = smooth.gen_wirtinger(c, m)
            fixtures += 1
            if not (r.equality and abs(r.deficit) <= 1e-10 * r.scale):
                bad.append(f"gen-wirtinger m={m}")
            worse = smooth.gen_wirtinger(c + smooth.FourierCurve.from_mapping({m + 1: 1e-3 * np.abs(c.coeffs).max()}), m)
            perturbed += 1
            if worse.equality or not worse.deficit > 1e-8 * worse.scale:
                bad.append(f"gen-wirtinger m={m} (perturbed)")
    ok = not bad
    return ok, f"{fixtures} equality fixtures, {perturbed} perturbations, failures: {bad[:5] or 'none'}"


def criterion_5():
    rng = np.random.default_rng(105)
    worst = Worst()
    for i in range(500):
        k = int(rng.integers(3, 65))
        p = random_polygon(k, rng=rng)
        if i % 2:
            p = p + complex(*rng.normal(scale=3, size=2))
        a, b = discrete.chakerian_identity(p)
        worst.add(a, b, fourier.norm_sq(fourier.derivative(p.z, 1)) + fourier.norm_sq(p.z))
    return worst.value <= 1e-12, f"max relative gap {worst.value:.1e} over 500 polygons"


def criterion_6():
    rng = np.random.default_rng(106)
    smallest = math.inf
    missed = 0
    for _ in range(1000):
        size = int(rng.integers(2, 9))
        modes = rng.choice(np.r_[-30:0, 1:31], size=size, replace=False)
        a = {int(n): complex(*rng.normal(size=2)) for n in modes}
        res = discrete.sparse_mode_check(a)
        smallest = min(smallest, res.max_correlation)
        if res.passes or not res.max_correlation > 1e-6:
            missed += 1
    singles = all(discrete.sparse_mode_check({n: complex(*rng.normal(size=2))}).passes for n in range(-30, 31) if n)
    ok = missed == 0 and singles
    return ok, f"smallest max |c_n| {smallest:.2e}, misses {missed}, single modes pass: {singles}"


def criterion_7():
    rng = np.random.default_rng(107)
    start = time.perf_counter()
    worst = math.inf
    kl = Worst()
    failures = 0
    for i in range(200):
        degree = 1 + i % 12
        c = smooth.reparametrize_by_arclength(smooth.random_curve(degree, rng=rng)).recentered()
        for m in range(1, 6):
            for r in (smooth.gen_wirtinger(c, m), smooth.smooth_isoperimetric(c, m)):
                worst = min(worst, r.deficit / r.scale)
                if r.deficit < -1e-8 * r.scale or abs(r.direct_deficit - r.deficit) > 1e-8 * r.scale:
                    failures += 1
        r2 = smooth.smooth_isoperimetric(c, 2)
        L = smooth.curve_length(c)
        kl.add(2 * math.pi / L * smooth.kl_expression(c), r2.rhs / 3, max(r2.scale, 1))
    table = coeffs.smooth_table(2)
    constants = table.s[1] == 1 and coeffs.theorem_constant(2) == -3
    circle_ok = True
    for b in (1.0, 2.5, 0.3 + 0.8j):
        for m in range(1, 6):
            for r in (smooth.gen_wirtinger(smooth.circle(b), m), smooth.smooth_isoperimetric(smooth.circle(b), m)):
                circle_ok &= r.equality and abs(r.deficit) <= 1e-10 * r.scale
    elapsed = time.perf_counter() - start
    ok = failures == 0 and circle_ok and kl.value <= 1e-9 and constants
    return ok, (
        f"min deficit/scale {worst:.1e}, {failures} failures, circles equal: {circle_ok}, "
        f"KL gap {kl.value:.1e}, {elapsed:.1f} s"
    )


def criterion_8():
    rng = np.random.default_rng(108)
    gap = Worst()
    trans = Worst()
    holds = True
    for _ in range(100):
        h = chernoff.random_support(int(rng.integers(2, 10)), rng=rng)
        g = chernoff.translate(h, complex(*rng.normal(scale=2, size=2)))
        for k in range(2, 7):
            for m in range(1, 6):
                a = chernoff.chernoff_core(h, k, m)
                b = chernoff.chernoff_theorem(h, k, m)
                holds &= a.holds and b.holds
                gap.add(a.deficit, b.deficit, abs(a.deficit))
                gap.add(b.direct_deficit, b.deficit, abs(a.deficit))
                trans.add(chernoff.chernoff_core(g, k, m).deficit, a.deficit, abs(a.deficit))
                trans.add(chernoff.chernoff_theorem(g, k, m).deficit, b.deficit, abs(b.deficit))
    circles = True
    ou_pan = 0.0
    for r in (0.5, 1.0, 2.0):
        for center in (0, 0.7 - 1.1j):
            h = chernoff.support_circle(r, center)
            for k in range(2, 7):
                for m in range(1, 6):
                    circles &= chernoff.chernoff_core(h, k, m).equality and chernoff.chernoff_theorem(h, k, m).equality
                t = chernoff.chernoff_theorem(h, k, 1)
                ou_pan = max(ou_pan, abs(t.lhs - math.pi * r * r) / (r * r), abs(t.rhs - math.pi * r * r) / (r * r))
    ok = holds and gap.value <= 1e-10 and trans.value <= 1e-10 and circles and ou_pan <= 1e-10
    return ok, (
        f"theorem/core gap {gap.value:.1e}, translation {trans.value:.1e}, "
        f"circles equal: {circles}, m=1 sides vs pi r^2 {ou_pan:.1e}"
    )


def _cond(c, x):
    return np.polynomial.polynomial.polyval(np.abs(x), np.abs(c))


def criterion_9():
    rng = np.random.default_rng(109)
    worst = 0.0
    signs = True
    recurrences = True
    for k in range(3, 65):
        for m in range(1, min(8, k // 2) + 1):
            t = coeffs.discrete_table(m, k)
            x = rng.uniform(0, 4, 20)
            x1 = t.base
            q, pm = t.Q(x), t.P(x)
            # pointwise identities are compared on the evaluation's condition scale sum |c_j| |x|^j
            worst = max(worst, float(np.max(np.abs(q - (x - x1) * pm) / _cond(t.c, x))))
            worst = max(worst, float(np.max(np.abs(pm - ((x - x1) * t.S(x) + t.leading)) / _cond(t.lam, x))))
            c_rec = [coeffs._at(t.lam, j - 1) - x1 * coeffs._at(t.lam, j) for j in range(m + 1)]
            l_rec = [coeffs._at(t.s, l) - x1 * coeffs._at(t.s, l + 1) for l in range(m)]
            worst = max(worst, float(np.max(np.abs(np.subtract(t.c, c_rec)) / np.maximum(np.abs(t.c), 1))))
            worst = max(worst, float(np.max(np.abs(np.subtract(t.lam, l_rec)) / np.maximum(np.abs(t.lam), 1))))
            if m < k // 2:
                recurrences &= coeffs.stability_recurrences_hold(m, k)
            if m >= 2:
                signs &= np.sign(t.leading) == (-1) ** (m - 1)
    for m in range(1, 9):
        t = coeffs.smooth_table(m)
        x = rng.uniform(-10, 10, 20)
        worst = max(worst, float(np.max(np.abs(t.P(x) - ((x - 1) * t.S(x) + t.leading)) / _cond(t.lam, x))))
    fixture = float(np.max(np.abs(np.subtract(coeffs.discrete_table(2, 4).c, (8, -6, 1)))))
    ok = worst <= 1e-12 and recurrences and signs and fixture <= 1e-12
    return ok, f"identity err {worst:.1e}, recurrences {recurrences}, S_m0 signs {signs}, (8,-6,1) err {fixture:.1e}"


def criterion_10():
    rng = np.random.default_rng(110)
    w = {name: Worst() for name in ("dft", "forms", "wirtinger", "operators", "mixed", "chernoff", "curves")}
    for _ in range(100):
        k = int(rng.integers(3, 65))
        p = random_polygon(k, rng=rng)
        w["dft"].add(0, np.abs(oracle.direct_dft(p.z) - p.spectrum()).max(), np.abs(p.spectrum()).max())
        F, S, L = oracle.direct_forms(p.z)
        w["forms"].add(F, signed_area(p), S)
        w["forms"].add(S, squared_side_sum(p), S)
        m = int(rng.integers(1, k // 2 + 1))
        r = discrete.wirtinger_m(p, m)
        w["wirtinger"].add(oracle.wirtinger_spectral_sum(p.z, m), r.deficit, r.magnitude)
    for _ in range(60):
        deg = int(rng.integers(2, 10))
        k = int(rng.integers(2, 7))
        h = chernoff.random_support(deg, rng=rng)
        h2 = chernoff.random_support(deg, rng=rng)
        pts = 4 * deg + 8
        theta = oracle.grid(pts)
        for op, fast in (("A", chernoff.apply_A(h)), ("T_k", chernoff.apply_T_k(h, k)), ("width_k", chernoff.width_k(h, k))):
            direct = oracle.pointwise_operator(h, op, pts, k)
            w["operators"].add(0, np.abs(fast.evaluate(theta) - direct).max(), np.abs(direct).max())
        for j in range(3):
            quad = oracle.mixed_area_quadrature(h, h2, j, pts)
            scale = oracle.quadrature(np.abs(h.evaluate(theta, j) * h2.evaluate(theta, j)) + np.abs(h.evaluate(theta, j + 1) * h2.evaluate(theta, j + 1)))
            w["mixed"].add(chernoff.mixed_area(h, h2, j), quad, scale)
        m = int(rng.integers(1, 6))
        r = chernoff.chernoff_core(h, k, m)
        w["chernoff"].add(oracle.chernoff_core_quadrature(h, k, m, pts), r.deficit, r.magnitude)
    for _ in range(20):
        c = smooth.reparametrize_by_arclength(smooth.random_curve(int(rng.integers(1, 8)), rng=rng)).recentered()
        q = oracle.curve_forms_quadrature(c, 8 * c.degree + 64)
        t = smooth.smooth_terms(c, 1)
        w["curves"].add(q["length"], t.length, t.length)
        w["curves"].add(q["area"], t.area, t.area)
        w["curves"].add(q["normal_term"], t.normal_term, q["normal_term"] + t.length)
        w["curves"].add(q["curvature_term"], t.curvature_terms[0], q["curvature_term"] + t.length)
    worst = max(v.value for v in w.values())
    detail = ", ".join(f"{k} {v.value:.0e}" for k, v in w.items())
    return worst <= 1e-11, detail


CRITERIA = [
    (1, "Parseval and transforms", criterion_1),
    (2, "polygonal-form spectral law", criterion_2),
    (3, "inequality family on random polygons", criterion_3),
    (4, "rigidity of equality classes", criterion_4),
    (5, "geometric rearrangement identity", criterion_5),
    (6, "sparse-mode lemma", criterion_6),
    (7, "smooth inequalities", criterion_7),
    (8, "Chernoff inequalities", criterion_8),
    (9, "coefficient tables", criterion_9),
    (10, "oracle agreement", criterion_10),
]


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn, capsys):
    ok, detail = fn()
    record(number, title, ok, detail, capsys)


if __name__ == "__main__":
    failed = 0
    for number, title, fn in CRITERIA:
        try:
            record(number, title, *fn())
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
