import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iso_wirtinger import oracle, smooth
from iso_wirtinger.errors import DegenerateCurveError, HypothesisViolation, OrientationError, ParameterError
from iso_wirtinger.smooth import FourierCurve, circle

from conftest import seeds


def test_length_and_area_of_circles():
    assert abs(smooth.curve_length(circle()) - 2 * math.pi) < 1e-13
    assert abs(smooth.curve_length(circle(3)) - 6 * math.pi) < 1e-13
    assert abs(smooth.curve_area(circle()) - math.pi) < 1e-13
    assert abs(smooth.curve_area(circle().reversed()) + math.pi) < 1e-13


def test_area_with_third_mode():
    c = FourierCurve.from_mapping({1: 1.0, 3: 0.2})
    assert abs(smooth.curve_area(c) - 1.12 * math.pi) < 1e-13
    q = oracle.curve_forms_quadrature(c, 512)
    assert abs(q["area"] - 1.12 * math.pi) < 1e-12


@given(st.integers(1, 12), seeds)
def test_length_and_area_match_quadrature(degree, seed):
    c = smooth.random_curve(degree, seed=seed)
    q = oracle.curve_forms_quadrature(c, 1024)
    assert abs(smooth.curve_length(c) - q["length"]) < 1e-11 * q["length"]
    assert abs(smooth.curve_area(c) - q["area"]) < 1e-11 * abs(q["area"])


def test_circle_is_equality_for_every_order():
    for m in range(1, 7):
        r = smooth.gen_wirtinger(circle(2 - 1j), m)
        assert r.equality and abs(r.deficit) == 0
        r = smooth.smooth_isoperimetric(circle(0.7 + 0.3j), m)
        assert r.equality and abs(r.deficit) <= 1e-10 * r.scale


def test_low_band_is_equality():
    for m in range(1, 6):
        c = smooth.equality_curve(m, seed=m)
        assert smooth.gen_wirtinger(c, m).equality
        bumped = c + FourierCurve.from_mapping({m + 1: 1e-3})
        r = smooth.gen_wirtinger(bumped, m)
        assert not r.equality and r.deficit > 1e-8 * r.scale


def test_nonzero_mean_rejected():
    c = circle(center=1.0)
    with pytest.raises(HypothesisViolation):
        smooth.gen_wirtinger(c, 2)
    assert smooth.gen_wirtinger(c, 2, auto_recenter=True).equality
    with pytest.raises(ParameterError):
        smooth.gen_wirtinger(circle(), 0)


@given(st.integers(1, 12), seeds, st.integers(1, 6))
def test_gen_wirtinger_holds(degree, seed, m):
    c = smooth.random_curve(degree, seed=seed)
    r = smooth.gen_wirtinger(c, m)
    assert r.holds
    assert abs(r.direct_deficit - r.deficit) <= 1e-12 * r.magnitude


def test_weights_are_exact_integers():
    w = smooth.wirtinger_weights(np.array([-4, 0, 1, 2, 5]), 3)
    assert list(w) == [15 * 12 * 7, -36.0, 0.0, 0.0, 24 * 21 * 16]


@settings(max_examples=15)
@given(st.integers(2, 10), seeds)
def test_smooth_isoperimetric_holds_after_reparametrization(degree, seed):
    c = smooth.reparametrize_by_arclength(smooth.random_curve(degree, seed=seed)).recentered()
    for m in range(1, 6):
        r = smooth.smooth_isoperimetric(c, m)
        assert r.holds and r.deficit >= -1e-8 * r.scale
        assert abs(r.direct_deficit - r.deficit) <= 1e-9 * r.magnitude


def test_perturbed_circle_is_strict():
    c = smooth.reparametrize_by_arclength(FourierCurve.from_mapping({1: 1.0, 2: 0.05})).recentered()
    for m in range(1, 5):
        r = smooth.smooth_isoperimetric(c, m)
        assert r.holds and not r.equality
        assert r.deficit > 1e-6


def test_hypotheses_of_smooth_isoperimetric():
    c = smooth.random_curve(4, seed=1)
    with pytest.raises(HypothesisViolation):
        smooth.smooth_isoperimetric(c, 2)
    assert smooth.smooth_isoperimetric(c, 2, auto_reparametrize=True, auto_recenter=True).holds
    with pytest.raises(OrientationError):
        smooth.smooth_isoperimetric(circle().reversed(), 1)


def test_kl_relation():
    for seed in range(5):
        c = smooth.reparametrize_by_arclength(smooth.random_curve(6, seed=seed)).recentered()
        kl = smooth.kl_expression(c)
        L = smooth.curve_length(c)
        r = smooth.smooth_isoperimetric(c, 2)
        assert kl >= -1e-9
        assert abs(2 * math.pi / L * kl - r.rhs / 3) <= 1e-9 * max(r.magnitude, 1)
        assert abs(2 * math.pi / L * kl - r.deficit / 3) <= 1e-9 * max(r.magnitude, 1)


def test_terms_match_pointwise_geometry():
    for seed in range(4):
        c = smooth.reparametrize_by_arclength(smooth.random_curve(5, seed=seed)).recentered()
        t = smooth.smooth_terms(c, 1)
        q = oracle.curve_forms_quadrature(c, 4 * 1024)
        assert abs(t.normal_term - q["normal_term"]) <= 1e-9 * max(q["normal_term"], 1e-3)
        assert abs(t.curvature_terms[0] - q["curvature_term"]) <= 1e-9 * max(q["curvature_term"], 1e-3)
        assert abs(smooth.kl_expression(c) - oracle.kl_quadrature(c, 4 * 1024)) <= 1e-9


def test_reparametrization_fixed_point_and_image():
    c = circle(1.5)
    assert np.allclose(smooth.reparametrize_by_arclength(c).coeffs, c.coeffs, atol=1e-10)
    raw = FourierCurve.from_mapping({1: 1.0, 2: 0.05, -1: 0.1j})
    out = smooth.reparametrize_by_arclength(raw)
    assert smooth.has_constant_speed(out)
    assert abs(smooth.curve_length(out) - smooth.curve_length(raw)) < 1e-10
    assert abs(smooth.curve_area(out) - smooth.curve_area(raw)) < 1e-10


def test_reparametrization_failures():
    cusp = FourierCurve.from_mapping({1: 1.0, 2: 0.5})  # speed vanishes at t = pi
    with pytest.raises(DegenerateCurveError):
        smooth.reparametrize_by_arclength(cusp)
    with pytest.raises(DegenerateCurveError):
        smooth.reparametrize_by_arclength(smooth.random_curve(12, seed=0, perturbation=0.9), target_degree=12)
    with pytest.raises(ParameterError):
        smooth.reparametrize_by_arclength(circle(), target_degree=0)


def test_curve_validation_and_mapping_roundtrip():
    with pytest.raises(ParameterError):
        FourierCurve(np.zeros(4))
    c = FourierCurve.from_mapping({-2: 1j, 3: 2.0})
    assert c.degree == 3
    assert np.array_equal(FourierCurve.from_mapping(c.to_mapping()).coeffs, c.coeffs)
    t = np.linspace(0, 1, 5)
    assert np.allclose(c.evaluate(t), 1j * np.exp(-2j * t) + 2 * np.exp(3j * t))
    assert np.allclose(c.evaluate(t, 1), 2 * np.exp(-2j * t) + 6j * np.exp(3j * t))
