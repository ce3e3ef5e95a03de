import math
from fractions import Fraction as Fr

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st
from scipy import integrate, special

from dunkl_eop import numerics
from dunkl_eop.dunkl import DunklParams, extended_state, extension_spec, gen_hermite_state
from dunkl_eop.exactalg import Poly, QRFunc, RatFunc, Z
from dunkl_eop.numerics import (PoleError, composite_rule, float_eval, gamma_moment, gauss_laguerre,
                                normalize, overlap_matrix, sturm_positive_roots, weighted_overlap)


@pytest.mark.parametrize("order", [5, 40, 200])
@pytest.mark.parametrize("alpha", [-0.25, 0.0, 0.5, 3.0])
def test_gauss_laguerre_matches_scipy(order, alpha):
    rule = gauss_laguerre(order, alpha)
    x, w = special.roots_genlaguerre(order, alpha)
    assert np.all(np.diff(rule.nodes) > 0) and np.all(rule.nodes > 0)
    np.testing.assert_allclose(rule.nodes, x, rtol=1e-11)
    # the outermost weights of high orders underflow double precision
    big = w > 1e-280
    assert np.all(rule.weights >= 0) and np.all(rule.weights[big] > 0)
    np.testing.assert_allclose(rule.weights[big], w[big], rtol=1e-8)


@pytest.mark.parametrize("alpha", [-0.25, 0.5, 2.25])
def test_gauss_laguerre_exact_on_moments(alpha):
    order = 20
    rule = gauss_laguerre(order, alpha)
    for k in range(2 * order):
        approx = rule.integrate(rule.nodes ** k)
        assert approx == pytest.approx(gamma_moment(alpha, k), rel=1e-12)


def test_gamma_moment_recurrence():
    assert gamma_moment(0.5, 3) == pytest.approx(math.gamma(4.5), rel=1e-14)


def test_composite_rule_on_near_pole():
    # 1/(z + 0.09) has a pole close to the integration range
    rule = composite_rule(200, 0.25)
    vals = 1.0 / (rule.nodes + 0.09)
    ref, _ = integrate.quad(lambda z: z ** 0.25 * math.exp(-z) / (z + 0.09), 0, np.inf,
                            epsabs=1e-14, epsrel=1e-13, limit=400)
    assert rule.integrate(vals) == pytest.approx(ref, rel=1e-12)


def test_sturm_examples():
    assert sturm_positive_roots(Z + Fr(1, 2)) == 0
    assert sturm_positive_roots(Z - 1) == 1
    assert sturm_positive_roots(Poly([3, 2, Fr(1, 2)])) == 0
    assert sturm_positive_roots(Z * (Z - 2)) == 1
    with pytest.raises(ValueError):
        sturm_positive_roots(Poly())


@given(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=5), min_size=0, max_size=5),
       st.fractions(min_value=Fr(1, 5), max_value=5, max_denominator=5))
@settings(max_examples=80, deadline=None)
def test_sturm_counts_constructed_roots(roots, c):
    p = Z * Z + c  # no real roots
    for r in roots:
        p = p * (Z - r)
    assert sturm_positive_roots(p) == len({r for r in roots if r > 0})


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=7))
@settings(max_examples=80, deadline=None)
def test_sturm_against_numpy_roots(coeffs):
    p = Poly(coeffs)
    assume(p.degree >= 1 and p.coeffs[0] != 0)
    r = np.roots([float(c) for c in reversed(p.coeffs)])
    real = np.sort(r[np.abs(r.imag) < 1e-7].real)
    # skip ill-conditioned cases where numpy cannot separate roots
    assume(np.all(np.abs(r.imag[np.abs(r.imag) >= 1e-7]) > 1e-4))
    assume(len(real) < 2 or np.min(np.diff(real)) > 1e-4)
    assert sturm_positive_roots(p) == int(np.sum(real > 1e-9))


def test_float_eval_examples():
    g = QRFunc(0, -1, RatFunc(1))
    assert float_eval(g, 0.0) == 1.0
    assert float_eval(QRFunc(0, -1, RatFunc(0), RatFunc(1)), 1.0) == pytest.approx(0.60653065971, abs=1e-11)
    with pytest.raises(PoleError):
        float_eval(QRFunc(0, 0, RatFunc(Poly([1]), Z - 1)), 1.0)


@pytest.mark.parametrize("mu", [Fr(3, 4), Fr(1), Fr(5, 2)])
def test_weighted_overlap_examples(mu):
    g = QRFunc(0, -1, RatFunc(1))
    assert weighted_overlap(mu, g, g) == pytest.approx(math.gamma(float(mu) + 0.5), rel=1e-13)
    odd = QRFunc(0, -1, RatFunc(0), RatFunc(Z + 1))
    assert weighted_overlap(mu, g, odd) == 0.0
    p = DunklParams(mu)
    states = [normalize(mu, gen_hermite_state(p, n, e)) for e in (0, 1) for n in (0, 1)]
    np.testing.assert_allclose(overlap_matrix(mu, states), np.eye(4), atol=1e-10)


def test_weighted_overlap_against_quad():
    mu = Fr(3, 4)
    p = DunklParams(mu)
    spec = extension_spec(p, "I", 2)
    s = extended_state(p, spec, 3, 0, with_norm=False)
    ref, _ = integrate.quad(lambda x: float_eval(s.wavefunction, x) ** 2 * x ** 1.5, 0, np.inf,
                            epsabs=1e-13, epsrel=1e-12, limit=400)
    assert weighted_overlap(mu, s.wavefunction, s.wavefunction) == pytest.approx(2 * ref, rel=1e-10)


def test_normalize_examples():
    mu = Fr(1)
    p = DunklParams(mu)
    s = normalize(mu, gen_hermite_state(p, 0, 0))
    assert s.norm ** 2 == pytest.approx(2 / math.sqrt(math.pi), rel=1e-13)
    assert normalize(mu, s).norm == pytest.approx(s.norm, rel=1e-12)
    p = DunklParams(Fr(5, 2))
    extra = normalize(p.mu, extended_state(p, extension_spec(p, "III", 2), 0, 0, with_norm=False))
    assert math.isfinite(extra.norm) and extra.norm > 0


def test_overlap_rejects_poles():
    bad = QRFunc(0, -1, RatFunc(Poly([1]), Z - 1))
    with pytest.raises(PoleError):
        weighted_overlap(Fr(1), bad, bad)


@pytest.mark.parametrize("t, m, mu", [("I", 1, Fr(3, 4)), ("II", 2, Fr(5, 2)), ("III", 2, Fr(7, 2))])
def test_convergence_guard(t, m, mu):
    p = DunklParams(mu)
    spec = extension_spec(p, t, m)
    states = [extended_state(p, spec, n, e, with_norm=False) for e in (0, 1) for n in spec.valid_n(4)]
    states = [normalize(mu, s, 200) for s in states]
    g200 = overlap_matrix(mu, states, 200)
    g150 = overlap_matrix(mu, states, 150)
    assert np.max(np.abs(g200 - np.eye(len(states)))) <= 1e-10
    assert np.max(np.abs(g200 - g150)) <= 1e-11


def test_order_env_override(monkeypatch):
    monkeypatch.setenv(numerics.ORDER_ENV, "64")
    assert numerics.default_order() == 64
    monkeypatch.delenv(numerics.ORDER_ENV)
    assert numerics.default_order() == 200
