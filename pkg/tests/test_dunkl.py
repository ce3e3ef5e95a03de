import math
from fractions import Fraction as Fr

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

from dunkl_eop.dunkl import (DunklParams, denominator_poly, dunkl_apply, dunkl_from_radial,
                             exceptional_gen_hermite, extended_energy, extended_hamiltonian_apply,
                             extended_state, extension_spec, gen_hermite_state, hamiltonian_apply,
                             hamiltonian_apply_expanded, plain_energy)
from dunkl_eop.exactalg import Poly, QRFunc, RatFunc, Z
from dunkl_eop.laguerre import AdmissibilityError, ExtensionSpec, laguerre
from dunkl_eop.numerics import float_eval
from dunkl_eop.radial import RadialParams, _w_function, darboux_extend, radial_eigenstate

HALF = Fr(1, 2)
MUS = [Fr(3, 4), Fr(1), Fr(5, 2)]


def gauss(even=1, odd=0):
    return QRFunc(0, -1, RatFunc(even), RatFunc(odd))


def fd_dunkl(f, mu, x, h=1e-5):
    """Dunkl derivative evaluated from point samples only."""
    d = (f(x + h) - f(x - h)) / (2 * h)
    return d + float(mu) / x * (f(x) - f(-x))


def fd_ext_hamiltonian(psi, mu, spec, x, h=1e-3):
    f = lambda t: float_eval(psi, t)
    df = lambda t: fd_dunkl(f, mu, t, h * 1e-2)
    d2 = fd_dunkl(df, mu, x, h)
    fe = 0.5 * (f(x) + f(-x))
    fo = 0.5 * (f(x) - f(-x))
    we = _w_function(spec.ext_type, spec.m, spec.alpha - 1)(x * x)
    wo = _w_function(spec.ext_type, spec.m, spec.alpha)(x * x)
    return 0.5 * (-d2 + x * x * f(x)) - 2 * we * fe - 2 * wo * fo


def test_dunkl_examples():
    mu = Fr(5, 3)
    p = DunklParams(mu)
    x = QRFunc(0, 0, RatFunc(0), RatFunc(1))
    assert dunkl_apply(p, x) == QRFunc(0, 0, RatFunc(1 + 2 * mu))
    f = QRFunc(0, 0, RatFunc(Z * Z + 3))
    assert dunkl_apply(p, f) == f.derivative()
    assert dunkl_apply(p, gauss()) == -gauss(0, 1)
    with pytest.raises(ValueError):
        dunkl_apply(p, QRFunc(Fr(1, 2), -1, RatFunc(1)))


def test_hamiltonian_examples():
    p = DunklParams(Fr(7, 4))
    assert hamiltonian_apply(p, gauss()) == gauss() * (p.mu + HALF)
    assert hamiltonian_apply(p, gauss(0, 1)) == gauss(0, 1) * (p.mu + Fr(3, 2))
    f = QRFunc(3, -1, RatFunc(1 + Z))
    assert hamiltonian_apply(p, f) == hamiltonian_apply_expanded(p, f)


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=1, max_size=4),
       st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=0, max_size=4),
       st.sampled_from(MUS), st.floats(min_value=0.3, max_value=2.0))
@settings(max_examples=60, deadline=None)
def test_dunkl_operator_matches_samples(even, odd, mu, x0):
    f = gauss(Poly(even), Poly(odd))
    exact = float_eval(dunkl_apply(DunklParams(mu), f), x0)
    approx = fd_dunkl(lambda t: float_eval(f, t), mu, x0)
    assert exact == pytest.approx(approx, rel=1e-6, abs=1e-6)
    for sign in (1, -1):
        assert float_eval(dunkl_apply(DunklParams(mu), f), sign * x0) == pytest.approx(
            fd_dunkl(lambda t: float_eval(f, t), mu, sign * x0), rel=1e-6, abs=1e-6)


@pytest.mark.parametrize("mu", MUS)
@pytest.mark.parametrize("eps", [0, 1])
def test_gen_hermite_states(mu, eps):
    p = DunklParams(mu)
    for n in range(4):
        s = gen_hermite_state(p, n, eps)
        assert hamiltonian_apply(p, s.wavefunction) == s.wavefunction * s.energy
        assert s.wavefunction.parity() == (1 if eps == 0 else -1)
        # pure parity, so the full line is twice the half line
        val, _ = integrate.quad(lambda x: (s.norm * float_eval(s.wavefunction, x)) ** 2 * x ** (2 * float(mu)),
                                0, np.inf)
        assert 2 * val == pytest.approx(1, abs=1e-9)


def test_gen_hermite_examples():
    p = DunklParams(Fr(1))
    s = gen_hermite_state(p, 0, 0)
    assert s.wavefunction == gauss()
    assert s.norm ** 2 == pytest.approx(1 / math.gamma(1.5), rel=1e-14)
    assert gen_hermite_state(p, 1, 0).wavefunction == gauss(Poly([p.mu + HALF, -1]))
    assert gen_hermite_state(p, 0, 1).wavefunction == gauss(0, 1)
    assert plain_energy(p, 2, 1) == Fr(13, 2)


@pytest.mark.parametrize("t, m, mu", [("I", 1, Fr(1)), ("I", 2, Fr(3, 4)), ("II", 2, Fr(5, 2)),
                                      ("III", 2, Fr(5, 2)), ("III", 4, Fr(9, 2))])
def test_extended_states(t, m, mu):
    p = DunklParams(mu)
    spec = extension_spec(p, t, m)
    for eps in (0, 1):
        for n in spec.valid_n(3):
            s = extended_state(p, spec, n, eps)
            assert extended_hamiltonian_apply(p, spec, s.wavefunction) == s.wavefunction * s.energy
            assert s.energy == extended_energy(p, spec, n, eps)
            assert s.wavefunction.parity() == (1 if eps == 0 else -1)
            for x in (0.7, -1.3):
                lhs = fd_ext_hamiltonian(s.wavefunction, mu, spec, x)
                rhs = float(s.energy) * float_eval(s.wavefunction, x)
                assert lhs == pytest.approx(rhs, rel=1e-4, abs=1e-4)


def test_extended_examples():
    p = DunklParams(Fr(1))
    spec = extension_spec(p, "I", 1)
    assert extended_state(p, spec, 1, 0).energy == Fr(3, 2)
    p = DunklParams(Fr(5, 2))
    spec = extension_spec(p, "III", 2)
    assert extended_state(p, spec, 0, 0).energy == -1
    # m = 0 reduces to the plain Hamiltonian
    p = DunklParams(Fr(3))
    spec0 = ExtensionSpec("II", 0, p.alpha)
    f = QRFunc(0, -1, RatFunc(Z + 2), RatFunc(Z * Z))
    assert extended_hamiltonian_apply(p, spec0, f) == hamiltonian_apply(p, f)


def test_extension_bounds():
    with pytest.raises(AdmissibilityError, match="mu > 1/2"):
        extension_spec(DunklParams(HALF), "I", 1)
    with pytest.raises(AdmissibilityError, match="mu > m - 1/2"):
        extension_spec(DunklParams(Fr(3, 2)), "II", 2)
    with pytest.raises(AdmissibilityError):
        DunklParams(Fr(-1, 2))


def test_radial_correspondence_examples():
    mu = Fr(5, 2)
    s = dunkl_from_radial(radial_eigenstate(RadialParams(mu - 1), 0), mu, 0)
    assert s.energy == mu + HALF and s.wavefunction == gauss()
    s = dunkl_from_radial(radial_eigenstate(RadialParams(mu), 0), mu, 1)
    assert s.energy == mu + Fr(3, 2) and s.wavefunction == gauss(0, 1)
    with pytest.raises(ValueError):
        dunkl_from_radial(radial_eigenstate(RadialParams(mu), 0), mu, 0)
    mu = Fr(1)
    spec = ExtensionSpec("I", 1, mu + HALF)
    rs = darboux_extend(RadialParams(mu - 1), spec.shifted(-1), 1)
    s = dunkl_from_radial(rs, mu, 0, spec)
    assert s.energy == HALF + mu
    assert extended_hamiltonian_apply(DunklParams(mu), spec, s.wavefunction) == s.wavefunction * s.energy


def test_exceptional_hermite_examples():
    p = DunklParams(Fr(5, 2))
    spec = extension_spec(p, "III", 2)
    for eps in (0, 1):
        num, den = exceptional_gen_hermite(p, spec, 0, eps)
        assert num.degree == 0
        assert den == laguerre(2, -p.mu - eps - HALF).reflect_arg()
    p = DunklParams(Fr(1))
    num, den = exceptional_gen_hermite(p, extension_spec(p, "I", 1), 1, 0)
    assert num.degree == 1 and den == laguerre(1, p.mu - Fr(3, 2)).reflect_arg()
    p = DunklParams(Fr(5, 2))
    assert denominator_poly(p, extension_spec(p, "II", 2), 0) == laguerre(2, Fr(-3))


@pytest.mark.parametrize("t, m, mu", [("I", 2, Fr(1)), ("II", 1, Fr(1)), ("III", 2, Fr(7, 2))])
def test_exceptional_hermite_reassembles_state(t, m, mu):
    p = DunklParams(mu)
    spec = extension_spec(p, t, m)
    for eps in (0, 1):
        for n in spec.valid_n(3):
            num, den = exceptional_gen_hermite(p, spec, n, eps)
            s = extended_state(p, spec, n, eps, with_norm=False)
            rebuilt = QRFunc(eps, -1, RatFunc(num, den))
            ratio = s.wavefunction / rebuilt
            # proportional by a rational constant
            assert ratio.rho == 0 and ratio.s == 0 and ratio.odd_part.is_zero()
            assert ratio.even_part.num.degree == 0 and ratio.even_part.den.degree == 0
