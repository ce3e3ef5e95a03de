"""Floating-point side: evaluation, quadrature, Sturm counting, normalization.

All integrals reduce, via ``z = x**2``, to

    int_0^inf z**a * exp(-z) * q(z) dz

with ``q`` rational and pole-free on ``[0, inf)``.  Gauss-Laguerre rules are
built by Golub-Welsch; overlaps use a composite Jacobi/Laguerre rule (see
:func:`composite_rule`) because nearby poles of ``q`` stall pure Laguerre.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln, roots_jacobi

from .exactalg import Poly, QRFunc, RatFunc, as_rat

DEFAULT_ORDER = 200
ORDER_ENV = "DUNKL_EOP_QUAD_ORDER"


def default_order() -> int:
    value = os.environ.get(ORDER_ENV)
    return int(value) if value else DEFAULT_ORDER


class PoleError(ArithmeticError):
    """A denominator vanishes where it must not."""


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    alpha_param: float
    order: int

    def integrate(self, values) -> float:
        return float(np.dot(self.weights, values))


def _refine_nodes(nodes: np.ndarray, n: int, a: float, sweeps: int = 2) -> np.ndarray:
    # Newton on the orthonormal recurrence: p_n(x) and p_n'(x) at each node
    x = nodes.copy()
    for _ in range(sweeps):
        p_prev = np.zeros_like(x)
        p = np.full_like(x, 1.0)
        dp_prev = np.zeros_like(x)
        dp = np.zeros_like(x)
        b_prev = 0.0
        for k in range(n):
            b_next = math.sqrt((k + 1) * (k + 1 + a))
            ak = 2 * k + a + 1
            p_new = ((x - ak) * p - b_prev * p_prev) / b_next
            dp_new = (p + (x - ak) * dp - b_prev * dp_prev) / b_next
            p_prev, p = p, p_new
            dp_prev, dp = dp, dp_new
            b_prev = b_next
            # rescale to keep the recurrence in range
            scale = np.maximum(np.abs(p), 1.0)
            p, p_prev, dp, dp_prev = p / scale, p_prev / scale, dp / scale, dp_prev / scale
        x = x - p / dp
    return x


@lru_cache(maxsize=64)
def gauss_laguerre(order: int, alpha: float) -> QuadratureRule:
    """Gauss rule for the weight ``z**alpha * exp(-z)`` on (0, inf).

    Golub-Welsch: eigenvalues of the symmetric Jacobi matrix give the nodes,
    polished by Newton on the three-term recurrence.  Weights use the
    Christoffel form Gamma(alpha + 1) / sum_k p_k(x_i)**2, which stays accurate
    for the tiny weights at large nodes where eigenvector entries underflow.
    """
    if order < 1:
        raise ValueError("quadrature order must be positive")
    if alpha <= -1:
        raise ValueError(f"weight z**{alpha} e^-z is not integrable")
    k = np.arange(order, dtype=float)
    diag = 2 * k + alpha + 1
    off = np.sqrt(k[1:] * (k[1:] + alpha))
    nodes = eigh_tridiagonal(diag, off, eigvals_only=True)
    nodes = _refine_nodes(nodes, order, alpha)
    w = _christoffel_weights(nodes, order, alpha)
    return QuadratureRule(nodes=nodes, weights=w, alpha_param=float(alpha), order=order)


def _christoffel_weights(x: np.ndarray, n: int, a: float) -> np.ndarray:
    # orthonormal p_k w.r.t. z^a e^-z / Gamma(a+1); the sum can overflow for
    # large nodes, so track a running log-scale
    log_scale = np.zeros_like(x)
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    total = np.ones_like(x)
    b_prev = 0.0
    for k in range(n - 1):
        b_next = math.sqrt((k + 1) * (k + 1 + a))
        p_new = ((x - (2 * k + a + 1)) * p - b_prev * p_prev) / b_next
        p_prev, p = p, p_new
        b_prev = b_next
        total = total + p * p
        big = np.abs(p) > 1e100
        if np.any(big):
            s = np.where(big, 1e-100, 1.0)
            p, p_prev = p * s, p_prev * s
            total = total * s * s
            log_scale = log_scale + np.where(big, 200 * math.log(10), 0.0)
    log_w = gammaln(a + 1) - np.log(total) - log_scale
    return np.exp(log_w)


def float_eval(f: QRFunc, x0: float) -> float:
    """IEEE evaluation of a quasi-rational function at ``x0``."""
    x0 = float(x0)
    if f.is_zero():
        return 0.0
    z = x0 * x0
    try:
        r0 = f.even_part(z) if f.even_part else 0.0
        r1 = f.odd_part(z) if f.odd_part else 0.0
    except ZeroDivisionError as exc:
        raise PoleError(f"denominator vanishes at x = {x0}") from exc
    if f.rho == 0:
        pref = 1.0
    elif x0 > 0:
        pref = x0 ** float(f.rho)
    elif x0 == 0:
        pref = 0.0
    else:
        raise ValueError(f"x**{f.rho} is not real for x = {x0}")
    return pref * math.exp(float(f.s) * z / 2) * (r0 + x0 * r1)


def _ratfunc_values(r: RatFunc, z: np.ndarray) -> np.ndarray:
    if r.is_zero():
        return np.zeros_like(z)
    num = np.polynomial.polynomial.polyval(z, r.num.float_coeffs())
    den = np.polynomial.polynomial.polyval(z, r.den.float_coeffs())
    return num / den


def sturm_chain(p: Poly) -> list:
    chain = [p, p.derivative()]
    while chain[-1]:
        r = -(chain[-2] % chain[-1])
        if not r:
            break
        chain.append(r)
    return chain


def _sign_changes(values) -> int:
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def sturm_positive_roots(p: Poly) -> int:
    """Exact number of distinct real roots of ``p`` in (0, inf)."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root count")
    k = p.lowest_power()
    if k:
        p = Poly(p.coeffs[k:])
    if p.degree < 1:
        return 0
    chain = sturm_chain(p)
    at_zero = [q.coeffs[0] if q.coeffs else 0 for q in chain]
    at_inf = [q.lead for q in chain]
    return _sign_changes(at_zero) - _sign_changes(at_inf)


_checked_dens: dict = {}


def assert_nodeless(r: RatFunc):
    den = r.den
    ok = _checked_dens.get(den)
    if ok is None:
        ok = sturm_positive_roots(den) == 0 and den(Fraction(0)) != 0
        _checked_dens[den] = ok
    if not ok:
        raise PoleError(f"denominator {den} has a root in [0, inf)")


SPLIT = 16.0


@lru_cache(maxsize=64)
def composite_rule(order: int, alpha: float, split: float = SPLIT) -> QuadratureRule:
    """Rule for int_0^inf z**alpha e^-z q(z) dz with rational, pole-free ``q``.

    Pure Gauss-Laguerre converges only like exp(-c sqrt(order * d)) when ``q``
    has a pole at distance ``d`` from [0, inf), and nodeless denominators here
    have roots as close as ~0.1 to z = 0.  Instead: a Gauss-Jacobi panel on
    [0, split] carries z**alpha exactly and converges geometrically, and a
    shifted Gauss-Laguerre panel covers [split, inf).  ``order`` nodes each.
    """
    if alpha <= -1:
        raise ValueError(f"weight z**{alpha} e^-z is not integrable")
    t, wj = roots_jacobi(order, 0.0, alpha)
    head_z = 0.5 * split * (1.0 + t)
    head_w = (0.5 * split) ** (alpha + 1) * wj * np.exp(-head_z)
    tail = gauss_laguerre(order, 0.0)
    tail_z = tail.nodes + split
    tail_w = tail.weights * np.exp(-split + alpha * np.log(tail_z))
    return QuadratureRule(nodes=np.concatenate([head_z, tail_z]),
                          weights=np.concatenate([head_w, tail_w]),
                          alpha_param=float(alpha), order=order)


def _half_line_integral(parts_even, parts_odd, base: float, order: int) -> float:
    """int_0^inf z**base e^-z E(z) dz + int_0^inf z**(base+1/2) e^-z O(z) dz.

    ``parts_even`` / ``parts_odd`` are lists of (RatFunc, RatFunc) products.
    """
    total = 0.0
    for pairs, a in ((parts_even, base), (parts_odd, base + 0.5)):
        pairs = [(u, v) for u, v in pairs if u and v]
        if not pairs:
            continue
        rule = composite_rule(order, a)
        vals = np.zeros_like(rule.nodes)
        for u, v in pairs:
            assert_nodeless(u)
            assert_nodeless(v)
            vals += _ratfunc_values(u, rule.nodes) * _ratfunc_values(v, rule.nodes)
        total += rule.integrate(vals)
    return total


def weighted_overlap(mu, f: QRFunc, g: QRFunc, order: int | None = None) -> float:
    """int_R f(x) g(x) |x|**(2 mu) dx for ``rho = 0``, ``s = -1`` functions."""
    mu = as_rat(mu)
    if mu <= Fraction(-1, 2):
        raise ValueError(f"weight |x|^(2 mu) not integrable for mu = {mu}")
    if f.is_zero() or g.is_zero():
        return 0.0
    for h in (f, g):
        if h.rho != 0 or h.s != -1:
            raise ValueError("weighted_overlap expects rho = 0 and factor exp(-x^2/2)")
    order = order or default_order()
    a0, a1 = f.even_part, f.odd_part
    b0, b1 = g.even_part, g.odd_part
    # even*even -> z^(mu-1/2); odd*odd carries an extra z -> z^(mu+1/2);
    # mixed parity integrates to zero exactly
    total = 0.0
    if a0 and b0:
        total += _half_line_integral([(a0, b0)], [], float(mu) - 0.5, order)
    if a1 and b1:
        total += _half_line_integral([(a1, b1)], [], float(mu) + 0.5, order)
    return total


def half_line_overlap(f: QRFunc, g: QRFunc, order: int | None = None) -> float:
    """int_0^inf f(x) g(x) dx for two functions of the same x-power class."""
    if f.is_zero() or g.is_zero():
        return 0.0
    if f.rho != g.rho or f.s != -1 or g.s != -1:
        raise ValueError("half_line_overlap expects matching rho and factor exp(-x^2/2)")
    order = order or default_order()
    rho = float(f.rho)
    a0, a1 = f.even_part, f.odd_part
    b0, b1 = g.even_part, g.odd_part
    # x^(2 rho) e^-z (A0B0 + z A1B1 + x (A0B1 + A1B0)), dx = dz / (2 sqrt z)
    even_pairs = [(a0, b0)]
    if a1 and b1:
        even_pairs.append((a1.shift_z(1), b1))
    odd_pairs = [(a0, b1), (a1, b0)]
    return 0.5 * _half_line_integral(even_pairs, odd_pairs, rho - 0.5, order)


def normalize(mu, state, order: int | None = None):
    """Return ``state`` with ``norm = 1/sqrt(<core, core>)`` under |x|^(2 mu)."""
    val = weighted_overlap(mu, state.wavefunction, state.wavefunction, order)
    if not math.isfinite(val) or val <= 0:
        raise ArithmeticError(f"non-finite or non-positive norm integral {val}")
    return replace(state, norm=1.0 / math.sqrt(val))


def overlap_matrix(mu, states, order: int | None = None) -> np.ndarray:
    """Gram matrix of normalized states (``norm * core``)."""
    n = len(states)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            v = states[i].norm * states[j].norm * weighted_overlap(
                mu, states[i].wavefunction, states[j].wavefunction, order)
            out[i, j] = out[j, i] = v
    return out


def gamma_moment(alpha: float, k: int) -> float:
    """int_0^inf z**(alpha + k) e^-z dz via Gamma(a+k+1) = (a+k) Gamma(a+k)."""
    val = math.gamma(alpha + 1)
    for j in range(1, k + 1):
        val *= alpha + j
    return val
