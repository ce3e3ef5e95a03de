"""Dunkl oscillator on the line and its rational extensions.

Functions passed to the operators here must canonicalize to ``rho = 0`` so
that the reflection R is defined.  ``alpha = mu + 1/2`` throughout; the even
sector (epsilon = 0) of an extension uses the seed at ``alpha - 1`` and the
odd sector (epsilon = 1) the seed at ``alpha``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactalg import QRFunc, RatFunc, Poly, as_rat
from .laguerre import AdmissibilityError, ExtensionSpec, g_poly, laguerre
from .radial import (Eigenstate, RadialParams, _w_function, darboux_extend,
                     extract_eop)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class DunklParams:
    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "mu", as_rat(self.mu))
        if self.mu <= -HALF:
            raise AdmissibilityError(f"the Dunkl oscillator needs mu > -1/2 (mu = {self.mu})")

    @property
    def alpha(self) -> Fraction:
        return self.mu + HALF


@dataclass(frozen=True)
class DunklState:
    wavefunction: QRFunc
    norm: Optional[float]
    n: int
    epsilon: int
    energy: Fraction
    mu: Fraction
    spec: Optional[ExtensionSpec] = None


def extension_spec(p: DunklParams, ext_type: str, m: int) -> ExtensionSpec:
    """ExtensionSpec at alpha = mu + 1/2, validated for both sectors."""
    spec = ExtensionSpec(ext_type, m, p.alpha)
    check_dunkl_spec(p, spec)
    return spec


def check_dunkl_spec(p: DunklParams, spec: ExtensionSpec):
    if spec.alpha != p.alpha:
        raise AdmissibilityError(f"spec alpha = {spec.alpha} must equal mu + 1/2 = {p.alpha}")
    if spec.ext_type == "I" and not p.mu > HALF:
        raise AdmissibilityError(f"type I extensions need mu > 1/2 (mu = {p.mu})")
    if spec.ext_type in ("II", "III") and not p.mu > spec.m - HALF:
        raise AdmissibilityError(
            f"type {spec.ext_type} extensions need mu > m - 1/2 (mu = {p.mu}, m = {spec.m})")
    spec.shifted(-1)  # raises if the even-sector seed is inadmissible


def _require_rho0(f: QRFunc):
    if f.rho != 0 and not f.is_zero():
        raise ValueError(f"Dunkl operators need rho = 0 after canonicalization, got {f.rho}")


def dunkl_apply(p: DunklParams, f: QRFunc) -> QRFunc:
    """D_mu f = f' + (mu/x)(1 - R) f."""
    _require_rho0(f)
    if f.is_zero():
        return f
    # (1 - R)f = 2x R1 e^{sz/2}, so (mu/x)(1 - R)f = 2 mu R1 e^{sz/2}
    return f.derivative() + QRFunc(0, f.s, f.odd_part * (2 * p.mu))


def hamiltonian_apply(p: DunklParams, f: QRFunc) -> QRFunc:
    """H_mu f = (1/2)(-D_mu^2 + x^2) f."""
    _require_rho0(f)
    return (-dunkl_apply(p, dunkl_apply(p, f)) + f * RatFunc(Poly((0, 1)))) * HALF


def hamiltonian_apply_expanded(p: DunklParams, f: QRFunc) -> QRFunc:
    """Expanded form: (1/2)(-f'' - (2mu/x) f' + (mu/x^2)(1-R) f + x^2 f)."""
    _require_rho0(f)
    if f.is_zero():
        return f
    mu = p.mu
    d1 = f.derivative()
    one_minus_r = f.odd_component() * 2
    out = (-d1.derivative() - d1.times_x(-1) * (2 * mu)
           + one_minus_r.times_x(-2) * mu + f.times_x(2))
    return out * HALF


def plain_energy(p: DunklParams, n: int, epsilon: int) -> Fraction:
    return 2 * n + epsilon + p.mu + HALF


def _check_eps(epsilon):
    if epsilon not in (0, 1):
        raise ValueError(f"epsilon must be 0 or 1, got {epsilon!r}")


def gen_hermite_state(p: DunklParams, n: int, epsilon: int) -> DunklState:
    """Core x^eps L_n^(mu-1/2+eps)(z) e^(-z/2); norm^2 = n!/Gamma(n+mu+eps+1/2)."""
    _check_eps(epsilon)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    core = QRFunc(epsilon, -1, RatFunc(laguerre(n, p.mu - HALF + epsilon)))
    log_norm2 = math.lgamma(n + 1) - math.lgamma(n + float(p.mu) + epsilon + 0.5)
    return DunklState(core, math.exp(0.5 * log_norm2), n, epsilon, plain_energy(p, n, epsilon), p.mu)


def extended_hamiltonian_apply(p: DunklParams, spec: ExtensionSpec, f: QRFunc) -> QRFunc:
    """(1/2){-D^2 + x^2 - 2 W_{alpha-1} (1+R) - 2 W_alpha (1-R)} f."""
    _require_rho0(f)
    check_dunkl_spec(p, spec)
    base = hamiltonian_apply(p, f)
    if f.is_zero() or spec.m == 0:
        return base
    w_even = _w_function(spec.ext_type, spec.m, spec.alpha - 1)
    w_odd = _w_function(spec.ext_type, spec.m, spec.alpha)
    # (1/2)(-2 W)(1 +- R) f = -2 W f_(even/odd)
    return base - f.even_component() * (w_even * 2) - f.odd_component() * (w_odd * 2)


def extended_energy(p: DunklParams, spec: ExtensionSpec, n: int, epsilon: int) -> Fraction:
    return 2 * n - 2 * spec.m + epsilon + p.mu + HALF


def dunkl_from_radial(state: Eigenstate, mu, epsilon: int, spec: Optional[ExtensionSpec] = None) -> DunklState:
    """Map a radial (omega = 2, l = mu - 1 + eps) state to the Dunkl line.

    Multiplies by x^(-mu), halves the energy and rescales the half-line norm
    by 1/sqrt(2).
    """
    _check_eps(epsilon)
    mu = as_rat(mu)
    if state.omega != 2:
        raise ValueError("the Dunkl correspondence needs omega = 2")
    if state.l != mu - 1 + epsilon:
        raise ValueError(f"radial l = {state.l} does not pair with mu = {mu}, epsilon = {epsilon}")
    psi = state.wavefunction.times_x(-mu)
    if psi.rho != 0:
        raise ValueError(f"x^(-mu) psi has rho = {psi.rho}, expected 0")
    norm = None if state.norm is None else state.norm / math.sqrt(2)
    return DunklState(psi, norm, state.n, epsilon, state.energy / 2, mu, spec)


def radial_spec(p: DunklParams, spec: ExtensionSpec, epsilon: int) -> ExtensionSpec:
    """The radial extension behind sector ``epsilon`` (alpha - 1 + epsilon)."""
    return spec.shifted(epsilon - 1)


def extended_state(p: DunklParams, spec: ExtensionSpec, n: int, epsilon: int,
                   check: bool = True, with_norm: bool = True) -> DunklState:
    """Extended Dunkl eigenstate built through the radial correspondence."""
    _check_eps(epsilon)
    check_dunkl_spec(p, spec)
    rspec = radial_spec(p, spec, epsilon)
    rp = RadialParams(p.mu - 1 + epsilon, 2)
    state = darboux_extend(rp, rspec, n, check=check, with_norm=with_norm)
    return dunkl_from_radial(state, p.mu, epsilon, spec)


def plain_state_from_radial(p: DunklParams, n: int, epsilon: int, with_norm: bool = True) -> DunklState:
    from .radial import radial_eigenstate
    state = radial_eigenstate(RadialParams(p.mu - 1 + epsilon, 2), n, with_norm=with_norm)
    return dunkl_from_radial(state, p.mu, epsilon)


def denominator_poly(p: DunklParams, spec: ExtensionSpec, epsilon: int) -> Poly:
    """Laguerre denominator of the exceptional generalized Hermite polynomial.

    I: L_m^(mu+eps-3/2)(-z); II: L_m^(-mu-eps-1/2)(z); III: L_m^(-mu-eps-1/2)(-z).
    """
    return g_poly(spec.ext_type, spec.m, p.mu - HALF + epsilon)


def exceptional_gen_hermite(p: DunklParams, spec: ExtensionSpec, n: int, epsilon: int):
    """(numerator, denominator) polynomials in z of the exceptional Hermite function.

    The numerator is scaled to the exceptional Laguerre convention for which
    the textbook normalization constants hold: half the Darboux polynomial,
    and 1 for the type III n = 0 level.
    """
    _check_eps(epsilon)
    check_dunkl_spec(p, spec)
    rspec = radial_spec(p, spec, epsilon)
    rp = RadialParams(p.mu - 1 + epsilon, 2)
    state = darboux_extend(rp, rspec, n, check=False, with_norm=False)
    num = extract_eop(state, rspec)
    if not (spec.ext_type == "III" and n == 0):
        num = num * HALF
    return num, denominator_poly(p, spec, epsilon)
