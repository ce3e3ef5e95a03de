"""Radial oscillator and its one-step Darboux rational extensions.

Exact work is done at frequency omega = 2, where the oscillator variable
``omega x**2 / 2`` is just ``z = x**2``::

    V_l(x) = l(l+1)/x**2 + x**2,     E_n = 2 (2n + l + 3/2).

Other frequencies rescale energies by omega/2 and the coordinate by
sqrt(omega/2); that is applied to :class:`Eigenstate` energies and norms only.

Seed energies (omega = 2), obtained by solving the seed equation exactly:

    I    E_seed = -2 (2m + l + 1/2)
    II   E_seed =  2 (2m - l - 1/2)
    III  E_seed = -2 (2m - l - 1/2)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactalg import RONE, RZ, QRFunc, RatFunc, Poly, as_rat
from .laguerre import AdmissibilityError, ExtensionSpec, g_poly, laguerre, laguerre_at_neg
from . import numerics

HALF = Fraction(1, 2)


class ResidualError(ArithmeticError):
    """An exact eigen-residual failed to vanish; indicates a construction bug."""


@dataclass(frozen=True)
class RadialParams:
    l: Fraction
    omega: Fraction = Fraction(2)

    def __post_init__(self):
        object.__setattr__(self, "l", as_rat(self.l))
        object.__setattr__(self, "omega", as_rat(self.omega))
        if self.omega <= 0:
            raise ValueError(f"omega must be positive, got {self.omega}")


@dataclass(frozen=True)
class Eigenstate:
    wavefunction: QRFunc
    norm: Optional[float]
    energy: Fraction
    n: int
    label: str
    l: Fraction
    omega: Fraction = Fraction(2)

    @property
    def energy_at_omega2(self) -> Fraction:
        return self.energy * 2 / self.omega


@dataclass(frozen=True)
class DarbouxSeed:
    spec: ExtensionSpec
    phi: QRFunc
    l_prime: Fraction
    C: Fraction
    energy: Fraction  # at omega = 2


def potential(l) -> RatFunc:
    """V_l as a function of z (omega = 2): l(l+1)/z + z."""
    l = as_rat(l)
    return RatFunc(Poly((l * (l + 1), 0, 1)), Poly((0, 1)))


def schrodinger_residual(psi: QRFunc, v: RatFunc, energy) -> QRFunc:
    """(-d^2/dx^2 + V - E) psi, exactly."""
    return -psi.derivative().derivative() + psi * (v - as_rat(energy))


def _radial_core(l: Fraction, n: int) -> QRFunc:
    return QRFunc(l + 1, -1, RatFunc(laguerre(n, l + HALF)))


def _radial_norm(psi: QRFunc, omega: Fraction) -> float:
    val = numerics.half_line_overlap(psi, psi)
    # rescaling x -> x sqrt(omega/2) multiplies the integral by sqrt(2/omega)
    return (float(omega) / 2) ** 0.25 / math.sqrt(val)


def radial_energy(p: RadialParams, n: int) -> Fraction:
    return p.omega * (2 * n + p.l + Fraction(3, 2))


def radial_eigenstate(p: RadialParams, n: int, with_norm: bool = True) -> Eigenstate:
    """x^(l+1) exp(-z/2) L_n^(l+1/2)(z) with energy omega (2n + l + 3/2)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    psi = _radial_core(p.l, n)
    norm = _radial_norm(psi, p.omega) if with_norm else None
    return Eigenstate(psi, norm, radial_energy(p, n), n, "plain", p.l, p.omega)


def _check_spec(p: RadialParams, spec: ExtensionSpec):
    if spec.alpha != p.l + HALF:
        raise AdmissibilityError(f"spec alpha = {spec.alpha} does not match l + 1/2 = {p.l + HALF}")


def darboux_seed(p: RadialParams, spec: ExtensionSpec, check: bool = True) -> DarbouxSeed:
    """Nodeless seed phi solving the V_{l'} equation; see module docstring."""
    _check_spec(p, spec)
    l, m = p.l, spec.m
    g = RatFunc(seed_poly(spec))
    if spec.ext_type == "I":
        phi = QRFunc(l, 1, g)
        e_seed = -2 * (2 * m + l + HALF)
    elif spec.ext_type == "II":
        phi = QRFunc(-l - 1, -1, g)
        e_seed = 2 * (2 * m - l - HALF)
    else:
        phi = QRFunc(-l - 1, 1, g)
        e_seed = -2 * (2 * m - l - HALF)
    seed = DarbouxSeed(spec, phi, spec.l_prime, spec.C(2), e_seed)
    if check and schrodinger_residual(phi, potential(seed.l_prime), e_seed):
        raise ResidualError(f"seed for {spec} does not solve its Schrodinger equation")
    return seed


def seed_poly(spec: ExtensionSpec) -> Poly:
    return g_poly(spec.ext_type, spec.m, spec.alpha)


def _w_function(ext_type: str, m: int, alpha) -> RatFunc:
    """gdot/g + 2z (gddot/g - (gdot/g)^2) with dots = d/dz."""
    g = g_poly(ext_type, m, alpha)
    if g.degree <= 0:
        return RatFunc(0)
    g1, g2 = g.derivative(), g.derivative().derivative()
    # common denominator g^2: (g1 g + 2z (g2 g - g1^2)) / g^2
    num = g1 * g + (g2 * g - g1 * g1).shift_z(1) * 2
    return RatFunc(num, g * g)


def rational_potential(spec: ExtensionSpec, omega=2) -> RatFunc:
    """V_rat(z) = -2 omega W(z)."""
    return _w_function(spec.ext_type, spec.m, spec.alpha) * (-2 * as_rat(omega))


def extended_energy(p: RadialParams, spec: ExtensionSpec, n: int) -> Fraction:
    return p.omega * (2 * n - 2 * spec.m + p.l + Fraction(3, 2))


def check_index(spec: ExtensionSpec, n: int):
    if spec.ext_type == "III":
        if n == 0 or n >= spec.m + 1:
            return
        raise ValueError(f"type III states have n = 0 or n >= m + 1 = {spec.m + 1}, got {n}")
    if n < spec.m:
        raise ValueError(f"type {spec.ext_type} states have n >= m = {spec.m}, got {n}")


def darboux_extend(p: RadialParams, spec: ExtensionSpec, n: int, check: bool = True,
                   with_norm: bool = True) -> Eigenstate:
    """Eigenstate of V_l + V_rat obtained as W(phi, psi_k)/phi.

    k = n - m for types I/II, k = n - m - 1 for type III; the type III n = 0
    level is 1/phi.  With ``check`` the exact eigen-residual is verified.
    """
    _check_spec(p, spec)
    check_index(spec, n)
    seed = darboux_seed(p, spec, check=check)
    phi = seed.phi
    if spec.ext_type == "III" and n == 0:
        psi = phi.reciprocal()
    else:
        k = n - spec.m - (1 if spec.ext_type == "III" else 0)
        base = _radial_core(seed.l_prime, k)
        log_d = phi.derivative() / phi
        psi = base.derivative() - log_d * base
    energy = extended_energy(p, spec, n)
    if check:
        v = potential(p.l) + rational_potential(spec, 2)
        if schrodinger_residual(psi, v, energy * 2 / p.omega):
            raise ResidualError(f"extended state {spec}, n={n} failed its exact residual check")
    norm = _radial_norm(psi, p.omega) if with_norm else None
    return Eigenstate(psi, norm, energy, n, spec.ext_type, p.l, p.omega)


def extended_potential_from_seed(p: RadialParams, spec: ExtensionSpec) -> RatFunc:
    """V_{l'} - 2 (log phi)'' - C as a function of z."""
    seed = darboux_seed(p, spec, check=False)
    logd = seed.phi.derivative() / seed.phi
    second = logd.derivative()
    if second.rho != 0 or second.s != 0 or second.odd_part:
        raise ResidualError("(log phi)'' is not an even rational function")
    return potential(seed.l_prime) - second.even_part * 2 - seed.C


def extract_eop(state: Eigenstate, spec: ExtensionSpec) -> Poly:
    """Polynomial factor P with psi = x^(l+1) e^(-z/2) P(z) / g(z)."""
    g = seed_poly(spec)
    stripped = state.wavefunction.times_x(-(state.l + 1)) * QRFunc(0, 1, RONE) * RatFunc(g)
    if stripped.rho != 0 or stripped.s != 0 or stripped.odd_part or not stripped.even_part.is_poly():
        raise ArithmeticError(f"no polynomial factor in state n={state.n} of {spec}")
    return stripped.even_part.num
