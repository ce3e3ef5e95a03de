"""Generalized Laguerre polynomials for rational parameters and Darboux seeds.

Polynomials come from the explicit binomial sum

    L_n^(a)(z) = sum_k (-1)^k binom(n + a, n - k) z^k / k!

which stays valid for negative, non-integer ``a``.  The recurrence/derivative
identities are kept separate (:func:`laguerre_identity_residuals`) so they act
as checks on the construction rather than being part of it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactalg import Poly, Z, as_rat

EXT_TYPES = ("I", "II", "III")


class AdmissibilityError(ValueError):
    """A parameter choice violates the admissibility rules of an extension."""


def gen_binomial(a: Fraction, j: int) -> Fraction:
    """binom(a, j) for rational ``a`` and integer ``j >= 0``."""
    out = Fraction(1)
    for i in range(j):
        out = out * (a - i) / (i + 1)
    return out


@lru_cache(maxsize=4096)
def _laguerre_cached(n: int, alpha: Fraction) -> Poly:
    coeffs = []
    fact = 1
    for k in range(n + 1):
        if k:
            fact *= k
        c = gen_binomial(n + alpha, n - k) / fact
        coeffs.append(-c if k % 2 else c)
    return Poly(coeffs)


def laguerre(n: int, alpha) -> Poly:
    """L_n^(alpha)(z).  By convention ``L_{-1} = 0``."""
    if n < -1:
        raise ValueError(f"Laguerre degree must be >= -1, got {n}")
    if n == -1:
        return Poly()
    return _laguerre_cached(n, as_rat(alpha))


def laguerre_at_neg(n: int, alpha) -> Poly:
    """Coefficients of L_n^(alpha)(-z)."""
    return laguerre(n, alpha).reflect_arg()


def g_poly(ext_type: str, m: int, alpha) -> Poly:
    """Seed polynomial g_m^(alpha)(z) without any admissibility check.

    type I   -> L_m^(alpha-1)(-z)
    type II  -> L_m^(-alpha-1)(z)
    type III -> L_m^(-alpha-1)(-z)

    The unchecked form is needed for the shifted indices (m-1, alpha +- 1)
    that show up in the closed forms of F and G.
    """
    alpha = as_rat(alpha)
    if ext_type == "I":
        return laguerre_at_neg(m, alpha - 1)
    if ext_type == "II":
        return laguerre(m, -alpha - 1)
    if ext_type == "III":
        return laguerre_at_neg(m, -alpha - 1)
    raise ValueError(f"unknown extension type {ext_type!r}")


@dataclass(frozen=True)
class ExtensionSpec:
    """One-step rational extension ``(type, m, alpha)``.

    ``alpha`` plays the role of ``l + 1/2`` for the radial oscillator.
    Admissibility is enforced here and nowhere else.
    """

    ext_type: str
    m: int
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rat(self.alpha))
        if self.ext_type not in EXT_TYPES:
            raise AdmissibilityError(f"extension type must be one of {EXT_TYPES}, got {self.ext_type!r}")
        if not isinstance(self.m, int) or self.m < 0:
            raise AdmissibilityError(f"m must be a non-negative integer, got {self.m!r}")
        a = self.alpha
        if self.ext_type == "I" and not a > 0:
            raise AdmissibilityError(f"type I needs alpha > 0 for a nodeless seed (alpha = {a})")
        if self.ext_type in ("II", "III") and not self.m < a + 1:
            raise AdmissibilityError(
                f"type {self.ext_type} needs m < alpha + 1 (m = {self.m}, alpha = {a})")
        if self.ext_type == "III" and self.m % 2:
            raise AdmissibilityError(f"type III needs m even (m = {self.m})")

    @property
    def l(self) -> Fraction:
        return self.alpha - Fraction(1, 2)

    @property
    def l_prime(self) -> Fraction:
        return self.l - 1 if self.ext_type == "I" else self.l + 1

    def C(self, omega=2) -> Fraction:
        """Energy shift constant of the extended potential."""
        omega = as_rat(omega)
        return omega if self.ext_type == "II" else -omega

    def shifted(self, d_alpha) -> "ExtensionSpec":
        return ExtensionSpec(self.ext_type, self.m, self.alpha + as_rat(d_alpha))

    def missing_degrees(self) -> set:
        if self.ext_type == "III":
            return set(range(1, self.m + 1))
        return set(range(self.m))

    def valid_n(self, count: int) -> list:
        """First ``count`` admissible state indices n."""
        if self.ext_type == "III":
            return [0] + [self.m + 1 + k for k in range(count - 1)]
        return [self.m + k for k in range(count)]


def seed_g(spec: ExtensionSpec) -> Poly:
    return g_poly(spec.ext_type, spec.m, spec.alpha)


def laguerre_identity_residuals(n: int, alpha) -> dict:
    """Residual polynomials of the four classical Laguerre identities.

    Each value is zero iff the identity holds:

    * ode               z L'' + (alpha + 1 - z) L' + n L = 0
    * derivative        L_n^(alpha)' = -L_{n-1}^(alpha+1)
    * z-derivative      z L' = n L_n^(alpha) - (n + alpha) L_{n-1}^(alpha)
    * parameter-shift   L_n^(alpha-1) = L_n^(alpha) - L_{n-1}^(alpha)
    """
    alpha = as_rat(alpha)
    L = laguerre(n, alpha)
    d1 = L.derivative()
    d2 = d1.derivative()
    return {
        "ode": Z * d2 + (Poly((alpha + 1, -1)) * d1) + L * n,
        "derivative": d1 + laguerre(n - 1, alpha + 1),
        "z-derivative": Z * d1 - (L * n - laguerre(n - 1, alpha) * (n + alpha)),
        "parameter-shift": laguerre(n, alpha - 1) - (L - laguerre(n - 1, alpha)),
    }
