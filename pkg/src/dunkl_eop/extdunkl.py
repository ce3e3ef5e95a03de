"""Extended Dunkl derivative  D^_mu = D_mu + F(x) R  and the anharmonic term G.

With ``alpha = mu + 1/2`` and dots meaning d/dz (z = x**2), the extended
Hamiltonian is rewritten as

    H_ext = (1/2) (-D^_mu**2 + x**2 + G(x)),
    F(x)  = 2x (gdot_{alpha-1}/g_{alpha-1} - gdot_alpha/g_alpha).

F is odd, so it is stored as ``F_over_x`` (a function of z); G is even.
The sign in front of D^_mu**2 is minus: that is the version consistent with
the first-order equation for F and the formula for G; with a plus sign the
rewriting fails, and :func:`verify_rewriting_identity` reports it.

Every constructor cross-checks the general formulas against the
type-specific Laguerre-ratio forms and raises :class:`IdentityError` on any
mismatch.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dunkl import (DunklParams, check_dunkl_spec, dunkl_apply,
                    extended_hamiltonian_apply)
from .exactalg import QRFunc, RatFunc, Poly, RZ, as_rat
from .laguerre import ExtensionSpec, g_poly
from .radial import _w_function
from .report import PASS, VACUOUS, CheckReport


class IdentityError(ArithmeticError):
    """Two routes to the same exact quantity disagree."""


@dataclass(frozen=True)
class FGPair:
    F_over_x: RatFunc
    G: RatFunc

    def F_qr(self) -> QRFunc:
        return QRFunc(1, 0, self.F_over_x)


def _g(spec: ExtensionSpec, m: int, alpha) -> RatFunc:
    return RatFunc(g_poly(spec.ext_type, m, alpha))


def _log_ratio(spec: ExtensionSpec, alpha) -> RatFunc:
    """gdot_m^(alpha) / g_m^(alpha)."""
    g = g_poly(spec.ext_type, spec.m, alpha)
    return RatFunc(g.derivative(), g)


def _residual_str(r) -> str:
    if not r:
        return "0"
    text = repr(r)
    return text if len(text) < 240 else text[:237] + "..."


def F_general(p: DunklParams, spec: ExtensionSpec) -> RatFunc:
    a = spec.alpha
    return (_log_ratio(spec, a - 1) - _log_ratio(spec, a)) * 2


def F_type_specific(p: DunklParams, spec: ExtensionSpec) -> RatFunc:
    a, m = spec.alpha, spec.m
    if m == 0:
        return RatFunc(0)
    if spec.ext_type == "I":
        r = _g(spec, m - 1, a) / _g(spec, m, a - 1) - _g(spec, m - 1, a + 1) / _g(spec, m, a)
    elif spec.ext_type == "II":
        r = -_g(spec, m - 1, a - 2) / _g(spec, m, a - 1) + _g(spec, m - 1, a - 1) / _g(spec, m, a)
    else:
        r = _g(spec, m - 1, a - 2) / _g(spec, m, a - 1) - _g(spec, m - 1, a - 1) / _g(spec, m, a)
    return r * 2


def compute_F(p: DunklParams, spec: ExtensionSpec) -> RatFunc:
    """F(x)/x as a function of z; general and type-specific forms must agree."""
    check_dunkl_spec(p, spec)
    general = F_general(p, spec)
    specific = F_type_specific(p, spec)
    if general != specific:
        raise IdentityError(f"F forms disagree for {spec}: {general - specific!r}")
    return general


def G_general(p: DunklParams, spec: ExtensionSpec) -> RatFunc:
    """4(a-1) r1 - 4a r2 - 4z (gddot/g sums) + 8z r1 r2."""
    a = spec.alpha
    g1 = g_poly(spec.ext_type, spec.m, a - 1)
    g2 = g_poly(spec.ext_type, spec.m, a)
    r1, r2 = RatFunc(g1.derivative(), g1), RatFunc(g2.derivative(), g2)
    s1 = RatFunc(g1.derivative().derivative(), g1)
    s2 = RatFunc(g2.derivative().derivative(), g2)
    return (r1 * (4 * (a - 1)) - r2 * (4 * a) - ((s1 + s2) * RZ) * 4
            + (r1 * r2 * RZ) * 8)


def G_from_F(p: DunklParams, spec: ExtensionSpec, F_over_x: RatFunc) -> RatFunc:
    """-2 W_(a-1) - 2 W_a + (2 mu / x) F - F**2, in z."""
    a = spec.alpha
    w1 = _w_function(spec.ext_type, spec.m, a - 1)
    w2 = _w_function(spec.ext_type, spec.m, a)
    return -(w1 + w2) * 2 + F_over_x * (2 * p.mu) - (F_over_x * F_over_x) * RZ


def G_type_specific(p: DunklParams, spec: ExtensionSpec) -> RatFunc:
    a, m = spec.alpha, spec.m
    if m == 0:
        return RatFunc(0)
    q1 = _g(spec, m - 1, a - 1) / _g(spec, m, a - 1)
    q2 = _g(spec, m - 1, a) / _g(spec, m, a)
    if spec.ext_type == "I":
        return q1 * (-4 * (a - 2 + m)) + q2 * (4 * (a - 1 + m))
    if spec.ext_type == "II":
        return q1 * (4 * (a - m)) - q2 * (4 * (a + 1 - m))
    return q1 * (-4 * (a - m)) + q2 * (4 * (a + 1 - m))


def compute_G(p: DunklParams, spec: ExtensionSpec) -> RatFunc:
    """G as a function of z; three independent forms must agree."""
    check_dunkl_spec(p, spec)
    F = compute_F(p, spec)
    g_gen = G_general(p, spec)
    g_rel = G_from_F(p, spec, F)
    g_typ = G_type_specific(p, spec)
    if not (g_gen == g_rel == g_typ):
        raise IdentityError(f"G forms disagree for {spec}")
    return g_gen


def compute_FG(p: DunklParams, spec: ExtensionSpec) -> FGPair:
    return FGPair(compute_F(p, spec), compute_G(p, spec))


def F_prime_residual(p: DunklParams, spec: ExtensionSpec) -> RatFunc:
    """F'(x) - (2 W_(a-1) - 2 W_a); F' = F/x + 2z (F/x)' in z."""
    Fo = compute_F(p, spec)
    fprime = Fo + (Fo.derivative() * RZ) * 2
    a = spec.alpha
    rhs = (_w_function(spec.ext_type, spec.m, a - 1) - _w_function(spec.ext_type, spec.m, a)) * 2
    return fprime - rhs


def _lin(c0, c1) -> Poly:
    return Poly((c0, c1))


def explicit_FG(mu, ext_type: str, m: int):
    """The displayed closed forms for m = 1 (types I, II) and m = 2 (all types).

    Returns ``(F_over_x, G)`` as rational functions of z.
    """
    mu = as_rat(mu)
    X = lambda c: _lin(c, 2)  # 2x^2 + c
    if m == 1 and ext_type in ("I", "II"):
        a, b = X(2 * mu - 1), X(2 * mu + 1)
        F = RatFunc(4, a) - RatFunc(4, b)
        G = RatFunc(-4 * (2 * mu - 1), a) + RatFunc(4 * (2 * mu + 1), b)
        return F, G
    if m == 2:
        if ext_type == "I":
            u, v = X(2 * mu + 1), X(2 * mu + 3)
            du = u * u - 2 * (2 * mu + 1)
            dv = v * v - 2 * (2 * mu + 3)
            F = RatFunc(u * 8, du) - RatFunc(v * 8, dv)
            G = RatFunc(X(2 * mu - 1) * (-8 * (2 * mu + 1)), du) + RatFunc(X(2 * mu + 1) * (8 * (2 * mu + 3)), dv)
            return F, G
        if ext_type == "II":
            u, v = X(2 * mu - 3), X(2 * mu - 1)
            du = u * u + 2 * (2 * mu - 3)
            dv = v * v + 2 * (2 * mu - 1)
            F = RatFunc(u * 8, du) - RatFunc(v * 8, dv)
            G = RatFunc(X(2 * mu - 1) * (-8 * (2 * mu - 3)), du) + RatFunc(X(2 * mu + 1) * (8 * (2 * mu - 1)), dv)
            return F, G
        if ext_type == "III":
            u, v = X(-2 * mu + 3), X(-2 * mu + 1)
            du = u * u + 2 * (2 * mu - 3)
            dv = v * v + 2 * (2 * mu - 1)
            F = RatFunc(u * 8, du) - RatFunc(v * 8, dv)
            G = RatFunc(X(-2 * mu + 1) * (-8 * (2 * mu - 3)), du) + RatFunc(X(-2 * mu - 1) * (8 * (2 * mu - 1)), dv)
            return F, G
    raise ValueError(f"no displayed closed form for type {ext_type}, m = {m}")


def explicit_mu_bound(ext_type: str, m: int) -> Fraction:
    """mu must exceed this for the displayed closed form to apply."""
    if m == 1 or ext_type == "I":
        return Fraction(1, 2)
    return Fraction(3, 2)


def ext_dunkl_apply(p: DunklParams, fg: FGPair, f: QRFunc) -> QRFunc:
    """D^_mu f = f' + (mu/x)(1 - R) f + F(x) (R f)."""
    out = dunkl_apply(p, f)
    if f.is_zero() or fg.F_over_x.is_zero():
        return out
    return out + fg.F_qr() * f.reflect()


def basis_function(k: int) -> QRFunc:
    """x**k exp(-x**2/2)."""
    return QRFunc(k, -1, RatFunc(1))


def rewritten_hamiltonian_apply(p: DunklParams, fg: FGPair, f: QRFunc, sign: str = "minus") -> QRFunc:
    """(1/2)(-+ D^**2 + x**2 + G) f."""
    dd = ext_dunkl_apply(p, fg, ext_dunkl_apply(p, fg, f))
    if sign == "minus":
        dd = -dd
    elif sign != "plus":
        raise ValueError(f"sign must be 'minus' or 'plus', got {sign!r}")
    return (dd + f * (RZ + fg.G)) * Fraction(1, 2)


def verify_rewriting_identity(p: DunklParams, spec: ExtensionSpec, basis_size: int = 10,
                              sign: str = "minus") -> CheckReport:
    """Compare the rewritten Hamiltonian with the projector form on x^k e^(-x^2/2)."""
    report = CheckReport("eq5.1")
    fg = compute_FG(p, spec)
    params = {"type": spec.ext_type, "m": spec.m, "mu": str(p.mu), "sign": sign}
    for k in range(basis_size + 1):
        b = basis_function(k)
        res = rewritten_hamiltonian_apply(p, fg, b, sign) - extended_hamiltonian_apply(p, spec, b)
        report.add(f"x^{k} e^(-x^2/2)", res.is_zero(), _residual_str(res), {**params, "k": k})
    return report


def appendix_blocks(spec: ExtensionSpec) -> dict:
    """Left/right sides of the intermediate identities leading to G.

    Keys: ``"eliminated"`` (G with second derivatives removed, compared to the
    general G) and ``"a"``, ``"b"``, ``"c"`` for the three per-type relations.
    Each value is ``(lhs, rhs)``.
    """
    a, m, t = spec.alpha, spec.m, spec.ext_type
    z = RZ
    r1, r2 = _log_ratio(spec, a - 1), _log_ratio(spec, a)
    gm1 = lambda alpha: _g(spec, m - 1, alpha)
    gm = lambda alpha: _g(spec, m, alpha)
    prod = (r1 * r2 * z) * 8
    if t == "I":
        elim = r1 * _lin(8 * a - 8, 4) + (r2 * z) * 4 - 8 * m + prod
        blocks = {
            "a": (r1 * _lin(8 * a - 8, 4),
                  gm1(a) / gm(a - 1) * (4 * (2 * a - 2)) + 4 * m - gm1(a - 1) / gm(a - 1) * (4 * (m + a - 2))),
            "b": ((r2 * z) * 4, RatFunc(4 * m) - gm1(a) / gm(a) * (4 * (m + a - 1))),
            "c": (prod, gm1(a) / gm(a - 1) * (-8 * (a - 1)) + gm1(a) / gm(a) * (8 * (a - 1 + m))),
        }
    elif t == "II":
        elim = -(r1 * z) * 4 - r2 * _lin(8 * a, 4) + 8 * m + prod
        blocks = {
            "a": (-(r1 * z) * 4, RatFunc(-4 * m) + gm1(a - 1) / gm(a - 1) * (4 * (m - a))),
            "b": (-r2 * _lin(8 * a, 4),
                  gm1(a - 1) / gm(a) * (8 * a) - 4 * m + gm1(a) / gm(a) * (4 * (m - a - 1))),
            "c": (prod, gm1(a - 1) / gm(a - 1) * (-8 * (m - a)) - gm1(a - 1) / gm(a) * (8 * a)),
        }
    else:
        elim = (r1 * z) * 4 - r2 * _lin(8 * a, -4) - 8 * m + prod
        blocks = {
            "a": ((r1 * z) * 4, RatFunc(4 * m) - gm1(a - 1) / gm(a - 1) * (4 * (m - a))),
            "b": (-r2 * _lin(8 * a, -4),
                  gm1(a - 1) / gm(a) * (-8 * a) + 4 * m - gm1(a) / gm(a) * (4 * (m - a - 1))),
            "c": (prod, gm1(a - 1) / gm(a - 1) * (8 * (m - a)) + gm1(a - 1) / gm(a) * (8 * a)),
        }
    blocks["eliminated"] = (elim, None)
    return blocks


def verify_appendix_steps(p: DunklParams, spec: ExtensionSpec) -> CheckReport:
    report = CheckReport("appendix")
    check_dunkl_spec(p, spec)
    params = {"type": spec.ext_type, "m": spec.m, "mu": str(p.mu)}
    if spec.m == 0:
        for name in ("eliminated", "a", "b", "c"):
            report.add(name, True, "0", params, status=VACUOUS)
        return report
    blocks = appendix_blocks(spec)
    elim, _ = blocks.pop("eliminated")
    res = elim - G_general(p, spec)
    report.add("eliminated", res.is_zero(), _residual_str(res), params)
    for name in ("a", "b", "c"):
        lhs, rhs = blocks[name]
        res = lhs - rhs
        report.add(name, res.is_zero(), _residual_str(res), params)
    return report
