"""Identity suites over a parameter matrix.

Each ``suite_*`` function returns a :class:`CheckReport`.  :data:`SUITES`
maps the public suite names (used by ``dunkl-eop check --identity``) to them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import numerics
from .dunkl import (DunklParams, check_dunkl_spec, denominator_poly, dunkl_from_radial,
                    exceptional_gen_hermite, extended_energy, extended_hamiltonian_apply,
                    extended_state, gen_hermite_state, hamiltonian_apply,
                    hamiltonian_apply_expanded, plain_energy, plain_state_from_radial,
                    radial_spec)
from .exactalg import QRFunc, RatFunc
from .extdunkl import (F_prime_residual, IdentityError, basis_function, compute_F,
                       compute_G, explicit_FG, explicit_mu_bound, verify_appendix_steps,
                       verify_rewriting_identity, _residual_str)
from .laguerre import AdmissibilityError, ExtensionSpec, laguerre_identity_residuals
from .radial import RadialParams, darboux_extend, extract_eop, radial_eigenstate
from .report import CheckReport

HALF = Fraction(1, 2)
DEFAULT_MUS = (Fraction(3, 4), Fraction(1), Fraction(5, 2), Fraction(7, 2))
DEFAULT_MS = {"I": (1, 2, 3), "II": (1, 2), "III": (2, 4)}
LAGUERRE_ALPHAS = tuple(Fraction(a) for a in ("-7/2", "-5/2", "-1/2", "0", "1/2", "3/2", "4"))
ORTHO_TOL = 1e-10
CONVERGENCE_TOL = 1e-11


@dataclass(frozen=True)
class MatrixEntry:
    mu: Fraction
    spec: ExtensionSpec

    @property
    def params(self) -> DunklParams:
        return DunklParams(self.mu)

    def label(self) -> dict:
        return {"mu": str(self.mu), "type": self.spec.ext_type, "m": self.spec.m}


@dataclass
class Matrix:
    mus: tuple = DEFAULT_MUS
    ms: dict = field(default_factory=lambda: dict(DEFAULT_MS))
    extra_states: int = 5  # n up to m + extra_states
    plain_n_max: int = 8
    basis_size: int = 10
    order: int | None = None

    def entries(self) -> list:
        out = []
        for mu in self.mus:
            p = DunklParams(mu)
            for t, ms in self.ms.items():
                for m in ms:
                    try:
                        spec = ExtensionSpec(t, m, p.alpha)
                        check_dunkl_spec(p, spec)
                    except AdmissibilityError:
                        continue
                    out.append(MatrixEntry(Fraction(mu), spec))
        return out

    def state_indices(self, spec: ExtensionSpec, extra: int | None = None) -> list:
        extra = self.extra_states if extra is None else extra
        return [n for n in _index_range(spec, spec.m + extra)]


def _index_range(spec: ExtensionSpec, n_max: int):
    if spec.ext_type == "III":
        yield 0
        yield from range(spec.m + 1, n_max + 1)
    else:
        yield from range(spec.m, n_max + 1)


def single_entry_matrix(mu, ext_type: str | None, m: int | None, **kw) -> Matrix:
    ms = {} if ext_type in (None, "none") else {ext_type: (m,)}
    return Matrix(mus=(Fraction(mu),), ms=ms, **kw)


# -- suites -----------------------------------------------------------------

def suite_laguerre(n_max: int = 10, alphas=LAGUERRE_ALPHAS) -> CheckReport:
    report = CheckReport("laguerre")
    for a in alphas:
        for n in range(n_max + 1):
            for name, res in laguerre_identity_residuals(n, a).items():
                report.add(name, res.is_zero(), _residual_str(res), {"n": n, "alpha": str(a)})
    return report


def suite_hamiltonian_forms(matrix: Matrix) -> CheckReport:
    report = CheckReport("hamiltonian-forms")
    for mu in matrix.mus:
        p = DunklParams(mu)
        for k in range(matrix.basis_size + 1):
            b = basis_function(k)
            res = hamiltonian_apply(p, b) - hamiltonian_apply_expanded(p, b)
            report.add(f"x^{k} e^(-x^2/2)", res.is_zero(), _residual_str(res), {"mu": str(mu), "k": k})
    return report


def suite_plain_spectrum(matrix: Matrix) -> CheckReport:
    report = CheckReport("plain-spectrum")
    for mu in matrix.mus:
        p = DunklParams(mu)
        for eps in (0, 1):
            for n in range(matrix.plain_n_max + 1):
                st = gen_hermite_state(p, n, eps)
                res = hamiltonian_apply(p, st.wavefunction) - st.wavefunction * st.energy
                ok = res.is_zero() and st.wavefunction.parity() == (1 if eps == 0 else -1)
                report.add(f"n={n} eps={eps}", ok, _residual_str(res),
                           {"mu": str(mu), "n": n, "epsilon": eps, "energy": str(st.energy)})
    return report


def suite_extended_spectrum(matrix: Matrix) -> CheckReport:
    report = CheckReport("extended-spectrum")
    for e in matrix.entries():
        p = e.params
        for eps in (0, 1):
            for n in matrix.state_indices(e.spec):
                st = extended_state(p, e.spec, n, eps, with_norm=False)
                energy = extended_energy(p, e.spec, n, eps)
                image = extended_hamiltonian_apply(p, e.spec, st.wavefunction)
                res = image - st.wavefunction * energy
                parity_ok = st.wavefunction.parity() == (1 if eps == 0 else -1) and \
                    image.parity() in (None, st.wavefunction.parity())
                report.add(f"n={n} eps={eps}", res.is_zero() and parity_ok and st.energy == energy,
                           _residual_str(res), {**e.label(), "n": n, "epsilon": eps, "energy": str(energy)})
    return report


def suite_isospectrality(matrix: Matrix) -> CheckReport:
    report = CheckReport("isospectrality")
    for e in matrix.entries():
        p, spec = e.params, e.spec
        K = matrix.extra_states
        for eps in (0, 1):
            ext = {extended_energy(p, spec, n, eps) for n in matrix.state_indices(spec)}
            plain = {plain_energy(p, k, eps) for k in range(K + 1)}
            if spec.ext_type in ("I", "II"):
                ok = ext == plain
                detail = "0" if ok else f"{sorted(ext ^ plain)}"
            else:
                # n = m+1+j sits on plain level j+1; n = 0 is the single extra
                # level, 2m below the (absent) plain ground level
                extra = ext - plain
                expected = {-2 * spec.m + eps + p.mu + HALF}
                ladder = ext - extra
                ok = extra == expected and ladder == {plain_energy(p, k, eps) for k in range(1, K + 1)} \
                    and min(ext) < min(plain)
                detail = "0" if ok else f"extra={sorted(extra)}"
            report.add(f"eps={eps}", ok, detail, {**e.label(), "epsilon": eps})
    return report


def suite_fg_forms(matrix: Matrix) -> CheckReport:
    report = CheckReport("fg-forms")
    for e in matrix.entries():
        p, spec = e.params, e.spec
        label = e.label()
        try:
            F = compute_F(p, spec)
            report.add("F general == type-specific", True, "0", label)
        except IdentityError as exc:
            report.add("F general == type-specific", False, str(exc), label)
            continue
        try:
            G = compute_G(p, spec)
            report.add("G general == from F == type-specific", True, "0", label)
        except IdentityError as exc:
            report.add("G general == from F == type-specific", False, str(exc), label)
            continue
        res = F_prime_residual(p, spec)
        report.add("F' first-order equation", res.is_zero(), _residual_str(res), label)
        m, t = spec.m, spec.ext_type
        if (m == 1 and t in ("I", "II")) or m == 2:
            if p.mu > explicit_mu_bound(t, m):
                Fp, Gp = explicit_FG(p.mu, t, m)
                report.add(f"F displayed m={m}", Fp == F, _residual_str(Fp - F), label)
                report.add(f"G displayed m={m}", Gp == G, _residual_str(Gp - G), label)
        if m == 1 and t == "I":
            other = ExtensionSpec("II", 1, spec.alpha)
            try:
                check_dunkl_spec(p, other)
                same = compute_F(p, other) == F and compute_G(p, other) == G
                report.add("m=1 types I and II coincide", same, "0" if same else "differ", label)
            except AdmissibilityError:
                pass
    return report


def suite_rewriting(matrix: Matrix, sign: str = "minus") -> CheckReport:
    report = CheckReport("eq5.1" if sign == "minus" else "eq5.1-plus")
    for e in matrix.entries():
        sub = verify_rewriting_identity(e.params, e.spec, matrix.basis_size, sign)
        for r in sub.results:
            r.suite = report.suite
        report.extend(sub)
    return report


def suite_rewriting_plus(matrix: Matrix) -> CheckReport:
    """Same comparison with +D^**2; every entry is expected to fail."""
    return suite_rewriting(matrix, "plus")


def suite_appendix(matrix: Matrix) -> CheckReport:
    report = CheckReport("appendix")
    for e in matrix.entries():
        report.extend(verify_appendix_steps(e.params, e.spec))
    return report


def _extended_states(matrix: Matrix, e: MatrixEntry, order=None):
    p = e.params
    out = []
    for eps in (0, 1):
        for n in matrix.state_indices(e.spec):
            st = extended_state(p, e.spec, n, eps, check=False, with_norm=False)
            out.append(numerics.normalize(p.mu, st, order))
    return out


def _gram_check(report, mu, states, order, label):
    gram = numerics.overlap_matrix(mu, states, order)
    dev = float(np.abs(gram - np.eye(len(states))).max())
    report.add("orthonormality", dev <= ORTHO_TOL, dev, {**label, "order": order, "states": len(states)})
    return gram


def suite_orthonormality(matrix: Matrix) -> CheckReport:
    report = CheckReport("orthonormality")
    order = matrix.order or numerics.default_order()
    low = max(order * 3 // 4, 1)
    for mu in matrix.mus:
        p = DunklParams(mu)
        states = [numerics.normalize(mu, gen_hermite_state(p, n, eps), order)
                  for eps in (0, 1) for n in range(matrix.plain_n_max + 1)]
        label = {"mu": str(mu), "type": "plain"}
        gram = _gram_check(report, mu, states, order, label)
        _convergence(report, mu, states, gram, low, label)
    for e in matrix.entries():
        states = _extended_states(matrix, e, order)
        gram = _gram_check(report, e.mu, states, order, e.label())
        _convergence(report, e.mu, states, gram, low, e.label())
    return report


def _convergence(report, mu, states, gram, low_order, label):
    # raw overlaps with the same normalization constants at a lower order
    lower = numerics.overlap_matrix(mu, states, low_order)
    dev = float(np.abs(lower - gram).max())
    report.add(f"convergence order {low_order} vs higher", dev <= CONVERGENCE_TOL, dev, label)


def suite_degree_gaps(matrix: Matrix) -> CheckReport:
    report = CheckReport("degree-gaps")
    for e in matrix.entries():
        p, spec = e.params, e.spec
        for eps in (0, 1):
            degrees = {}
            for n in matrix.state_indices(spec, matrix.extra_states + 1):
                num, _ = exceptional_gen_hermite(p, spec, n, eps)
                degrees[n] = num.degree
            expected = {n: (0 if (spec.ext_type == "III" and n == 0) else n) for n in degrees}
            top = spec.m + matrix.extra_states + 1
            missing = set(range(top + 1)) - set(degrees.values())
            ok = degrees == expected and missing == spec.missing_degrees()
            report.add(f"eps={eps}", ok, "0" if ok else f"degrees={degrees}",
                       {**e.label(), "epsilon": eps, "missing": sorted(missing)})
    return report


def _denominators(matrix: Matrix):
    seen = {}
    for e in matrix.entries():
        p, spec = e.params, e.spec
        for eps in (0, 1):
            seen.setdefault(denominator_poly(p, spec, eps), {**e.label(), "epsilon": eps, "what": "seed"})
        fg_den = [compute_F(p, spec).den, compute_G(p, spec).den]
        for d in fg_den:
            seen.setdefault(d, {**e.label(), "what": "F/G"})
        for eps in (0, 1):
            for n in matrix.state_indices(spec):
                st = extended_state(p, spec, n, eps, check=False, with_norm=False)
                for part in (st.wavefunction.even_part, st.wavefunction.odd_part):
                    if part:
                        seen.setdefault(part.den, {**e.label(), "epsilon": eps, "n": n, "what": "state"})
    return seen


def suite_nodelessness(matrix: Matrix) -> CheckReport:
    report = CheckReport("nodelessness")
    for den, label in _denominators(matrix).items():
        if den.degree == 0:
            continue
        roots = numerics.sturm_positive_roots(den)
        report.add(str(den), roots == 0 and den.coeffs[0] != 0, roots, label)
    return report


def _proportional(a: QRFunc, b: QRFunc):
    """Rational c with a == c*b, or None."""
    if a.is_zero() or b.is_zero():
        return None
    q = a / b
    if q.rho != 0 or q.s != 0 or q.odd_part or not q.even_part.is_poly() or q.even_part.num.degree != 0:
        return None
    return q.even_part.num.coeffs[0]


def textbook_prefactor(mu, spec: ExtensionSpec | None, n: int, eps: int) -> float:
    """Gamma-function prefactor of the (exceptional) generalized Hermite polynomial."""
    mu = float(mu)
    lg = math.lgamma
    if spec is None:
        return math.exp(0.5 * (lg(n + 1) - lg(n + mu + eps + 0.5)))
    m = spec.m
    if spec.ext_type == "I":
        return math.exp(0.5 * (lg(n - m + 1) - math.log(n + mu + eps - 0.5) - lg(n - m + mu + eps - 0.5)))
    if spec.ext_type == "II":
        return math.exp(0.5 * (lg(n - m + 1) - math.log(n - 2 * m + mu + eps + 0.5)
                               - lg(n - m + mu + eps + 1.5)))
    if n == 0:
        return math.exp(-0.5 * (lg(mu - m + eps + 0.5) + lg(m + 1)))
    return math.exp(0.5 * (lg(n - m) - math.log(n) - lg(n - m + mu + eps + 0.5)))


def textbook_state(p: DunklParams, spec: ExtensionSpec, n: int, eps: int) -> QRFunc:
    """Normalized state e^(-z/2) H^_(2n+eps) with the textbook prefactor, exact core only."""
    num, den = exceptional_gen_hermite(p, spec, n, eps)
    return QRFunc(eps, -1, RatFunc(num, den))


def suite_correspondence(matrix: Matrix) -> CheckReport:
    report = CheckReport("correspondence")
    rel = 1e-10
    for mu in matrix.mus:
        p = DunklParams(mu)
        for eps in (0, 1):
            for n in range(matrix.plain_n_max + 1):
                via = plain_state_from_radial(p, n, eps)
                res = hamiltonian_apply(p, via.wavefunction) - via.wavefunction * via.energy
                direct = gen_hermite_state(p, n, eps)
                c = _proportional(via.wavefunction, direct.wavefunction)
                scale = abs(float(c) * via.norm / direct.norm) if c is not None else float("inf")
                ok = res.is_zero() and via.energy == direct.energy and abs(scale - 1) <= rel
                report.add(f"plain n={n} eps={eps}", ok, abs(scale - 1),
                           {"mu": str(mu), "n": n, "epsilon": eps})
    for e in matrix.entries():
        p, spec = e.params, e.spec
        for eps in (0, 1):
            for n in matrix.state_indices(spec):
                via = extended_state(p, spec, n, eps)
                res = extended_hamiltonian_apply(p, spec, via.wavefunction) - via.wavefunction * via.energy
                direct = numerics.normalize(p.mu, via)
                textbook = textbook_state(p, spec, n, eps)
                c = _proportional(via.wavefunction, textbook)
                pref = textbook_prefactor(p.mu, spec, n, eps)
                s_norm = abs(via.norm / direct.norm - 1)
                s_pref = abs(abs(float(c) * via.norm / pref) - 1) if c is not None else float("inf")
                worst = max(s_norm, s_pref)
                report.add(f"n={n} eps={eps}", res.is_zero() and worst <= rel, worst,
                           {**e.label(), "n": n, "epsilon": eps})
    return report


def suite_g_boundary(matrix: Matrix) -> CheckReport:
    report = CheckReport("g-boundary")
    for e in matrix.entries():
        G = compute_G(e.params, e.spec)
        at0 = G(Fraction(0))
        ok = at0 == 0 and G.num_degree_below_den()
        report.add("G(0) = 0, G -> 0 at infinity", ok, str(at0),
                   {**e.label(), "num_deg": G.num.degree, "den_deg": G.den.degree})
    return report


SUITES = {
    "laguerre": lambda mx: suite_laguerre(),
    "hamiltonian-forms": suite_hamiltonian_forms,
    "plain-spectrum": suite_plain_spectrum,
    "extended-spectrum": suite_extended_spectrum,
    "isospectrality": suite_isospectrality,
    "fg-forms": suite_fg_forms,
    "eq5.1": suite_rewriting,
    "appendix": suite_appendix,
    "orthonormality": suite_orthonormality,
    "degree-gaps": suite_degree_gaps,
    "nodelessness": suite_nodelessness,
    "correspondence": suite_correspondence,
    "g-boundary": suite_g_boundary,
}


def run_suites(names, matrix: Matrix, sign: str = "minus", jobs: int = 1) -> list:
    """Run the named suites; ``sign='plus'`` swaps eq5.1 for its +D^**2 variant."""
    def resolve(name):
        if name == "eq5.1" and sign == "plus":
            return suite_rewriting_plus
        return SUITES[name]

    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_run_one, name, matrix, sign) for name in names]
            return [f.result() for f in futures]
    return [resolve(name)(matrix) for name in names]


def _run_one(name, matrix, sign):
    return run_suites([name], matrix, sign)[0]
