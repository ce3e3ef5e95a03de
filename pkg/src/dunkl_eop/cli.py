"""Command-line interface.

    dunkl-eop spectrum --mu 1 --type I --m 1 --n-max 2
    dunkl-eop table --mu 5/2 --type III --m 2 --output out/
    dunkl-eop check --all

Exit codes: 0 all checks pass, 1 an identity failed, 2 bad configuration.
"""
from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import numerics
from .checks import SUITES, Matrix, run_suites, single_entry_matrix
from .dunkl import (DunklParams, check_dunkl_spec, extended_energy, extended_state,
                    gen_hermite_state, plain_energy)
from .extdunkl import compute_F, compute_G
from .laguerre import AdmissibilityError, ExtensionSpec

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def parse_rational(value: str) -> Fraction:
    """Parse "p/q" or an integer; decimal floats are refused."""
    text = str(value).strip()
    if any(ch in text.lower() for ch in ".e"):
        raise click.BadParameter(f"{value!r}: give an exact rational like 5/2, not a float")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.BadParameter(f"{value!r} is not a rational number") from exc


def rat_str(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def fmt_float(v) -> str:
    return "" if v is None else format(float(v), ".17g")


def _config_error(msg: str):
    click.echo(f"configuration error: {msg}", err=True)
    sys.exit(EXIT_CONFIG)


def _build_spec(mu: Fraction, ext_type: str, m: int):
    try:
        p = DunklParams(mu)
        if ext_type == "none":
            return p, None
        spec = ExtensionSpec(ext_type, m, p.alpha)
        check_dunkl_spec(p, spec)
        return p, spec
    except AdmissibilityError as exc:
        _config_error(str(exc))


def _epsilons(eps: str):
    return (0, 1) if eps == "both" else (int(eps),)


def _ext_indices(spec: ExtensionSpec, n_max: int):
    if spec.ext_type == "III":
        return [0] + list(range(spec.m + 1, spec.m + n_max + 1))
    return list(range(spec.m, spec.m + n_max + 1))


def _emit(text: str, output):
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text, nl=False)


def _rows_to_csv(header, rows, meta: dict) -> str:
    buf = io.StringIO()
    for k in sorted(meta):
        buf.write(f"# {k}={meta[k]}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


common = [
    click.option("--mu", required=True, callback=lambda c, p, v: parse_rational(v),
                 help='Dunkl parameter as an exact rational, e.g. "5/2".'),
    click.option("--type", "ext_type", type=click.Choice(["none", "I", "II", "III"]), default="none",
                 show_default=True),
    click.option("--m", type=int, default=0, show_default=True),
    click.option("--n-max", type=int, default=3, show_default=True),
    click.option("--epsilon", type=click.Choice(["0", "1", "both"]), default="both", show_default=True),
    click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True),
]


def with_common(f):
    for opt in reversed(common):
        f = opt(f)
    return f


@click.group()
def cli():
    """Rationally-extended Dunkl oscillators: spectra, tables and identity checks."""


@cli.command()
@with_common
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="File (default stdout).")
def spectrum(mu, ext_type, m, n_max, epsilon, fmt, output):
    """Energies of the plain and (optionally) extended oscillator."""
    p, spec = _build_spec(mu, ext_type, m)
    rows = []
    for eps in _epsilons(epsilon):
        for n in range(n_max + 1):
            e = plain_energy(p, n, eps)
            rows.append(("none", 0, n, eps, rat_str(e), fmt_float(e)))
    if spec is not None:
        for eps in _epsilons(epsilon):
            for n in _ext_indices(spec, n_max):
                e = extended_energy(p, spec, n, eps)
                rows.append((spec.ext_type, spec.m, n, eps, rat_str(e), fmt_float(e)))
    header = ("type", "m", "n", "epsilon", "energy", "energy_float")
    meta = {"command": "spectrum", "mu": rat_str(mu), "type": ext_type, "m": m,
            "n_max": n_max, "epsilon": epsilon}
    if fmt == "json":
        text = json.dumps({"config": meta, "rows": [dict(zip(header, r)) for r in rows]},
                          indent=2, sort_keys=True) + "\n"
    else:
        text = _rows_to_csv(header, rows, meta)
    _emit(text, output)


def _grid(x_min: float, x_max: float, step: float):
    if step <= 0 or x_max < x_min:
        _config_error("x grid needs step > 0 and x-max >= x-min")
    count = int(round((x_max - x_min) / step))
    # rounding keeps grid points such as x = 0 exact
    return [round(x_min + i * step, 12) + 0.0 for i in range(count + 1)]


@cli.command()
@with_common
@click.option("--x-min", type=float, default=-4.0, show_default=True)
@click.option("--x-max", type=float, default=4.0, show_default=True)
@click.option("--x-step", type=float, default=0.05, show_default=True)
@click.option("--quad-order", type=int, default=None, help=f"Default: ${numerics.ORDER_ENV} or 200.")
@click.option("--output", type=click.Path(file_okay=False), required=True, help="Output directory.")
def table(mu, ext_type, m, n_max, epsilon, fmt, x_min, x_max, x_step, quad_order, output):
    """Normalized wavefunctions, F, G and the effective potential on an x grid.

    Writes one file per (n, epsilon).
    """
    p, spec = _build_spec(mu, ext_type, m)
    order = quad_order or numerics.default_order()
    if spec is None:
        F_over_x = G = None
        states = [(n, eps, numerics.normalize(mu, gen_hermite_state(p, n, eps), order))
                  for eps in _epsilons(epsilon) for n in range(n_max + 1)]
    else:
        F_over_x, G = compute_F(p, spec), compute_G(p, spec)
        states = [(n, eps, numerics.normalize(mu, extended_state(p, spec, n, eps, with_norm=False), order))
                  for eps in _epsilons(epsilon) for n in _ext_indices(spec, n_max)]
    xs = _grid(x_min, x_max, x_step)
    out_dir = Path(output)
    out_dir.mkdir(parents=True, exist_ok=True)
    header = ("x", "psi", "veff", "F", "G", "flag")
    written = []
    for n, eps, st in states:
        rows = []
        for x in xs:
            z = x * x
            try:
                psi = st.norm * numerics.float_eval(st.wavefunction, x)
                f_val = 0.0 if F_over_x is None else x * F_over_x(z)
                g_val = 0.0 if G is None else G(z)
                rows.append((fmt_float(x), fmt_float(psi), fmt_float(0.5 * (z + g_val)),
                             fmt_float(f_val), fmt_float(g_val), ""))
            except (numerics.PoleError, ZeroDivisionError):
                rows.append((fmt_float(x), "", "", "", "", "pole"))
        meta = {"command": "table", "mu": rat_str(mu), "type": ext_type, "m": m, "n": n,
                "epsilon": eps, "energy": rat_str(st.energy), "quad_order": order,
                "x_min": x_min, "x_max": x_max, "x_step": x_step}
        stem = out_dir / f"{ext_type}_m{m}_n{n}_eps{eps}"
        if fmt == "json":
            path = stem.with_suffix(".json")
            path.write_text(json.dumps({"config": meta, "columns": header, "rows": rows},
                                       indent=1, sort_keys=True) + "\n")
        else:
            path = stem.with_suffix(".csv")
            path.write_text(_rows_to_csv(header, rows, meta))
        written.append(str(path))
    for path in written:
        click.echo(path)


@cli.command()
@click.option("--all", "run_all", is_flag=True, help="Every suite on the built-in parameter matrix.")
@click.option("--identity", "identities", multiple=True,
              type=click.Choice(sorted(SUITES)), help="Suite to run (repeatable).")
@click.option("--mu", default=None, help="Restrict to one mu (exact rational).")
@click.option("--type", "ext_type", type=click.Choice(["none", "I", "II", "III"]), default=None)
@click.option("--m", type=int, default=None)
@click.option("--sign", type=click.Choice(["minus", "plus"]), default="minus", show_default=True,
              help="Sign in front of the squared extended Dunkl derivative.")
@click.option("--quad-order", type=int, default=None)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="JSON report (default stdout).")
def check(run_all, identities, mu, ext_type, m, sign, quad_order, jobs, output):
    """Run identity suites; exit 0 iff everything passes."""
    if not run_all and not identities:
        _config_error("give --all or at least one --identity")
    names = sorted(SUITES) if run_all else list(dict.fromkeys(identities))
    if mu is not None:
        mu_val = parse_rational(mu)
        if ext_type not in (None, "none"):
            if m is None:
                _config_error("--type needs --m")
            _build_spec(mu_val, ext_type, m)
        matrix = single_entry_matrix(mu_val, ext_type, m, order=quad_order)
    else:
        if ext_type is not None or m is not None:
            _config_error("--type/--m need --mu")
        matrix = Matrix(order=quad_order)
    reports = run_suites(names, matrix, sign=sign, jobs=jobs)
    passed = all(r.passed for r in reports)
    doc = {
        "passed": passed,
        "sign": sign,
        "suites": [{"suite": r.suite, "passed": r.passed, "cases": len(r.results),
                    "worst_residual": r.worst_residual()} for r in reports],
        "results": [d for r in reports for d in r.as_dicts()],
    }
    _emit(json.dumps(doc, indent=1, sort_keys=True) + "\n", output)
    for r in reports:
        click.echo(r.summary(), err=True)
    sys.exit(EXIT_OK if passed else EXIT_FAIL)


def main():
    cli()


if __name__ == "__main__":
    main()
