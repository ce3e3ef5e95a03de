"""Which sign makes the extended Dunkl rewriting work?

The extended Hamiltonian can be written as 1/2(s D^2 + x^2 + G) with the
extended Dunkl derivative D = D_mu + F(x) R.  Only one choice of s reproduces
the operator exactly; this script shows the residuals for both.
"""
from fractions import Fraction

from dunkl_eop.dunkl import DunklParams, extension_spec
from dunkl_eop.extdunkl import compute_FG, verify_rewriting_identity

for mu, ext_type, m in ((Fraction(1), "I", 1), (Fraction(5, 2), "II", 2), (Fraction(7, 2), "III", 2)):
    p = DunklParams(mu)
    spec = extension_spec(p, ext_type, m)
    fg = compute_FG(p, spec)
    print(f"mu={mu} type {ext_type} m={m}")
    print(f"  F/x = {fg.F_over_x!r}")
    print(f"  G   = {fg.G!r}")
    for sign in ("minus", "plus"):
        rep = verify_rewriting_identity(p, spec, basis_size=10, sign=sign)
        bad = len(rep.failures)
        print(f"  sign {sign:5}: {'exact on all 11 basis functions' if rep.passed else f'{bad} of 11 fail'}")
        if bad:
            print(f"    first residual: {rep.failures[0].residual}")
