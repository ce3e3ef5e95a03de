"""A walk through the plain and rationally extended Dunkl oscillator.

Run with ``python demos/spectrum_tour.py``.  Everything printed here is exact
rational arithmetic except where a float is explicitly requested.
"""
from fractions import Fraction

from dunkl_eop.dunkl import (DunklParams, exceptional_gen_hermite, extended_energy,
                             extension_spec, plain_energy)

mu = Fraction(5, 2)
p = DunklParams(mu)
print(f"Dunkl oscillator with mu = {mu}")
print("plain levels, epsilon = 0:", [str(plain_energy(p, n, 0)) for n in range(5)])
print("plain levels, epsilon = 1:", [str(plain_energy(p, n, 1)) for n in range(5)])

# Types I and II deform the potential but keep every level in place.
for ext_type, m in (("I", 2), ("II", 2)):
    spec = extension_spec(p, ext_type, m)
    levels = [str(extended_energy(p, spec, n, 0)) for n in spec.valid_n(5)]
    print(f"type {ext_type} m={m}, epsilon = 0:", levels)

# Type III pushes one new level below the old ground state.
spec = extension_spec(p, "III", 2)
levels = [str(extended_energy(p, spec, n, 0)) for n in spec.valid_n(5)]
print("type III m=2, epsilon = 0:", levels, "<- first entry is the new level")

print()
print("Exceptional polynomials (numerator / denominator in z = x^2), type III m=2:")
for n in spec.valid_n(4):
    num, den = exceptional_gen_hermite(p, spec, n, 0)
    print(f"  n={n}: degree {num.degree}   num = {num}   den = {den}")
print("missing degrees:", sorted(spec.missing_degrees()))
