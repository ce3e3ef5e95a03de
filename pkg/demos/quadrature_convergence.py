"""Orthonormality of extended states as the quadrature order grows.

Normalization constants are fixed at order 200; the Gram matrix is then
recomputed at lower orders to show how fast the overlaps settle.
"""
from fractions import Fraction

import numpy as np

from dunkl_eop.dunkl import DunklParams, extended_state, extension_spec
from dunkl_eop.numerics import normalize, overlap_matrix

mu = Fraction(3, 4)
p = DunklParams(mu)
spec = extension_spec(p, "I", 3)
raw = [extended_state(p, spec, n, eps, with_norm=False) for eps in (0, 1) for n in spec.valid_n(6)]
states = [normalize(mu, s, 200) for s in raw]
ref = overlap_matrix(mu, states, 200)
print(f"type I m=3 at mu={mu}: {len(states)} states")
print(f"order 200: max |<i|j> - delta_ij| = {np.abs(ref - np.eye(len(states))).max():.3e}")
for order in (20, 40, 80, 120, 150):
    gram = overlap_matrix(mu, states, order)
    print(f"order {order:3}: max deviation from order 200 = {np.abs(gram - ref).max():.3e}")
