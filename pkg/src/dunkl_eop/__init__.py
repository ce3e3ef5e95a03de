"""Exact construction of the Dunkl oscillator, its rational extensions and
their exceptional generalized Hermite polynomials."""
from .exactalg import Poly, QRFunc, Rat, RatFunc, as_rat
from .laguerre import AdmissibilityError, ExtensionSpec, laguerre, seed_g
from .radial import Eigenstate, RadialParams, darboux_extend, radial_eigenstate
from .dunkl import (DunklParams, DunklState, dunkl_from_radial, exceptional_gen_hermite,
                    extended_energy, extended_hamiltonian_apply, extended_state,
                    gen_hermite_state, hamiltonian_apply, plain_energy)
from .extdunkl import FGPair, compute_F, compute_FG, compute_G, verify_rewriting_identity
from .numerics import gauss_laguerre, normalize, overlap_matrix, sturm_positive_roots
from .report import CheckReport, CheckResult

__all__ = [
    "Poly", "QRFunc", "Rat", "RatFunc", "as_rat",
    "AdmissibilityError", "ExtensionSpec", "laguerre", "seed_g",
    "Eigenstate", "RadialParams", "darboux_extend", "radial_eigenstate",
    "DunklParams", "DunklState", "dunkl_from_radial", "exceptional_gen_hermite",
    "extended_energy", "extended_hamiltonian_apply", "extended_state",
    "gen_hermite_state", "hamiltonian_apply", "plain_energy",
    "FGPair", "compute_F", "compute_FG", "compute_G", "verify_rewriting_identity",
    "gauss_laguerre", "normalize", "overlap_matrix", "sturm_positive_roots",
    "CheckReport", "CheckResult",
]
__version__ = "0.1.0"
