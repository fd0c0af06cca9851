"""Exact verification of q-analogue congruences for products of Gaussian binomials.

Polynomials and rational functions in q live in :mod:`.polyring`; the
q-objects, integer number theory and q-quotients build on it; :mod:`.verifier`
turns each congruence into a check and :mod:`.cli` drives grids of checks.
"""

from .numtheory import DividesError, ResidueSet, residue_set
from .polyring import IntPoly, RatFunc, is_congruent
from .qobjects import q_binomial, q_int, q_pochhammer
from .quotients import QuotientBundle, eq_star, q_euler_quotient, q_fermat_quotient, quotient_bundle
from .verifier import CLAIMS, CaseReport, run_suite

__all__ = [
    "CLAIMS",
    "CaseReport",
    "DividesError",
    "IntPoly",
    "QuotientBundle",
    "RatFunc",
    "ResidueSet",
    "eq_star",
    "is_congruent",
    "q_binomial",
    "q_euler_quotient",
    "q_fermat_quotient",
    "q_int",
    "q_pochhammer",
    "quotient_bundle",
    "residue_set",
    "run_suite",
]

__version__ = "0.1.0"
