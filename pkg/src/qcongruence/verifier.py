"""Executable checks of the congruences, one claim id per displayed statement.

Every claim is built as a list of :class:`Congruence` and :class:`Equality`
items.  A claim passes when each item does: a polynomial congruence passes
when the modulus divides ``lhs.num*rhs.den - rhs.num*lhs.den``, an integer
congruence when the modulus divides the (possibly fractional) difference,
and an equality when the two values agree exactly.

Sides are never simplified before comparison.
"""

from __future__ import annotations

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Any, Callable, Iterable, Optional, Sequence, Union

from .numtheory import (
    complement_law_holds,
    euler_quotient_int,
    fermat_euler_relation_holds,
    fermat_quotient_int,
    floor_sum_half,
    image_partition_holds,
    is_prime,
    least_residue,
    legendre_euler,
    legendre_gauss,
    mod_inverse,
    parity_identity_sides,
    residue_set,
)
from .polyring import (
    IntPoly,
    RatFunc,
    cancel_modulus_factor,
    congruence_remainder,
    q_integer_poly,
    require_invertible,
    rf_eval_at_one,
)
from .qobjects import q_binomial
from .quotients import eq_star_forms, factorial_ratio, q_euler_quotient, q_fermat_quotient

__all__ = [
    "PASS",
    "FAIL",
    "SKIPPED",
    "Congruence",
    "Equality",
    "CaseReport",
    "Claim",
    "CLAIMS",
    "evaluate",
    "run_claim",
    "run_suite",
    "summarize",
    "write_witness",
    "check_prerequisite_ratio",
    "check_lemma_2_1",
    "check_lemma_2_1_half",
    "check_lemma_2_2",
    "check_lemma_2_3",
    "check_complement_identity",
    "check_elementary_congruences",
    "check_pan_1_4",
    "check_theorem_1_1",
    "check_q1_sun",
    "check_q1_granville",
    "theorem_1_1_sides",
    "pan_1_4_sides",
]

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"

Side = Union[RatFunc, int, Fraction]

ELEMENTARY_J_MAX = 12


@dataclass(frozen=True)
class Congruence:
    """``lhs ≡ rhs (mod modulus)``; polynomial if the modulus is an IntPoly, else integer."""

    label: str
    lhs: Side
    rhs: Side
    modulus: Union[IntPoly, int]

    def perturbed(self, delta: Side) -> "Congruence":
        return replace(self, lhs=self.lhs + delta)


@dataclass(frozen=True)
class Equality:
    """Exact equality; sets and tuples are compared as multisets."""

    label: str
    lhs: Any
    rhs: Any


Check = Union[Congruence, Equality]


@dataclass(frozen=True)
class CaseReport:
    claim_id: str
    p: int
    m: Optional[int]
    status: str
    remainder_nonzero_terms: int = 0
    max_degree_seen: int = 0
    elapsed: float = field(default=0.0, compare=False)
    reason: str = ""
    failed_checks: tuple[str, ...] = ()
    remainder: Optional[tuple[int, ...]] = field(default=None, compare=False, repr=False)

    def record(self) -> dict:
        """Fixed-order record used by the line-delimited output format."""
        return {
            "claim": self.claim_id,
            "p": self.p,
            "m": self.m,
            "status": self.status if self.status != SKIPPED else f"SKIPPED({self.reason})",
            "remainder_nonzero_terms": self.remainder_nonzero_terms,
            "max_degree_seen": self.max_degree_seen,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


# --------------------------------------------------------------------------
# evaluation of single checks


def _mod_fraction(x: Union[int, Fraction], n: int) -> int:
    x = Fraction(x)
    return x.numerator * pow(x.denominator, -1, n) % n


def _degree_of(x: Side) -> int:
    if isinstance(x, RatFunc):
        return max(x.num.degree, x.den.degree, 0)
    return 0


def evaluate(check: Check) -> tuple[int, int, Optional[tuple[int, ...]]]:
    """Return ``(remainder_nonzero_terms, max_degree_seen, remainder)`` for one check."""
    if isinstance(check, Equality):
        a, b = check.lhs, check.rhs
        if isinstance(a, (set, frozenset, tuple, list)):
            diff = (Counter(a) - Counter(b)) + (Counter(b) - Counter(a))
            n = sum(diff.values())
        else:
            n = 0 if a == b else 1
        return n, 0, None
    mod = check.modulus
    if isinstance(mod, IntPoly):
        lhs = check.lhs if isinstance(check.lhs, RatFunc) else RatFunc(check.lhs)
        rhs = check.rhs if isinstance(check.rhs, RatFunc) else RatFunc(check.rhs)
        lhs = cancel_modulus_factor(lhs, mod)
        rhs = cancel_modulus_factor(rhs, mod)
        require_invertible(lhs.den, mod)
        require_invertible(rhs.den, mod)
        rem = congruence_remainder(lhs, rhs, mod)
        deg = max(_degree_of(lhs), _degree_of(rhs), lhs.num.degree + rhs.den.degree,
                  rhs.num.degree + lhs.den.degree)
        return rem.nonzero_terms(), deg, rem.coeffs
    r = (_mod_fraction(check.lhs, mod) - _mod_fraction(check.rhs, mod)) % mod
    return (1 if r else 0), 0, (r,)


def _q(e: int, c: int = 1) -> IntPoly:
    return IntPoly.monomial(e, c)


def _frac_sum(terms: Iterable[RatFunc]) -> RatFunc:
    total = RatFunc(0)
    for t in terms:
        total = total + t
    return total


# --------------------------------------------------------------------------
# claim builders


def _prerequisite_ratio(p: int, m: int) -> list[Check]:
    return [Congruence("ratio == 1 mod [p]_q", factorial_ratio(p, m), 1, q_integer_poly(p))]


def _lemma_2_1(p: int, _m=None) -> list[Check]:
    qp = q_integer_poly(p)
    lhs = _frac_sum(RatFunc(1, q_integer_poly(j, 2)) for j in range(1, p))
    rhs = RatFunc(IntPoly([-1, -1])) * q_fermat_quotient(p, 2)
    return [Congruence("sum_{j<p} 1/[j]_{q^2} == -(1+q) Q_p(2,q)", lhs, rhs, qp)]


def _lemma_2_1_half(p: int, _m=None) -> list[Check]:
    qp = q_integer_poly(p)
    lhs = _frac_sum(RatFunc(1, q_integer_poly(j, 2)) for j in range(1, (p - 1) // 2 + 1))
    rhs = RatFunc(IntPoly([-1, -1])) * q_fermat_quotient(p, 2)
    return [Congruence("sum_{j<p/2} 1/[j]_{q^2} == -(1+q) Q_p(2,q)", lhs, rhs, qp)]


def _lemma_2_2_at(p: int, m: int, mp: int, tag: str) -> Congruence:
    r = residue_set(p, m)
    lhs = _frac_sum(RatFunc(2, q_integer_poly(2 * j)) for j in r)
    rhs = (
        RatFunc(IntPoly([len(r), -len(r)]))
        + q_fermat_quotient(p, 2, base=mp) / RatFunc(q_integer_poly(mp))
        - q_fermat_quotient(p, 2)
    )
    return Congruence(f"R_p(m) sum with m'={mp}{tag}", lhs, rhs, q_integer_poly(p))


def _lemma_2_2(p: int, m: int) -> list[Check]:
    qp = q_integer_poly(p)
    mp = mod_inverse(m, p)
    r = residue_set(p, m)
    one_plus_q = RatFunc(IntPoly([1, 1]))
    # half-range sum: R_p(m) and R_p(-m) together cover 1..(p-1)/2
    half = _lemma_2_1_half(p)[0]
    # twice the intermediate value of sum_{j in R_p(m)} 1/[j]_{q^2}
    twice_lhs = _frac_sum(RatFunc(2, q_integer_poly(j, 2)) for j in r)
    twice_rhs = (
        RatFunc(IntPoly([len(r), 0, -len(r)]))
        + RatFunc(_q(mp) + 1) * q_fermat_quotient(p, 2, base=mp) / RatFunc(q_integer_poly(mp, 2))
        - one_plus_q * q_fermat_quotient(p, 2)
    )
    twice = Congruence("twice the R_p(m) sum of 1/[j]_{q^2}", twice_lhs, twice_rhs, qp)
    return [
        _lemma_2_2_at(p, m, mp, ""),
        _lemma_2_2_at(p, m, mp + p, " (representative m'+p)"),
        half,
        twice,
    ]


def _lemma_2_3(p: int, m: int) -> list[Check]:
    r = residue_set(p, m)
    _, lhs = eq_star_forms(p, m)
    floor_terms = _frac_sum(
        RatFunc(_q(2 * j * m, 2 * ((j * m) // p)), q_integer_poly(2 * j * m))
        for j in range(1, (p - 1) // 2 + 1)
        if (j * m) // p
    )
    rhs = (
        floor_terms
        + q_fermat_quotient(p, 2)
        - q_fermat_quotient(p, 2, base=m) / RatFunc(q_integer_poly(m))
        - RatFunc(IntPoly([len(r), -len(r)]))
    )
    return [Congruence("EQ*_p(m,q) == floor-sum expansion", lhs, rhs, q_integer_poly(p))]


def _complement_identity(p: int, m: int) -> list[Check]:
    pos = set(residue_set(p, m).members)
    neg = set(residue_set(p, -m).members)
    everything = set(range(1, (p - 1) // 2 + 1))
    return [Equality("R_p(-m) == {1..(p-1)/2} minus R_p(m)", frozenset(neg), frozenset(everything - pos)),
            Equality("complement_law_holds", complement_law_holds(p, m), True)]


def _image_partition(p: int, m: int) -> list[Check]:
    images = [least_residue(-j * m, p) for j in residue_set(p, m)]
    images += [least_residue(j * m, p) for j in residue_set(p, -m)]
    return [Equality("images partition {1..(p-1)/2}", tuple(images), tuple(range(1, (p - 1) // 2 + 1))),
            Equality("image_partition_holds", image_partition_holds(p, m), True)]


def _parity_identity(p: int, m: int) -> list[Check]:
    lhs, rhs = parity_identity_sides(p, m)
    return [Congruence("floor-sum parity", lhs, rhs, 2)]


def _fermat_euler_relation(p: int, _m=None) -> list[Check]:
    lhs = fermat_quotient_int(p, 2)
    rhs = 2 * legendre_euler(p, 2) * euler_quotient_int(p, 2)
    return [Congruence("q_p(2) == 2 (2/p) eq_p(2) mod p", lhs, rhs, p),
            Equality("fermat_euler_relation_holds", fermat_euler_relation_holds(p), True)]


def _elementary(p: int, j_max: Optional[int] = None) -> list[Check]:
    j_max = ELEMENTARY_J_MAX if j_max is None else j_max
    qp = q_integer_poly(p)
    qp2 = qp * qp
    checks: list[Check] = []
    for j in range(1, j_max + 1):
        checks.append(Congruence(f"[{j}]_(q^p) == {j}", q_integer_poly(j, p), j, qp))
    for m in range(1, j_max + 1):
        if m % p == 0:
            continue
        qm = q_integer_poly(m)
        checks.append(Congruence(f"[{m}p]_q/[{m}]_q == {m}[p]_q/[{m}]_q",
                                 RatFunc(q_integer_poly(m * p), qm), RatFunc(m * qp, qm), qp2))
        checks.append(Congruence(f"1-q^(2*{m}p) == 2*{m}(1-q)[p]_q",
                                 1 - _q(2 * m * p), IntPoly([2 * m, -2 * m]) * qp, qp2))
    return checks


def theorem_1_1_sides(p: int, m: int) -> tuple[RatFunc, RatFunc]:
    """Left and right sides of the q-analogue of Sun's congruence, mod [p]_q^2."""
    h = m // 2
    leg_m = legendre_gauss(p, m)
    leg_2 = legendre_gauss(p, 2)
    sign = (-1) ** ((p - 1) // 2 * h) * leg_m * leg_2 ** (m - 1)
    tops = [(k * p) // m for k in range(1, h + 1)]
    lhs = _q(2 * m * sum(comb(t + 1, 2) for t in tops), sign)
    for t in tops:
        lhs = lhs * q_binomial(p - 1, t, 2 * m)

    qp = RatFunc(q_integer_poly(p))
    eqs, _ = eq_star_forms(p, m)
    rhs = (
        1
        + m * qp * eqs
        + (2 * h + 1) * RatFunc(q_integer_poly(p, m)) * q_fermat_quotient(p, 2, base=m)
        - m * qp * q_fermat_quotient(p, 2)
        + m * (len(residue_set(p, m)) + 2 * floor_sum_half(p, m)) * RatFunc(1 - _q(p))
    )
    return RatFunc(lhs), rhs


def pan_1_4_sides(p: int, m: int) -> tuple[RatFunc, RatFunc]:
    """Left and right sides of the q-analogue of Granville's congruence, mod [p]_q^2."""
    sign = (-1) ** ((p - 1) * (m - 1) // 2)
    tops = [(k * p) // m for k in range(1, m)]
    lhs = _q(m * sum(comb(t + 1, 2) for t in tops), sign)
    for t in tops:
        lhs = lhs * q_binomial(p - 1, t, m)
    rhs = m * factorial_ratio(p, m) - m + 1
    return RatFunc(lhs), rhs


def _theorem_1_1(p: int, m: int) -> list[Check]:
    lhs, rhs = theorem_1_1_sides(p, m)
    qp = q_integer_poly(p)
    return [Congruence("q-Sun mod [p]_q^2", lhs, rhs, qp * qp)]


def _pan_1_4(p: int, m: int) -> list[Check]:
    lhs, rhs = pan_1_4_sides(p, m)
    qp = q_integer_poly(p)
    return [Congruence("q-Granville mod [p]_q^2", lhs, rhs, qp * qp)]


def _q1_sun(p: int, m: int) -> list[Check]:
    p2 = p * p
    h = m // 2
    leg_m = legendre_euler(p, m)
    leg_2 = legendre_euler(p, 2)
    eq_m = euler_quotient_int(p, m)
    prod = 1
    for k in range(1, h + 1):
        prod *= comb(p - 1, (p * k) // m)
    sign = (-1) ** ((p - 1) // 2 * h)
    lhs = sign * leg_m * leg_2 ** (m - 1) * prod
    rhs = 1 + leg_m * eq_m * m * p + (2 * h + 1 - m) * fermat_quotient_int(p, 2) * p
    if m % 2:
        orig_rhs = leg_m + eq_m * m * p
    else:
        orig_rhs = legendre_euler(p, 2 * m) + leg_2 * eq_m * m * p + 2 * leg_m * euler_quotient_int(p, 2) * p
    poly_lhs, poly_rhs = theorem_1_1_sides(p, m)
    return [
        Congruence("Sun, normalized form, mod p^2", lhs, rhs, p2),
        Congruence("Sun, original form, mod p^2", sign * prod, orig_rhs, p2),
        Congruence("q=1 value of q-Sun lhs", rf_eval_at_one(poly_lhs), lhs, p2),
        Congruence("q=1 value of q-Sun rhs", rf_eval_at_one(poly_rhs), rhs, p2),
    ]


def _q1_granville(p: int, m: int) -> list[Check]:
    p2 = p * p
    prod = 1
    for k in range(1, m):
        prod *= comb(p - 1, (k * p) // m)
    lhs = (-1) ** ((p - 1) * (m - 1) // 2) * prod
    rhs = m ** p - m + 1
    poly_lhs, poly_rhs = pan_1_4_sides(p, m)
    return [
        Congruence("Granville mod p^2", lhs, rhs, p2),
        Congruence("q=1 value of q-Granville lhs", rf_eval_at_one(poly_lhs), lhs, p2),
        Congruence("q=1 value of q-Granville rhs", rf_eval_at_one(poly_rhs), rhs, p2),
    ]


def _legendre_oracle(p: int, m: int) -> list[Check]:
    return [Equality("Gauss lemma == Euler criterion", legendre_gauss(p, m), legendre_euler(p, m))]


def _eq_star_forms(p: int, m: int) -> list[Check]:
    first, second = eq_star_forms(p, m)
    return [Equality("EQ* forms agree", first, second)]


def _degeneration(p: int, m: int) -> list[Check]:
    leg = legendre_euler(p, m)
    return [
        Equality("Q_p(m,1) == q_p(m)", rf_eval_at_one(q_fermat_quotient(p, m)), fermat_quotient_int(p, m)),
        Equality("EQ_p(m,1) == eq_p(m)", rf_eval_at_one(q_euler_quotient(p, m)), euler_quotient_int(p, m)),
        Equality("EQ*_p(m,1) == (m/p) eq_p(m)", rf_eval_at_one(eq_star_forms(p, m)[0]),
                 leg * euler_quotient_int(p, m)),
    ]


# --------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Claim:
    id: str
    build: Callable[..., list[Check]]
    per_prime: bool = False
    # smallest admissible m; None means any m prime to p
    min_m: Optional[int] = 1
    description: str = ""


CLAIMS: dict[str, Claim] = {
    c.id: c
    for c in [
        Claim("complement_identity", _complement_identity, min_m=None,
              description="R_p(-m) is the complement of R_p(m)"),
        Claim("degeneration", _degeneration, description="q -> 1 limits of the q-quotients"),
        Claim("elementary_congruences", _elementary, per_prime=True,
              description="elementary congruences mod [p]_q and [p]_q^2"),
        Claim("eq_star_forms", _eq_star_forms, description="both constructions of EQ* agree"),
        Claim("fermat_euler_relation", _fermat_euler_relation, per_prime=True,
              description="q_p(2) == 2 (2/p) eq_p(2) mod p"),
        Claim("image_partition", _image_partition, min_m=None,
              description="residue images partition {1..(p-1)/2}"),
        Claim("legendre_oracle", _legendre_oracle, min_m=None,
              description="Gauss lemma agrees with Euler's criterion"),
        Claim("lemma_2_1", _lemma_2_1, per_prime=True,
              description="sum of 1/[j]_{q^2} over 1 <= j <= p-1, as printed"),
        Claim("lemma_2_1_half", _lemma_2_1_half, per_prime=True,
              description="sum of 1/[j]_{q^2} over 1 <= j <= (p-1)/2"),
        Claim("lemma_2_2", _lemma_2_2, min_m=None, description="sum over R_p(m) of 1/[2j]_q"),
        Claim("lemma_2_3", _lemma_2_3, description="EQ* as a floor-weighted sum"),
        Claim("pan_1_4", _pan_1_4, min_m=2, description="q-analogue of Granville's congruence"),
        Claim("parity_identity", _parity_identity, min_m=2, description="parity of sum floor(kp/m)"),
        Claim("prerequisite_ratio", _prerequisite_ratio, description="(q^m;q^m)_{p-1}/(q;q)_{p-1} == 1"),
        Claim("q1_granville", _q1_granville, min_m=2, description="Granville's congruence mod p^2"),
        Claim("q1_sun", _q1_sun, min_m=2, description="Sun's congruence mod p^2"),
        Claim("theorem_1_1", _theorem_1_1, min_m=2, description="q-analogue of Sun's congruence"),
    ]
}


def _skip_reason(claim: Claim, p: int, m: Optional[int]) -> str:
    if not is_prime(p):
        return "p not prime"
    if p < 5:
        return "p < 5"
    if claim.per_prime:
        return ""
    if m is None:
        return "m required"
    if m % p == 0:
        return "p divides m"
    if claim.min_m is not None and m < claim.min_m:
        return f"m < {claim.min_m}"
    return ""


def build_checks(claim_id: str, p: int, m: Optional[int]) -> list[Check]:
    claim = CLAIMS[claim_id]
    return claim.build(p, m) if not claim.per_prime else claim.build(p)


def run_claim(claim_id: str, p: int, m: Optional[int] = None,
              checks: Optional[Sequence[Check]] = None) -> CaseReport:
    """Run one claim at one point.  ``checks`` overrides the built checks (used by probes)."""
    claim = CLAIMS[claim_id]
    if claim.per_prime:
        m = None
    reason = _skip_reason(claim, p, m)
    if reason:
        return CaseReport(claim_id, p, m, SKIPPED, reason=reason)
    start = time.perf_counter()
    if checks is None:
        checks = build_checks(claim_id, p, m)
    total = 0
    max_deg = 0
    failed = []
    witness: list[int] = []
    for check in checks:
        n, deg, rem = evaluate(check)
        max_deg = max(max_deg, deg)
        if n:
            total += n
            failed.append(check.label)
            if rem is not None and not witness:
                witness = list(rem)
    elapsed = time.perf_counter() - start
    if total:
        return CaseReport(claim_id, p, m, FAIL, total, max_deg, elapsed,
                          failed_checks=tuple(failed), remainder=tuple(witness))
    return CaseReport(claim_id, p, m, PASS, 0, max_deg, elapsed)


def check_prerequisite_ratio(p: int, m: int) -> CaseReport:
    return run_claim("prerequisite_ratio", p, m)


def check_lemma_2_1(p: int) -> CaseReport:
    return run_claim("lemma_2_1", p)


def check_lemma_2_1_half(p: int) -> CaseReport:
    return run_claim("lemma_2_1_half", p)


def check_lemma_2_2(p: int, m: int) -> CaseReport:
    return run_claim("lemma_2_2", p, m)


def check_lemma_2_3(p: int, m: int) -> CaseReport:
    return run_claim("lemma_2_3", p, m)


def check_complement_identity(p: int, m: int) -> CaseReport:
    return run_claim("complement_identity", p, m)


def check_elementary_congruences(p: int, j_max: int = ELEMENTARY_J_MAX) -> CaseReport:
    claim = CLAIMS["elementary_congruences"]
    reason = _skip_reason(claim, p, None)
    if reason:
        return CaseReport(claim.id, p, None, SKIPPED, reason=reason)
    return run_claim(claim.id, p, None, checks=_elementary(p, j_max))


def check_pan_1_4(p: int, m: int) -> CaseReport:
    return run_claim("pan_1_4", p, m)


def check_theorem_1_1(p: int, m: int) -> CaseReport:
    return run_claim("theorem_1_1", p, m)


def check_q1_sun(p: int, m: int) -> CaseReport:
    return run_claim("q1_sun", p, m)


def check_q1_granville(p: int, m: int) -> CaseReport:
    return run_claim("q1_granville", p, m)


# Claims whose first check is a congruence, so shifting a side is meaningful.
# lemma_2_1 qualifies structurally but does not hold as printed.
PROBE_FAMILIES = (
    "elementary_congruences",
    "fermat_euler_relation",
    "lemma_2_1_half",
    "lemma_2_2",
    "lemma_2_3",
    "pan_1_4",
    "parity_identity",
    "prerequisite_ratio",
    "q1_granville",
    "q1_sun",
    "theorem_1_1",
)


def soundness_probe(claim_id: str, p: int, m: Optional[int]) -> tuple[CaseReport, CaseReport]:
    """Re-run a claim with its first congruence's lhs shifted by the modulus, then by 1.

    A sound check keeps its verdict under the first shift and fails under the second.
    """
    checks = build_checks(claim_id, p, m)
    idx = next(i for i, c in enumerate(checks) if isinstance(c, Congruence))
    target = checks[idx]
    plus_mod = list(checks)
    plus_mod[idx] = target.perturbed(target.modulus)
    plus_one = list(checks)
    plus_one[idx] = target.perturbed(1)
    return run_claim(claim_id, p, m, checks=plus_mod), run_claim(claim_id, p, m, checks=plus_one)


# --------------------------------------------------------------------------
# suites


def suite_cases(grid: Iterable[tuple[int, int]], claims: Iterable[str]) -> list[tuple[str, int, Optional[int]]]:
    """Canonical (claim, p, m) case list: sorted, per-prime claims once per prime."""
    grid = sorted(set(grid))
    cases = set()
    for claim_id in claims:
        if claim_id not in CLAIMS:
            raise KeyError(f"unknown claim id {claim_id!r}")
        if CLAIMS[claim_id].per_prime:
            cases.update((claim_id, p, None) for p, _ in grid)
        else:
            cases.update((claim_id, p, m) for p, m in grid)
    return sorted(cases, key=lambda c: (c[0], c[1], -1 if c[2] is None else c[2]))


def _run_case(case: tuple[str, int, Optional[int]]) -> CaseReport:
    return run_claim(*case)


def run_suite(grid: Iterable[tuple[int, int]], claims: Iterable[str], jobs: int = 1,
              witness_dir: Optional[Union[str, Path]] = None) -> list[CaseReport]:
    """Run every claim on every grid point; reports come back in (claim, p, m) order."""
    cases = suite_cases(grid, claims)
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_case, cases, chunksize=1))
    else:
        reports = [_run_case(c) for c in cases]
    if witness_dir is not None:
        for r in reports:
            if r.status == FAIL:
                write_witness(r, witness_dir)
    return reports


def summarize(reports: Iterable[CaseReport]) -> dict[str, Counter]:
    out: dict[str, Counter] = {}
    for r in reports:
        out.setdefault(r.claim_id, Counter())[r.status] += 1
    return out


def write_witness(report: CaseReport, directory: Union[str, Path]) -> Path:
    """Persist a FAIL remainder: header lines, then one coefficient per line."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    m = "none" if report.m is None else str(report.m)
    path = directory / f"{report.claim_id}_p{report.p}_m{m}.txt"
    lines = [
        f"# claim: {report.claim_id}",
        f"# p: {report.p}",
        f"# m: {m}",
        f"# failed: {'; '.join(report.failed_checks)}",
    ]
    lines += [str(c) for c in (report.remainder or ())]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)
