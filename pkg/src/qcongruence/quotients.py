"""The q-Fermat quotient, the q-Euler quotient and its starred variant.

Each quotient is (X - c) / [p]_q for a factorial-type ratio X = N / D that is
congruent to c modulo [p]_q.  The congruence is exactly the statement that
[p]_q divides N - cD, so the division is carried out on the numerator and a
nonzero remainder means the prerequisite failed.  The denominator D stays
coprime to [p]_q, which keeps the quotients usable on either side of a
congruence modulo [p]_q or [p]_q^2.  Other bases q -> q^b are obtained by
inflating the base-q construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

from .numtheory import DividesError, legendre_gauss, residue_set
from .polyring import IntPoly, RatFunc, coprimality_check, poly_divrem_monic, q_integer_poly
from .qobjects import ratio_factors

__all__ = [
    "PrerequisiteFailed",
    "FormsDisagree",
    "QuotientBundle",
    "factorial_ratio",
    "q_fermat_quotient",
    "q_euler_quotient",
    "eq_star",
    "eq_star_forms",
    "quotient_bundle",
]


class PrerequisiteFailed(ArithmeticError):
    """The ratio was not congruent to its expected value mod [p]_q."""


class FormsDisagree(ArithmeticError):
    """The two constructions of EQ*_p(m, q) gave different functions."""


def _check_args(p: int, m: int) -> None:
    if m % p == 0:
        raise DividesError(p, m)
    if m < 1:
        raise ValueError("m must be a positive integer")


def factorial_ratio(p: int, m: int, half: bool = False) -> RatFunc:
    """(q^m;q^m)_N / (q;q)_N as the product of [jm]_q / [j]_q, N = p-1 or (p-1)/2."""
    factors = ratio_factors(p, m, half)
    num = reduce(lambda acc, f: acc * f[0], factors, IntPoly.constant(1))
    den = reduce(lambda acc, f: acc * f[1], factors, IntPoly.constant(1))
    return RatFunc(num, den)


def _divide_by_qp(x: RatFunc, target: int, p: int, what: str) -> RatFunc:
    if not coprimality_check(x.den, p):
        raise PrerequisiteFailed(f"denominator of {what} is not a unit mod [{p}]_q")
    quot, rem = poly_divrem_monic(x.num - target * x.den, q_integer_poly(p))
    if not rem.is_zero():
        raise PrerequisiteFailed(f"{what} is not congruent to {target} mod [{p}]_q")
    return RatFunc(quot, x.den)


@lru_cache(maxsize=256)
def _q_fermat_base(p: int, m: int) -> RatFunc:
    return _divide_by_qp(factorial_ratio(p, m), 1, p, f"(q^{m};q^{m})_{p - 1}/(q;q)_{p - 1}")


def q_fermat_quotient(p: int, m: int, base: int = 1) -> RatFunc:
    """Q_p(m, q^base) = ((q^m;q^m)_{p-1}/(q;q)_{p-1} - 1) / [p]_q, at q -> q^base."""
    _check_args(p, m)
    return _q_fermat_base(p, m).inflate(base)


@lru_cache(maxsize=256)
def _q_euler_base(p: int, m: int) -> RatFunc:
    sigma = residue_set(p, m).sigma
    x = RatFunc(IntPoly.monomial(sigma)) * factorial_ratio(p, m, half=True)
    return _divide_by_qp(x, legendre_gauss(p, m), p, f"q^{sigma} (q^{m};q^{m})_h/(q;q)_h")


def q_euler_quotient(p: int, m: int, base: int = 1) -> RatFunc:
    """EQ_p(m, q^base): (q^sigma (q^m;q^m)_h/(q;q)_h - (m/p)) / [p]_q, h = (p-1)/2."""
    _check_args(p, m)
    return _q_euler_base(p, m).inflate(base)


@lru_cache(maxsize=256)
def eq_star_forms(p: int, m: int) -> tuple[RatFunc, RatFunc]:
    """Both constructions of EQ*_p(m, q).

    The first rescales EQ_p(m, q^2) by (m/p)(1 + q^p)/(1 + q); the second
    builds the base-q^2 ratio directly and divides by [p]_q.
    """
    _check_args(p, m)
    leg = legendre_gauss(p, m)
    one_plus_q = IntPoly([1, 1])
    one_plus_qp = IntPoly.monomial(p) + 1
    first = RatFunc(leg * one_plus_qp, one_plus_q) * q_euler_quotient(p, m, base=2)

    sigma = residue_set(p, m).sigma
    x = RatFunc(IntPoly.monomial(2 * sigma, leg)) * factorial_ratio(p, m, half=True).inflate(2)
    second = _divide_by_qp(x, 1, p, "(m/p) q^{2 sigma} (q^2m;q^2m)_h/(q^2;q^2)_h")
    return first, second


def eq_star(p: int, m: int) -> RatFunc:
    first, second = eq_star_forms(p, m)
    if first != second:
        raise FormsDisagree(f"EQ*_{p}({m}, q) constructions differ")
    return first


@dataclass(frozen=True)
class QuotientBundle:
    p: int
    m: int
    q_fermat: RatFunc
    q_euler: RatFunc
    eq_star: RatFunc
    legendre: int
    sigma: int
    verified: tuple[str, ...]


def quotient_bundle(p: int, m: int) -> QuotientBundle:
    """All three quotients at (p, m), with their prerequisites and invariants checked."""
    bundle = QuotientBundle(
        p=p,
        m=m,
        q_fermat=q_fermat_quotient(p, m),
        q_euler=q_euler_quotient(p, m),
        eq_star=eq_star(p, m),
        legendre=legendre_gauss(p, m),
        sigma=residue_set(p, m).sigma,
        verified=("ratio == 1 mod [p]_q", "half ratio == (m/p) mod [p]_q", "EQ* forms agree"),
    )
    for f in (bundle.q_fermat, bundle.q_euler, bundle.eq_star):
        assert coprimality_check(f.den, p)
    return bundle
