"""q-integers, q-Pochhammer symbols and Gaussian binomial coefficients.

Gaussian binomials have two independent constructions: the product formula
(:func:`q_binomial`) and the q-Pascal recurrence (:func:`q_binomial_recurrence`),
kept apart so each can check the other.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .numtheory import DividesError
from .polyring import IntPoly, poly_divrem_monic, q_integer_poly

__all__ = [
    "QBinomialSpec",
    "InternalNonExactDivision",
    "q_int",
    "q_pochhammer",
    "q_binomial",
    "q_binomial_recurrence",
    "ratio_factors",
]


class InternalNonExactDivision(ArithmeticError):
    """A division in the product formula left a remainder. Never expected."""


class QBinomialSpec(NamedTuple):
    n: int
    k: int
    t: int = 1


def q_int(n: int, t: int = 1) -> IntPoly:
    """[n]_{q^t}."""
    return q_integer_poly(n, t)


def q_pochhammer(a: int, n: int) -> IntPoly:
    """(q^a; q^a)_n = (1 - q^a)(1 - q^{2a})...(1 - q^{na})."""
    if a < 1 or n < 0:
        raise ValueError("need a >= 1 and n >= 0")
    out = [0] * (a * n * (n + 1) // 2 + 1)
    out[0] = 1
    top = 0
    # multiply in place by (1 - q^{ai}), highest degrees first
    for i in range(1, n + 1):
        s = a * i
        top += s
        for e in range(top, s - 1, -1):
            out[e] -= out[e - s]
    return IntPoly(out)


def q_binomial(n: int, k: int, t: int = 1) -> IntPoly:
    """Gaussian binomial [n choose k] in base q^t, by the product formula.

    Multiplies by [n-k+i] then divides by [i] for i = 1..k; after step i the
    running value is [n-k+i choose i], so every division is exact.
    """
    if n < 0 or k < 0 or t < 1:
        raise ValueError("need n, k >= 0 and t >= 1")
    if k > n:
        return IntPoly()
    k = min(k, n - k)
    acc = IntPoly.constant(1)
    for i in range(1, k + 1):
        acc = acc * q_integer_poly(n - k + i, t)
        acc, rem = poly_divrem_monic(acc, q_integer_poly(i, t))
        if not rem.is_zero():
            raise InternalNonExactDivision(f"[{n}-{k}+{i}] step left remainder {rem}")
    return acc


@lru_cache(maxsize=None)
def _pascal_row(n: int, t: int) -> tuple[IntPoly, ...]:
    if n == 0:
        return (IntPoly.constant(1),)
    prev = _pascal_row(n - 1, t)
    row = [IntPoly.constant(1)]
    for k in range(1, n):
        # C(n,k) = C(n-1,k-1) + q^{tk} C(n-1,k)
        row.append(prev[k - 1] + IntPoly.monomial(t * k) * prev[k])
    row.append(IntPoly.constant(1))
    return tuple(row)


def q_binomial_recurrence(n: int, k: int, t: int = 1) -> IntPoly:
    """Gaussian binomial by the q-Pascal rule; the oracle for :func:`q_binomial`."""
    if n < 0 or k < 0 or t < 1:
        raise ValueError("need n, k >= 0 and t >= 1")
    if k > n:
        return IntPoly()
    return _pascal_row(n, t)[k]


def ratio_factors(p: int, m: int, half: bool = False) -> list[tuple[IntPoly, IntPoly]]:
    """Factors ([jm]_q, [j]_q) whose product is (q^m;q^m)_N / (q;q)_N.

    N is p - 1, or (p - 1)/2 when ``half`` is set.  ``m`` must be positive.
    """
    if m % p == 0:
        raise DividesError(p, m)
    if m < 1:
        raise ValueError("m must be positive")
    top = (p - 1) // 2 if half else p - 1
    return [(q_integer_poly(j * m), q_integer_poly(j)) for j in range(1, top + 1)]
