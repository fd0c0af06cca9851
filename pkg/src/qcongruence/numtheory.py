"""Integer-side objects: residues, Gauss-lemma sets, Legendre symbols, quotients."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

__all__ = [
    "DividesError",
    "ResidueSet",
    "is_prime",
    "primes_in_range",
    "least_residue",
    "residue_set",
    "legendre_gauss",
    "legendre_euler",
    "mod_inverse",
    "floor_sum_half",
    "fermat_quotient_int",
    "euler_quotient_int",
    "parity_identity_sides",
    "parity_identity_check",
    "complement_law_holds",
    "image_partition_holds",
    "fermat_euler_relation_holds",
]


class DividesError(ValueError):
    """Raised when p | m but the construction needs m to be a unit mod p."""

    def __init__(self, p: int, m: int):
        super().__init__(f"{p} divides {m}")
        self.p = p
        self.m = m


def _require_unit(p: int, m: int) -> None:
    if m % p == 0:
        raise DividesError(p, m)


def is_prime(n: int) -> bool:
    """Trial division; inputs here are small."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_in_range(lo: int, hi: int) -> list[int]:
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


def least_residue(x: int, p: int) -> int:
    return x % p


@dataclass(frozen=True)
class ResidueSet:
    """The set of 1 <= j < p/2 with <jm>_p > p/2, and the sum of p - <jm>_p over it."""

    p: int
    m: int
    members: tuple[int, ...]
    sigma: int

    def __post_init__(self):
        half = (self.p - 1) // 2
        expected = tuple(j for j in range(1, half + 1) if 2 * ((j * self.m) % self.p) > self.p)
        if self.members != expected:
            raise ValueError(f"members {self.members} do not match R_{self.p}({self.m})")
        if self.sigma != sum(self.p - (j * self.m) % self.p for j in self.members):
            raise ValueError("sigma does not match members")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, j) -> bool:
        return j in self.members

    def __str__(self) -> str:
        body = ", ".join(map(str, self.members))
        return f"R_{self.p}({self.m}) = {{{body}}}, sigma = {self.sigma}"


def residue_set(p: int, m: int) -> ResidueSet:
    _require_unit(p, m)
    members = tuple(j for j in range(1, (p - 1) // 2 + 1) if 2 * least_residue(j * m, p) > p)
    sigma = sum(p - least_residue(j * m, p) for j in members)
    return ResidueSet(p, m, members, sigma)


def legendre_gauss(p: int, m: int) -> int:
    """Legendre symbol (m/p) by Gauss's lemma."""
    return -1 if len(residue_set(p, m)) % 2 else 1


def legendre_euler(p: int, m: int) -> int:
    """Legendre symbol (m/p) by Euler's criterion."""
    _require_unit(p, m)
    r = pow(m, (p - 1) // 2, p)
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    raise ValueError(f"Euler's criterion gave {r}; is {p} prime?")


def mod_inverse(m: int, p: int) -> int:
    _require_unit(p, m)
    return pow(m, -1, p)


def floor_sum_half(p: int, m: int) -> int:
    """Sum of floor(j*m/p) for j = 1..(p-1)/2."""
    return sum((j * m) // p for j in range(1, (p - 1) // 2 + 1))


def fermat_quotient_int(p: int, m: int) -> int:
    _require_unit(p, m)
    q, r = divmod(m ** (p - 1) - 1, p)
    assert r == 0
    return q


def euler_quotient_int(p: int, m: int) -> int:
    _require_unit(p, m)
    q, r = divmod(m ** ((p - 1) // 2) - legendre_euler(p, m), p)
    assert r == 0
    return q


def parity_identity_sides(p: int, m: int) -> tuple[int, int]:
    """Both sides of the floor-sum parity identity, reduced mod 2.

    Left: sum of floor(kp/m) for k = 1..floor(m/2).  Right:
    (p-1)/2 * floor(m/2) + (p^2-1)(m-1)/8 - |R_p(m)|.
    """
    _require_unit(p, m)
    lhs = sum((k * p) // m for k in range(1, m // 2 + 1))
    rhs = (p - 1) // 2 * (m // 2) + (p * p - 1) // 8 * (m - 1) - len(residue_set(p, m))
    return lhs % 2, rhs % 2


def parity_identity_check(p: int, m: int) -> bool:
    lhs, rhs = parity_identity_sides(p, m)
    return lhs == rhs


def complement_law_holds(p: int, m: int) -> bool:
    """R_p(-m) is the complement of R_p(m) inside {1, ..., (p-1)/2}."""
    pos = set(residue_set(p, m).members)
    neg = set(residue_set(p, -m).members)
    return not (pos & neg) and pos | neg == set(range(1, (p - 1) // 2 + 1))


def image_partition_holds(p: int, m: int) -> bool:
    """{<-jm>_p : j in R_p(m)} and {<jm>_p : j in R_p(-m)} partition {1..(p-1)/2}."""
    a = [least_residue(-j * m, p) for j in residue_set(p, m)]
    b = [least_residue(j * m, p) for j in residue_set(p, -m)]
    return sorted(a + b) == list(range(1, (p - 1) // 2 + 1))


def fermat_euler_relation_holds(p: int) -> bool:
    """q_p(2) == 2 (2/p) eq_p(2) mod p."""
    lhs = fermat_quotient_int(p, 2)
    rhs = 2 * legendre_euler(p, 2) * euler_quotient_int(p, 2)
    return (lhs - rhs) % p == 0
