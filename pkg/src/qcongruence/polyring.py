"""Exact dense polynomials over Z and formal rational functions in one variable q.

An :class:`IntPoly` stores coefficients low-degree first, trailing zeros
stripped, so ``IntPoly(())`` is the zero polynomial.  A :class:`RatFunc` is an
unreduced fraction of two ``IntPoly`` values; equality and congruence are
decided by cross-multiplication, so no polynomial gcd is ever needed.

Congruences are taken modulo monic polynomials, which keeps long division
exact over the integers.  For the moduli used in this package, ``[p]_q`` and
``[p]_q**2`` with ``p`` prime, ``[p]_q`` is the p-th cyclotomic polynomial and
therefore irreducible over Q: a denominator is invertible modulo either
modulus exactly when ``[p]_q`` does not divide it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "IntPoly",
    "RatFunc",
    "NonMonicModulus",
    "DivisionByZeroFunction",
    "PoleAtOne",
    "DenominatorNotInvertible",
    "poly_add",
    "poly_sub",
    "poly_neg",
    "poly_mul",
    "poly_divrem_monic",
    "poly_inflate",
    "poly_eval_int",
    "rf_arith",
    "rf_equal",
    "rf_eval_at_one",
    "is_congruent",
    "congruence_remainder",
    "require_invertible",
    "cancel_modulus_factor",
    "format_poly",
    "coprimality_check",
    "q_integer_poly",
]

ZERO_DEGREE = -1

# Below this many coefficient products schoolbook beats Kronecker packing.
_KRONECKER_THRESHOLD = 2000


class NonMonicModulus(ValueError):
    """Raised when a division modulus does not have leading coefficient 1."""


class DivisionByZeroFunction(ZeroDivisionError):
    pass


class PoleAtOne(ArithmeticError):
    """The rational function has a genuine pole at q = 1."""


class DenominatorNotInvertible(ArithmeticError):
    """A denominator shares the factor [p]_q with the congruence modulus."""


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class IntPoly:
    """Immutable dense polynomial in q with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip([int(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> "IntPoly":
        # caller guarantees canonical form
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls._raw((int(c),) if c else ())

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> "IntPoly":
        if exponent < 0:
            raise ValueError("negative exponent; use RatFunc.monomial")
        if not c:
            return cls._raw(())
        return cls._raw((0,) * exponent + (int(c),))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "IntPoly":
        if not terms:
            return cls._raw(())
        out = [0] * (max(terms) + 1)
        for e, c in terms.items():
            out[e] += c
        return cls(out)

    @property
    def degree(self) -> int:
        """Degree, or ``ZERO_DEGREE`` (-1) for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def nonzero_terms(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def terms(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def __add__(self, other):
        other = _as_poly(other)
        return NotImplemented if other is None else poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        return NotImplemented if other is None else poly_sub(self, other)

    def __rsub__(self, other):
        other = _as_poly(other)
        return NotImplemented if other is None else poly_sub(other, self)

    def __neg__(self):
        return poly_neg(self)

    def __mul__(self, other):
        other = _as_poly(other)
        return NotImplemented if other is None else poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, x: int) -> int:
        return poly_eval_int(self, x)


def _as_poly(x) -> IntPoly | None:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly.constant(x)
    return None


def format_poly(a: IntPoly, var: str = "q") -> str:
    """Sparse human form, lowest degree first: ``1 + q + 2q^2 - q^5``."""
    if a.is_zero():
        return "0"
    parts = []
    for e, c in enumerate(a.coeffs):
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    x, y = a.coeffs, b.coeffs
    if len(x) < len(y):
        x, y = y, x
    out = list(x)
    for i, c in enumerate(y):
        out[i] += c
    return IntPoly._raw(_strip(out))


def poly_neg(a: IntPoly) -> IntPoly:
    return IntPoly._raw(tuple(-c for c in a.coeffs))


def poly_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return poly_add(a, poly_neg(b))


def _schoolbook(x: Sequence[int], y: Sequence[int]) -> list[int]:
    if len(x) < len(y):
        x, y = y, x
    out = [0] * (len(x) + len(y) - 1)
    for j, c in enumerate(y):
        if not c:
            continue
        for i, d in enumerate(x):
            if d:
                out[i + j] += c * d
    return out


def _pack(coeffs: Sequence[int], nbytes: int) -> int:
    return int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in coeffs), "little")


def _kronecker(x: Sequence[int], y: Sequence[int]) -> list[int]:
    # Evaluate both at 2**(8*nbytes), multiply the big integers, read digits back.
    bound = max(abs(c) for c in x) * max(abs(c) for c in y) * min(len(x), len(y))
    nbytes = (bound.bit_length() + 2) // 8 + 1
    half = 1 << (8 * nbytes - 1)

    def signed_pack(cs):
        pos = _pack([c if c > 0 else 0 for c in cs], nbytes)
        neg = _pack([-c if c < 0 else 0 for c in cs], nbytes)
        return pos - neg

    n_out = len(x) + len(y) - 1
    z = signed_pack(x) * signed_pack(y)
    bias = int.from_bytes(((0).to_bytes(nbytes - 1, "little") + b"\x80") * n_out, "little")
    raw = (z + bias).to_bytes(nbytes * n_out, "little")
    return [
        int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half
        for i in range(n_out)
    ]


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact product; switches to Kronecker substitution for large dense inputs."""
    x, y = a.coeffs, b.coeffs
    if not x or not y:
        return IntPoly._raw(())
    if len(x) == 1 or len(y) == 1:
        if len(y) != 1:
            x, y = y, x
        c = y[0]
        return IntPoly._raw(tuple(c * d for d in x))
    nx = sum(1 for c in x if c)
    ny = sum(1 for c in y if c)
    if nx * ny <= _KRONECKER_THRESHOLD or nx * ny * 8 < len(x) + len(y):
        out = _schoolbook(x, y)
    else:
        out = _kronecker(x, y)
    return IntPoly._raw(_strip(out))


def poly_divrem_monic(a: IntPoly, m: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division by a monic ``m``: returns ``(quotient, remainder)``.

    Only the nonzero terms of ``m`` are visited, so sparse moduli such as
    ``[n]_{q^t}`` divide in time proportional to their term count.
    """
    if m.is_zero() or m.lead != 1:
        raise NonMonicModulus(f"modulus must be monic, got leading coefficient {m.lead}")
    d = m.degree
    if a.degree < d:
        return IntPoly._raw(()), a
    if d == 0:
        return a, IntPoly._raw(())
    body = [(e, c) for e, c in enumerate(m.coeffs[:-1]) if c]
    rem = list(a.coeffs)
    quot = [0] * (len(rem) - d)
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i]
        if not c:
            continue
        shift = i - d
        quot[shift] = c
        for e, me in body:
            rem[shift + e] -= c * me
    return IntPoly._raw(_strip(quot)), IntPoly._raw(_strip(rem[:d]))


def poly_inflate(a: IntPoly, t: int) -> IntPoly:
    """Substitute q -> q**t."""
    if t < 1:
        raise ValueError("inflation factor must be >= 1")
    if t == 1 or a.degree < 1:
        return a
    out = [0] * (a.degree * t + 1)
    out[::t] = a.coeffs
    return IntPoly._raw(tuple(out))


def poly_eval_int(a: IntPoly, x: int) -> int:
    if x == 1:
        return sum(a.coeffs)
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def q_integer_poly(n: int, t: int = 1) -> IntPoly:
    """``[n]_{q^t} = 1 + q^t + ... + q^{(n-1)t}``; ``[0]`` is zero."""
    if n < 0 or t < 1:
        raise ValueError("need n >= 0 and t >= 1")
    if n == 0:
        return IntPoly._raw(())
    out = [0] * ((n - 1) * t + 1)
    out[::t] = [1] * n
    return IntPoly._raw(tuple(out))


def _divide_by_q_minus_one(a: IntPoly) -> IntPoly:
    # synthetic division; caller checks a(1) == 0
    out = [0] * (len(a.coeffs) - 1)
    acc = 0
    for i in range(len(a.coeffs) - 1, 0, -1):
        acc += a.coeffs[i]
        out[i - 1] = acc
    return IntPoly._raw(_strip(out))


PolyLike = Union[IntPoly, int]


class RatFunc:
    """Formal fraction ``num / den`` of integer polynomials, never auto-reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: PolyLike, den: PolyLike = 1):
        num = _as_poly(num)
        den = _as_poly(den)
        if num is None or den is None:
            raise TypeError("RatFunc parts must be IntPoly or int")
        if den.is_zero():
            raise DivisionByZeroFunction("zero denominator")
        if den.lead < 0:
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> "RatFunc":
        """``c * q**exponent``, negative exponents giving a monomial denominator."""
        if exponent >= 0:
            return cls(IntPoly.monomial(exponent, c))
        return cls(IntPoly.constant(c), IntPoly.monomial(-exponent))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == 1 or self.num.is_zero():
            return format_poly(self.num)
        return f"({format_poly(self.num)}) / ({format_poly(self.den)})"

    def __eq__(self, other) -> bool:
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return rf_equal(self, other)

    __hash__ = None  # equality is by cross-multiplication

    def __add__(self, other):
        other = _as_rf(other)
        return NotImplemented if other is None else rf_arith(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_rf(other)
        return NotImplemented if other is None else rf_arith(self, other, "sub")

    def __rsub__(self, other):
        other = _as_rf(other)
        return NotImplemented if other is None else rf_arith(other, self, "sub")

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, other):
        other = _as_rf(other)
        return NotImplemented if other is None else rf_arith(self, other, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        return NotImplemented if other is None else rf_arith(self, other, "div")

    def __rtruediv__(self, other):
        other = _as_rf(other)
        return NotImplemented if other is None else rf_arith(other, self, "div")

    def inflate(self, t: int) -> "RatFunc":
        return RatFunc(poly_inflate(self.num, t), poly_inflate(self.den, t))


def _as_rf(x) -> RatFunc | None:
    if isinstance(x, RatFunc):
        return x
    p = _as_poly(x)
    return None if p is None else RatFunc(p)


def rf_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    if op == "add" or op == "sub":
        bn = b.num if op == "add" else -b.num
        if a.den == b.den:
            return RatFunc(a.num + bn, a.den)
        return RatFunc(a.num * b.den + bn * a.den, a.den * b.den)
    if op == "mul":
        return RatFunc(a.num * b.num, a.den * b.den)
    if op == "div":
        if b.num.is_zero():
            raise DivisionByZeroFunction("division by the zero function")
        return RatFunc(a.num * b.den, a.den * b.num)
    raise ValueError(f"unknown operation {op!r}")


def rf_equal(a: RatFunc, b: RatFunc) -> bool:
    return a.num * b.den == b.num * a.den


def rf_eval_at_one(a: RatFunc) -> Fraction:
    """Value at q = 1 after cancelling common powers of (q - 1)."""
    num, den = a.num, a.den
    while not poly_eval_int(den, 1):
        if poly_eval_int(num, 1):
            raise PoleAtOne(f"{a} has a pole at q=1")
        num = _divide_by_q_minus_one(num)
        den = _divide_by_q_minus_one(den)
    return Fraction(poly_eval_int(num, 1), poly_eval_int(den, 1))


def coprimality_check(den: IntPoly, p: int) -> bool:
    """True iff ``[p]_q`` does not divide ``den`` (p prime, so [p]_q is irreducible)."""
    if den.is_zero():
        raise ValueError("zero denominator")
    return not poly_divrem_monic(den, q_integer_poly(p))[1].is_zero()


def congruence_remainder(a: RatFunc, b: RatFunc, modulus: IntPoly) -> IntPoly:
    """Remainder of ``a.num*b.den - b.num*a.den`` on division by ``modulus``."""
    diff = a.num * b.den - b.num * a.den
    return poly_divrem_monic(diff, modulus)[1]


def cancel_modulus_factor(a: RatFunc, modulus: IntPoly) -> RatFunc:
    """Divide out powers of the modulus' irreducible base common to num and den.

    ``(1 - q^15)/(1 - q^5)`` becomes ``[3]_{q^5}``-equivalent with a unit
    denominator mod ``[5]_q``.  Only the base factor is cancelled; no gcd.
    """
    base = _radical_hint(modulus)
    num, den = a.num, a.den
    while not num.is_zero():
        dq, dr = poly_divrem_monic(den, base)
        if not dr.is_zero():
            break
        nq, nr = poly_divrem_monic(num, base)
        if not nr.is_zero():
            break
        num, den = nq, dq
    return a if den is a.den else RatFunc(num, den)


def require_invertible(den: IntPoly, modulus: IntPoly) -> None:
    """Raise :class:`DenominatorNotInvertible` unless ``den`` is a unit modulo ``modulus``."""
    # Exact only when the modulus is a power of [p]_q, p prime; for any
    # other modulus this only rejects denominators divisible by it outright.
    base = _radical_hint(modulus)
    if poly_divrem_monic(den, base)[1].is_zero():
        raise DenominatorNotInvertible(f"denominator shares a factor with {format_poly(modulus)}")


_RADICALS: dict[tuple[int, ...], IntPoly] = {}


def _radical_hint(modulus: IntPoly) -> IntPoly:
    """For ``modulus == [p]_q**k`` return ``[p]_q``; otherwise the modulus itself."""
    cached = _RADICALS.get(modulus.coeffs)
    if cached is not None:
        return cached
    base = modulus
    # [p]_q**k has degree k(p-1) and linear coefficient k
    k = modulus.coeffs[1] if len(modulus.coeffs) > 1 else 0
    if k >= 1 and modulus.degree % k == 0:
        cand = q_integer_poly(modulus.degree // k + 1)
        if cand ** k == modulus:
            base = cand
    _RADICALS[modulus.coeffs] = base
    return base


def is_congruent(a: RatFunc, b: RatFunc, modulus: IntPoly) -> bool:
    """True iff ``a ≡ b`` modulo the monic ``modulus``.

    Factors of ``[p]_q`` shared by a numerator and its denominator are
    cancelled first; a denominator that is still not invertible modulo
    ``modulus`` raises :class:`DenominatorNotInvertible`.
    """
    if not modulus.is_monic():
        raise NonMonicModulus("congruence modulus must be monic")
    a = cancel_modulus_factor(a, modulus)
    b = cancel_modulus_factor(b, modulus)
    require_invertible(a.den, modulus)
    require_invertible(b.den, modulus)
    return congruence_remainder(a, b, modulus).is_zero()
