"""Exact arithmetic over rational combinations of square roots.

A :class:`RadicalValue` is a finite sum ``sum(q_k * sqrt(k))`` with rational
coefficients ``q_k`` and squarefree integer radicands ``k``; the rational part
is stored under ``k == 1``.  Square roots of distinct squarefree integers are
linearly independent over the rationals, so this representation is unique and
equality is plain term-by-term comparison.  The domain is closed under
addition, subtraction, multiplication, and division by single-term values,
which covers every per-edge quantity this package computes.

Division by zero raises the builtin :class:`ZeroDivisionError`; denominators
with two or more terms are rejected with :class:`NonInvertibleDenominator`
rather than rationalised.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt

Rational = Fraction

__all__ = [
    "Rational",
    "RadicalValue",
    "NonInvertibleDenominator",
    "NegativeRadicand",
    "squarefree_split",
    "sqrt_int",
    "sqrt_of_rational",
    "format_rational",
]


class NonInvertibleDenominator(ValueError):
    """Raised when dividing by a radical value with two or more terms."""


class NegativeRadicand(ValueError):
    """Raised when asked for the square root of a negative rational."""


_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
)


@lru_cache(maxsize=1 << 16)
def squarefree_split(m: int) -> tuple[int, int]:
    """Split a positive integer as ``m == s*s*k`` with ``k`` squarefree.

    Trial division by primes up to 100, then by odd candidates up to the
    cube root of the remainder; what survives has at most two prime factors,
    so it is either a perfect square or already squarefree.
    """
    if m < 1:
        raise ValueError(f"squarefree_split needs a positive integer, got {m}")
    s = 1
    k = 1
    r = m
    for p in _SMALL_PRIMES:
        if p * p > r:
            break
        if r % p == 0:
            e = 0
            while r % p == 0:
                r //= p
                e += 1
            if e & 1:
                k *= p
            s *= p ** (e >> 1)
    if r > 1:
        if r < 101 * 101:
            k *= r  # no factor <= sqrt(r), hence prime
        else:
            d = 101
            while d * d * d <= r:
                if r % d == 0:
                    e = 0
                    while r % d == 0:
                        r //= d
                        e += 1
                    if e & 1:
                        k *= d
                    s *= d ** (e >> 1)
                d += 2
            if r > 1:
                rt = isqrt(r)
                if rt * rt == r:
                    s *= rt
                else:
                    k *= r  # one or two distinct primes: squarefree
    return s, k


def format_rational(f: Fraction, digits: int) -> str:
    """Render a rational with exactly ``digits`` decimals, ties to even."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scale = 10 ** digits
    mag = abs(f) * scale
    q, rem = divmod(mag.numerator, mag.denominator)
    double = 2 * rem
    if double > mag.denominator or (double == mag.denominator and q & 1):
        q += 1
    sign = "-" if (f < 0 and q > 0) else ""
    whole, frac = divmod(q, scale)
    return f"{sign}{whole}.{frac:0{digits}d}"


class RadicalValue:
    """Immutable exact value ``sum(q_k * sqrt(k))`` over squarefree ``k``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, value: int | Fraction | "RadicalValue" = 0):
        if isinstance(value, RadicalValue):
            terms = dict(value._terms)
        else:
            q = Fraction(value)
            terms = {1: q} if q else {}
        object.__setattr__(self, "_terms", terms)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def from_terms(cls, terms) -> "RadicalValue":
        """Build from ``{radicand: coefficient}``, reducing radicands to squarefree form."""
        acc: dict[int, Fraction] = {}
        for k, q in dict(terms).items():
            q = Fraction(q)
            if q == 0:
                continue
            s, kk = squarefree_split(k)
            acc[kk] = acc.get(kk, Fraction(0)) + q * s
        return cls._make({k: q for k, q in acc.items() if q})

    @classmethod
    def _make(cls, terms: dict[int, Fraction]) -> "RadicalValue":
        out = cls.__new__(cls)
        object.__setattr__(out, "_terms", terms)
        object.__setattr__(out, "_hash", None)
        return out

    def __setattr__(self, name, value):
        raise AttributeError("RadicalValue is immutable")

    # -- inspection ------------------------------------------------------

    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        """Terms as ``(radicand, coefficient)`` pairs, radicands ascending."""
        return tuple(sorted(self._terms.items()))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_rational(self) -> bool:
        return all(k == 1 for k in self._terms)

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"not a rational value: {self}")
        return self._terms.get(1, Fraction(0))

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RadicalValue):
            return other
        if isinstance(other, (int, Fraction)):
            return RadicalValue(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms = dict(self._terms)
        for k, q in rhs._terms.items():
            t = terms.get(k, Fraction(0)) + q
            if t:
                terms[k] = t
            else:
                terms.pop(k, None)
        return RadicalValue._make(terms)

    __radd__ = __add__

    def __neg__(self):
        return RadicalValue._make({k: -q for k, q in self._terms.items()})

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms: dict[int, Fraction] = {}
        for k1, q1 in self._terms.items():
            for k2, q2 in rhs._terms.items():
                s, k = squarefree_split(k1 * k2)
                t = terms.get(k, Fraction(0)) + q1 * q2 * s
                if t:
                    terms[k] = t
                else:
                    terms.pop(k, None)
        return RadicalValue._make(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs.is_zero:
            raise ZeroDivisionError("division by zero radical value")
        if len(rhs._terms) > 1:
            raise NonInvertibleDenominator(
                f"denominator has {len(rhs._terms)} terms, only single-term "
                f"denominators are invertible: {rhs}"
            )
        ((k, q),) = rhs._terms.items()
        # 1 / (q*sqrt(k)) == sqrt(k) / (q*k)
        inv = RadicalValue._make({k: Fraction(1, 1) / (q * k)})
        return self * inv

    def __rtruediv__(self, other):
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        out = RadicalValue(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.terms()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- rendering -------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, q in self.terms():
            mag = abs(q)
            if k == 1:
                body = _frac_text(mag)
            elif mag == 1:
                body = f"sqrt({k})"
            else:
                body = f"{_frac_text(mag)}*sqrt({k})"
            if not parts:
                parts.append(f"-{body}" if q < 0 else body)
            else:
                parts.append(f" - {body}" if q < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"RadicalValue('{self}')"

    def approx(self, digits: int) -> str:
        """Correctly rounded decimal string with ``digits`` fractional digits.

        Each root is bracketed by integer-square-root bounds with enough guard
        digits that the lower and upper bounds round identically, so the
        returned digits are exact.
        """
        if digits < 1:
            raise ValueError("digits must be >= 1")
        rational = self._terms.get(1, Fraction(0))
        irrational = [(k, q) for k, q in self._terms.items() if k != 1]
        if not irrational:
            return format_rational(rational, digits)
        guard = digits + 12
        while True:
            scale = 10 ** guard
            lo = hi = rational
            for k, q in irrational:
                root = isqrt(k * scale * scale)
                root_lo = Fraction(root, scale)
                root_hi = Fraction(root + 1, scale)
                if q > 0:
                    lo += q * root_lo
                    hi += q * root_hi
                else:
                    lo += q * root_hi
                    hi += q * root_lo
            s_lo = format_rational(lo, digits)
            s_hi = format_rational(hi, digits)
            if s_lo == s_hi:
                return s_lo
            guard += 20


def _frac_text(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def sqrt_int(m: int) -> RadicalValue:
    """Exact square root of a nonnegative integer, reduced to squarefree form."""
    if m < 0:
        raise NegativeRadicand(f"sqrt of negative integer {m}")
    if m == 0:
        return RadicalValue(0)
    s, k = squarefree_split(m)
    return RadicalValue.from_terms({k: Fraction(s)})


def sqrt_of_rational(q: int | Fraction) -> RadicalValue:
    """Exact square root of a nonnegative rational.

    ``sqrt(n/d) == sqrt(n*d)/d``, reduced so the radicand is squarefree.
    """
    q = Fraction(q)
    if q < 0:
        raise NegativeRadicand(f"sqrt of negative rational {q}")
    if q == 0:
        return RadicalValue(0)
    s, k = squarefree_split(q.numerator * q.denominator)
    return RadicalValue.from_terms({k: Fraction(s, q.denominator)})
