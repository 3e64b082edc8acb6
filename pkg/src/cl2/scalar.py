"""Exact numbers of the form p + q*sqrt(r) with rational p, q.

The radicand r is kept canonical: a squarefree positive integer, or 0 when
the value is rational.  Two scalars may only be combined when they share
the radicand (or at least one of them is rational).
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational
from typing import Union

from .errors import RadicandMismatchError

Number = Union[int, Fraction, "Scalar"]
_FZERO = Fraction(0)


def _split_square(n: int) -> tuple[int, int]:
    """Write n > 0 as s*s*k with k squarefree; return (s, k)."""
    s, k = 1, 1
    p = 2
    while p * p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        k *= p ** (e % 2)
        p += 1 if p == 2 else 2
    # what remains has at most two prime factors, all above the cube root
    r = isqrt(n)
    if r * r == n:
        s *= r
    else:
        k *= n
    return s, k


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class Scalar:
    """An immutable element of Q(sqrt(r))."""

    __slots__ = ("p", "q", "r")

    def __init__(self, p=0, q=0, r=0):
        p = _as_fraction(p)
        q = _as_fraction(q)
        r = _as_fraction(r)
        if r < 0:
            raise ValueError("radicand must be nonnegative")
        if q == 0 or r == 0:
            q, r = Fraction(0), Fraction(0)
        else:
            # sqrt(n/d) = sqrt(n*d)/d = s*sqrt(k)/d
            s, k = _split_square(r.numerator * r.denominator)
            q = q * s / r.denominator
            if k == 1:
                p, q, r = p + q, Fraction(0), Fraction(0)
            else:
                r = Fraction(k)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)

    @classmethod
    def _raw(cls, p: Fraction, q: Fraction, r: Fraction) -> "Scalar":
        obj = object.__new__(cls)
        object.__setattr__(obj, "p", p)
        if q:
            object.__setattr__(obj, "q", q)
            object.__setattr__(obj, "r", r)
        else:
            object.__setattr__(obj, "q", _FZERO)
            object.__setattr__(obj, "r", _FZERO)
        return obj

    @classmethod
    def sqrt(cls, x) -> "Scalar":
        """Exact square root of a nonnegative rational."""
        x = _as_fraction(x)
        if x < 0:
            raise ValueError("sqrt of a negative rational is not a real Scalar")
        return cls(0, 1, x)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- coercion -------------------------------------------------------

    @staticmethod
    def coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return Scalar._raw(_as_fraction(x), _FZERO, _FZERO)

    def _common(self, other: "Scalar") -> Fraction:
        if not self.q:
            return other.r
        if not other.q or self.r == other.r:
            return self.r
        raise RadicandMismatchError(
            f"cannot combine sqrt({self.r}) with sqrt({other.r})")

    @property
    def is_rational(self) -> bool:
        return not self.q

    def to_fraction(self) -> Fraction:
        if self.q:
            raise ValueError(f"{self} is irrational")
        return self.p

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        r = self._common(other)
        return Scalar._raw(self.p + other.p, self.q + other.q, r)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self.p, -self.q, self.r)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        r = self._common(other)
        return Scalar._raw(self.p - other.p, self.q - other.q, r)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.q and not other.q:
            return Scalar._raw(self.p * other.p, _FZERO, _FZERO)
        r = self._common(other)
        return Scalar._raw(self.p * other.p + self.q * other.q * r,
                           self.p * other.q + self.q * other.p, r)

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        """The Galois conjugate p - q*sqrt(r)."""
        return Scalar._raw(self.p, -self.q, self.r)

    def field_norm(self) -> Fraction:
        return self.p * self.p - self.q * self.q * self.r

    def reciprocal(self) -> "Scalar":
        if not self.q:
            if not self.p:
                raise ZeroDivisionError("Scalar division by zero")
            return Scalar._raw(1 / self.p, _FZERO, _FZERO)
        n = self.field_norm()  # nonzero: r is not a rational square
        return Scalar._raw(self.p / n, -self.q / n, self.r)

    def __truediv__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.reciprocal()

    # -- comparison -----------------------------------------------------

    def sign(self) -> int:
        ps = (self.p > 0) - (self.p < 0)
        qs = (self.q > 0) - (self.q < 0)
        if qs == 0 or ps == qs:
            return ps or qs
        if ps == 0:
            return qs
        # opposite signs: compare p^2 against q^2 r
        d = self.p * self.p - self.q * self.q * self.r
        return ps if d > 0 else qs

    def __bool__(self):
        return bool(self.p) or bool(self.q)

    def __eq__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.p == other.p and self.q == other.q and (
            not self.q or self.r == other.r)

    def __hash__(self):
        if not self.q:
            return hash(self.p)
        return hash((self.p, self.q, self.r))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.p) + float(self.q) * float(self.r) ** 0.5

    # -- display --------------------------------------------------------

    def __repr__(self):
        if not self.q:
            return f"Scalar({self.p})"
        return f"Scalar({self.p}, {self.q}, {self.r})"

    def __str__(self):
        if not self.q:
            return str(self.p)
        root = f"sqrt({self.r})"
        if self.q == 1:
            irr = root
        elif self.q == -1:
            irr = "-" + root
        else:
            irr = f"{self.q}*{root}"
        if not self.p:
            return irr
        if irr.startswith("-"):
            return f"{self.p}-{irr[1:]}"
        return f"{self.p}+{irr}"


ZERO = Scalar()
ONE = Scalar(1)
