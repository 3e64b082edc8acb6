"""Elements of the Clifford algebra Cl2 with exact coefficients.

Basis is ``1, e1, e2, e3`` with ``e3 = e1 e2``::

          e1    e2    e3
    e1 |  1     e3    e2
    e2 | -e3    1    -e1
    e3 | -e2    e1   -1
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .errors import IrrationalCoefficientError, ZeroDivisorError
from .scalar import ONE, ZERO, Scalar

_BASIS_NAMES = ("", "e1", "e2", "e3")


@dataclass(frozen=True, eq=False)
class Cl2Element:
    """``a0 + a1 e1 + a2 e2 + a3 e3``; coefficients are coerced to Scalar."""

    a0: Scalar = ZERO
    a1: Scalar = ZERO
    a2: Scalar = ZERO
    a3: Scalar = ZERO

    def __post_init__(self):
        for name in ("a0", "a1", "a2", "a3"):
            v = getattr(self, name)
            if not isinstance(v, Scalar):
                object.__setattr__(self, name, Scalar.coerce(v))

    @classmethod
    def from_coeffs(cls, coeffs) -> "Cl2Element":
        a0, a1, a2, a3 = coeffs
        return cls(a0, a1, a2, a3)

    @classmethod
    def basis(cls, i: int) -> "Cl2Element":
        c = [ZERO] * 4
        c[i] = ONE
        return cls(*c)

    @property
    def coeffs(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.a0, self.a1, self.a2, self.a3)

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.coeffs)

    def rational_coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Coefficients as Fractions; raises if any has a sqrt part."""
        out = []
        for c in self.coeffs:
            if c.q:
                raise IrrationalCoefficientError(
                    f"coefficient {c} of {self} is not rational")
            out.append(c.p)
        return tuple(out)

    @property
    def is_rational(self) -> bool:
        return all(c.is_rational for c in self.coeffs)

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Cl2Element(*(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cl2Element(-self.a0, -self.a1, -self.a2, -self.a3)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Cl2Element(*(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Cl2Element):
            return mul(self, other)
        try:
            s = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Cl2Element(*(c * s for c in self.coeffs))

    def __rmul__(self, other):
        # only scalars reach here; scalars are central
        try:
            s = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Cl2Element(*(s * c for c in self.coeffs))

    def __truediv__(self, other):
        if isinstance(other, Cl2Element):
            return self * inverse(other)
        s = Scalar.coerce(other).reciprocal()
        return self * s

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"Cl2Element({', '.join(repr(c) for c in self.coeffs)})"

    def __str__(self):
        return render(self)


def _coerce(x) -> Cl2Element | None:
    if isinstance(x, Cl2Element):
        return x
    try:
        return Cl2Element(Scalar.coerce(x))
    except TypeError:
        return None


def element(a0=0, a1=0, a2=0, a3=0) -> Cl2Element:
    return Cl2Element(a0, a1, a2, a3)


E0 = Cl2Element(ONE)
E1 = Cl2Element.basis(1)
E2 = Cl2Element.basis(2)
E3 = Cl2Element.basis(3)
ZERO_ELEMENT = Cl2Element()


def mul(a: Cl2Element, b: Cl2Element) -> Cl2Element:
    a0, a1, a2, a3 = a.coeffs
    b0, b1, b2, b3 = b.coeffs
    return Cl2Element(
        a0 * b0 + a1 * b1 + a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 - a2 * b3 + a3 * b2,
        a0 * b2 + a2 * b0 + a1 * b3 - a3 * b1,
        a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
    )


def conj(a: Cl2Element) -> Cl2Element:
    """Conjugate: negates the e1, e2, e3 parts."""
    return Cl2Element(a.a0, -a.a1, -a.a2, -a.a3)


def prime(a: Cl2Element) -> Cl2Element:
    """Prime anti-involution: negates the e3 part only."""
    return Cl2Element(a.a0, a.a1, a.a2, -a.a3)


def cre(a: Cl2Element) -> Scalar:
    return a.a0


def cim(a: Cl2Element) -> Cl2Element:
    return Cl2Element(ZERO, a.a1, a.a2, a.a3)


def modulus_sq(a: Cl2Element) -> Scalar:
    return a.a0 * a.a0 + a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3


def h_map(a: Cl2Element) -> Scalar:
    """H(a) = a0^2 - a1^2 - a2^2 + a3^2, the scalar with conj(a) a = H(a)."""
    return a.a0 * a.a0 - a.a1 * a.a1 - a.a2 * a.a2 + a.a3 * a.a3


def g_map(a: Cl2Element) -> Scalar:
    """G(a) = a1^2 + a2^2 - a3^2, so that cim(a)^2 = G(a)."""
    return a.a1 * a.a1 + a.a2 * a.a2 - a.a3 * a.a3


def is_zero_divisor(a: Cl2Element) -> bool:
    return not h_map(a)


def is_central(a: Cl2Element) -> bool:
    return not (a.a1 or a.a2 or a.a3)


def inverse(a: Cl2Element) -> Cl2Element:
    h = h_map(a)
    if not h:
        raise ZeroDivisorError(f"{a} is a zero divisor (H = 0)")
    return conj(a) * h.reciprocal()


class ComplexSplit(NamedTuple):
    """``a = z1 + z2 e2`` with ``z1 = a0 + a3 e3`` and ``z2 = a2 + a1 e3``.

    Each complex part is stored as a (real, e3) pair.
    """

    z1: tuple[Scalar, Scalar]
    z2: tuple[Scalar, Scalar]

    def reconstruct(self) -> Cl2Element:
        (x0, x3), (y2, y1) = self.z1, self.z2
        return Cl2Element(x0, y1, y2, x3)

    def h_value(self) -> Scalar:
        (x0, x3), (y2, y1) = self.z1, self.z2
        return (x0 * x0 + x3 * x3) - (y2 * y2 + y1 * y1)


def complex_split(a: Cl2Element) -> ComplexSplit:
    return ComplexSplit((a.a0, a.a3), (a.a2, a.a1))


# -- text rendering -----------------------------------------------------

def _render_coeff(c: Scalar) -> tuple[str, str]:
    """Return (sign, magnitude text) for a nonzero coefficient."""
    if c.is_rational:
        v = c.p
        return ("-" if v < 0 else "+"), str(abs(v))
    # pick the sign that keeps the text readable, not the numeric sign
    sign = "+"
    if str(c).startswith("-"):
        sign, c = "-", -c
    text = str(c)
    if c.p:
        text = f"({text})"
    return sign, text


def render(a: Cl2Element) -> str:
    """Compact literal such as ``1/4+1/4e2`` or ``-e1+(1+sqrt(2))e3``.

    Rational elements render in the CLI literal grammar, so the output
    parses back to the same element.
    """
    parts = []
    for c, name in zip(a.coeffs, _BASIS_NAMES):
        if not c:
            continue
        sign, mag = _render_coeff(c)
        if name and mag == "1":
            mag = ""
        parts.append((sign, mag + name))
    if not parts:
        return "0"
    out = []
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(sign + body)
    return "".join(out)
