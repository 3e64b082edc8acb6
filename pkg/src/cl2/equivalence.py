"""Similarity and pseudosimilarity in Cl2, with explicit witnesses.

``a ~ b`` (similar) when ``a u = u b`` for some u with ``H(u) != 0``;
``a`` and ``b`` are pseudosimilar when ``a u = conj(u) b`` for such a u.
Witness coefficients may involve ``sqrt(|G(a)|)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (E0, E2, E3, Cl2Element, conj, cre, g_map, h_map,
                      inverse, is_central, mul)
from .errors import (InternalConsistencyError, NotPseudosimilarError,
                     NotSimilarError)
from .scalar import Scalar


class CanonicalKind(enum.Enum):
    POS_G = "PosG"
    NEG_G = "NegG"
    ZERO_G = "ZeroG"
    CENTRAL = "Central"


@dataclass(frozen=True)
class CanonicalForm:
    kind: CanonicalKind
    a0: Fraction
    g: Fraction

    def element(self) -> Cl2Element:
        a0 = Scalar(self.a0)
        if self.kind is CanonicalKind.POS_G:
            return a0 + E2 * Scalar.sqrt(self.g)
        if self.kind is CanonicalKind.NEG_G:
            return a0 + E3 * Scalar.sqrt(-self.g)
        if self.kind is CanonicalKind.ZERO_G:
            return a0 + E2 + E3
        return Cl2Element(a0)


@dataclass(frozen=True)
class Witness:
    u: Cl2Element
    h_u: Scalar


def _witness(u: Cl2Element) -> Witness:
    return Witness(u, h_map(u))


def _canonical_witness(a: Cl2Element, g: Fraction) -> Cl2Element:
    _, a1, a2, a3 = a.coeffs
    if g < 0:
        s = Scalar.sqrt(-g)
        if a3 <= 0:
            return Cl2Element(a2, a3 - s, 0, a1)
        return Cl2Element(a3 + s, a2, -a1, 0)
    if g > 0:
        s = Scalar.sqrt(g)
        if a2 <= 0:
            return Cl2Element(a3, a2 - s, -a1, 0)
        return Cl2Element(a2 + s, a3, 0, a1)
    if a2 != a3:
        return Cl2Element(0, a1, 1 + a2, 1 + a3)
    # G = 0 with a2 = a3 forces a1 = 0, i.e. a = a0 + c(e2 + e3), c != 0
    return Cl2Element(1 + a2, a2 - 1, 0, 0)


def canonical(a: Cl2Element) -> tuple[CanonicalForm, Witness]:
    """Canonical representative ``kappa`` of a's similarity class and u with
    ``u^-1 a u = kappa``."""
    a0 = a.rational_coeffs()[0]
    g = g_map(a).to_fraction()
    if is_central(a):
        return CanonicalForm(CanonicalKind.CENTRAL, a0, g), _witness(E0)
    if g > 0:
        kind = CanonicalKind.POS_G
    elif g < 0:
        kind = CanonicalKind.NEG_G
    else:
        kind = CanonicalKind.ZERO_G
    form = CanonicalForm(kind, a0, g)
    w = _witness(_canonical_witness(a, g))
    if not w.h_u or mul(a, w.u) != mul(w.u, form.element()):
        raise InternalConsistencyError(f"canonical witness failed for {a}")
    return form, w


def is_similar(a: Cl2Element, b: Cl2Element) -> bool:
    ca, cb = is_central(a), is_central(b)
    if ca or cb:
        return ca and cb and a == b
    return cre(a) == cre(b) and g_map(a) == g_map(b)


def similarity_witness(a: Cl2Element, b: Cl2Element) -> Witness:
    """u with ``H(u) != 0`` and ``a u = u b``."""
    if not is_similar(a, b):
        raise NotSimilarError(f"{a} and {b} are not similar")
    if is_central(a):
        return _witness(E0)
    _, wa = canonical(a)
    _, wb = canonical(b)
    w = _witness(mul(wa.u, inverse(wb.u)))
    if not w.h_u or mul(a, w.u) != mul(w.u, b):
        raise InternalConsistencyError(f"similarity witness failed for {a}, {b}")
    return w


def is_pseudosimilar(a: Cl2Element, b: Cl2Element) -> bool:
    if not a or not b:
        return not a and not b
    s = conj(a) + b
    return not s or (h_map(a) == h_map(b) and bool(h_map(s)))


def pseudosimilarity_witness(a: Cl2Element, b: Cl2Element) -> Witness:
    """u with ``H(u) != 0`` and ``a u = conj(u) b``."""
    if not is_pseudosimilar(a, b):
        raise NotPseudosimilarError(f"{a} and {b} are not pseudosimilar")
    s = conj(a) + b
    if not a:
        u = E0
    elif s:
        u = s
    else:
        a0, a1, a2, a3 = a.coeffs
        if a0 * a0 + a3 * a3:
            u = Cl2Element(a3, 0, 0, a0)
        elif a1 * a1 - a3 * a3:
            u = Cl2Element(0, a3, 0, a1)
        else:
            u = Cl2Element(0, 0, a3, a2)
    w = _witness(u)
    if not w.h_u or mul(a, u) != mul(conj(u), b):
        raise InternalConsistencyError(
            f"pseudosimilarity witness failed for {a}, {b}")
    return w


def invertible_in_span(basis: Sequence[Cl2Element]) -> Cl2Element | None:
    """An element with ``H != 0`` in span(basis), or None if H vanishes there.

    H restricted to a subspace is a quadratic form; it is identically zero
    iff H(b_i) = 0 and the polar form B(b_i, b_j) = 0 for every pair.
    """
    for v in basis:
        if h_map(v):
            return v
    for i, u in enumerate(basis):
        for v in basis[i + 1:]:
            if h_map(u + v):
                return u + v
    return None


def witness_relation(a: Cl2Element, b: Cl2Element, u: Cl2Element,
                     pseudo: bool = False) -> bool:
    """Check ``a u = u b`` (or ``a u = conj(u) b``) and ``H(u) != 0``."""
    rhs = mul(conj(u), b) if pseudo else mul(u, b)
    return bool(h_map(u)) and mul(a, u) == rhs

