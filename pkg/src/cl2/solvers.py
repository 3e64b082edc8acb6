"""General solutions of ``a x b = d``, ``a x = x b`` and ``a x = conj(x) b``.

Every solver returns a :class:`SolutionSet`: a particular solution plus a
basis of the homogeneous solution space, i.e. the set
``{particular + sum(t_i * basis_i)}`` over arbitrary rational ``t_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import (E0, ZERO_ELEMENT, Cl2Element, cim, g_map, is_central,
                      modulus_sq, mul, prime)
from .linalg import RatMatrix
from .matrix_rep import (E4, f_matrix, from_vec, left_matrix, right_matrix,
                         vec, w_matrix)
from .mp_inverse import mp


@dataclass(frozen=True)
class SolutionSet:
    solvable: bool
    particular: Cl2Element | None = None
    homogeneous_basis: tuple[Cl2Element, ...] = field(default_factory=tuple)

    @property
    def dimension(self) -> int:
        return len(self.homogeneous_basis)

    @property
    def is_unique(self) -> bool:
        return self.solvable and not self.homogeneous_basis

    def member(self, params: Sequence = ()) -> Cl2Element:
        """``particular + sum(t_i * basis_i)``; missing params count as 0."""
        if not self.solvable:
            raise ValueError("equation has no solution")
        if len(params) > len(self.homogeneous_basis):
            raise ValueError("more parameters than basis elements")
        x = self.particular
        for t, h in zip(params, self.homogeneous_basis):
            x = x + h * t
        return x

    def homogeneous_matrix(self) -> RatMatrix | None:
        """Basis vectors as the columns of a 4 x k matrix (None if k = 0)."""
        if not self.homogeneous_basis:
            return None
        return RatMatrix.from_columns([vec(h) for h in self.homogeneous_basis])

    def spans_same(self, vectors: Sequence[Sequence]) -> bool:
        """Whether the homogeneous space equals span(vectors)."""
        return same_span([vec(h) for h in self.homogeneous_basis],
                         [tuple(Fraction(x) for x in v) for v in vectors])


def same_span(u: Sequence[Sequence], v: Sequence[Sequence]) -> bool:
    def rank(vs):
        return RatMatrix.from_columns(vs).rank() if vs else 0
    ru, rv = rank(u), rank(v)
    return ru == rv == rank(list(u) + list(v))


def _image_basis(p: RatMatrix) -> tuple[Cl2Element, ...]:
    return tuple(from_vec(c) for c in p.column_space())


def _kernel_basis(m: RatMatrix) -> tuple[Cl2Element, ...]:
    return tuple(from_vec(v) for v in m.nullspace())


def solve_axb(a: Cl2Element, b: Cl2Element, d: Cl2Element) -> SolutionSet:
    """All x with ``a x b = d``.

    Solvable iff ``a a+ d b+ b = d``; then
    ``x = a+ d b+ + y - a+ a y b b+`` for arbitrary y.  The homogeneous part
    is returned even when the equation is unsolvable.
    """
    ap, bp = mp(a), mp(b)
    solvable = mul(mul(mul(mul(a, ap), d), bp), b) == d
    proj = E4 - left_matrix(mul(ap, a)) @ right_matrix(mul(b, bp))
    basis = _image_basis(proj)
    particular = mul(mul(ap, d), bp) if solvable else None
    return SolutionSet(solvable, particular, basis)


def solve_ax(a: Cl2Element, d: Cl2Element) -> SolutionSet:
    return solve_axb(a, E0, d)


def solve_xb(b: Cl2Element, d: Cl2Element) -> SolutionSet:
    return solve_axb(E0, b, d)


def null_right(a: Cl2Element) -> SolutionSet:
    """All x with ``a x = 0``."""
    return solve_ax(a, ZERO_ELEMENT)


def null_left(b: Cl2Element) -> SolutionSet:
    """All x with ``x b = 0``."""
    return solve_xb(b, ZERO_ELEMENT)


# -- a x = x b ------------------------------------------------------------

def sylvester_closed_form_applies(a: Cl2Element, b: Cl2Element) -> bool:
    return (not is_central(a) and not is_central(b)
            and a.a0 == b.a0 and g_map(a) == g_map(b))


def _sylvester_denominator(a: Cl2Element, b: Cl2Element) -> Fraction:
    return 2 * (modulus_sq(cim(a)) + modulus_sq(cim(b))).to_fraction()


def f_pinv_closed_form(a: Cl2Element, b: Cl2Element) -> RatMatrix:
    """``(L(a') - R(b')) / (2(|Cim a|^2 + |Cim b|^2))``.

    Only valid when ``a0 = b0``, ``G(a) = G(b)`` and neither is real.
    """
    if not sylvester_closed_form_applies(a, b):
        raise ValueError("closed-form F+ needs a0 = b0, G(a) = G(b), a, b not real")
    v = left_matrix(prime(a)) - right_matrix(prime(b))
    return v.scale(1 / _sylvester_denominator(a, b))


def sylvester_general(a: Cl2Element, b: Cl2Element, y: Cl2Element) -> Cl2Element:
    """``y - (a'a y - a'y b - a y b' + y b b') / (2(|Cim a|^2 + |Cim b|^2))``."""
    if not sylvester_closed_form_applies(a, b):
        raise ValueError("parameterization needs a0 = b0, G(a) = G(b), a, b not real")
    pa, pb = prime(a), prime(b)
    num = (mul(mul(pa, a), y) - mul(mul(pa, y), b)
           - mul(mul(a, y), pb) + mul(y, mul(b, pb)))
    return y - num * (1 / _sylvester_denominator(a, b))


def solve_sylvester(a: Cl2Element, b: Cl2Element) -> SolutionSet:
    """All x with ``a x = x b``."""
    f = f_matrix(a, b)
    if sylvester_closed_form_applies(a, b):
        proj = E4 - f_pinv_closed_form(a, b) @ f
        basis = _image_basis(proj)
    else:
        basis = _kernel_basis(f)
    return SolutionSet(True, ZERO_ELEMENT, basis)


def solve_consylvester(a: Cl2Element, b: Cl2Element) -> SolutionSet:
    """All x with ``a x = conj(x) b``."""
    return SolutionSet(True, ZERO_ELEMENT, _kernel_basis(w_matrix(a, b)))
