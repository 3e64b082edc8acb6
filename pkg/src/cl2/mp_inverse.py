"""Closed-form Moore-Penrose inverse in Cl2.

The prime anti-involution plays the role of matrix transpose (``L(a') =
L(a)^T``), so the four Penrose equations read
``a x a = a``, ``x a x = x``, ``(a x)' = a x``, ``(x a)' = x a``.
"""

from __future__ import annotations

from .algebra import Cl2Element, conj, h_map, mul, prime
from .linalg import RatMatrix, mp_oracle
from .matrix_rep import left_matrix, phi_matrix, right_matrix

CASE_ZERO = "zero"
CASE_INVERTIBLE = "invertible"
CASE_ZERO_DIVISOR = "zero-divisor"


def mp_case(a: Cl2Element) -> str:
    if not a:
        return CASE_ZERO
    return CASE_INVERTIBLE if h_map(a) else CASE_ZERO_DIVISOR


def mp(a: Cl2Element) -> Cl2Element:
    """Moore-Penrose inverse; total, with ``mp(0) == 0``."""
    if not a:
        return a
    h = h_map(a)
    if h:
        return conj(a) * h.reciprocal()
    # a != 0 and |z1|^2 = |z2|^2 force a0^2 + a3^2 > 0
    return prime(a) * (4 * (a.a0 * a.a0 + a.a3 * a.a3)).reciprocal()


def verify_penrose(a: Cl2Element, x: Cl2Element) -> bool:
    ax = mul(a, x)
    xa = mul(x, a)
    return (mul(ax, a) == a and mul(xa, x) == x
            and prime(ax) == ax and prime(xa) == xa)


def mp_matrix_consistency(a: Cl2Element) -> bool:
    """L(mp(a)) and R(mp(a)) agree with the matrix pseudoinverse oracle."""
    x = mp(a)
    return (left_matrix(x) == mp_oracle(left_matrix(a))
            and right_matrix(x) == mp_oracle(right_matrix(a)))


def phi_mp(a: Cl2Element) -> RatMatrix:
    """Pseudoinverse of the 2x2 representation, through the closed form.

    ``a = 0`` gives the 2x2 zero matrix.
    """
    return phi_matrix(mp(a))
