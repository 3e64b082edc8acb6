"""Matrix representations of Cl2 and spectral data of F(a, b) and W(a, b).

``L(a) x = a x`` and ``R(b) x = x b`` on coefficient vectors.  Then
``a x = x b`` is the null space of ``F(a, b) = L(a) - R(b)`` and
``a x = conj(x) b`` is the null space of ``W(a, b) = L(a) - R(b) U``.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Cl2Element, conj, g_map, h_map, mul, prime
from .linalg import RatMatrix
from .scalar import Scalar
from .errors import RadicandMismatchError

C_MATRIX = RatMatrix.diag([1, 1, 1, -1])
D_MATRIX = RatMatrix.diag([1, -1, -1, 1])
U_MATRIX = RatMatrix.diag([1, -1, -1, -1])
E4 = RatMatrix.identity(4)


def vec(a: Cl2Element) -> tuple[Fraction, ...]:
    return a.rational_coeffs()


def from_vec(v: Sequence) -> Cl2Element:
    return Cl2Element(*v)


def left_matrix(a: Cl2Element) -> RatMatrix:
    a0, a1, a2, a3 = a.rational_coeffs()
    return RatMatrix._wrap((
        (a0, a1, a2, -a3),
        (a1, a0, a3, -a2),
        (a2, -a3, a0, a1),
        (a3, -a2, a1, a0),
    ))


def right_matrix(a: Cl2Element) -> RatMatrix:
    a0, a1, a2, a3 = a.rational_coeffs()
    return RatMatrix._wrap((
        (a0, a1, a2, -a3),
        (a1, a0, -a3, a2),
        (a2, a3, a0, -a1),
        (a3, a2, -a1, a0),
    ))


def phi_matrix(a: Cl2Element) -> RatMatrix:
    """The 2x2 real matrix representation; det equals H(a)."""
    a0, a1, a2, a3 = a.rational_coeffs()
    return RatMatrix._wrap(((a0 + a1, a2 + a3), (a2 - a3, a0 - a1)))


def phi_inverse(m: RatMatrix) -> Cl2Element:
    """Recover a from phi(a)."""
    (p, q), (r, s) = m.rows
    return Cl2Element((p + s) / 2, (p - s) / 2, (q + r) / 2, (q - r) / 2)


def failed_structural_identities(a: Cl2Element, b: Cl2Element) -> list[str]:
    """Names of the representation identities that fail for (a, b)."""
    la, lb = left_matrix(a), left_matrix(b)
    ra, rb = right_matrix(a), right_matrix(b)
    ab = mul(a, b)
    ha = h_map(a).to_fraction()
    checks = {
        "L(a) b = ab": la.apply(vec(b)) == vec(ab),
        "R(b) a = ab": rb.apply(vec(a)) == vec(ab),
        "R(a) = C L(a)^T C": ra == C_MATRIX @ la.T @ C_MATRIX,
        "L(conj a) = D L(a)^T D": left_matrix(conj(a)) == D_MATRIX @ la.T @ D_MATRIX,
        "R(conj a) = D R(a)^T D": right_matrix(conj(a)) == D_MATRIX @ ra.T @ D_MATRIX,
        "L(a') = L(a)^T": left_matrix(prime(a)) == la.T,
        "R(a') = R(a)^T": right_matrix(prime(a)) == ra.T,
        "L(a+b) = L(a)+L(b)": left_matrix(a + b) == la + lb,
        "R(a+b) = R(a)+R(b)": right_matrix(a + b) == ra + rb,
        "L(ab) = L(a)L(b)": left_matrix(ab) == la @ lb,
        "R(ab) = R(b)R(a)": right_matrix(ab) == rb @ ra,
        "L(a)R(b) = R(b)L(a)": la @ rb == rb @ la,
        "det L(a) = H(a)^2": la.det() == ha * ha,
        "det R(a) = H(a)^2": ra.det() == ha * ha,
        "phi(ab) = phi(a)phi(b)": phi_matrix(ab) == phi_matrix(a) @ phi_matrix(b),
        "det phi(a) = H(a)": phi_matrix(a).det() == ha,
    }
    return [name for name, ok in checks.items() if not ok]


def structural_identities_check(a: Cl2Element, b: Cl2Element) -> bool:
    return not failed_structural_identities(a, b)


# -- eigenvalues ----------------------------------------------------------

def _csqrt(x: Fraction) -> complex:
    return cmath.sqrt(float(x))


@dataclass(frozen=True)
class EigenDescriptor:
    """Eigenvalues ``center +- sqrt(radicand)``, each of the given multiplicity.

    A negative radicand encodes a complex-conjugate pair.
    """

    center: Fraction
    radicand: Fraction
    multiplicity: int = 1

    def values(self) -> list[complex]:
        r = _csqrt(self.radicand)
        c = float(self.center)
        return [c + r] * self.multiplicity + [c - r] * self.multiplicity

    def exact(self) -> tuple[Scalar, Scalar] | None:
        """The pair as exact Scalars, or None if the pair is complex."""
        if self.radicand < 0:
            return None
        s = Scalar.sqrt(self.radicand)
        return self.center + s, self.center - s

    def charpoly_factor(self, lam) -> Fraction:
        """``((lam - center)^2 - radicand)^multiplicity``."""
        t = Fraction(lam) - self.center
        return (t * t - self.radicand) ** self.multiplicity

    def __str__(self):
        text = f"{self.center} +- sqrt({self.radicand})"
        if self.multiplicity != 1:
            text += f" (x{self.multiplicity})"
        return text


def charpoly_from_descriptors(descs: Sequence[EigenDescriptor], lam) -> Fraction:
    out = Fraction(1)
    for d in descs:
        out *= d.charpoly_factor(lam)
    return out


def lr_eigen(a: Cl2Element) -> list[EigenDescriptor]:
    """Spectrum shared by L(a) and R(a): ``a0 +- sqrt(G(a))``, each twice."""
    a0 = a.rational_coeffs()[0]
    return [EigenDescriptor(a0, g_map(a).to_fraction(), 2)]


@dataclass(frozen=True)
class FEigenvalue:
    """``center + outer*(sqrt(g_a) + inner*sqrt(g_b))``.

    The square roots of negative arguments are taken as ``i*sqrt(|g|)``.
    """

    center: Fraction
    g_a: Fraction
    g_b: Fraction
    outer: int
    inner: int

    def value(self) -> complex:
        return float(self.center) + self.outer * (
            _csqrt(self.g_a) + self.inner * _csqrt(self.g_b))

    def as_scalar(self) -> Scalar | None:
        """Exact real value when it lives in a single Q(sqrt(r))."""
        if self.g_a < 0 or self.g_b < 0:
            if self.g_a == self.g_b and self.inner == -1:
                return Scalar(self.center)
            return None
        try:
            s = Scalar.sqrt(self.g_a) + self.inner * Scalar.sqrt(self.g_b)
        except RadicandMismatchError:
            return None
        return self.center + self.outer * s

    def __str__(self):
        exact = self.as_scalar()
        if exact is not None:
            return str(exact)
        o = "+" if self.outer > 0 else "-"
        i = "+" if self.inner > 0 else "-"
        return f"{self.center} {o} (sqrt({self.g_a}) {i} sqrt({self.g_b}))"


def f_matrix(a: Cl2Element, b: Cl2Element) -> RatMatrix:
    return left_matrix(a) - right_matrix(b)


def f_eigen(a: Cl2Element, b: Cl2Element) -> list[FEigenvalue]:
    delta = a.rational_coeffs()[0] - b.rational_coeffs()[0]
    ga = g_map(a).to_fraction()
    gb = g_map(b).to_fraction()
    return [FEigenvalue(delta, ga, gb, o, i)
            for o in (1, -1) for i in (1, -1)]


def f_charpoly(eigs: Sequence[FEigenvalue], lam) -> Fraction:
    """det(lam E - F) rebuilt from the four F eigen descriptors."""
    e = eigs[0]
    if any((x.center, x.g_a, x.g_b) != (e.center, e.g_a, e.g_b) for x in eigs):
        raise ValueError("descriptors do not belong to one F(a, b)")
    t = Fraction(lam) - e.center
    s = t * t - e.g_a - e.g_b
    return s * s - 4 * e.g_a * e.g_b


def f_det(a: Cl2Element, b: Cl2Element) -> Fraction:
    delta = a.rational_coeffs()[0] - b.rational_coeffs()[0]
    ga = g_map(a).to_fraction()
    gb = g_map(b).to_fraction()
    d2 = delta * delta
    return d2 * d2 - 2 * d2 * (ga + gb) + (ga - gb) ** 2


def f_rank(a: Cl2Element, b: Cl2Element) -> int:
    return f_matrix(a, b).rank()


def w_matrix(a: Cl2Element, b: Cl2Element) -> RatMatrix:
    return left_matrix(a) - right_matrix(b) @ U_MATRIX


def w_eigen(a: Cl2Element, b: Cl2Element) -> list[EigenDescriptor]:
    a0, a1, a2, a3 = a.rational_coeffs()
    b0, b1, b2, b3 = b.rational_coeffs()
    ga = g_map(a).to_fraction()
    return [
        EigenDescriptor(a0, ga + h_map(b).to_fraction()),
        EigenDescriptor(a0 + b0, ga + g_map(b).to_fraction()
                        + 2 * (-a1 * b1 - a2 * b2 + a3 * b3)),
    ]


def w_det(a: Cl2Element, b: Cl2Element) -> Fraction:
    """Closed form ``(H(a) - H(b)) * H(conj(a) + b)``."""
    ha = h_map(a).to_fraction()
    hb = h_map(b).to_fraction()
    return (ha - hb) * h_map(conj(a) + b).to_fraction()


class WRankCase(enum.Enum):
    RANK1_CONJ = "Rank1Conj"
    RANK3_INVERTIBLE = "Rank3Invertible"
    RANK3_ZERO_DIVISOR = "Rank3ZeroDivisor"
    RANK3_MIXED = "Rank3Mixed"
    FULL_RANK = "FullRank"

    @property
    def predicted_rank(self) -> int:
        return {"Rank1Conj": 1, "FullRank": 4}.get(self.value, 3)


def w_rank_case(a: Cl2Element, b: Cl2Element) -> WRankCase:
    """Which singular-W case (a, b) falls into; FULL_RANK if W is invertible."""
    if not a or not b:
        raise ValueError("w_rank_case needs nonzero a and b")
    if w_det(a, b):
        return WRankCase.FULL_RANK
    s = conj(a) + b
    same_h = h_map(a) == h_map(b)
    if not s:
        return WRankCase.RANK1_CONJ
    if h_map(s):
        return WRankCase.RANK3_INVERTIBLE
    return WRankCase.RANK3_ZERO_DIVISOR if same_h else WRankCase.RANK3_MIXED


@dataclass(frozen=True)
class WRankAnalysis:
    case: WRankCase
    rank: int              # exact, from RREF
    predicted_rank: int    # what the case table claims

    @property
    def consistent(self) -> bool:
        return self.rank == self.predicted_rank


def w_rank_analysis(a: Cl2Element, b: Cl2Element) -> WRankAnalysis:
    """Case classification next to the exact rank.

    The table's rank is not trusted: when both a and b are zero divisors
    with ``H(a) = H(b)`` and ``conj(a) + b`` a nonzero zero divisor, W can
    have rank 2.
    """
    case = w_rank_case(a, b)
    return WRankAnalysis(case, w_matrix(a, b).rank(), case.predicted_rank)
