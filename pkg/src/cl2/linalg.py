"""Dense exact-rational matrices.

Small and direct: every routine is Gauss-Jordan elimination over
``fractions.Fraction``.  Only the 2x2 and 4x4 sizes are exercised by the
rest of the package, but nothing here depends on the shape.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class RatMatrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", width)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def _wrap(cls, rows: tuple[tuple[Fraction, ...], ...]) -> "RatMatrix":
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "nrows", len(rows))
        object.__setattr__(obj, "ncols", len(rows[0]))
        return obj

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.diag([1] * n)

    @classmethod
    def zeros(cls, m: int, n: int | None = None) -> "RatMatrix":
        n = m if n is None else n
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def diag(cls, values: Sequence) -> "RatMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)]
                    for i in range(n)])

    @classmethod
    def column(cls, values: Sequence) -> "RatMatrix":
        return cls([[v] for v in values])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "RatMatrix":
        return cls(zip(*cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.col(j) for j in range(self.ncols)]

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix._wrap(tuple(
            tuple(x + y for x, y in zip(r, s))
            for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix._wrap(tuple(
            tuple(x - y for x, y in zip(r, s))
            for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "RatMatrix":
        return RatMatrix._wrap(tuple(tuple(-x for x in r) for r in self.rows))

    def scale(self, c) -> "RatMatrix":
        c = Fraction(c)
        return RatMatrix._wrap(tuple(tuple(c * x for x in r) for r in self.rows))

    def __mul__(self, c):
        if isinstance(c, RatMatrix):
            return self @ c
        return self.scale(c)

    __rmul__ = scale

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return RatMatrix._wrap(tuple(
            tuple(sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols)
            for r in self.rows))

    def apply(self, vec: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product on a plain sequence."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum((x * Fraction(v) for x, v in zip(r, vec)), Fraction(0))
                     for r in self.rows)

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix._wrap(tuple(zip(*self.rows)))

    def transpose(self) -> "RatMatrix":
        return self.T

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def is_symmetric(self) -> bool:
        return self.rows == self.T.rows

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    # -- elimination ----------------------------------------------------

    def rref(self) -> tuple["RatMatrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        m = [list(r) for r in self.rows]
        pivots = []
        lead = 0
        for j in range(self.ncols):
            pr = next((i for i in range(lead, self.nrows) if m[i][j]), None)
            if pr is None:
                continue
            m[lead], m[pr] = m[pr], m[lead]
            inv = 1 / m[lead][j]
            m[lead] = [x * inv for x in m[lead]]
            for i in range(self.nrows):
                if i != lead and m[i][j]:
                    f = m[i][j]
                    m[i] = [x - f * y for x, y in zip(m[i], m[lead])]
            pivots.append(j)
            lead += 1
            if lead == self.nrows:
                break
        return RatMatrix._wrap(tuple(tuple(r) for r in m)), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.rows]
        n = self.nrows
        d = Fraction(1)
        for j in range(n):
            pr = next((i for i in range(j, n) if m[i][j]), None)
            if pr is None:
                return Fraction(0)
            if pr != j:
                m[j], m[pr] = m[pr], m[j]
                d = -d
            d *= m[j][j]
            for i in range(j + 1, n):
                if m[i][j]:
                    f = m[i][j] / m[j][j]
                    m[i] = [x - f * y for x, y in zip(m[i], m[j])]
        return d

    def inverse(self) -> "RatMatrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = RatMatrix._wrap(tuple(
            r + tuple(Fraction(int(i == j)) for j in range(n))
            for i, r in enumerate(self.rows)))
        red, piv = aug.rref()
        if piv[:n] != tuple(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return RatMatrix._wrap(tuple(r[n:] for r in red.rows))

    def nullspace(self) -> list[tuple[Fraction, ...]]:
        """Basis of {x : M x = 0}, one vector per free column."""
        red, piv = self.rref()
        free = [j for j in range(self.ncols) if j not in piv]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for row, p in enumerate(piv):
                v[p] = -red.rows[row][f]
            basis.append(tuple(v))
        return basis

    def column_space(self) -> list[tuple[Fraction, ...]]:
        """Basis of the image: the pivot columns of the matrix itself."""
        _, piv = self.rref()
        return [self.col(j) for j in piv]

    def charpoly_at(self, lam) -> Fraction:
        """det(lam*E - M) evaluated at a rational point."""
        n = self.nrows
        return (RatMatrix.identity(n).scale(lam) - self).det()

    def __repr__(self):
        return f"RatMatrix({[[str(x) for x in r] for r in self.rows]})"

    def __str__(self):
        return format_matrix(self)


def format_matrix(m: RatMatrix, indent: str = "") -> str:
    cells = [[str(x) for x in r] for r in m.rows]
    width = max(len(c) for r in cells for c in r)
    return "\n".join(indent + "[" + " ".join(c.rjust(width) for c in r) + "]"
                     for r in cells)


def full_rank_factorization(m: RatMatrix) -> tuple[RatMatrix, RatMatrix] | None:
    """``M = F G`` with F the pivot columns of M and G the nonzero RREF rows.

    Returns None for the zero matrix.
    """
    red, piv = m.rref()
    if not piv:
        return None
    f = RatMatrix.from_columns([m.col(j) for j in piv])
    g = RatMatrix._wrap(red.rows[:len(piv)])
    return f, g


def mp_oracle(m: RatMatrix) -> RatMatrix:
    """Exact Moore-Penrose pseudoinverse via full-rank factorization."""
    fg = full_rank_factorization(m)
    if fg is None:
        return RatMatrix.zeros(m.ncols, m.nrows)
    f, g = fg
    gt = g.T
    core = (f.T @ m @ gt).inverse()
    return gt @ core @ f.T


def penrose_holds(m: RatMatrix, x: RatMatrix) -> bool:
    """All four Penrose equations, checked exactly."""
    mx = m @ x
    xm = x @ m
    return (mx @ m == m and xm @ x == x
            and mx.is_symmetric() and xm.is_symmetric())
