"""Small dense exact linear algebra over Scalar.

Everything here is sized for the package's workloads: 3x3 almost
everywhere, up to 9x9 for the gl(3) fixtures.  All operations are pure
and exact; there is deliberately no floating-point path.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .poly import Polynomial
from .scalar import ONE, ZERO, Scalar

__all__ = [
    "Matrix",
    "SingularMatrixError",
    "cross",
    "dot",
    "vec_add",
    "vec_sub",
    "vec_scale",
    "vec_is_zero",
    "adjugate",
    "char_poly",
    "congruence_diagonalize",
    "solve_columns",
    "nullspace",
    "rank_of_vectors",
    "canonicalize_columns",
]

Vector = tuple[Scalar, ...]


class SingularMatrixError(ValueError):
    """Singular input where an invertible matrix was required.

    Carries a nonzero kernel vector as the witness when one was found.
    """

    def __init__(self, message: str, kernel: Vector | None = None):
        super().__init__(message)
        self.kernel = kernel


def _to_scalar(x) -> Scalar:
    return x if isinstance(x, Scalar) else Scalar(x)


def _to_vector(v) -> Vector:
    return tuple(_to_scalar(x) for x in v)


class Matrix:
    """Immutable rectangular matrix of Scalars, row major."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rs = tuple(_to_vector(r) for r in rows)
        if not rs or not rs[0]:
            raise ValueError("matrix needs at least one row and column")
        width = len(rs[0])
        if any(len(r) != width for r in rs):
            raise ValueError("ragged rows in matrix")
        self.rows = rs

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[ZERO] * ncols for _ in range(nrows)])

    @classmethod
    def diagonal(cls, entries) -> "Matrix":
        es = _to_vector(entries)
        n = len(es)
        return cls([[es[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        cols = [_to_vector(c) for c in columns]
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    # shape ------------------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.ncols)]

    def __getitem__(self, key: tuple[int, int]) -> Scalar:
        i, j = key
        return self.rows[i][j]

    # algebra ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("matrix dimensions do not match")
            cols = other.columns()
            return Matrix(
                [[dot(r, c) for c in cols] for r in self.rows]
            )
        if isinstance(other, (tuple, list)):
            v = _to_vector(other)
            if len(v) != self.ncols:
                raise ValueError("matrix/vector dimensions do not match")
            return tuple(dot(r, v) for r in self.rows)
        if isinstance(other, (int, Fraction, Scalar)):
            s = _to_scalar(other)
            return Matrix([[a * s for a in r] for r in self.rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self * other
        return NotImplemented

    def transpose(self) -> "Matrix":
        return Matrix([self.col(j) for j in range(self.ncols)])

    def trace(self) -> Scalar:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def det(self) -> Scalar:
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        work = [list(r) for r in self.rows]
        sign = 1
        acc = ONE
        for c in range(n):
            piv = next((i for i in range(c, n) if work[i][c]), None)
            if piv is None:
                return ZERO
            if piv != c:
                work[c], work[piv] = work[piv], work[c]
                sign = -sign
            pval = work[c][c]
            acc = acc * pval
            for i in range(c + 1, n):
                if work[i][c]:
                    f = work[i][c] / pval
                    work[i] = [a - f * b for a, b in zip(work[i], work[c])]
        return acc if sign == 1 else -acc

    def rank(self) -> int:
        work = [list(r) for r in self.rows]
        return len(_reduce(work, self.ncols))

    def inverse(self) -> "Matrix":
        """Exact inverse; singular input raises with a kernel vector witness."""
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        work = [list(r) + [ONE if i == j else ZERO for j in range(n)]
                for i, r in enumerate(self.rows)]
        pivots = _reduce(work, n)
        if len(pivots) < n:
            kern = nullspace(self)[0]
            raise SingularMatrixError("matrix is singular", kernel=kern)
        return Matrix([r[n:] for r in work])

    def __repr__(self):
        body = "; ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"Matrix({body})"


def _reduce(work: list[list[Scalar]], pivot_limit: int) -> list[int]:
    """In-place reduced row echelon form, pivoting only in the first
    ``pivot_limit`` columns.  Returns the pivot column indices."""
    m = len(work)
    pivots: list[int] = []
    r = 0
    for c in range(pivot_limit):
        piv = next((i for i in range(r, m) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pval = work[r][c]
        if pval != ONE:
            work[r] = [x / pval for x in work[r]]
        for i in range(m):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return pivots


# vectors ----------------------------------------------------------------


def dot(v: Sequence[Scalar], w: Sequence[Scalar]) -> Scalar:
    """Standard bilinear form (no conjugation)."""
    acc = ZERO
    for a, b in zip(v, w):
        if a and b:
            acc = acc + a * b
    return acc


def vec_add(v, w) -> Vector:
    return tuple(a + b for a, b in zip(v, w))


def vec_sub(v, w) -> Vector:
    return tuple(a - b for a, b in zip(v, w))


def vec_scale(s, v) -> Vector:
    s = _to_scalar(s)
    return tuple(s * a for a in v)


def vec_is_zero(v) -> bool:
    return not any(v)


def cross(v: Sequence, w: Sequence) -> Vector:
    """Cross product of 3-vectors: the normal of span(v, w)."""
    if len(v) != 3 or len(w) != 3:
        raise ValueError("cross product needs 3-vectors")
    a1, a2, a3 = (_to_scalar(x) for x in v)
    b1, b2, b3 = (_to_scalar(x) for x in w)
    return (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)


def adjugate(m: Matrix) -> Matrix:
    """Adjugate of a 3x3 matrix by cofactors; defined for singular input too.

    Satisfies m * adjugate(m) == det(m) * identity exactly.
    """
    if m.nrows != 3 or m.ncols != 3:
        raise ValueError("adjugate is implemented for 3x3 matrices")
    r = m.rows
    cof = [
        [
            r[(i + 1) % 3][(j + 1) % 3] * r[(i + 2) % 3][(j + 2) % 3]
            - r[(i + 1) % 3][(j + 2) % 3] * r[(i + 2) % 3][(j + 1) % 3]
            for j in range(3)
        ]
        for i in range(3)
    ]
    return Matrix(cof).transpose()


def char_poly(m: Matrix) -> Polynomial:
    """Monic characteristic polynomial via the Faddeev-LeVerrier recursion.

    Exact over Q(i); the only divisions are by the integers 1..n.
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.nrows
    ident = Matrix.identity(n)
    acc = m
    cs = [-acc.trace()]
    for k in range(2, n + 1):
        acc = m * (acc + ident * cs[-1])
        cs.append(-(acc.trace() / k))
    return Polynomial(list(reversed(cs)) + [ONE])


def solve_columns(columns: Sequence[Sequence], target: Sequence) -> list[Scalar] | None:
    """Solve sum_k x_k * columns[k] == target exactly.

    Returns one solution (free variables set to zero) or None when the
    target is outside the span.
    """
    cols = [_to_vector(c) for c in columns]
    t = _to_vector(target)
    height = len(t)
    if any(len(c) != height for c in cols):
        raise ValueError("column/target dimensions do not match")
    width = len(cols)
    work = [[c[i] for c in cols] + [t[i]] for i in range(height)]
    pivots = _reduce(work, width)
    for i in range(len(pivots), height):
        if work[i][width]:
            return None
    sol = [ZERO] * width
    for r, c in enumerate(pivots):
        sol[c] = work[r][width]
    return sol


def nullspace(m: Matrix) -> list[Vector]:
    """Basis of the kernel, each vector scaled so its first nonzero entry is 1."""
    work = [list(r) for r in m.rows]
    pivots = _reduce(work, m.ncols)
    free = [c for c in range(m.ncols) if c not in pivots]
    basis: list[Vector] = []
    for f in free:
        v = [ZERO] * m.ncols
        v[f] = ONE
        for r, c in enumerate(pivots):
            v[c] = -work[r][f]
        first = next(x for x in v if x)
        basis.append(tuple(x / first for x in v))
    return basis


def rank_of_vectors(vectors: Iterable[Sequence]) -> int:
    vs = [list(_to_vector(v)) for v in vectors]
    if not vs:
        return 0
    return len(_reduce(vs, len(vs[0])))


def canonicalize_columns(m: Matrix) -> Matrix:
    """Scale each column so its first nonzero entry is 1 (zero columns kept)."""
    cols = []
    for c in m.columns():
        first = next((x for x in c if x), None)
        cols.append(c if first is None else tuple(x / first for x in c))
    return Matrix.from_columns(cols)


def congruence_diagonalize(q: Matrix) -> tuple[Matrix, Matrix]:
    """Diagonalize a symmetric matrix by congruence: returns (d, s) with
    s^T q s == d exactly.

    Symmetric pivoting; a zero diagonal facing a nonzero off-diagonal entry
    is repaired by the row+column combination trick, which terminates over
    any field of characteristic zero.  Over the reals the sign pattern of d
    is the signature of q.
    """
    if not q.is_symmetric():
        raise ValueError("congruence diagonalization needs a symmetric matrix")
    n = q.nrows
    a = [list(r) for r in q.rows]
    s = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]

    def swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]
            s[r][i], s[r][j] = s[r][j], s[r][i]

    def combine(i: int, k: int, f: Scalar) -> None:
        # row_i += f * row_k, col_i += f * col_k, on both a and s
        a[i] = [x + f * y for x, y in zip(a[i], a[k])]
        for r in range(n):
            a[r][i] = a[r][i] + f * a[r][k]
            s[r][i] = s[r][i] + f * s[r][k]

    for k in range(n):
        if not a[k][k]:
            piv = next((j for j in range(k + 1, n) if a[j][j]), None)
            if piv is not None:
                swap(k, piv)
            else:
                off = next((j for j in range(k + 1, n) if a[k][j]), None)
                if off is None:
                    continue
                combine(k, off, ONE)
        pval = a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                combine(i, k, -(a[i][k] / pval))
    return Matrix(a), Matrix(s)
