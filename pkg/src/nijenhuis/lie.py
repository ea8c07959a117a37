"""Lie algebras as explicit structure-constant tables over exact scalars.

The table stores the coordinates of [e_i, e_j] for every ordered pair, so
antisymmetry is a checkable invariant rather than an encoding convention.
Construction validates antisymmetry always and the Jacobi identity by
default; ``check=False`` skips the Jacobi sweep when the table is known
valid (basis changes, generated tensors).
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .linalg import Matrix, Vector, rank_of_vectors, vec_add, vec_is_zero, vec_scale
from .scalar import ZERO, Scalar

__all__ = ["LieAlgebra", "DependentVectorsError", "is_subalgebra_pair", "span_contains"]


class DependentVectorsError(ValueError):
    """A pair that was required to be linearly independent is not."""


def _to_scalar(x) -> Scalar:
    return x if isinstance(x, Scalar) else Scalar(x)


class LieAlgebra:
    """Finite-dimensional Lie algebra on a fixed basis."""

    __slots__ = ("dim", "field", "table")

    def __init__(self, dim: int, field: str, table, *, check: bool = True):
        if field not in ("R", "C"):
            raise ValueError(f"field must be 'R' or 'C', not {field!r}")
        if dim < 1:
            raise ValueError("dimension must be positive")
        rows = tuple(
            tuple(tuple(_to_scalar(x) for x in vec) for vec in trow) for trow in table
        )
        if len(rows) != dim or any(
            len(trow) != dim or any(len(vec) != dim for vec in trow) for trow in rows
        ):
            raise ValueError("structure tensor shape does not match dimension")
        self.dim = dim
        self.field = field
        self.table = rows
        if field == "R":
            for trow in rows:
                for vec in trow:
                    for x in vec:
                        if x.im:
                            raise ValueError(
                                "real algebra has a non-real structure constant"
                            )
        for i in range(dim):
            for j in range(dim):
                if rows[i][j] != tuple(-x for x in rows[j][i]):
                    raise ValueError(
                        f"structure tensor is not antisymmetric at pair ({i + 1}, {j + 1})"
                    )
        if check:
            bad = self.jacobi_failure()
            if bad is not None:
                raise ValueError(f"Jacobi identity fails on basis triple {bad}")

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        field: str,
        brackets: Mapping[tuple[int, int], Sequence],
        *,
        check: bool = True,
    ) -> "LieAlgebra":
        """Build from 1-based relations {(i, j): coords} with i < j;
        omitted pairs are zero."""
        table = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), coords in brackets.items():
            if not (1 <= i < j <= dim):
                raise ValueError(f"bracket pair ({i}, {j}) must satisfy 1 <= i < j <= dim")
            vec = [_to_scalar(x) for x in coords]
            if len(vec) != dim:
                raise ValueError(f"bracket ({i}, {j}) has {len(vec)} coordinates, need {dim}")
            table[i - 1][j - 1] = vec
            table[j - 1][i - 1] = [-x for x in vec]
        return cls(dim, field, table, check=check)

    # operations ---------------------------------------------------------

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        """Bilinear, antisymmetric evaluation of the structure tensor."""
        n = self.dim
        if len(x) != n or len(y) != n:
            raise ValueError("vector length does not match algebra dimension")
        out = [ZERO] * n
        for i in range(n):
            xi = _to_scalar(x[i])
            if not xi:
                continue
            ti = self.table[i]
            for j in range(n):
                yj = _to_scalar(y[j])
                if not yj or i == j:
                    continue
                vec = ti[j]
                c = xi * yj
                for k in range(n):
                    if vec[k]:
                        out[k] = out[k] + c * vec[k]
        return tuple(out)

    def _bracket_with_basis(self, v: Sequence[Scalar], k: int) -> Vector:
        # [v, e_k], bilinear in the first slot only
        out = [ZERO] * self.dim
        for m, vm in enumerate(v):
            if not vm or m == k:
                continue
            vec = self.table[m][k]
            for t in range(self.dim):
                if vec[t]:
                    out[t] = out[t] + vm * vec[t]
        return tuple(out)

    def jacobi_failure(self) -> tuple[int, int, int] | None:
        """First 1-based basis triple violating the Jacobi identity, or None.

        Checking i < j < k suffices: degenerate triples vanish identically
        once the table is antisymmetric.
        """
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s = vec_add(
                        vec_add(
                            self._bracket_with_basis(self.table[i][j], k),
                            self._bracket_with_basis(self.table[j][k], i),
                        ),
                        self._bracket_with_basis(self.table[k][i], j),
                    )
                    if not vec_is_zero(s):
                        return (i + 1, j + 1, k + 1)
        return None

    def change_basis(self, z: Matrix) -> "LieAlgebra":
        """Structure constants in the basis given by the columns of z
        (new basis vectors in old coordinates)."""
        if z.nrows != self.dim or z.ncols != self.dim:
            raise ValueError("basis matrix shape does not match algebra dimension")
        zinv = z.inverse()
        cols = z.columns()
        n = self.dim
        table = [[None] * n for _ in range(n)]
        for i in range(n):
            table[i][i] = (ZERO,) * n
            for j in range(i + 1, n):
                vec = zinv * self.bracket(cols[i], cols[j])
                table[i][j] = vec
                table[j][i] = tuple(-x for x in vec)
        field = self.field
        if field == "R" and any(
            x.im for trow in table for vec in trow for x in vec
        ):
            field = "C"
        return LieAlgebra(n, field, table, check=False)

    def complexified(self) -> "LieAlgebra":
        """The same tensor with the complex field tag."""
        return LieAlgebra(self.dim, "C", self.table, check=False)

    # predicates ---------------------------------------------------------

    def is_abelian(self) -> bool:
        return all(
            vec_is_zero(vec) for trow in self.table for vec in trow
        )

    def derived_subalgebra_dim(self) -> int:
        """Dimension of the span of all brackets of basis pairs."""
        vecs = [
            self.table[i][j]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        ]
        return rank_of_vectors(vecs) if vecs else 0

    def is_nilpotent(self) -> bool:
        """Lower central series reaches zero."""
        n = self.dim
        basis = [tuple(Matrix.identity(n).col(i)) for i in range(n)]
        current = basis
        while True:
            produced = [
                self.bracket(b, v) for b in basis for v in current
            ]
            produced = [v for v in produced if not vec_is_zero(v)]
            rank = rank_of_vectors(produced)
            if rank == 0:
                return True
            if rank == len(current):
                return False
            current = _independent_subset(produced, rank)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.field == other.field
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.dim, self.field, self.table))

    def __repr__(self):
        rels = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if not vec_is_zero(self.table[i][j]):
                    rels.append(f"[e{i + 1},e{j + 1}]")
        return f"LieAlgebra(dim={self.dim}, field={self.field}, nonzero={len(rels)})"


def _independent_subset(vectors: list[Vector], rank: int) -> list[Vector]:
    picked: list[Vector] = []
    for v in vectors:
        if rank_of_vectors(picked + [v]) > len(picked):
            picked.append(v)
            if len(picked) == rank:
                break
    return picked


def span_contains(vectors: Sequence[Sequence], target: Sequence) -> bool:
    """Generic span membership by rank comparison (any dimension)."""
    vs = list(vectors)
    return rank_of_vectors(vs + [tuple(target)]) == rank_of_vectors(vs)


def is_subalgebra_pair(alg: LieAlgebra, x: Sequence, y: Sequence) -> bool:
    """True iff [x, y] lies in span(x, y), for independent x, y in a
    3-dimensional algebra.  Decided by one 3x3 determinant."""
    if alg.dim != 3:
        raise ValueError("subalgebra pair test is defined for dimension 3")
    if rank_of_vectors([x, y]) != 2:
        raise DependentVectorsError("x and y span a line, the pair condition is degenerate")
    b = alg.bracket(x, y)
    return Matrix([x, y, b]).det() == ZERO
