"""Torsion of a linear operator on a Lie algebra, the algebraic Nijenhuis
test, regular-semisimplicity, and eigenbasis certificates.

An operator is just a square Matrix acting on the algebra's fixed basis.
A certificate stores a basis together with, for every pair i < j, the
coefficients (alpha, beta) with [z_i, z_j] == alpha*z_i + beta*z_j; pairs
are 1-based throughout, matching the JSON schemas.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InternalCheckError
from .lie import LieAlgebra
from .linalg import (
    Matrix,
    Vector,
    canonicalize_columns,
    char_poly,
    nullspace,
    solve_columns,
    vec_is_zero,
)
from .poly import count_real_roots, is_squarefree, rational_roots
from .scalar import Scalar, scalar_sort_key

__all__ = [
    "Torsion",
    "EigenbasisCertificate",
    "SpanFailure",
    "IrrationalSpectrumError",
    "torsion",
    "is_algebraic_nijenhuis",
    "is_regular_semisimple",
    "operator_from_eigenbasis",
    "verify_nijenhuis_eigenbasis",
    "eigenbasis_of",
]


class IrrationalSpectrumError(ValueError):
    """Eigenvalues exist but lie outside the rational / Gaussian-rational field."""


@dataclass(frozen=True)
class Torsion:
    """Components of N(e_i, e_j) for all ordered basis pairs;
    table[i][j] is the coordinate vector of N(e_i, e_j)."""

    table: tuple[tuple[Vector, ...], ...]

    def component(self, k: int, i: int, j: int) -> Scalar:
        """N^k_{ij} with 1-based indices."""
        return self.table[i - 1][j - 1][k - 1]

    def is_zero(self) -> bool:
        return all(vec_is_zero(vec) for row in self.table for vec in row)

    def first_nonzero(self) -> tuple[int, int, int, Scalar] | None:
        """First (i, j, k, value) with a nonzero component, 1-based."""
        for i, row in enumerate(self.table):
            for j, vec in enumerate(row):
                for k, val in enumerate(vec):
                    if val:
                        return (i + 1, j + 1, k + 1, val)
        return None


@dataclass(frozen=True)
class EigenbasisCertificate:
    """A basis whose pairs all span 2-dimensional subalgebras, with the
    witnessing coefficients."""

    basis: Matrix
    pair_coeffs: Mapping[tuple[int, int], tuple[Scalar, Scalar]]

    def coefficients(self, i: int, j: int) -> tuple[Scalar, Scalar]:
        """(alpha, beta) with [z_i, z_j] == alpha*z_i + beta*z_j, any order
        of 1-based i != j."""
        if (i, j) in self.pair_coeffs:
            return self.pair_coeffs[(i, j)]
        alpha, beta = self.pair_coeffs[(j, i)]
        return (-beta, -alpha)


@dataclass(frozen=True)
class SpanFailure:
    """Witness that a basis is not a Nijenhuis eigenbasis: the first pair
    (1-based) whose bracket escapes the pair's span."""

    pair: tuple[int, int]
    bracket: Vector


def _check_operator(alg: LieAlgebra, op: Matrix) -> None:
    if not op.is_square or op.nrows != alg.dim:
        raise ValueError("operator shape does not match algebra dimension")


def torsion(alg: LieAlgebra, op: Matrix) -> Torsion:
    """N(x, y) = L[Lx, y] + L[x, Ly] - [Lx, Ly] - L^2 [x, y] on all basis
    pairs; bilinearity determines the full tensor."""
    _check_operator(alg, op)
    n = alg.dim
    ident = Matrix.identity(n)
    basis = [ident.col(i) for i in range(n)]
    lcols = [op.col(i) for i in range(n)]
    op2 = op * op
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            t1 = op * alg.bracket(lcols[i], basis[j])
            t2 = op * alg.bracket(basis[i], lcols[j])
            t3 = alg.bracket(lcols[i], lcols[j])
            t4 = op2 * alg.table[i][j]
            row.append(tuple(a + b - c - d for a, b, c, d in zip(t1, t2, t3, t4)))
        out.append(tuple(row))
    return Torsion(tuple(out))


def is_algebraic_nijenhuis(alg: LieAlgebra, op: Matrix) -> bool:
    """True iff the torsion vanishes identically."""
    return torsion(alg, op).is_zero()


def is_regular_semisimple(alg: LieAlgebra, op: Matrix) -> bool:
    """Pairwise-distinct eigenvalues with an eigenbasis over the algebra's
    field: squarefree characteristic polynomial, and over R additionally a
    full count of distinct real roots."""
    _check_operator(alg, op)
    if alg.field == "R" and any(x.im for row in op.rows for x in row):
        raise ValueError("operator on a real algebra must have real entries")
    p = char_poly(op)
    if not is_squarefree(p):
        return False
    if alg.field == "R":
        return count_real_roots(p) == alg.dim
    return True


def operator_from_eigenbasis(basis: Matrix, eigenvalues: Sequence) -> Matrix:
    """L = Z diag(lambda) Z^{-1}, exactly.  Rejects a singular basis and
    repeated eigenvalues."""
    lams = [x if isinstance(x, Scalar) else Scalar(x) for x in eigenvalues]
    if not basis.is_square or basis.nrows != len(lams):
        raise ValueError("basis shape does not match the eigenvalue count")
    keys = {(l.re, l.im) for l in lams}
    if len(keys) != len(lams):
        raise ValueError("eigenvalues must be pairwise distinct")
    return basis * Matrix.diagonal(lams) * basis.inverse()


def verify_nijenhuis_eigenbasis(
    alg: LieAlgebra, z: Matrix
) -> EigenbasisCertificate | SpanFailure:
    """Solve [z_i, z_j] == alpha*z_i + beta*z_j exactly for every pair
    i < j.  Returns the certificate, or the first failing pair."""
    if not z.is_square or z.nrows != alg.dim:
        raise ValueError("basis shape does not match algebra dimension")
    z.inverse()  # raises SingularMatrixError with a kernel witness
    cols = z.columns()
    coeffs: dict[tuple[int, int], tuple[Scalar, Scalar]] = {}
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            b = alg.bracket(cols[i], cols[j])
            sol = solve_columns([cols[i], cols[j]], b)
            if sol is None:
                return SpanFailure(pair=(i + 1, j + 1), bracket=b)
            coeffs[(i + 1, j + 1)] = (sol[0], sol[1])
    return EigenbasisCertificate(basis=z, pair_coeffs=coeffs)


def eigenbasis_of(alg: LieAlgebra, op: Matrix) -> EigenbasisCertificate:
    """Extract and certify the eigenbasis of an algebraic Nijenhuis,
    regular semisimple operator with an in-field spectrum.

    Columns are canonicalized (first nonzero coordinate 1) and ordered by
    eigenvalue, ascending for real spectra and by (re, im) otherwise.
    """
    _check_operator(alg, op)
    if not is_algebraic_nijenhuis(alg, op):
        raise ValueError("operator has nonzero torsion")
    if not is_regular_semisimple(alg, op):
        raise ValueError("operator is not regular semisimple over the algebra's field")
    p = char_poly(op)
    roots = rational_roots(p)
    if len(roots) != alg.dim:
        raise IrrationalSpectrumError(
            f"irrational spectrum: only {len(roots)} of {alg.dim} eigenvalues "
            "lie in the scalar field"
        )
    roots.sort(key=scalar_sort_key)
    ident = Matrix.identity(alg.dim)
    cols = []
    for lam in roots:
        kern = nullspace(op - ident * lam)
        if len(kern) != 1:
            raise InternalCheckError("eigenvalue of a regular operator has a fat kernel")
        cols.append(kern[0])
    z = canonicalize_columns(Matrix.from_columns(cols))
    cert = verify_nijenhuis_eigenbasis(alg, z)
    if isinstance(cert, SpanFailure):
        raise InternalCheckError(
            f"eigenbasis of a torsion-free operator failed at pair {cert.pair}"
        )
    return cert
