"""Eigenbasis coefficient patterns and equivalence-certificate checking.

Two eigenbases are equivalent when one is the image of the other under an
algebra automorphism followed by nonzero rescaling of the individual
vectors.  This module verifies such certificates; it does not search the
automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .lie import LieAlgebra
from .linalg import Matrix
from .operators import SpanFailure, verify_nijenhuis_eigenbasis
from .scalar import Scalar

__all__ = [
    "PairPattern",
    "PatternShapeError",
    "eigenbasis_pattern",
    "sl2_pattern",
    "sl2_rescale_to",
    "is_automorphism",
    "check_equivalence_certificate",
    "commutant_obstruction",
    "scale_basis_columns",
]


class PatternShapeError(ValueError):
    """The six pair coefficients do not fit the shared-coefficient shape."""


@dataclass(frozen=True)
class PairPattern:
    """The six coefficients of a dimension-3 eigenbasis, in the cyclic pair
    order (1,2), (2,3), (3,1): pairs[k] is (alpha, beta) with
    [z_i, z_j] == alpha*z_i + beta*z_j."""

    pairs: tuple[
        tuple[Scalar, Scalar], tuple[Scalar, Scalar], tuple[Scalar, Scalar]
    ]


def eigenbasis_pattern(alg: LieAlgebra, z: Matrix) -> PairPattern:
    """Extract the cyclic coefficients; rejects non-eigenbases."""
    if alg.dim != 3:
        raise ValueError("pair patterns are defined for dimension 3")
    cert = verify_nijenhuis_eigenbasis(alg, z)
    if isinstance(cert, SpanFailure):
        raise ValueError(
            f"not a Nijenhuis eigenbasis: bracket of pair {cert.pair} escapes its span"
        )
    return PairPattern(
        pairs=(
            cert.coefficients(1, 2),
            cert.coefficients(2, 3),
            cert.coefficients(3, 1),
        )
    )


def sl2_pattern(alg: LieAlgebra, z: Matrix) -> tuple[Scalar, Scalar, Scalar]:
    """The shared-coefficient triple (A, B, C) of an sl(2)-type eigenbasis:

        [z1,z2] = B z1 + A z2,  [z2,z3] = C z2 + B z3,  [z3,z1] = A z3 + C z1

    with A, B, C all nonzero.  Raises PatternShapeError naming the broken
    sharing or the vanishing coefficient otherwise.
    """
    p12, p23, p31 = eigenbasis_pattern(alg, z).pairs
    if p12[1] != p31[0]:
        raise PatternShapeError(
            f"coefficient sharing broken: beta(1,2)={p12[1]} vs alpha(3,1)={p31[0]}"
        )
    if p12[0] != p23[1]:
        raise PatternShapeError(
            f"coefficient sharing broken: alpha(1,2)={p12[0]} vs beta(2,3)={p23[1]}"
        )
    if p23[0] != p31[1]:
        raise PatternShapeError(
            f"coefficient sharing broken: alpha(2,3)={p23[0]} vs beta(3,1)={p31[1]}"
        )
    a, b, c = p12[1], p12[0], p23[0]
    if not (a and b and c):
        raise PatternShapeError(f"vanishing coefficient in triple ({a}, {b}, {c})")
    return (a, b, c)


def sl2_rescale_to(
    pattern: Sequence[Scalar], target: Sequence[Scalar]
) -> tuple[Scalar, Scalar, Scalar]:
    """Scaling factors (A'/A, B'/B, C'/C): multiplying z_i by mu_i turns an
    (A, B, C) eigenbasis into an (A', B', C') one."""
    vals = [x if isinstance(x, Scalar) else Scalar(x) for x in (*pattern, *target)]
    if len(vals) != 6:
        raise ValueError("expected two coefficient triples")
    if not all(vals):
        raise ValueError("all six coefficients must be nonzero")
    a, b, c, ta, tb, tc = vals
    return (ta / a, tb / b, tc / c)


def scale_basis_columns(z: Matrix, mu: Sequence) -> Matrix:
    """Columns z_i scaled by mu_i."""
    factors = [x if isinstance(x, Scalar) else Scalar(x) for x in mu]
    if len(factors) != z.ncols:
        raise ValueError("one scale factor per basis vector")
    return Matrix.from_columns(
        [tuple(f * x for x in col) for f, col in zip(factors, z.columns())]
    )


def is_automorphism(alg: LieAlgebra, phi: Matrix) -> bool:
    """True iff phi is invertible and commutes with the bracket on all
    basis pairs."""
    if not phi.is_square or phi.nrows != alg.dim:
        raise ValueError("map shape does not match algebra dimension")
    if phi.det() == Scalar(0):
        return False
    cols = phi.columns()
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            if phi * alg.table[i][j] != alg.bracket(cols[i], cols[j]):
                return False
    return True


def check_equivalence_certificate(
    alg: LieAlgebra, z: Matrix, z_prime: Matrix, phi: Matrix, mu: Sequence
) -> bool:
    """Verify z'_i == mu_i * phi(z_i) for all i with phi an automorphism.

    Both bases must certify as eigenbases and every mu_i must be nonzero;
    the verdict itself (True/False) is the result.
    """
    factors = [x if isinstance(x, Scalar) else Scalar(x) for x in mu]
    if len(factors) != alg.dim:
        raise ValueError("one scale factor per basis vector")
    if not all(factors):
        raise ValueError("scale factors must be nonzero")
    for basis, name in ((z, "Z"), (z_prime, "Z'")):
        got = verify_nijenhuis_eigenbasis(alg, basis)
        if isinstance(got, SpanFailure):
            raise ValueError(f"{name} is not a Nijenhuis eigenbasis (pair {got.pair})")
    if not is_automorphism(alg, phi):
        return False
    for i, f in enumerate(factors):
        mapped = tuple(f * x for x in (phi * z.col(i)))
        if mapped != z_prime.col(i):
            return False
    return True


def commutant_obstruction(alg: LieAlgebra) -> bool:
    """True iff the derived subalgebra is proper, the obstruction that
    rules out all eigenbases being equivalent."""
    return alg.derived_subalgebra_dim() < alg.dim
