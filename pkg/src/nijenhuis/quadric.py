"""The 2-dimensional-subalgebra quadratic form of a 3-dimensional Lie
algebra, its classification, and the eigenbasis existence pipeline.

For independent vectors x, y with normal M = cross(x, y), the pair spans a
subalgebra exactly when M is an isotropic vector of the form built here
from the structure constants.  A Nijenhuis eigenbasis therefore exists iff
the form has three linearly independent isotropic vectors, which is read
off the rank and (over R) the signature:

    rank 0                zero form      every vector works       admits
    rank 1                plane of solutions                      no
    rank 2, definite      line of solutions                       no
    rank 2, signs (1,1)   two intersecting planes                 admits
    rank 3, definite      only the origin                         no
    rank 3, signs (2,1)   cone                                    admits
    over C                rank 0, 2, 3 admit; rank 1 does not

The existence verdict is exact; the witness search is height-bounded and
reports honestly when a form admits a triple but none exists with small
integer coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InternalCheckError
from .lie import LieAlgebra
from .linalg import Matrix, Vector, adjugate, canonicalize_columns, congruence_diagonalize
from .operators import EigenbasisCertificate, SpanFailure, verify_nijenhuis_eigenbasis
from .scalar import ONE, ZERO, Scalar

__all__ = [
    "QuadraticForm3",
    "QuadricClassification",
    "EigenbasisSearch",
    "subalgebra_form",
    "classify_form",
    "admits_regular_semisimple",
    "isotropic_triple",
    "eigenbasis_from_isotropic_triple",
    "find_eigenbasis",
    "noncollinear_triple_check",
]


@dataclass(frozen=True)
class QuadraticForm3:
    """Symmetric 3x3 matrix; off-diagonal entries carry half the printed
    cross coefficients, so evaluate() reproduces the expanded form."""

    matrix: Matrix

    def evaluate(self, v) -> Scalar:
        v1, v2, v3 = v
        q = self.matrix
        return (
            q[0, 0] * v1 * v1
            + q[1, 1] * v2 * v2
            + q[2, 2] * v3 * v3
            + (q[0, 1] * v1 * v2 + q[0, 2] * v1 * v3 + q[1, 2] * v2 * v3) * 2
        )

    def is_zero(self) -> bool:
        return all(not x for row in self.matrix.rows for x in row)


@dataclass(frozen=True)
class QuadricClassification:
    rank: int
    signature: tuple[int, int] | None  # (positive, negative), real field only
    admits: bool
    reason: str


@dataclass(frozen=True)
class EigenbasisSearch:
    """Outcome of the full pipeline for one algebra."""

    classification: QuadricClassification
    triple: tuple[Vector, Vector, Vector] | None
    certificate: EigenbasisCertificate | None
    height: int

    @property
    def status(self) -> str:
        if self.certificate is not None:
            return "certificate"
        if not self.classification.admits:
            return "does-not-admit"
        return "no-witness-in-box"


def subalgebra_form(alg: LieAlgebra) -> QuadraticForm3:
    """Assemble the form from the structure constants c^k_{ij}."""
    if alg.dim != 3:
        raise ValueError("the subalgebra form is defined for dimension 3")

    def c(k: int, i: int, j: int) -> Scalar:
        return alg.table[i - 1][j - 1][k - 1]

    half = Scalar(1) / 2
    q11 = c(1, 2, 3)
    q22 = c(2, 3, 1)
    q33 = c(3, 1, 2)
    q12 = (c(1, 3, 1) + c(2, 2, 3)) * half
    q23 = (c(2, 1, 2) + c(3, 3, 1)) * half
    q13 = (c(1, 1, 2) + c(3, 2, 3)) * half
    return QuadraticForm3(
        Matrix([[q11, q12, q13], [q12, q22, q23], [q13, q23, q33]])
    )


def classify_form(form: QuadraticForm3, field: str) -> QuadricClassification:
    """Decide whether three linearly independent isotropic vectors exist.

    Rank and signature come from exact congruence diagonalization; the
    admit table is the solution-set geometry documented in the module
    docstring.  Signature is reported only over R, where it is a
    congruence invariant.
    """
    if field not in ("R", "C"):
        raise ValueError(f"field must be 'R' or 'C', not {field!r}")
    d, _ = congruence_diagonalize(form.matrix)
    diag = [d[i, i] for i in range(3)]
    rank = sum(1 for x in diag if x)
    if field == "C":
        admits = rank != 1
        reason = {0: "zero-form", 1: "plane", 2: "two-planes", 3: "cone"}[rank]
        return QuadricClassification(rank=rank, signature=None, admits=admits, reason=reason)
    signs = [x.sign() for x in diag]
    pos = signs.count(1)
    neg = signs.count(-1)
    if rank == 0:
        admits, reason = True, "zero-form"
    elif rank == 1:
        admits, reason = False, "plane"
    elif rank == 2:
        if pos == 1 and neg == 1:
            admits, reason = True, "two-planes"
        else:
            admits, reason = False, "line"
    else:
        if pos == 3 or neg == 3:
            admits, reason = False, "definite"
        else:
            admits, reason = True, "cone"
    return QuadricClassification(rank=rank, signature=(pos, neg), admits=admits, reason=reason)


def admits_regular_semisimple(alg: LieAlgebra) -> QuadricClassification:
    """Existence verdict for the algebra itself (Abelian input yields the
    zero form and admits trivially)."""
    return classify_form(subalgebra_form(alg), alg.field)


def _coordinate_values(field: str, height: int) -> list[Scalar]:
    # magnitude-then-sign order keeps small witnesses early and the
    # search deterministic
    mts = [0]
    for k in range(1, height + 1):
        mts.extend((k, -k))
    if field == "R":
        return [Scalar(a) for a in mts]
    return [Scalar(a, b) for a in mts for b in mts]


def isotropic_triple(
    form: QuadraticForm3, field: str, height: int
) -> tuple[Vector, Vector, Vector] | None:
    """Three linearly independent isotropic vectors with integer (real) or
    Gaussian-integer (complex) coordinates of absolute part <= height.

    When the classification already rules a triple out, returns None
    without searching.  The box is enumerated lexicographically in
    magnitude-then-sign coordinate order and the first completable triple
    is returned, so the output is deterministic.  Not finding a witness is
    a value, not an error.
    """
    if height < 1:
        raise ValueError("height must be positive")
    if not classify_form(form, field).admits:
        return None
    values = _coordinate_values(field, height)
    found: list[Vector] = []
    for v1, v2, v3 in product(values, repeat=3):
        if not (v1 or v2 or v3):
            continue
        vec = (v1, v2, v3)
        if form.evaluate(vec):
            continue
        for a in range(len(found)):
            va = found[a]
            for b in range(a + 1, len(found)):
                if Matrix([va, found[b], vec]).det():
                    return (va, found[b], vec)
        found.append(vec)
    return None


def eigenbasis_from_isotropic_triple(ms) -> Matrix:
    """Recover a basis whose pair spans have the given normals.

    The adjugate of the matrix with rows M^1, M^2, M^3 has columns
    z_1 = M^2 x M^3 and cyclic, so cross(z_i, z_j) is proportional to the
    remaining M^k.  Columns are canonicalized afterwards.
    """
    rows = Matrix(list(ms))
    if rows.det() == ZERO:
        raise ValueError("isotropic triple must be linearly independent")
    return canonicalize_columns(adjugate(rows))


def find_eigenbasis(alg: LieAlgebra, height: int = 5) -> EigenbasisSearch:
    """Full pipeline: form, classification, witness search, basis
    recovery, certification."""
    if alg.dim != 3:
        raise ValueError("the eigenbasis pipeline is defined for dimension 3")
    form = subalgebra_form(alg)
    cls = classify_form(form, alg.field)
    if not cls.admits:
        return EigenbasisSearch(classification=cls, triple=None, certificate=None, height=height)
    triple = isotropic_triple(form, alg.field, height)
    if triple is None:
        return EigenbasisSearch(classification=cls, triple=None, certificate=None, height=height)
    z = eigenbasis_from_isotropic_triple(triple)
    cert = verify_nijenhuis_eigenbasis(alg, z)
    if isinstance(cert, SpanFailure):
        raise InternalCheckError(
            f"pipeline basis failed certification at pair {cert.pair}"
        )
    return EigenbasisSearch(classification=cls, triple=triple, certificate=cert, height=height)


def noncollinear_triple_check(ms) -> bool:
    """True iff the three nonzero vectors give pairwise distinct projective
    points not on a common projective line, i.e. det != 0."""
    vecs = list(ms)
    if len(vecs) != 3:
        raise ValueError("expected exactly three vectors")
    m = Matrix(vecs)
    if any(not any(row) for row in m.rows):
        raise ValueError("projective points must be nonzero vectors")
    return m.det() != ZERO
