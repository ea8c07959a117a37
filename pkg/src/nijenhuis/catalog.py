"""Built-in catalog: every real and complex 3-dimensional Lie algebra (the
Bianchi list), reference eigenbases for the admitting entries, and the
higher-dimensional example operators (gl(n) with a pair of involutions,
one-dimensional central extensions).

Real families a3.1 .. a3.8; complex families b3.1 .. b3.6.  Over C the
compact and split rank-3 entries coincide (b3.3) and the two parametric
real families merge into the single family b3.6.  Parameters live in the
scalar field: a rational a for a3.7, rational b for a3.8, Gaussian
rational a for b3.6.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .lie import LieAlgebra
from .linalg import Matrix
from .scalar import I, ONE, ZERO, Scalar

__all__ = [
    "CatalogId",
    "REAL_FAMILIES",
    "COMPLEX_FAMILIES",
    "PARAMETRIC",
    "BIANCHI",
    "make",
    "algebra",
    "real_algebra",
    "complex_algebra",
    "example_eigenbasis",
    "gl_algebra",
    "gl_example_operator",
    "central_extension_operator",
    "real_instances",
    "complex_instances",
    "REAL_PARAMETER_SAMPLES",
    "COMPLEX_PARAMETER_SAMPLES",
]

REAL_FAMILIES = ("a3.1", "a3.2", "a3.3", "a3.4", "a3.5", "a3.6", "a3.7", "a3.8")
COMPLEX_FAMILIES = ("b3.1", "b3.2", "b3.3", "b3.4", "b3.5", "b3.6")

# parameter letter per parametric family
PARAMETRIC = {"a3.7": "a", "a3.8": "b", "b3.6": "a"}

# Roman-numeral aliases (Bianchi types)
BIANCHI = {
    "a3.1": ("I",),
    "a3.2": ("II",),
    "a3.3": ("IX",),
    "a3.4": ("VIII",),
    "a3.5": ("V",),
    "a3.6": ("IV",),
    "a3.7": ("VII",),
    "a3.8": ("VI",),
    "b3.1": ("I",),
    "b3.2": ("II",),
    "b3.3": ("IX", "VIII"),
    "b3.4": ("V",),
    "b3.5": ("IV",),
    "b3.6": ("VII", "VI"),
}

REAL_PARAMETER_SAMPLES = (Scalar(-1), Scalar(0), Scalar(1), Scalar(2))
COMPLEX_PARAMETER_SAMPLES = (Scalar(0), Scalar(1), I, Scalar(1, 1))


@dataclass(frozen=True)
class CatalogId:
    family: str
    parameter: Scalar | None = None

    def __post_init__(self):
        if self.family not in REAL_FAMILIES + COMPLEX_FAMILIES:
            raise ValueError(f"unknown catalog family {self.family!r}")
        if self.family in PARAMETRIC:
            if self.parameter is None:
                raise ValueError(
                    f"family {self.family} needs parameter {PARAMETRIC[self.family]}"
                )
            if self.family.startswith("a") and self.parameter.im:
                raise ValueError(f"family {self.family} takes a real parameter")
        elif self.parameter is not None:
            raise ValueError(f"family {self.family} takes no parameter")

    @property
    def is_real(self) -> bool:
        return self.family.startswith("a")

    def label(self) -> str:
        if self.parameter is None:
            return self.family
        return f"{self.family}({PARAMETRIC[self.family]}={self.parameter})"


def make(family: str, parameter=None) -> CatalogId:
    if parameter is not None and not isinstance(parameter, Scalar):
        parameter = Scalar(parameter)
    return CatalogId(family=family, parameter=parameter)


def _brackets(family: str, p: Scalar | None):
    e1 = (1, 0, 0)
    if family in ("a3.1", "b3.1"):
        return {}
    if family in ("a3.2", "b3.2"):
        return {(2, 3): e1}
    if family in ("a3.3", "b3.3"):
        # [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
        return {(1, 2): (0, 0, 1), (2, 3): e1, (1, 3): (0, -1, 0)}
    if family == "a3.4":
        # [e1,e2]=-e3, [e2,e3]=e1, [e3,e1]=e2
        return {(1, 2): (0, 0, -1), (2, 3): e1, (1, 3): (0, -1, 0)}
    if family in ("a3.5", "b3.4"):
        # [e1,e2]=e2, [e3,e1]=-e3
        return {(1, 2): (0, 1, 0), (1, 3): (0, 0, 1)}
    if family in ("a3.6", "b3.5"):
        # [e1,e2]=e2+e3, [e3,e1]=-e3
        return {(1, 2): (0, 1, 1), (1, 3): (0, 0, 1)}
    if family in ("a3.7", "b3.6"):
        # [e1,e2]=p*e2+e3, [e3,e1]=e2-p*e3
        return {(1, 2): (ZERO, p, ONE), (1, 3): (ZERO, -ONE, p)}
    if family == "a3.8":
        # [e1,e2]=p*e2-e3, [e3,e1]=e2-p*e3
        return {(1, 2): (ZERO, p, -ONE), (1, 3): (ZERO, -ONE, p)}
    raise ValueError(f"unknown catalog family {family!r}")


def real_algebra(cid: CatalogId) -> LieAlgebra:
    if not cid.is_real:
        raise ValueError(f"{cid.family} is not a real catalog family")
    return LieAlgebra.from_brackets(3, "R", _brackets(cid.family, cid.parameter))


def complex_algebra(cid: CatalogId) -> LieAlgebra:
    if cid.is_real:
        raise ValueError(f"{cid.family} is not a complex catalog family")
    return LieAlgebra.from_brackets(3, "C", _brackets(cid.family, cid.parameter))


def algebra(cid: CatalogId) -> LieAlgebra:
    return real_algebra(cid) if cid.is_real else complex_algebra(cid)


# Reference eigenbases for the admitting entries, columns in the catalog
# basis.  a3.5 and b3.4 accept any basis, so they map to the identity.
# b3.3 admits no real eigenbasis at all (its form is definite over R), so
# its example is genuinely Gaussian; it is the pipeline's height-1 output.
_EXAMPLE_BASES = {
    "a3.4": ((-1, 1, 1), (1, 1, -1), (2, 0, 0)),
    "a3.8": ((1, 0, 1), (1, 1, 0), (0, 1, 1)),
    "b3.6": ((1, 0, 1), (1, 1, 0), (0, 1, 1)),
    "b3.3": ((ONE, ONE, I), (ONE, I, -ONE), (ONE, I, I)),
    "a3.5": None,
    "b3.4": None,
}


def example_eigenbasis(cid: CatalogId) -> Matrix:
    """The catalog's reference Nijenhuis eigenbasis for an admitting family
    (identity for the families where any basis works)."""
    if cid.family not in _EXAMPLE_BASES:
        raise ValueError(f"{cid.family} admits no Nijenhuis eigenbasis")
    cols = _EXAMPLE_BASES[cid.family]
    if cols is None:
        return Matrix.identity(3)
    return Matrix.from_columns(cols)


def real_instances(parameters: Sequence[Scalar] = REAL_PARAMETER_SAMPLES):
    """Every real family, parametric ones at the given sample values."""
    out = []
    for fam in REAL_FAMILIES:
        if fam in PARAMETRIC:
            for p in parameters:
                cid = make(fam, p)
                out.append((cid, real_algebra(cid)))
        else:
            cid = make(fam)
            out.append((cid, real_algebra(cid)))
    return out


def complex_instances(parameters: Sequence[Scalar] = COMPLEX_PARAMETER_SAMPLES):
    out = []
    for fam in COMPLEX_FAMILIES:
        if fam in PARAMETRIC:
            for p in parameters:
                cid = make(fam, p)
                out.append((cid, complex_algebra(cid)))
        else:
            cid = make(fam)
            out.append((cid, complex_algebra(cid)))
    return out


# gl(n) fixtures -----------------------------------------------------------


@lru_cache(maxsize=None)
def gl_algebra(n: int, field: str = "R") -> LieAlgebra:
    """gl(n) on the elementary-matrix basis E11, E12, ..., Enn (row major),
    with generated commutator structure constants."""
    dim = n * n

    def idx(a: int, b: int) -> int:
        return a * n + b

    table = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    i, j = idx(a, b), idx(c, d)
                    vec = table[i][j]
                    # [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
                    if b == c:
                        vec[idx(a, d)] = vec[idx(a, d)] + ONE
                    if d == a:
                        vec[idx(c, b)] = vec[idx(c, b)] - ONE
    return LieAlgebra(dim, field, table, check=True)


def _flatten(m: Matrix) -> list[Scalar]:
    return [x for row in m.rows for x in row]


def gl_example_operator(a: Matrix, b: Matrix) -> tuple[LieAlgebra, Matrix]:
    """The operator X -> AXB + BAX + BX - XB on gl(n), for involutions
    A^2 = B^2 = Id, expressed on the elementary-matrix basis.

    Returns the gl(n) algebra together with the n^2 x n^2 operator matrix.
    """
    if not (a.is_square and b.is_square and a.nrows == b.nrows):
        raise ValueError("A and B must be square matrices of the same size")
    n = a.nrows
    ident = Matrix.identity(n)
    if a * a != ident or b * b != ident:
        raise ValueError("A and B must be involutions (A^2 = B^2 = Id)")
    field = "R"
    if any(x.im for m in (a, b) for row in m.rows for x in row):
        field = "C"
    alg = gl_algebra(n, field)
    ba = b * a
    cols = []
    for p in range(n):
        for q in range(n):
            x = Matrix([[ONE if (i, j) == (p, q) else ZERO for j in range(n)] for i in range(n)])
            image = a * x * b + ba * x + b * x - x * b
            cols.append(_flatten(image))
    return alg, Matrix.from_columns(cols)


def central_extension_operator(
    alg: LieAlgebra, covector: Sequence, scale
) -> tuple[LieAlgebra, Matrix]:
    """One-dimensional central extension of alg with the nilpotent operator
    sending x to covector(x) * scale * (central element) and the central
    element to zero.  The operator squares to zero."""
    if not isinstance(scale, Scalar):
        scale = Scalar(scale)
    if not scale:
        raise ValueError("scale must be nonzero")
    cov = [x if isinstance(x, Scalar) else Scalar(x) for x in covector]
    if len(cov) != alg.dim:
        raise ValueError("covector length does not match algebra dimension")
    n = alg.dim
    m = n + 1
    table = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
    for i in range(n):
        for j in range(n):
            vec = alg.table[i][j]
            for k in range(n):
                table[i][j][k] = vec[k]
    field = alg.field
    if field == "R" and (scale.im or any(c.im for c in cov)):
        field = "C"
    ext = LieAlgebra(m, field, table, check=False)
    rows = [[ZERO] * m for _ in range(m)]
    for i in range(n):
        rows[n][i] = cov[i] * scale
    return ext, Matrix(rows)
