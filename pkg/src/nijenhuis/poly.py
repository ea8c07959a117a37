"""Exact univariate polynomials over Scalar.

Covers exactly what the rest of the package needs: gcd-based squarefree
testing, Sturm-chain real root counting, and Gaussian-rational root
extraction for in-field spectra.  No factorization beyond that.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm

from .scalar import ONE, ZERO, Scalar, scalar_sort_key

__all__ = [
    "Polynomial",
    "poly_gcd",
    "is_squarefree",
    "count_real_roots",
    "rational_roots",
]


class Polynomial:
    """Coefficient list, lowest degree first, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [c if isinstance(c, Scalar) else Scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_roots(cls, roots) -> "Polynomial":
        out = cls([ONE])
        for r in roots:
            r = r if isinstance(r, Scalar) else Scalar(r)
            out = out * cls([-r, ONE])
        return out

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Scalar:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x: Scalar) -> Scalar:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial([c * k for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self.leading
        return Polynomial([c / lead for c in self.coeffs])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Polynomial(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Scalar, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return Polynomial([])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = other.degree
        inv_lead = ONE / other.leading
        quot = [ZERO] * max(0, len(rem) - dn)
        while len(rem) - 1 >= dn and rem:
            k = len(rem) - 1 - dn
            f = rem[-1] * inv_lead
            quot[k] = f
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - f * b
            while rem and not rem[-1]:
                rem.pop()
        return Polynomial(quot), Polynomial(rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def is_squarefree(p: Polynomial) -> bool:
    """True iff gcd(p, p') is constant.  Rejects the zero polynomial."""
    if p.is_zero:
        raise ValueError("squarefree test on the zero polynomial")
    return poly_gcd(p, p.derivative()).degree <= 0


def _require_real(p: Polynomial) -> None:
    if any(c.im for c in p.coeffs):
        raise ValueError("polynomial has non-real coefficients")


def count_real_roots(p: Polynomial) -> int:
    """Number of distinct real roots, by Sturm sign variations at -inf/+inf.

    The canonical chain counts distinct roots even when p has multiple
    roots.  Requires real-rational coefficients; rejects the zero
    polynomial.
    """
    if p.is_zero:
        raise ValueError("root count of the zero polynomial")
    _require_real(p)
    if p.degree == 0:
        return 0
    chain = [p, p.derivative()]
    while True:
        rem = chain[-2] % chain[-1]
        if rem.is_zero:
            break
        chain.append(-rem)

    def variations(at_plus_infinity: bool) -> int:
        signs = []
        for q in chain:
            s = q.leading.sign()
            if not at_plus_infinity and q.degree % 2 == 1:
                s = -s
            if s:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return variations(False) - variations(True)


def _gaussian_divides(x: int, y: int, a: int, b: int) -> bool:
    # (a+bi) / (x+yi) is a Gaussian integer?
    n = x * x + y * y
    return (a * x + b * y) % n == 0 and (b * x - a * y) % n == 0


def _gaussian_divisors(a: int, b: int):
    """All Gaussian-integer divisors of a+bi (including units and associates)."""
    n = a * a + b * b
    if n == 0:
        raise ValueError("divisors of zero")
    bound = isqrt(n)
    for x in range(-bound, bound + 1):
        xx = x * x
        for y in range(-bound, bound + 1):
            if x == 0 and y == 0:
                continue
            m = xx + y * y
            if m > n or n % m:
                continue
            if _gaussian_divides(x, y, a, b):
                yield (x, y)


def rational_roots(p: Polynomial) -> list[Scalar]:
    """All roots of p lying in Q(i), exactly, sorted by (re, im).

    Intended for the desk-scale spectra this package certifies; the
    candidate set comes from Gaussian-integer divisors of the cleared
    constant and leading coefficients.
    """
    if p.is_zero:
        raise ValueError("roots of the zero polynomial")
    coeffs = list(p.coeffs)
    roots: list[Scalar] = []
    if not coeffs[0]:
        roots.append(ZERO)
        while coeffs and not coeffs[0]:
            coeffs.pop(0)
    if len(coeffs) <= 1:
        return roots
    den = 1
    for c in coeffs:
        den = lcm(den, c.re.denominator, c.im.denominator)
    ints = [(int(c.re * den), int(c.im * den)) for c in coeffs]
    c0, cn = ints[0], ints[-1]
    seen = set()
    body = Polynomial(coeffs)
    for u in _gaussian_divisors(*c0):
        for v in _gaussian_divisors(*cn):
            lam = Scalar(u[0], u[1]) / Scalar(v[0], v[1])
            key = (lam.re, lam.im)
            if key in seen:
                continue
            seen.add(key)
            if not body(lam):
                roots.append(lam)
    roots.sort(key=scalar_sort_key)
    return roots
