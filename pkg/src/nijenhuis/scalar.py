"""Exact rational and Gaussian-rational scalars.

A Scalar is a pair of ``fractions.Fraction`` values (real and imaginary
part), so equality is decidable, arithmetic never rounds, and canonical
form (coprime numerator/denominator, positive denominator) is maintained
by the Fraction type itself.  Real numbers are Gaussian rationals with a
zero imaginary part; whether a structure is over R or C is tracked by the
structures that use scalars, not by the scalars.

Text format: real scalars are ``p/q`` or ``p`` (``-3/4``, ``2``); scalars
with a nonzero imaginary part are ``re+imi`` or ``re-imi`` with both parts
in the real format (``1/2+2/3i``, ``0+1i``).  For input convenience a bare
imaginary term (``i``, ``-2/3i``) is also accepted.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

__all__ = ["Scalar", "I", "ZERO", "ONE", "parse_scalar", "scalar_sort_key"]

_REAL_PART = _re.compile(r"[+-]?\d+(?:/\d+)?\Z")
_IMAG_PART = _re.compile(r"[+-]?(?:\d+(?:/\d+)?)?\Z")


class Scalar:
    """A Gaussian rational re + im*i with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("scalar division by zero")
        return Scalar(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        out = Scalar(1)
        base = self
        for _ in range(exponent):
            out = out * base
        return out

    # structure --------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        """Field norm re**2 + im**2 (a nonnegative rational)."""
        return self.re * self.re + self.im * self.im

    def sign(self) -> int:
        """Sign of a real scalar; raises for nonzero imaginary part."""
        if self.im:
            raise ValueError(f"sign of non-real scalar {self!s}")
        if self.re > 0:
            return 1
        if self.re < 0:
            return -1
        return 0

    # text -------------------------------------------------------------

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self):
        return f"Scalar('{self}')"


def _coerce(value) -> Scalar | None:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar(value)
    return None


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def parse_scalar(text: str) -> Scalar:
    """Parse the exact text format; raises ValueError on anything else."""
    s = text.strip()
    if not s:
        raise ValueError("empty scalar")
    if s.endswith("i"):
        body = s[:-1]
        split = [k for k, ch in enumerate(body) if ch in "+-" and k > 0]
        if not split:
            re_part, im_part = "0", body
        elif len(split) == 1:
            re_part, im_part = body[: split[0]], body[split[0] :]
        else:
            raise ValueError(f"malformed scalar {text!r}")
        if not _IMAG_PART.match(im_part):
            raise ValueError(f"malformed scalar {text!r}")
        if re_part != "0" and not _REAL_PART.match(re_part):
            raise ValueError(f"malformed scalar {text!r}")
        if im_part in ("", "+"):
            im = Fraction(1)
        elif im_part == "-":
            im = Fraction(-1)
        else:
            im = Fraction(im_part)
        return Scalar(Fraction(re_part), im)
    if not _REAL_PART.match(s):
        raise ValueError(f"malformed scalar {text!r}")
    return Scalar(Fraction(s))


def scalar_sort_key(s: Scalar) -> tuple[Fraction, Fraction]:
    """Deterministic order: by real part, then imaginary part."""
    return (s.re, s.im)
