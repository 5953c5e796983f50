"""Dense univariate polynomials over the integers, exact everywhere.

Coefficients are plain Python ints, so Burnside sums can exceed 64 bits
without ceremony. IntPoly values are immutable; all arithmetic returns new
objects. Degree census polynomials produced by this package have
nonnegative coefficients and no constant term, but the ring itself is
unrestricted.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator


class ExactDivisionError(ArithmeticError):
    """A coefficientwise division that had to be exact was not."""


class IntPoly:
    """Integer polynomial stored densely, index = degree."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls()

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        if degree < 0:
            raise ValueError("degree must be >= 0")
        if coeff == 0:
            return cls()
        return cls((0,) * degree + (coeff,))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coeff(self, k: int) -> int:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return 0

    def is_zero(self) -> bool:
        return not self._coeffs

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def add(self, other: "IntPoly") -> "IntPoly":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __add__ = add

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self._coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self.add(-other)

    def mul(self, other: "IntPoly") -> "IntPoly":
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPoly(out)

    __mul__ = mul

    def scale(self, c: int) -> "IntPoly":
        return IntPoly(c * x for x in self._coeffs)

    def pow(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("pow exponent must be >= 0")
        result = IntPoly.one()
        base = self
        while k:
            if k & 1:
                result = result.mul(base)
            base = base.mul(base)
            k >>= 1
        return result

    __pow__ = pow

    def eval_int(self, t: int) -> int:
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    def divide_exact_by_int(self, c: int) -> "IntPoly":
        """Coefficientwise quotient by c > 0; every coefficient must divide."""
        if c <= 0:
            raise ValueError("divisor must be a positive integer")
        out = []
        for k, x in enumerate(self._coeffs):
            q, r = divmod(x, c)
            if r != 0:
                raise ExactDivisionError(
                    f"coefficient {x} of x^{k} is not divisible by {c}"
                )
            out.append(q)
        return IntPoly(out)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("shift must be >= 0")
        if not self._coeffs:
            return IntPoly()
        return IntPoly((0,) * k + self._coeffs)

    def to_pairs(self) -> list[list]:
        """JSON form: [degree, coefficient-as-decimal-string] pairs, ascending.

        Coefficients go out as strings so arbitrarily large values survive
        consumers that parse JSON numbers as doubles.
        """
        return [[k, str(c)] for k, c in enumerate(self._coeffs) if c != 0]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable]) -> "IntPoly":
        coeffs: dict[int, int] = {}
        for k, c in pairs:
            k = int(k)
            if k < 0:
                raise ValueError("degree must be >= 0")
            coeffs[k] = coeffs.get(k, 0) + int(c)
        if not coeffs:
            return cls()
        out = [0] * (max(coeffs) + 1)
        for k, c in coeffs.items():
            out[k] = c
        return cls(out)

    def to_text(self) -> str:
        """Render ascending, coefficient 1 elided: ``x^2+2x^3``; zero is ``0``."""
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            xs = "x" if k == 1 else f"x^{k}"
            terms.append(xs if c == 1 else f"{c}{xs}")
        return "+".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"IntPoly({self.to_text()})"


_TERM_RE = re.compile(r"^(\d*)(?:(x)(?:\^(\d+))?)?$")


def parse_text(text: str) -> IntPoly:
    """Parse the ``to_text`` format. Repeated degrees are summed."""
    text = text.replace(" ", "")
    if text in ("", "0"):
        return IntPoly()
    pairs = []
    for term in text.split("+"):
        m = _TERM_RE.match(term)
        if not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"cannot parse polynomial term {term!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            degree = 0
        elif m.group(3) is None:
            degree = 1
        else:
            degree = int(m.group(3))
        pairs.append((degree, coeff))
    return IntPoly.from_pairs(pairs)


def one_plus_x_pow(k: int) -> IntPoly:
    """The block factor 1 + x^k."""
    return IntPoly.one() + IntPoly.monomial(k)
