"""Exact univariate polynomials over arbitrary-precision integers in q."""

from __future__ import annotations

import re
from typing import Iterable, Mapping


class NonzeroRemainder(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


_TERM_RE = re.compile(
    r"\s*([+-]?)\s*(\d+)?\s*(\*?\s*q(?:\s*\^\s*(\d+))?)?\s*"
)


class IntPoly:
    """Polynomial in q, coefficients stored ascending with no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        terms = list(coeffs)
        while terms and terms[-1] == 0:
            terms.pop()
        self.coeffs = tuple(int(c) for c in terms)

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "IntPoly":
        if not terms:
            return cls()
        top = max(terms)
        out = [0] * (top + 1)
        for power, coeff in terms.items():
            if power < 0:
                raise ValueError("negative power %d" % power)
            out[power] += coeff
        return cls(out)

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Read expressions like "q^9 - 3q^7 + 15q^6 - 1" (implicit * allowed)."""
        terms: dict[int, int] = {}
        pos = 0
        seen = False
        while pos < len(text):
            m = _TERM_RE.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError("cannot parse %r at offset %d" % (text, pos))
            sign, digits, qpart, power = m.groups()
            if digits is None and qpart is None:
                raise ValueError("empty term in %r at offset %d" % (text, pos))
            if seen and not sign:
                raise ValueError("missing operator in %r at offset %d"
                                 % (text, pos))
            c = int(digits) if digits is not None else 1
            if sign == "-":
                c = -c
            if qpart is None:
                p = 0
            elif power is None:
                p = 1
            else:
                p = int(power)
            terms[p] = terms.get(p, 0) + c
            seen = True
            pos = m.end()
        if not seen:
            raise ValueError("empty polynomial text %r" % text)
        return cls.from_terms(terms)

    # -- ring structure -------------------------------------------------

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        if not isinstance(other, (IntPoly, int)):
            return NotImplemented
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        if not isinstance(other, (IntPoly, int)):
            return NotImplemented
        return self + (-_coerce(other))

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if not isinstance(other, (IntPoly, int)):
            return NotImplemented
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other: "IntPoly | int") -> "IntPoly":
        return _coerce(other) - self

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative exponent")
        out = IntPoly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def __call__(self, n: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * n + c
        return out

    def __repr__(self) -> str:
        return "IntPoly.parse(%r)" % str(self)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                qs = "q" if power == 1 else "q^%d" % power
                body = qs if mag == 1 else "%d%s" % (mag, qs)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text


def _coerce(value: "IntPoly | int") -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly([value])
    raise TypeError("expected IntPoly or int, got %r" % type(value))


ZERO = IntPoly()
ONE = IntPoly([1])
Q = IntPoly([0, 1])


def poly_arith(op: str, p: IntPoly, r: IntPoly) -> IntPoly:
    if op == "add":
        return p + r
    if op == "sub":
        return p - r
    if op == "mul":
        return p * r
    raise ValueError("unknown op %r" % op)


def poly_div_exact(p: IntPoly, d: IntPoly) -> IntPoly:
    """Quotient p/d when the division is exact over Z[q]."""
    if not d:
        raise ZeroDivisionError("division by zero polynomial")
    if not p:
        return IntPoly()
    rem = list(p.coeffs)
    dc = d.coeffs
    dd = len(dc) - 1
    lead = dc[-1]
    if len(rem) - 1 < dd:
        raise NonzeroRemainder("degree of %s below divisor %s" % (p, d))
    out = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        f, back = divmod(c, lead)
        if back:
            raise NonzeroRemainder("leading coefficient %d does not divide %d" % (lead, c))
        out[i - dd] = f
        for j, dj in enumerate(dc):
            rem[i - dd + j] -= f * dj
    if any(rem):
        raise NonzeroRemainder("%s not divisible by %s" % (p, d))
    return IntPoly(out)


def poly_eval(p: IntPoly, n: int) -> int:
    return p(n)


def poly_is_palindromic(p: IntPoly, d: int) -> bool:
    """True iff q^d * p(1/q) equals p; d must be at least deg(p)."""
    if d < p.degree:
        raise ValueError("reference degree %d below degree %d" % (d, p.degree))
    return all(p.coefficient(i) == p.coefficient(d - i) for i in range(d + 1))
