"""Exact arithmetic in the cyclotomic field Q(z), z a primitive 8th root of unity.

Elements are stored as ``(a0, a1, a2, a3) / d`` with integer numerators and a
positive common denominator, meaning ``(a0 + a1 z + a2 z^2 + a3 z^3) / d``
under the relation ``z^4 = -1``.  The field contains ``i = z^2``,
``sqrt(2) = z - z^3`` and ``sqrt(-2) = i sqrt(2)``.

:class:`ParamPoly` adds formal parameters ``u`` and ``v`` on top of this
field; it is used when structure constants are to be kept symbolic.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Union

__all__ = [
    "Scalar",
    "ParamPoly",
    "ScalarParseError",
    "ZERO",
    "ONE",
    "ZETA",
    "I",
    "SQRT2",
    "SQRTM2",
    "coerce",
    "is_scalar",
]


class ScalarParseError(ValueError):
    pass


def _norm(c: tuple[int, int, int, int], d: int) -> tuple[tuple[int, int, int, int], int]:
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    if d < 0:
        c = (-c[0], -c[1], -c[2], -c[3])
        d = -d
    g = gcd(gcd(gcd(c[0], c[1]), gcd(c[2], c[3])), d)
    if g > 1:
        c = (c[0] // g, c[1] // g, c[2] // g, c[3] // g)
        d //= g
    if c == (0, 0, 0, 0):
        d = 1
    return c, d


class Scalar:
    """An element of Q(z) with z^4 = -1.

    >>> SQRT2 * SQRT2
    Scalar('2')
    >>> I * I == -1
    True
    """

    __slots__ = ("c", "d", "_hash")

    def __init__(self, c=(0, 0, 0, 0), d: int = 1):
        if isinstance(c, int):
            c = (c, 0, 0, 0)
        self.c, self.d = _norm(tuple(c), d)
        self._hash = None

    @classmethod
    def _raw(cls, c, d):
        s = object.__new__(cls)
        s.c, s.d = _norm(c, d)
        s._hash = None
        return s

    @classmethod
    def from_fraction(cls, q: Fraction | int) -> "Scalar":
        q = Fraction(q)
        return cls._raw((q.numerator, 0, 0, 0), q.denominator)

    @classmethod
    def from_coeffs(cls, coeffs) -> "Scalar":
        """Build from four rationals (the coefficients of 1, z, z^2, z^3)."""
        fs = [Fraction(x) for x in coeffs]
        if len(fs) != 4:
            raise ValueError("need exactly four coefficients")
        d = 1
        for f in fs:
            d = d * f.denominator // gcd(d, f.denominator)
        return cls._raw(tuple(int(f * d) for f in fs), d)

    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(a, self.d) for a in self.c)

    def is_rational(self) -> bool:
        return self.c[1] == self.c[2] == self.c[3] == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.c[0], self.d)

    # -- arithmetic ---------------------------------------------------------

    def __bool__(self) -> bool:
        return self.c != (0, 0, 0, 0)

    def __neg__(self) -> "Scalar":
        a = self.c
        return Scalar._raw((-a[0], -a[1], -a[2], -a[3]), self.d)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, Scalar):
            a, b = self.c, other.c
            if self.d == other.d:
                return Scalar._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]), self.d)
            p, q = self.d, other.d
            return Scalar._raw(
                (a[0] * q + b[0] * p, a[1] * q + b[1] * p, a[2] * q + b[2] * p, a[3] * q + b[3] * p),
                p * q,
            )
        if isinstance(other, (int, Fraction)):
            return self + Scalar.from_fraction(other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self + (-coerce(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar.from_fraction(other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Scalar):
            a0, a1, a2, a3 = self.c
            b0, b1, b2, b3 = other.c
            c = (
                a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
                a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
                a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
                a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            )
            return Scalar._raw(c, self.d * other.d)
        if isinstance(other, int):
            a = self.c
            return Scalar._raw((a[0] * other, a[1] * other, a[2] * other, a[3] * other), self.d)
        if isinstance(other, Fraction):
            return self * Scalar.from_fraction(other)
        return NotImplemented

    __rmul__ = __mul__

    def galois(self, k: int) -> "Scalar":
        """Apply the automorphism z -> z^k (k odd)."""
        if k % 2 == 0:
            raise ValueError("k must be odd")
        out = [0, 0, 0, 0]
        for j, a in enumerate(self.c):
            e = (j * k) % 8
            if e >= 4:
                out[e - 4] -= a
            else:
                out[e] += a
        return Scalar._raw(tuple(out), self.d)

    def conjugate(self) -> "Scalar":
        return self.galois(7)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        p = self * self.galois(3) * self.galois(5) * self.galois(7)
        return p.to_fraction()

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Scalar._raw((self.d, 0, 0, 0), self.c[0])
        rest = self.galois(3) * self.galois(5) * self.galois(7)
        return rest * Scalar.from_fraction(1 / (self * rest).to_fraction())

    def __truediv__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self * coerce(other).inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar.from_fraction(other) * self.inverse()
        return NotImplemented

    def __pow__(self, k: int) -> "Scalar":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = ONE
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.c == other.c and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.c[0], self.d) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.c, self.d))
        return self._hash

    def sort_key(self):
        return self.coeffs()

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        parts = []
        for j, a in enumerate(self.c):
            if a == 0:
                continue
            q = Fraction(a, self.d)
            mag = abs(q)
            mono = ("", "z", "z^2", "z^3")[j]
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if q < 0 else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"

    def is_simple(self) -> bool:
        """True when the printed form needs no parentheses as a factor."""
        return sum(1 for a in self.c if a) <= 1

    _TERM = re.compile(r"^(\d+(?:/\d+)?)?\s*(\*?\s*z(?:\s*\^\s*(\d+))?)?$")

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse the textual form produced by ``str``, e.g. ``1/2 - 3*z^3``."""
        s = text.replace("−", "-").strip()
        if not s:
            raise ScalarParseError("empty scalar")
        tokens = re.split(r"([+-])", s)
        total = ZERO
        sign = 1
        pending = False
        for tok in tokens:
            t = tok.strip()
            if t in ("+", "-"):
                if t == "-":
                    sign = -sign
                pending = True
                continue
            if not t:
                continue
            m = cls._TERM.match(t)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise ScalarParseError(f"bad scalar term {t!r}")
            coef = Fraction(m.group(1)) if m.group(1) else Fraction(1)
            power = 0
            if m.group(2):
                if m.group(2).lstrip().startswith("*") and m.group(1) is None:
                    raise ScalarParseError(f"bad scalar term {t!r}")
                power = int(m.group(3)) if m.group(3) else 1
            total = total + ZETA ** power * Scalar.from_fraction(sign * coef)
            sign = 1
            pending = False
        if pending:
            raise ScalarParseError("dangling sign")
        return total


ZERO = Scalar._raw((0, 0, 0, 0), 1)
ONE = Scalar._raw((1, 0, 0, 0), 1)
ZETA = Scalar._raw((0, 1, 0, 0), 1)
I = Scalar._raw((0, 0, 1, 0), 1)
SQRT2 = Scalar._raw((0, 1, 0, -1), 1)
SQRTM2 = I * SQRT2


class ParamPoly:
    """A polynomial in formal parameters u, v with coefficients in Q(z).

    Stored as ``{(i, j): Scalar}`` for ``u^i v^j``.  Division is only
    supported by nonzero constants.
    """

    __slots__ = ("t",)

    def __init__(self, terms=None):
        self.t = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c) -> "ParamPoly":
        return cls({(0, 0): coerce(c)})

    @classmethod
    def u(cls) -> "ParamPoly":
        return cls({(1, 0): ONE})

    @classmethod
    def v(cls) -> "ParamPoly":
        return cls({(0, 1): ONE})

    def __bool__(self) -> bool:
        return bool(self.t)

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.t)

    def constant(self) -> Scalar:
        return self.t.get((0, 0), ZERO)

    def __neg__(self):
        return ParamPoly({k: -c for k, c in self.t.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            other = ParamPoly.const(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        out = dict(self.t)
        for k, c in other.t.items():
            out[k] = out[k] + c if k in out else c
        return ParamPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (Scalar, int, Fraction, ParamPoly)):
            return self + (-as_param(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return ParamPoly.const(other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            c = coerce(other)
            return ParamPoly({k: v * c for k, v in self.t.items()})
        if not isinstance(other, ParamPoly):
            return NotImplemented
        out: dict = {}
        for (a, b), c in self.t.items():
            for (p, q), d in other.t.items():
                k = (a + p, b + q)
                out[k] = out[k] + c * d if k in out else c * d
        return ParamPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ParamPoly):
            if not other.is_constant() or not other:
                raise ZeroDivisionError("division by a non-constant parameter polynomial")
            other = other.constant()
        if isinstance(other, (Scalar, int, Fraction)):
            inv = coerce(other).inverse()
            return self * inv
        return NotImplemented

    def __rtruediv__(self, other):
        return as_param(other) / self

    def inverse(self):
        return ParamPoly.const(ONE) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ParamPoly.const(ONE)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (Scalar, int, Fraction)):
            other = ParamPoly.const(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.t == other.t

    def __hash__(self) -> int:
        return hash(frozenset(self.t.items()))

    def sort_key(self):
        return tuple(sorted((k, c.coeffs()) for k, c in self.t.items()))

    def evaluate(self, u, v) -> Scalar:
        out = ZERO
        for (a, b), c in self.t.items():
            out = out + c * coerce(u) ** a * coerce(v) ** b
        return out

    def is_simple(self) -> bool:
        if len(self.t) != 1:
            return False
        ((k, c),) = self.t.items()
        return c.is_simple()

    def __str__(self) -> str:
        if not self.t:
            return "0"
        pieces = []
        for (a, b), c in sorted(self.t.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            mono = "*".join(
                p for p in (
                    ("u" if a == 1 else f"u^{a}") if a else "",
                    ("v" if b == 1 else f"v^{b}") if b else "",
                ) if p
            )
            if not mono:
                pieces.append(str(c))
                continue
            if c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            elif c.is_simple():
                pieces.append(f"{c}*{mono}")
            else:
                pieces.append(f"({c})*{mono}")
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"ParamPoly({str(self)!r})"


Coeff = Union[Scalar, ParamPoly]


def coerce(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.from_fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")


def as_param(x) -> ParamPoly:
    if isinstance(x, ParamPoly):
        return x
    return ParamPoly.const(x)


def is_scalar(x) -> bool:
    return isinstance(x, (Scalar, ParamPoly, int, Fraction))
