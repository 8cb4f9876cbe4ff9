"""Shared plumbing for elements stored as finitely supported maps key -> coefficient."""

from __future__ import annotations

from fractions import Fraction

from .scalar import ONE, ParamPoly, Scalar, coerce

__all__ = ["Algebra", "Element", "format_terms", "format_coeff"]


def _as_coeff(x):
    if isinstance(x, (Scalar, ParamPoly)):
        return x
    return coerce(x)


def format_coeff(c) -> str:
    s = str(c)
    return s if c.is_simple() else f"({s})"


def format_terms(items) -> str:
    """Join (coefficient, monomial-string) pairs into ``a - b + c`` form."""
    pieces = []
    for c, mono in items:
        if not mono:
            s = str(c)
            if not c.is_simple() and pieces:
                s = f"({s})"
        elif c == 1:
            s = mono
        elif c == -1:
            s = "-" + mono
        else:
            s = f"{format_coeff(c)} {mono}"
        pieces.append(s)
    if not pieces:
        return "0"
    out = pieces[0]
    for p in pieces[1:]:
        out += f" - {p[1:]}" if p.startswith("-") and not p.startswith("-(") else f" + {p}"
    return out


class Algebra:
    """Base for the concrete algebras; subclasses implement ``mul_terms``."""

    name = "algebra"

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {self.one_key(): ONE})

    def one_key(self):
        raise NotImplementedError

    def elem(self, terms) -> "Element":
        out = {}
        for k, c in terms.items():
            c = _as_coeff(c)
            if c:
                out[k] = c
        return Element(self, out)

    def monomial(self, key, coeff=ONE) -> "Element":
        return self.elem({key: coeff})

    def mul(self, a: "Element", b: "Element") -> "Element":
        acc: dict = {}
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                for k, c in self.mul_keys(ka, kb).items():
                    c = ca * cb * c
                    if k in acc:
                        acc[k] = acc[k] + c
                    else:
                        acc[k] = c
        return Element(self, {k: c for k, c in acc.items() if c})

    def mul_keys(self, ka, kb) -> dict:
        raise NotImplementedError

    def key_parity(self, key) -> int:
        return 0

    def format_key(self, key) -> str:
        return str(key)

    def sort_key(self, key):
        return key

    def inverse(self, a: "Element") -> "Element":
        raise ValueError(f"inverse not available in {self.name}")


class Element:
    """An element of an :class:`Algebra`; coefficients are Scalar or ParamPoly."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: Algebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _same(self, other: "Element"):
        if other.alg is not self.alg:
            raise TypeError(f"mixing elements of {self.alg.name} and {other.alg.name}")

    def __add__(self, other):
        if isinstance(other, (Scalar, ParamPoly, int, Fraction)):
            other = self.alg.one() * other
        if not isinstance(other, Element):
            return NotImplemented
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            if k in out:
                s = out[k] + c
                if s:
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = c
        return Element(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (Element, Scalar, ParamPoly, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Element":
        c = _as_coeff(c)
        if not c:
            return Element(self.alg, {})
        return Element(self.alg, {k: v * c for k, v in self.terms.items() if v * c})

    def __mul__(self, other):
        if isinstance(other, Element):
            self._same(other)
            return self.alg.mul(self, other)
        if isinstance(other, (Scalar, ParamPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, ParamPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (Scalar, ParamPoly, int, Fraction)):
            return self.scale(1 / _as_coeff(other) if not isinstance(other, ParamPoly) else other.inverse())
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.alg.inverse(self) ** (-k)
        out = self.alg.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (Scalar, ParamPoly, int, Fraction)):
            other = self.alg.one() * other
        if not isinstance(other, Element):
            return NotImplemented
        return self.alg is other.alg and self.terms == other.terms

    __hash__ = None

    def coefficient(self, key):
        return self.terms.get(key, Scalar(0))

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: self.alg.sort_key(kv[0]))

    def __str__(self) -> str:
        return format_terms((c, self.alg.format_key(k)) for k, c in self.sorted_items())

    def __repr__(self) -> str:
        return f"<{self.alg.name}: {self}>"

    def parity(self) -> int | None:
        """0 or 1 for homogeneous elements, None for mixed ones (0 for zero)."""
        ps = {self.alg.key_parity(k) for k in self.terms}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def homogeneous_parts(self) -> dict[int, "Element"]:
        out: dict[int, dict] = {}
        for k, c in self.terms.items():
            out.setdefault(self.alg.key_parity(k), {})[k] = c
        return {p: Element(self.alg, t) for p, t in out.items()}

    def map_coeffs(self, f) -> "Element":
        return self.alg.elem({k: f(c) for k, c in self.terms.items()})
