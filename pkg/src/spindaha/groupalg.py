"""Group algebras CW and CW^e, used for normal forms of group words."""

from __future__ import annotations

from functools import lru_cache

from .extweyl import ext_group, format_word
from .linear import Algebra, Element
from .report import Check
from .scalar import ONE, Scalar
from .weyl import WeylElem, WeylType

__all__ = ["GroupAlgebra", "group_algebra", "verify_weyl_presentation", "verify_extweyl_presentation"]


class GroupAlgebra(Algebra):
    """Basis: elements of W (``affine=False``) or W^e, printed as reduced words."""

    def __init__(self, typ: WeylType, affine: bool):
        self.typ = typ
        self.n = typ.n
        self.affine = affine
        self.group = ext_group(typ)
        self.name = "extweyl" if affine else "weyl"

    def one_key(self):
        return self.group.identity() if self.affine else WeylElem.identity(self.n)

    def mul_keys(self, ka, kb) -> dict:
        return {ka * kb: ONE}

    def format_key(self, key) -> str:
        if self.affine:
            return format_word(self.group.canonical_word(key))
        return format_word(tuple(("s", i) for i in self.typ.reduced_word(key)))

    def sort_key(self, key):
        if self.affine:
            return (self.group.length(key), key.sort_key())
        return (self.typ.length(key), key)

    def gen(self, name: str, i: int) -> Element:
        if name == "s" and 1 <= i <= self.typ.rank:
            if self.affine:
                return self.monomial(self.group.s(i))
            return self.monomial(self.typ.simple_reflection(i))
        if self.affine and name == "pi" and i in self.group.pi_indices:
            return self.monomial(self.group.pi(i))
        raise ValueError(f"no generator {name}{i} in the group algebra of type {self.typ}")

    def inverse(self, a: Element) -> Element:
        if len(a.terms) != 1:
            raise ValueError("only scalar multiples of group elements are invertible here")
        ((g, c),) = a.terms.items()
        return self.monomial(g.inverse(), ONE / c if isinstance(c, Scalar) else c.inverse())


@lru_cache(maxsize=None)
def group_algebra(typ: WeylType, affine: bool) -> GroupAlgebra:
    return GroupAlgebra(typ, affine)


def verify_weyl_presentation(typ: WeylType) -> list[Check]:
    checks = []
    e = WeylElem.identity(typ.n)
    for i in range(1, typ.rank + 1):
        for j in range(i, typ.rank + 1):
            m = typ.coxeter_m(i, j)
            x = (typ.simple_reflection(i) * typ.simple_reflection(j)) ** m
            word = format_word(tuple(("s", k) for k in typ.reduced_word(x))) or "1"
            checks.append(Check(f"(s{i} s{j})^{m} = 1", word, "1", x == e))
    n_el = sum(1 for _ in typ.elements())
    checks.append(Check("|W| matches the closed formula", str(n_el), str(typ.order()), n_el == typ.order()))
    return checks


def verify_extweyl_presentation(typ: WeylType) -> list[Check]:
    G = ext_group(typ)
    checks = []
    for rel, a, b, ok in G.verify_presentation():
        checks.append(Check(rel.name, a.serialize(), b.serialize(), ok))
    return checks
