"""The smash product C_n x| CW^e with basis c^beta g."""

from __future__ import annotations

from functools import lru_cache

from .clifford import act_mask, clifford, format_mask, mask_indices, mono_mul, versor_inverse
from .extweyl import ExtWeylElem, ext_group, format_word
from .linear import Algebra, Element
from .scalar import ONE
from .weyl import IntegrityError, WeylType

__all__ = ["SmashAlgebra", "smash"]


class SmashAlgebra(Algebra):
    """Keys are ``(mask, g)``; ``(c^a g)(c^b h) = c^a (g.c^b) gh``."""

    name = "smash"

    def __init__(self, typ: WeylType):
        self.typ = typ
        self.n = typ.n
        self.group = ext_group(typ)
        self.cl = clifford(typ.n)

    def one_key(self):
        return (0, self.group.identity())

    def mul(self, a: Element, b: Element) -> Element:
        acc: dict = {}
        for (ma, ga), ca in a.terms.items():
            for (mb, gb), cb in b.terms.items():
                s1, m1 = act_mask(ga.fin, mb)
                s2, m = mono_mul(ma, m1)
                k = (m, ga * gb)
                c = ca * cb
                if s1 * s2 < 0:
                    c = -c
                acc[k] = acc[k] + c if k in acc else c
        return Element(self, {k: c for k, c in acc.items() if c})

    def key_parity(self, key) -> int:
        return key[0].bit_count() & 1

    def format_key(self, key) -> str:
        m, g = key
        parts = [format_mask(m), format_word(self.group.canonical_word(g))]
        return " ".join(p for p in parts if p)

    def sort_key(self, key):
        m, g = key
        return (g.sort_key(), m.bit_count(), mask_indices(m))

    def from_clifford(self, a: Element) -> Element:
        e = self.group.identity()
        return self.elem({(m, e): c for m, c in a.terms.items()})

    def group_elem(self, g: ExtWeylElem) -> Element:
        return self.monomial((0, g))

    def letter(self, l) -> Element:
        return self.group_elem(self.group.letter(l))

    def gen(self, name: str, i: int) -> Element:
        if name == "c":
            return self.from_clifford(self.cl.gen(i))
        if name == "s":
            return self.letter(("s", i))
        if name == "pi":
            return self.letter(("pi", i, 1))
        raise ValueError(f"no generator {name}{i} in the smash product")

    def split_single(self, a: Element) -> tuple[Element, ExtWeylElem]:
        """Write a = gamma g for a single group element g."""
        gs = {g for _, g in a.terms}
        if len(gs) != 1:
            raise IntegrityError("element is not supported on a single group element")
        (g,) = gs
        return self.cl.elem({m: c for (m, _), c in a.terms.items()}), g

    def inverse(self, a: Element) -> Element:
        gamma, g = self.split_single(a)
        gi = g.inverse()
        inv = versor_inverse(gamma)
        out = {}
        for m, c in inv.terms.items():
            s, m2 = act_mask(gi.fin, m)
            out[(m2, gi)] = -c if s < 0 else c
        return self.elem(out)


@lru_cache(maxsize=None)
def smash(typ: WeylType) -> SmashAlgebra:
    return SmashAlgebra(typ)
