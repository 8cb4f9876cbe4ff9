"""The trigonometric double affine Hecke-Clifford algebra H^c_W.

Elements are linear combinations of PBW monomials ``x^alpha c^beta g`` with
keys ``(alpha, mask, g)``.  A product is brought to normal form by moving
group elements to the right, one letter of the canonical word at a time,
using the cross relations

    s_i x_i     = x_{i+1} s_i - u - u c_i c_{i+1}
    s_i x_{i+1} = x_i s_i + u - u c_i c_{i+1}
    pi x_i      = x_i^sigma pi

plus the type-specific rules for s_n in types B and D.  Results of
``g x^alpha`` are memoized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .clifford import act_mask, clifford, format_mask, mask_indices, mono_mul
from .extweyl import ExtWeylElem, ext_group, format_word
from .linear import Algebra, Element
from .scalar import ONE, SQRT2, ParamPoly, Scalar
from .weyl import WeylElem, WeylType

__all__ = ["Params", "THCAlgebra", "thc", "format_x", "act_poly_key"]

Coeff = Union[Scalar, ParamPoly]


@dataclass(frozen=True)
class Params:
    """Structure constants u, v; ``formal`` keeps them as indeterminates."""

    u: Coeff = Scalar(1)
    v: Coeff = Scalar(1)
    formal: bool = False

    @classmethod
    def numeric(cls, u=1, v=1) -> "Params":
        return cls(u if isinstance(u, Scalar) else Scalar.from_fraction(u),
                   v if isinstance(v, Scalar) else Scalar.from_fraction(v), False)

    @classmethod
    def symbolic(cls) -> "Params":
        return cls(ParamPoly.u(), ParamPoly.v(), True)

    def describe(self) -> dict:
        return {"u": str(self.u), "v": str(self.v), "formal": self.formal}


def format_x(alpha, name: str = "x") -> str:
    parts = []
    for i, a in enumerate(alpha):
        if a == 1:
            parts.append(f"{name}{i + 1}")
        elif a:
            parts.append(f"{name}{i + 1}^{a}")
    return " ".join(parts)


def act_poly_key(w: WeylElem, alpha: tuple) -> tuple[int, tuple]:
    """x^alpha -> sign * x^beta under x_i -> signs[i] x_{perm[i]}."""
    out = [0] * len(alpha)
    sign = 1
    for i, a in enumerate(alpha):
        if a:
            out[w.perm[i]] = a
            if w.signs[i] < 0 and a & 1:
                sign = -sign
    return sign, tuple(out)


def clifford_x_sign(mask: int, alpha: tuple) -> int:
    """c^mask x^alpha = sign x^alpha c^mask."""
    t = 0
    for i in mask_indices(mask):
        t += alpha[i]
    return -1 if t & 1 else 1


class THCAlgebra(Algebra):
    name = "thc"

    def __init__(self, typ: WeylType, params: Params = Params()):
        self.typ = typ
        self.n = typ.n
        self.params = params
        self.group = ext_group(typ)
        self.cl = clifford(typ.n)
        self._id = self.group.identity()
        self._zero_alpha = (0,) * self.n
        self._rules = {(i, j): self._rule(i, j) for i in range(1, typ.rank + 1) for j in range(1, self.n + 1)}
        self._sx: dict = {}
        self._gx: dict = {}

    # -- cross relations ------------------------------------------------------

    def _rule(self, i: int, j: int):
        """s_i x_j = lead_sign x_k s_i + sum coef c^mask, as ((sign, k), [(coef, mask)])."""
        n, f = self.n, self.typ.family
        u, v = self.params.u, self.params.v
        if i < n:
            m = (1 << (i - 1)) | (1 << i)
            if j == i:
                return (1, i + 1), [(-u, 0), (-u, m)]
            if j == i + 1:
                return (1, i), [(u, 0), (-u, m)]
            return (1, j), []
        if f == "B":
            if j == n:
                return (-1, n), [(-(SQRT2 * v) if isinstance(v, Scalar) else v * (-SQRT2), 0)]
            return (1, j), []
        m = (1 << (n - 2)) | (1 << (n - 1))
        if j == n:
            return (-1, n - 1), [(-u, 0), (-u, m)]
        if j == n - 1:
            return (-1, n), [(-u, 0), (u, m)]
        return (1, j), []

    def s_times_x(self, i: int, alpha: tuple) -> dict:
        """s_i x^alpha as {(gamma, mask, has_s): coeff}."""
        key = (i, alpha)
        got = self._sx.get(key)
        if got is not None:
            return got
        if not any(alpha):
            out = {(alpha, 0, True): ONE}
            self._sx[key] = out
            return out
        j = next(k for k, a in enumerate(alpha) if a)
        rest = list(alpha)
        rest[j] -= 1
        rest = tuple(rest)
        (sign, k), consts = self._rules[(i, j + 1)]
        acc: dict = {}
        for (g, m, has), c in self.s_times_x(i, rest).items():
            g2 = list(g)
            g2[k - 1] += 1
            kk = (tuple(g2), m, has)
            c = c if sign > 0 else -c
            acc[kk] = acc[kk] + c if kk in acc else c
        for coef, m in consts:
            kk = (rest, m, False)
            c = coef if clifford_x_sign(m, rest) > 0 else -coef
            acc[kk] = acc[kk] + c if kk in acc else c
        out = {kk: c for kk, c in acc.items() if c}
        self._sx[key] = out
        return out

    def g_times_x(self, g: ExtWeylElem, alpha: tuple) -> dict:
        """g x^alpha as {(gamma, mask, h): coeff}."""
        key = (g, alpha)
        got = self._gx.get(key)
        if got is not None:
            return got
        if g == self._id:
            out = {(alpha, 0, g): ONE}
            self._gx[key] = out
            return out
        word = self.group.canonical_word(g)
        first = word[0]
        lg = self.group.letter(first)
        rest = self.g_times_x(lg.inverse() * g, alpha)
        acc: dict = {}
        if first[0] == "s":
            i = first[1]
            si = lg
            for (gam, m, h), c in rest.items():
                for (gam2, m2, has), c2 in self.s_times_x(i, gam).items():
                    if has:
                        s1, mm = act_mask(si.fin, m)
                        s2, mask = mono_mul(m2, mm)
                        kk = (gam2, mask, si * h)
                        cc = c * c2 if s1 * s2 > 0 else -(c * c2)
                    else:
                        s2, mask = mono_mul(m2, m)
                        kk = (gam2, mask, h)
                        cc = c * c2 if s2 > 0 else -(c * c2)
                    acc[kk] = acc[kk] + cc if kk in acc else cc
        else:
            w = lg.fin
            for (gam, m, h), c in rest.items():
                s1, gam2 = act_poly_key(w, gam)
                s2, m2 = act_mask(w, m)
                kk = (gam2, m2, lg * h)
                cc = c if s1 * s2 > 0 else -c
                acc[kk] = acc[kk] + cc if kk in acc else cc
        out = {kk: c for kk, c in acc.items() if c}
        self._gx[key] = out
        return out

    # -- algebra structure ----------------------------------------------------

    def one_key(self):
        return (self._zero_alpha, 0, self._id)

    def mul(self, a: Element, b: Element) -> Element:
        acc: dict = {}
        for (a1, m1, g1), c1 in a.terms.items():
            for (a2, m2, g2), c2 in b.terms.items():
                c12 = c1 * c2
                for (gam, d, h), c3 in self.g_times_x(g1, a2).items():
                    sgn = clifford_x_sign(m1, gam)
                    s1, md = mono_mul(m1, d)
                    s2, mh = act_mask(h.fin, m2)
                    s3, mask = mono_mul(md, mh)
                    alpha = tuple(x + y for x, y in zip(a1, gam))
                    k = (alpha, mask, h * g2)
                    c = c12 * c3
                    if sgn * s1 * s2 * s3 < 0:
                        c = -c
                    acc[k] = acc[k] + c if k in acc else c
        return Element(self, {k: c for k, c in acc.items() if c})

    def key_parity(self, key) -> int:
        return key[1].bit_count() & 1

    def format_key(self, key) -> str:
        alpha, m, g = key
        parts = [format_x(alpha), format_mask(m), format_word(self.group.canonical_word(g))]
        return " ".join(p for p in parts if p)

    def sort_key(self, key):
        alpha, m, g = key
        return (-sum(alpha), tuple(-a for a in alpha), m.bit_count(), mask_indices(m), self.group.length(g), g.sort_key())

    # -- constructors -------------------------------------------------------------

    def x_monomial(self, alpha, coeff=ONE) -> Element:
        return self.monomial((tuple(alpha), 0, self._id), coeff)

    def x(self, i: int) -> Element:
        if not 1 <= i <= self.n:
            raise ValueError(f"no generator x{i}")
        alpha = [0] * self.n
        alpha[i - 1] = 1
        return self.x_monomial(alpha)

    def c(self, i: int) -> Element:
        if not 1 <= i <= self.n:
            raise ValueError(f"no generator c{i}")
        return self.monomial((self._zero_alpha, 1 << (i - 1), self._id))

    def group_elem(self, g: ExtWeylElem) -> Element:
        return self.monomial((self._zero_alpha, 0, g))

    def letter(self, l) -> Element:
        return self.group_elem(self.group.letter(l))

    def from_clifford(self, a: Element) -> Element:
        return self.elem({(self._zero_alpha, m, self._id): c for m, c in a.terms.items()})

    def gen(self, name: str, i: int) -> Element:
        if name == "x":
            return self.x(i)
        if name == "c":
            return self.c(i)
        if name == "s":
            return self.letter(("s", i))
        if name == "pi":
            return self.letter(("pi", i, 1))
        raise ValueError(f"no generator {name}{i} in H^c")

    def generators(self) -> list[tuple[str, Element]]:
        out = [(f"x{i}", self.x(i)) for i in range(1, self.n + 1)]
        out += [(f"c{i}", self.c(i)) for i in range(1, self.n + 1)]
        out += [(f"s{i}", self.letter(("s", i))) for i in range(1, self.typ.rank + 1)]
        for r in self.group.pi_indices:
            out += [(f"pi{r}", self.letter(("pi", r, 1))), (f"pi{r}^-1", self.letter(("pi", r, -1)))]
        return out

    def inverse(self, a: Element) -> Element:
        if len(a.terms) == 1:
            ((alpha, m, g), c) = next(iter(a.terms.items()))
            if not any(alpha) and m == 0:
                inv = ONE / c if isinstance(c, Scalar) else c.inverse()
                return self.monomial((alpha, 0, g.inverse()), inv)
        raise ValueError("only scalar multiples of group elements are invertible here")

    def random_element(self, rng, terms: int = 3, max_deg: int = 2, max_len: int = 4) -> Element:
        out = self.zero()
        for _ in range(terms):
            alpha = [0] * self.n
            for _ in range(rng.randint(0, max_deg)):
                alpha[rng.randrange(self.n)] += 1
            mask = rng.randrange(1 << self.n)
            g = self.group.random_element(rng, max_len)
            c = Scalar(rng.choice([-3, -2, -1, 1, 2, 3]))
            out = out + self.monomial((tuple(alpha), mask, g), c)
        return out


@lru_cache(maxsize=None)
def _thc(typ: WeylType, params: Params) -> THCAlgebra:
    return THCAlgebra(typ, params)


def thc(typ: WeylType, params: Params | None = None) -> THCAlgebra:
    """The (cached) algebra for a type and parameter choice."""
    return _thc(typ, params or Params())
