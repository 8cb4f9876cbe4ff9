"""The trigonometric spin double affine Hecke algebra H^-_W.

PBW monomials are ``xi^alpha t_g`` with ``xi`` skew-commuting
(``xi_i xi_j = -xi_j xi_i`` for i != j) and ``t_g`` the spin group basis.
Normal ordering uses

    t_i xi_i     = -xi_{i+1} t_i + u
    t_i xi_{i+1} = -xi_i t_i + u
    t_i xi_j     = -xi_j t_i                     (j != i, i+1)

with the s_n analogues in types B and D, and
``t_pi xi_i = (-1)^{|t_pi|} xi_{sigma(i)} t_pi`` for the length-zero letters.
"""

from __future__ import annotations

from functools import lru_cache

from .extweyl import ExtWeylElem, format_word
from .heckecliff import Params, format_x
from .linear import Algebra, Element
from .scalar import ONE, Scalar
from .spinweyl import SpinWeylAlgebra, spin_algebra
from .weyl import WeylType

__all__ = ["TSHAlgebra", "tsh", "skew_sign", "xi_pi_sign"]


def skew_sign(a: tuple, b: tuple) -> int:
    """xi^a xi^b = sign xi^(a+b)."""
    t = 0
    tail = 0
    for j in range(len(a) - 1, -1, -1):
        t += b[j] * tail
        tail += a[j]
    return -1 if t & 1 else 1


def xi_pi_sign(A: SpinWeylAlgebra, r: int) -> int:
    """Sign in t_{pi_r} xi_i = sign xi_{sigma(i)} t_{pi_r}: (-1)^{|t_{pi_r}|}."""
    return -1 if A.parity(A.group.pi(r)) else 1


class TSHAlgebra(Algebra):
    name = "tsh"

    def __init__(self, typ: WeylType, params: Params = Params()):
        self.typ = typ
        self.n = typ.n
        self.params = params
        self.spin = spin_algebra(typ)
        self.group = self.spin.group
        self._id = self.group.identity()
        self._zero = (0,) * self.n
        self._lx: dict = {}
        self._gx: dict = {}

    # -- letter rules ---------------------------------------------------------------

    def _rule(self, l, j: int):
        """t_l xi_j = sign xi_k t_l + const, as (sign, k, const)."""
        n, f = self.n, self.typ.family
        u, v = self.params.u, self.params.v
        if l[0] == "pi":
            r, e = l[1], l[2]
            w = self.group.pi(r, e).fin
            return xi_pi_sign(self.spin, r), w.perm[j - 1] + 1, None
        i = l[1]
        if i < n:
            if j == i:
                return -1, i + 1, u
            if j == i + 1:
                return -1, i, u
            return -1, j, None
        if f == "B":
            return -1, j, (v if j == n else None)
        if j == n:
            return -1, n - 1, u
        if j == n - 1:
            return -1, n, u
        return -1, j, None

    def letter_times_xi(self, l, alpha: tuple) -> dict:
        """t_l xi^alpha as {(delta, has_letter): coeff}."""
        key = (l, alpha)
        got = self._lx.get(key)
        if got is not None:
            return got
        if not any(alpha):
            out = {(alpha, True): ONE}
            self._lx[key] = out
            return out
        j = next(k for k, a in enumerate(alpha) if a)
        rest = list(alpha)
        rest[j] -= 1
        rest = tuple(rest)
        sign, k, const = self._rule(l, j + 1)
        unit = [0] * self.n
        unit[k - 1] = 1
        unit = tuple(unit)
        acc: dict = {}
        for (d, has), c in self.letter_times_xi(l, rest).items():
            s = sign * skew_sign(unit, d)
            d2 = list(d)
            d2[k - 1] += 1
            kk = (tuple(d2), has)
            cc = c if s > 0 else -c
            acc[kk] = acc[kk] + cc if kk in acc else cc
        if const is not None:
            kk = (rest, False)
            acc[kk] = acc[kk] + const if kk in acc else const
        out = {kk: c for kk, c in acc.items() if c}
        self._lx[key] = out
        return out

    def g_times_xi(self, g: ExtWeylElem, alpha: tuple) -> dict:
        """t_g xi^alpha as {(delta, h): coeff}."""
        key = (g, alpha)
        got = self._gx.get(key)
        if got is not None:
            return got
        if g == self._id:
            out = {(alpha, g): ONE}
            self._gx[key] = out
            return out
        S = self.spin
        first = self.group.canonical_word(g)[0]
        lt = S.letter(first)
        ((h1, rho),) = lt.terms.items()
        rest_elem = S.inverse(lt) * S.basis(g)
        ((g2, kappa),) = rest_elem.terms.items()
        acc: dict = {}
        for (d, e), c in self.g_times_xi(g2, alpha).items():
            for (d2, has), c2 in self.letter_times_xi(first, d).items():
                cc = c * c2 * kappa
                if has:
                    cc = cc * rho
                    if S.eps(h1, e) < 0:
                        cc = -cc
                    kk = (d2, h1 * e)
                else:
                    kk = (d2, e)
                acc[kk] = acc[kk] + cc if kk in acc else cc
        out = {kk: c for kk, c in acc.items() if c}
        self._gx[key] = out
        return out

    # -- algebra structure ----------------------------------------------------------

    def one_key(self):
        return (self._zero, self._id)

    def mul(self, a: Element, b: Element) -> Element:
        S = self.spin
        acc: dict = {}
        for (a1, g1), c1 in a.terms.items():
            for (a2, g2), c2 in b.terms.items():
                c12 = c1 * c2
                for (d, e), c3 in self.g_times_xi(g1, a2).items():
                    s = skew_sign(a1, d) * S.eps(e, g2)
                    k = (tuple(x + y for x, y in zip(a1, d)), e * g2)
                    c = c12 * c3
                    if s < 0:
                        c = -c
                    acc[k] = acc[k] + c if k in acc else c
        return Element(self, {k: c for k, c in acc.items() if c})

    def key_parity(self, key) -> int:
        alpha, g = key
        return (sum(alpha) + self.spin.parity(g)) & 1

    def format_key(self, key) -> str:
        alpha, g = key
        parts = [format_x(alpha, "xi"), format_word(self.group.canonical_word(g), "t", "tpi")]
        return " ".join(p for p in parts if p)

    def sort_key(self, key):
        alpha, g = key
        return (-sum(alpha), tuple(-a for a in alpha), self.group.length(g), g.sort_key())

    # -- constructors ---------------------------------------------------------------

    def xi_monomial(self, alpha, coeff=ONE) -> Element:
        return self.monomial((tuple(alpha), self._id), coeff)

    def xi(self, i: int) -> Element:
        if not 1 <= i <= self.n:
            raise ValueError(f"no generator xi{i}")
        a = [0] * self.n
        a[i - 1] = 1
        return self.xi_monomial(a)

    def from_spin(self, x: Element) -> Element:
        return self.elem({(self._zero, g): c for g, c in x.terms.items()})

    def letter(self, l) -> Element:
        return self.from_spin(self.spin.letter(l))

    def basis(self, g: ExtWeylElem) -> Element:
        return self.monomial((self._zero, g))

    def gen(self, name: str, i: int) -> Element:
        if name == "xi":
            return self.xi(i)
        if name in ("t", "tpi"):
            return self.from_spin(self.spin.gen(name, i))
        raise ValueError(f"no generator {name}{i} in H^-")

    def generators(self) -> list[tuple[str, Element]]:
        out = [(f"xi{i}", self.xi(i)) for i in range(1, self.n + 1)]
        out += [(f"t{i}", self.letter(("s", i))) for i in range(1, self.typ.rank + 1)]
        for r in self.group.pi_indices:
            out += [(f"tpi{r}", self.letter(("pi", r, 1))), (f"tpi{r}^-1", self.letter(("pi", r, -1)))]
        return out

    def inverse(self, a: Element) -> Element:
        if len(a.terms) == 1:
            ((alpha, g), c) = next(iter(a.terms.items()))
            if not any(alpha):
                return self.from_spin(self.spin.inverse(self.spin.monomial(g, c)))
        raise ValueError("only scalar multiples of t_g are invertible here")

    def random_element(self, rng, terms: int = 3, max_deg: int = 2, max_len: int = 4) -> Element:
        out = self.zero()
        for _ in range(terms):
            alpha = [0] * self.n
            for _ in range(rng.randint(0, max_deg)):
                alpha[rng.randrange(self.n)] += 1
            g = self.group.random_element(rng, max_len)
            out = out + self.monomial((tuple(alpha), g), Scalar(rng.choice([-3, -2, -1, 1, 2, 3])))
        return out


@lru_cache(maxsize=None)
def _tsh(typ: WeylType, params: Params) -> TSHAlgebra:
    return TSHAlgebra(typ, params)


def tsh(typ: WeylType, params: Params | None = None) -> TSHAlgebra:
    return _tsh(typ, params or Params())
