"""The extended affine Weyl group W^e = P x| W as pairs (lambda, w).

Translations are stored doubled (``lam2 = 2*lambda``) so that the
half-integral weights of type D stay integral.  The product is
``(l, w)(m, v) = (l + w m, w v)`` and the action on exponent vectors and on
points of R^n is ``x -> l + w x``.

Words are tuples of letters ``('s', i)`` (1 <= i <= rank) and
``('pi', r, e)`` with ``e = +1`` or ``-1``.  :meth:`ExtWeylGroup.canonical_word`
produces a deterministic reduced word by walking the image of a generic point
of the fundamental alcove back into the alcove, always crossing the lowest
numbered wall first; the remaining length-zero element is written in the pi's.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .weyl import IntegrityError, WeylElem, WeylType

__all__ = [
    "ExtWeylElem",
    "ExtWeylGroup",
    "GroupRelation",
    "Letter",
    "format_word",
    "invert_word",
    "ext_group",
]

Letter = tuple


@dataclass(frozen=True, order=True)
class ExtWeylElem:
    lam2: tuple[int, ...]
    fin: WeylElem

    @property
    def lam(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.lam2)

    @property
    def n(self) -> int:
        return len(self.lam2)

    @classmethod
    def identity(cls, n: int) -> "ExtWeylElem":
        return cls((0,) * n, WeylElem.identity(n))

    @classmethod
    def translation(cls, lam: Sequence) -> "ExtWeylElem":
        lam2 = []
        for x in lam:
            d = Fraction(x) * 2
            if d.denominator != 1:
                raise ValueError(f"translation coordinate {x} is not half-integral")
            lam2.append(int(d))
        return cls(tuple(lam2), WeylElem.identity(len(lam2)))

    @classmethod
    def finite(cls, w: WeylElem) -> "ExtWeylElem":
        return cls((0,) * w.n, w)

    def is_identity(self) -> bool:
        return not any(self.lam2) and self.fin.is_identity()

    def __mul__(self, other: "ExtWeylElem") -> "ExtWeylElem":
        if not isinstance(other, ExtWeylElem):
            return NotImplemented
        wm = self.fin.act(other.lam2)
        return ExtWeylElem(tuple(a + b for a, b in zip(self.lam2, wm)), self.fin * other.fin)

    def inverse(self) -> "ExtWeylElem":
        wi = self.fin.inverse()
        return ExtWeylElem(tuple(-x for x in wi.act(self.lam2)), wi)

    def __pow__(self, k: int) -> "ExtWeylElem":
        base = self if k >= 0 else self.inverse()
        out = ExtWeylElem.identity(self.n)
        for _ in range(abs(k)):
            out = out * base
        return out

    def act_point(self, x: Sequence[Fraction]) -> tuple[Fraction, ...]:
        wx = self.fin.act(x)
        return tuple(Fraction(a, 2) + b for a, b in zip(self.lam2, wx))

    def act_exponent2(self, nu2: Sequence[int]) -> tuple[int, ...]:
        """Action on a doubled exponent vector of P^nu: nu -> lambda + w nu."""
        wn = self.fin.act(nu2)
        return tuple(a + b for a, b in zip(self.lam2, wn))

    def serialize(self) -> str:
        lam = ",".join(str(x) for x in self.lam)
        perm = ",".join(str(p + 1) for p in self.fin.perm)
        signs = ",".join(str(s) for s in self.fin.signs)
        return f"lambda=[{lam}];perm=[{perm}];signs=[{signs}]"

    def sort_key(self):
        return (self.lam2, self.fin.perm, self.fin.signs)


@dataclass(frozen=True)
class GroupRelation:
    name: str
    lhs: tuple
    rhs: tuple


def invert_word(word: Iterable[Letter]) -> tuple:
    out = []
    for l in reversed(tuple(word)):
        out.append(l if l[0] == "s" else ("pi", l[1], -l[2]))
    return tuple(out)


def format_word(word: Sequence[Letter], s_name: str = "s", pi_name: str = "pi") -> str:
    """Render a word, merging adjacent letters pi_r^a pi_r^b into pi_r^(a+b)."""
    stack: list[list] = []
    for l in word:
        if l[0] == "s":
            stack.append(["s", l[1], 1])
        elif stack and stack[-1][0] == "pi" and stack[-1][1] == l[1]:
            stack[-1][2] += l[2]
            if not stack[-1][2]:
                stack.pop()
        else:
            stack.append(["pi", l[1], l[2]])
    parts = []
    for kind, r, p in stack:
        if kind == "s":
            parts.append(f"{s_name}{r}")
        else:
            parts.append(f"{pi_name}{r}" if p == 1 else f"{pi_name}{r}^{p}")
    return " ".join(parts)


class ExtWeylGroup:
    """Concrete model of W^e for one Weyl type, with canonical words."""

    def __init__(self, typ: WeylType):
        self.typ = typ
        self.n = typ.n
        self.rank = typ.rank
        n, f = self.n, typ.family
        if f == "D":
            self.pi_indices = (1, n) if n % 2 == 0 else (n,)
        else:
            self.pi_indices = (1,)
        self._s = {i: ExtWeylElem.finite(typ.simple_reflection(i)) for i in range(1, self.rank + 1)}
        self._pi = {r: self._make_pi(r) for r in self.pi_indices}
        self.s0_word = self._s0_word()
        self.s0 = self.word_to_elem(self.s0_word)
        self._walls = [(j, self._reflection(j)) for j in list(range(1, self.rank + 1)) + [0]]
        self._wall_rows = {j: self._wall_functional(h) for j, h in self._walls}
        self.base_point = self._base_point()
        self._base_sides = {j: self._side(j, self.base_point) for j, _ in self._walls}
        if any(v == 0 for v in self._base_sides.values()):
            raise IntegrityError("base point lies on a wall")
        self._omega_words = self._omega_table()
        self._canon_cache: dict[ExtWeylElem, tuple] = {}

    # -- generators -----------------------------------------------------------

    def sigma(self, r: int) -> WeylElem:
        n, f = self.n, self.typ.family
        perm = list(range(n))
        signs = [1] * n
        if f == "A" and r == 1:
            perm = [(i + 1) % n for i in range(n)]
        elif f == "B" and r == 1:
            signs[0] = -1
        elif f == "D" and r == 1:
            signs[0] = signs[n - 1] = -1
        elif f == "D" and r == n:
            for i in range(n - 1):
                perm[i] = n - 1 - i
                signs[i] = -1
            perm[n - 1] = 0
            signs[n - 1] = (-1) ** (n - 1)
        else:
            raise ValueError(f"no sigma_{r} in type {self.typ}")
        return WeylElem(tuple(perm), tuple(signs))

    def _make_pi(self, r: int) -> ExtWeylElem:
        n = self.n
        if r == 1:
            lam2 = (2,) + (0,) * (n - 1)
        else:
            lam2 = (1,) * n
        return ExtWeylElem(lam2, self.sigma(r))

    def s(self, i: int) -> ExtWeylElem:
        if i == 0:
            return self.s0
        if i not in self._s:
            raise ValueError(f"no generator s{i} in type {self.typ}")
        return self._s[i]

    def pi(self, r: int, e: int = 1) -> ExtWeylElem:
        if r not in self._pi:
            raise ValueError(f"no generator pi{r} in type {self.typ}")
        return self._pi[r] if e == 1 else self._pi[r].inverse()

    def identity(self) -> ExtWeylElem:
        return ExtWeylElem.identity(self.n)

    def letter(self, l: Letter) -> ExtWeylElem:
        if l[0] == "s":
            return self.s(l[1])
        return self.pi(l[1], l[2])

    def generators(self) -> list[Letter]:
        out: list[Letter] = [("s", i) for i in range(1, self.rank + 1)]
        for r in self.pi_indices:
            out += [("pi", r, 1), ("pi", r, -1)]
        return out

    def word_to_elem(self, word: Iterable[Letter]) -> ExtWeylElem:
        g = self.identity()
        for l in word:
            g = g * self.letter(l)
        return g

    def contains(self, g: ExtWeylElem) -> bool:
        if g.n != self.n or not self.typ.contains(g.fin):
            return False
        if self.typ.family == "D":
            return len({x % 2 for x in g.lam2}) == 1
        return all(x % 2 == 0 for x in g.lam2)

    def _s0_word(self) -> tuple:
        f, n = self.typ.family, self.n
        if f == "A":
            r, i = 1, n - 1
        elif f == "B" or n % 2 == 0:
            r, i = 1, 1
        else:
            r, i = n, n - 1
        return (("pi", r, 1), ("s", i), ("pi", r, -1))

    # -- alcove geometry ------------------------------------------------------

    def _reflection(self, j: int) -> ExtWeylElem:
        return self.s0 if j == 0 else self._s[j]

    @staticmethod
    def _wall_functional(h: ExtWeylElem):
        n = h.n
        mat = h.fin.matrix()
        for row in range(n):
            coeffs = [(1 if row == col else 0) - mat[row][col] for col in range(n)]
            if any(coeffs):
                return coeffs, Fraction(h.lam2[row], 2)
        raise IntegrityError("affine reflection with trivial linear part")

    def _side(self, j: int, x: Sequence[Fraction]) -> int:
        coeffs, c = self._wall_rows[j]
        val = sum(a * b for a, b in zip(coeffs, x)) - c
        return (val > 0) - (val < 0)

    def _base_point(self) -> tuple[Fraction, ...]:
        n = self.n
        if self.typ.family == "A":
            return tuple(Fraction(n - i, 2 * n) for i in range(1, n + 1))
        return tuple(Fraction(n + 1 - i, 2 * n + 2) for i in range(1, n + 1))

    def _omega_table(self) -> dict:
        if self.typ.family == "A":
            return {}
        table = {self.identity(): ()}
        queue = deque([self.identity()])
        while queue:
            g = queue.popleft()
            for r in self.pi_indices:
                h = g * self._pi[r]
                if h not in table:
                    table[h] = table[g] + (("pi", r, 1),)
                    queue.append(h)
        return table

    def _omega_word(self, omega: ExtWeylElem) -> tuple:
        if self.typ.family == "A":
            k = sum(omega.lam2) // 2
            if self._pi[1] ** k != omega:
                raise IntegrityError("length-zero element is not a power of pi1")
            return (("pi", 1, 1 if k > 0 else -1),) * abs(k)
        if omega not in self._omega_words:
            raise IntegrityError("length-zero element outside the pi subgroup")
        return self._omega_words[omega]

    def canonical_word(self, g: ExtWeylElem) -> tuple:
        """Deterministic reduced word for g; s_0 is written as pi s pi^-1."""
        cached = self._canon_cache.get(g)
        if cached is not None:
            return cached
        if not self.contains(g):
            raise ValueError("element is not in this extended affine Weyl group")
        q = g.act_point(self.base_point)
        steps: list[int] = []
        omega = g
        limit = 10_000
        while True:
            for j, h in self._walls:
                if self._side(j, q) != self._base_sides[j]:
                    q = h.act_point(q)
                    omega = h * omega
                    steps.append(j)
                    break
            else:
                break
            if len(steps) > limit:
                raise IntegrityError("alcove walk did not terminate")
        word: list[Letter] = []
        for j in steps:
            word.extend(self.s0_word if j == 0 else (("s", j),))
        word.extend(self._omega_word(omega))
        out = tuple(word)
        self._canon_cache[g] = out
        return out

    def length(self, g: ExtWeylElem) -> int:
        """Affine length: the number of simple affine reflections in the canonical word."""
        return sum(1 for l in self.canonical_word(g) if l[0] == "s")

    # -- enumeration ----------------------------------------------------------

    def ball(self, radius: int) -> list[ExtWeylElem]:
        """All elements reachable by words of length <= radius, in BFS order."""
        seen = {self.identity(): 0}
        order = [self.identity()]
        frontier = [self.identity()]
        gens = [self.letter(l) for l in self.generators()]
        for _ in range(radius):
            nxt = []
            for g in frontier:
                for h in gens:
                    x = g * h
                    if x not in seen:
                        seen[x] = 1
                        order.append(x)
                        nxt.append(x)
            frontier = nxt
        return order

    def random_word(self, rng, max_len: int) -> tuple:
        gens = self.generators()
        return tuple(rng.choice(gens) for _ in range(rng.randint(0, max_len)))

    def random_element(self, rng, max_len: int = 4) -> ExtWeylElem:
        return self.word_to_elem(self.random_word(rng, max_len))

    # -- presentation -----------------------------------------------------------

    def relations(self) -> list[GroupRelation]:
        """Coxeter relations plus the defining relations involving the pi's."""
        typ, n = self.typ, self.n
        out: list[GroupRelation] = []
        for i in range(1, self.rank + 1):
            for j in range(i, self.rank + 1):
                m = typ.coxeter_m(i, j)
                out.append(GroupRelation(f"(s{i} s{j})^{m} = 1", (("s", i), ("s", j)) * m, ()))
        p = lambda r, e=1: ("pi", r, e)
        s = lambda i: ("s", i)
        f = typ.family
        if f == "A":
            out.append(GroupRelation("pi1^2 s_{n-1} = s1 pi1^2", (p(1), p(1), s(n - 1)), (s(1), p(1), p(1))))
            for i in range(1, n):
                out.append(GroupRelation(f"pi1^n s{i} = s{i} pi1^n", (p(1),) * n + (s(i),), (s(i),) + (p(1),) * n))
            for i in range(1, n - 1):
                out.append(GroupRelation(f"pi1 s{i} = s{i + 1} pi1", (p(1), s(i)), (s(i + 1), p(1))))
        elif f == "B":
            out.append(GroupRelation("pi1^2 = 1", (p(1), p(1)), ()))
            for i in range(2, n + 1):
                out.append(GroupRelation(f"pi1 s{i} = s{i} pi1", (p(1), s(i)), (s(i), p(1))))
            out.append(GroupRelation("pi1 s1 pi1 s1 = s1 pi1 s1 pi1", (p(1), s(1), p(1), s(1)), (s(1), p(1), s(1), p(1))))
        elif n % 2 == 1:
            out.append(GroupRelation(f"pi{n}^4 = 1", (p(n),) * 4, ()))
            out.append(GroupRelation(f"pi{n}^2 s{n - 1} = s{n} pi{n}^2", (p(n), p(n), s(n - 1)), (s(n), p(n), p(n))))
            for i in range(1, n - 1):
                out.append(GroupRelation(f"pi{n} s{i} = s{n - i} pi{n}", (p(n), s(i)), (s(n - i), p(n))))
            out.append(GroupRelation(f"pi{n} s{n} = s1 pi{n}", (p(n), s(n)), (s(1), p(n))))
        else:
            out.append(GroupRelation("pi1^2 = 1", (p(1), p(1)), ()))
            out.append(GroupRelation(f"pi{n}^2 = 1", (p(n), p(n)), ()))
            out.append(GroupRelation(f"pi1 pi{n} = pi{n} pi1", (p(1), p(n)), (p(n), p(1))))
            out.append(GroupRelation(f"pi1 s1 pi1 = pi{n} s{n} pi{n}", (p(1), s(1), p(1)), (p(n), s(n), p(n))))
            for i in range(2, n - 1):
                out.append(GroupRelation(f"pi1 s{i} = s{i} pi1", (p(1), s(i)), (s(i), p(1))))
                out.append(GroupRelation(f"pi{n} s{i} = s{n - i} pi{n}", (p(n), s(i)), (s(n - i), p(n))))
            out.append(GroupRelation(f"pi1 s{n - 1} = s{n} pi1", (p(1), s(n - 1)), (s(n), p(1))))
            out.append(GroupRelation(f"pi{n} s1 = s{n - 1} pi{n}", (p(n), s(1)), (s(n - 1), p(n))))
        for r in self.pi_indices:
            out.append(GroupRelation(f"pi{r} pi{r}^-1 = 1", (p(r), p(r, -1)), ()))
        return out

    def verify_presentation(self) -> list[tuple[GroupRelation, ExtWeylElem, ExtWeylElem, bool]]:
        return [
            (rel, a, b, a == b)
            for rel in self.relations()
            for a, b in [(self.word_to_elem(rel.lhs), self.word_to_elem(rel.rhs))]
        ]


@lru_cache(maxsize=None)
def ext_group(typ: WeylType) -> ExtWeylGroup:
    return ExtWeylGroup(typ)
