"""Finite Weyl groups of types A, B, D as signed permutations of e_1..e_n.

An element is stored 0-indexed as ``perm`` and ``signs`` and maps
``e_i -> signs[i] * e_{perm[i]}``.  Generators are numbered from 1 in the
public API: ``s_1 .. s_{n-1}`` swap neighbours; in type B ``s_n`` negates
``e_n``; in type D ``s_n`` sends ``e_{n-1} -> -e_n`` and ``e_n -> -e_{n-1}``.
Type A uses the symmetric group on n letters, so its rank is n - 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterator, Sequence

from .scalar import SQRT2, Scalar

__all__ = ["WeylType", "WeylElem", "IntegrityError"]


class IntegrityError(RuntimeError):
    """An internal consistency check failed (a bug, not a user error)."""


@dataclass(frozen=True)
class WeylType:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in ("A", "B", "D"):
            raise ValueError(f"unknown type {self.family!r}")
        lo = {"A": 2, "B": 2, "D": 4}[self.family]
        if self.n < lo:
            raise ValueError(f"type {self.family} needs n >= {lo}")

    @classmethod
    def parse(cls, text: str) -> "WeylType":
        m = re.fullmatch(r"\s*([ABD])\s*[:_]?\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Weyl type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}:{self.n}"

    @property
    def rank(self) -> int:
        return self.n - 1 if self.family == "A" else self.n

    def coxeter_m(self, i: int, j: int) -> int:
        """Order of s_i s_j (1-based indices)."""
        if i == j:
            return 1
        i, j = min(i, j), max(i, j)
        n = self.n
        if self.family == "D" and j == n:
            return 3 if i == n - 2 else 2
        if j - i == 1:
            if self.family == "B" and j == n:
                return 4
            return 3
        return 2

    def coxeter_matrix(self) -> list[list[int]]:
        r = self.rank
        return [[self.coxeter_m(i, j) for j in range(1, r + 1)] for i in range(1, r + 1)]

    def bilinear_form(self) -> list[list[Scalar]]:
        """B(a_i, a_j) = -2 cos(pi / m_ij), entries in Z[sqrt 2]."""
        val = {1: Scalar(2), 2: Scalar(0), 3: Scalar(-1), 4: -SQRT2}
        return [[val[m] for m in row] for row in self.coxeter_matrix()]

    def order(self) -> int:
        f = 1
        for k in range(2, self.n + 1):
            f *= k
        if self.family == "A":
            return f
        if self.family == "B":
            return f * 2 ** self.n
        return f * 2 ** (self.n - 1)

    def simple_reflection(self, i: int) -> "WeylElem":
        n = self.n
        if not 1 <= i <= self.rank:
            raise ValueError(f"no generator s_{i} in type {self}")
        perm = list(range(n))
        signs = [1] * n
        if i < n:
            perm[i - 1], perm[i] = i, i - 1
        elif self.family == "B":
            signs[n - 1] = -1
        else:
            perm[n - 2], perm[n - 1] = n - 1, n - 2
            signs[n - 2] = signs[n - 1] = -1
        return WeylElem(tuple(perm), tuple(signs))

    def contains(self, w: "WeylElem") -> bool:
        if len(w.perm) != self.n:
            return False
        if self.family == "A":
            return all(s == 1 for s in w.signs)
        if self.family == "D":
            return w.signs.count(-1) % 2 == 0
        return True

    def elements(self) -> Iterator["WeylElem"]:
        n = self.n
        for p in permutations(range(n)):
            if self.family == "A":
                yield WeylElem(tuple(p), (1,) * n)
                continue
            for s in product((1, -1), repeat=n):
                w = WeylElem(tuple(p), s)
                if self.contains(w):
                    yield w

    def identity(self) -> "WeylElem":
        return WeylElem.identity(self.n)

    def reduced_word(self, w: "WeylElem") -> tuple[int, ...]:
        """Lexicographically least reduced word (letters are 1-based indices)."""
        word = []
        while not w.is_identity():
            for i in range(1, self.rank + 1):
                if self.is_left_descent(i, w):
                    word.append(i)
                    w = self.simple_reflection(i) * w
                    break
            else:
                raise IntegrityError("no descent found for non-identity element")
        return tuple(word)

    def is_left_descent(self, i: int, w: "WeylElem") -> bool:
        """True when l(s_i w) < l(w): s_i's root is made negative by w^-1."""
        root = self.simple_root(i)
        img = w.inverse().act(root)
        for x in img:
            if x != 0:
                return x < 0
        raise IntegrityError("zero root")

    def simple_root(self, i: int) -> tuple[int, ...]:
        n = self.n
        r = [0] * n
        if i < n:
            r[i - 1], r[i] = 1, -1
        elif self.family == "B":
            r[n - 1] = 1
        else:
            r[n - 2], r[n - 1] = 1, 1
        return tuple(r)

    def length(self, w: "WeylElem") -> int:
        return len(self.reduced_word(w))

    def from_word(self, word: Sequence[int]) -> "WeylElem":
        w = self.identity()
        for i in word:
            w = w * self.simple_reflection(i)
        return w


@dataclass(frozen=True, order=True)
class WeylElem:
    """Signed permutation: e_i -> signs[i] e_{perm[i]} (0-indexed)."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "WeylElem":
        return cls(tuple(range(n)), (1,) * n)

    @property
    def n(self) -> int:
        return len(self.perm)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm))) and all(s == 1 for s in self.signs)

    def __mul__(self, other: "WeylElem") -> "WeylElem":
        if not isinstance(other, WeylElem):
            return NotImplemented
        p, s = self.perm, self.signs
        return WeylElem(
            tuple(p[j] for j in other.perm),
            tuple(other.signs[i] * s[other.perm[i]] for i in range(len(p))),
        )

    def inverse(self) -> "WeylElem":
        n = len(self.perm)
        perm = [0] * n
        signs = [1] * n
        for i, j in enumerate(self.perm):
            perm[j] = i
            signs[j] = self.signs[i]
        return WeylElem(tuple(perm), tuple(signs))

    def __pow__(self, k: int) -> "WeylElem":
        base = self if k >= 0 else self.inverse()
        out = WeylElem.identity(self.n)
        for _ in range(abs(k)):
            out = out * base
        return out

    def act(self, vec: Sequence) -> tuple:
        """w . v for a coordinate vector v."""
        out = [0] * len(vec)
        for i, x in enumerate(vec):
            out[self.perm[i]] = self.signs[i] * x
        return tuple(out)

    def image(self, i: int) -> tuple[int, int]:
        """(sign, j) with w e_i = sign e_j, 0-indexed."""
        return self.signs[i], self.perm[i]

    def matrix(self) -> list[list[int]]:
        n = self.n
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[self.perm[i]][i] = self.signs[i]
        return m

    def order(self) -> int:
        k, w = 1, self
        while not w.is_identity():
            w = w * self
            k += 1
        return k


def as_fraction_vector(v: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)
