"""The Clifford superalgebra C_n with the W^e action.

Monomials ``c^beta`` are bitmasks (bit i-1 set means c_i is present) taken
in increasing index order.  The extended affine Weyl group acts through its
finite part by signed permutation of the generators; translations act
trivially.
"""

from __future__ import annotations

from functools import lru_cache

from .extweyl import ExtWeylElem
from .linear import Algebra, Element
from .scalar import ONE, SQRT2, Scalar
from .weyl import IntegrityError, WeylElem, WeylType

__all__ = [
    "CliffordAlgebra",
    "clifford",
    "mono_mul",
    "mono_sign",
    "beta_element",
    "upsilon_element",
    "act_mask",
    "ext_weyl_action",
    "reverse",
    "versor_inverse",
]


def mono_sign(a: int, b: int) -> int:
    """Sign of c^a c^b = sign * c^(a xor b)."""
    swaps = 0
    j = 0
    while b >> j:
        if (b >> j) & 1:
            swaps += (a >> (j + 1)).bit_count()
        j += 1
    return -1 if swaps & 1 else 1


def mono_mul(a: int, b: int) -> tuple[int, int]:
    return mono_sign(a, b), a ^ b


def mask_indices(mask: int) -> list[int]:
    out, i = [], 0
    while mask >> i:
        if (mask >> i) & 1:
            out.append(i)
        i += 1
    return out


@lru_cache(maxsize=None)
def act_mask(w: WeylElem, mask: int) -> tuple[int, int]:
    """w . c^mask = sign * c^out for a signed permutation w."""
    sign, out = 1, 0
    for i in mask_indices(mask):
        s, j = w.image(i)
        sign *= s
        t, out = mono_mul(out, 1 << j)
        sign *= t
    return sign, out


def format_mask(mask: int) -> str:
    return " ".join(f"c{i + 1}" for i in mask_indices(mask))


class CliffordAlgebra(Algebra):
    name = "clifford"

    def __init__(self, n: int):
        self.n = n

    def one_key(self):
        return 0

    def mul_keys(self, ka, kb):
        s, k = mono_mul(ka, kb)
        return {k: ONE if s == 1 else -ONE}

    def mul(self, a: Element, b: Element) -> Element:
        acc: dict = {}
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                s, k = mono_mul(ka, kb)
                c = ca * cb
                if s < 0:
                    c = -c
                acc[k] = acc[k] + c if k in acc else c
        return Element(self, {k: c for k, c in acc.items() if c})

    def key_parity(self, key) -> int:
        return key.bit_count() & 1

    def format_key(self, key) -> str:
        return format_mask(key)

    def sort_key(self, key):
        return (key.bit_count(), mask_indices(key))

    def gen(self, i: int) -> Element:
        if not 1 <= i <= self.n:
            raise ValueError(f"no generator c{i} in C_{self.n}")
        return self.monomial(1 << (i - 1))

    def inverse(self, a: Element) -> Element:
        return versor_inverse(a)


@lru_cache(maxsize=None)
def clifford(n: int) -> CliffordAlgebra:
    return CliffordAlgebra(n)


def beta_element(typ: WeylType, i: int) -> Element:
    """Normalized simple-root element beta_i with beta_i^2 = 1."""
    C = clifford(typ.n)
    n = typ.n
    if not 1 <= i <= typ.rank:
        raise ValueError(f"no beta_{i} in type {typ}")
    h = ONE / SQRT2
    if i < n:
        return (C.gen(i) - C.gen(i + 1)) * h
    if typ.family == "B":
        return C.gen(n)
    return (C.gen(n - 1) + C.gen(n)) * h


def upsilon_element(n: int, i: int) -> Element:
    """upsilon_i = (c_i + c_{n+1-i}) / sqrt 2."""
    C = clifford(n)
    if not 1 <= i <= n:
        raise ValueError(f"no upsilon_{i} for n = {n}")
    return (C.gen(i) + C.gen(n + 1 - i)) * (ONE / SQRT2)


def act_fin(w: WeylElem, a: Element) -> Element:
    out: dict = {}
    for k, c in a.terms.items():
        s, m = act_mask(w, k)
        out[m] = -c if s < 0 else c
    return Element(a.alg, out)


def ext_weyl_action(g: ExtWeylElem, a: Element) -> Element:
    return act_fin(g.fin, a)


def reverse(a: Element) -> Element:
    """Reversal anti-automorphism: c_{i1}..c_{ik} -> c_{ik}..c_{i1}."""
    out = {}
    for k, c in a.terms.items():
        d = k.bit_count()
        out[k] = -c if (d * (d - 1) // 2) & 1 else c
    return Element(a.alg, out)


def versor_inverse(a: Element) -> Element:
    """Inverse of an element whose product with its reversal is a nonzero scalar."""
    r = reverse(a)
    nrm = a * r
    if set(nrm.terms) - {0} or not nrm.terms:
        raise IntegrityError("element is not an invertible versor")
    return r.scale(ONE / nrm.terms[0] if isinstance(nrm.terms[0], Scalar) else nrm.terms[0].inverse())
