"""The representation of H^c on E = C[x] (x) C_n (x) C[P^{+-1/2}].

Basis vectors are keys ``(alpha, mask, nu2)`` for ``x^alpha c^mask P^nu`` with
``nu2 = 2*nu``.  x_i and c_i act by left multiplication, a group element
``(lambda, w)`` by ``f c P^nu -> f^w c^w P^(lambda + w nu)``, and s_i by
divided-difference operators.  Every division is exact; a nonzero remainder
raises :class:`~spindaha.weyl.IntegrityError`.
"""

from __future__ import annotations

from functools import lru_cache

from .clifford import act_mask, format_mask, mask_indices, mono_mul
from .extweyl import ExtWeylElem
from .heckecliff import Params, THCAlgebra, act_poly_key, clifford_x_sign, format_x, thc
from .linear import Algebra, Element
from .scalar import ONE, SQRT2, Scalar
from .weyl import IntegrityError, WeylElem, WeylType

__all__ = ["EModule", "emodule", "act", "divide_linear", "divide_by_x"]


def _add(acc: dict, k, c):
    if k in acc:
        s = acc[k] + c
        if s:
            acc[k] = s
        else:
            del acc[k]
    elif c:
        acc[k] = c


def divide_linear(f: dict, a: int, b: int, sb: int) -> dict:
    """Exact quotient of f by (x_a + sb x_b), indices 0-based, f as {alpha: coeff}."""
    if not f:
        return {}
    by_deg: dict[int, dict] = {}
    for alpha, c in f.items():
        k = alpha[a]
        rest = alpha[:a] + (0,) + alpha[a + 1:]
        _add(by_deg.setdefault(k, {}), rest, c)
    top = max(by_deg)
    # divide by (x_a - r) with r = -sb x_b: q_{k-1} = f_k + r q_k
    quot: dict = {}
    q: dict = {}
    for k in range(top, 0, -1):
        cur = dict(by_deg.get(k, {}))
        for alpha, c in q.items():
            beta = list(alpha)
            beta[b] += 1
            _add(cur, tuple(beta), -c if sb > 0 else c)
        q = cur
        for alpha, c in q.items():
            beta = list(alpha)
            beta[a] = k - 1
            _add(quot, tuple(beta), c)
    rem = dict(by_deg.get(0, {}))
    for alpha, c in q.items():
        beta = list(alpha)
        beta[b] += 1
        _add(rem, tuple(beta), -c if sb > 0 else c)
    if rem:
        raise IntegrityError("divided difference is not exact")
    return quot


def divide_by_x(f: dict, a: int) -> dict:
    out = {}
    for alpha, c in f.items():
        if alpha[a] == 0:
            raise IntegrityError("divided difference is not exact")
        beta = list(alpha)
        beta[a] -= 1
        out[tuple(beta)] = c
    return out


def _poly_act(w: WeylElem, f: dict) -> dict:
    out = {}
    for alpha, c in f.items():
        s, beta = act_poly_key(w, alpha)
        _add(out, beta, c if s > 0 else -c)
    return out


def _negate_vars(f: dict, idx: tuple[int, ...]) -> dict:
    out = {}
    for alpha, c in f.items():
        odd = sum(alpha[i] for i in idx) & 1
        out[alpha] = -c if odd else c
    return out


def _sub(f: dict, g: dict) -> dict:
    out = dict(f)
    for k, c in g.items():
        _add(out, k, -c)
    return out


class EModule(Algebra):
    """The vector space E; ``mul`` is not defined, use :func:`act`."""

    name = "E"

    def __init__(self, typ: WeylType, params: Params = Params()):
        self.typ = typ
        self.n = typ.n
        self.params = params
        self.H: THCAlgebra = thc(typ, params)
        self.group = self.H.group

    def one_key(self):
        return ((0,) * self.n, 0, (0,) * self.n)

    def mul(self, a, b):
        raise TypeError("E is a module, not an algebra")

    def key_parity(self, key) -> int:
        return key[1].bit_count() & 1

    def format_key(self, key) -> str:
        alpha, m, nu2 = key
        ps = []
        for i, e in enumerate(nu2):
            if e:
                ex = str(e // 2) if e % 2 == 0 else f"{e}/2"
                ps.append(f"P{i + 1}" if ex == "1" else f"P{i + 1}^({ex})")
        parts = [format_x(alpha), format_mask(m), " ".join(ps)]
        return " ".join(p for p in parts if p)

    def sort_key(self, key):
        alpha, m, nu2 = key
        return (-sum(alpha), tuple(-a for a in alpha), m.bit_count(), mask_indices(m), nu2)

    def vector(self, alpha, mask=0, nu=None, coeff=ONE) -> Element:
        nu2 = tuple(2 * x for x in nu) if nu is not None else (0,) * self.n
        return self.monomial((tuple(alpha), mask, tuple(int(x) for x in nu2)), coeff)

    def vector2(self, alpha, mask, nu2, coeff=ONE) -> Element:
        return self.monomial((tuple(alpha), mask, tuple(nu2)), coeff)

    # -- letter actions -------------------------------------------------------------

    def act_x(self, i: int, v: Element) -> Element:
        out = {}
        for (alpha, m, nu), c in v.terms.items():
            a = list(alpha)
            a[i - 1] += 1
            out[(tuple(a), m, nu)] = c
        return Element(self, out)

    def act_c(self, i: int, v: Element) -> Element:
        bit = 1 << (i - 1)
        out = {}
        for (alpha, m, nu), c in v.terms.items():
            s, mm = mono_mul(bit, m)
            if alpha[i - 1] & 1:
                s = -s
            out[(alpha, mm, nu)] = c if s > 0 else -c
        return Element(self, out)

    def act_mask(self, mask: int, v: Element) -> Element:
        out = {}
        for (alpha, m, nu), c in v.terms.items():
            s, mm = mono_mul(mask, m)
            s *= clifford_x_sign(mask, alpha)
            out[(alpha, mm, nu)] = c if s > 0 else -c
        return Element(self, out)

    def act_x_monomial(self, alpha: tuple, v: Element) -> Element:
        out = {}
        for (a, m, nu), c in v.terms.items():
            out[(tuple(x + y for x, y in zip(a, alpha)), m, nu)] = c
        return Element(self, out)

    def act_group(self, g: ExtWeylElem, v: Element) -> Element:
        """The pure group action f c P^nu -> f^w c^w P^(lambda + w nu)."""
        w = g.fin
        out: dict = {}
        for (alpha, m, nu), c in v.terms.items():
            s1, beta = act_poly_key(w, alpha)
            s2, mm = act_mask(w, m)
            k = (beta, mm, g.act_exponent2(nu))
            _add(out, k, c if s1 * s2 > 0 else -c)
        return Element(self, out)

    def _groups(self, v: Element) -> dict:
        groups: dict = {}
        for (alpha, m, nu), c in v.terms.items():
            groups.setdefault((m, nu), {})[alpha] = c
        return groups

    def act_s(self, i: int, v: Element) -> Element:
        """Divided-difference action of s_i."""
        n, fam = self.n, self.typ.family
        u, vv = self.params.u, self.params.v
        s = self.typ.simple_reflection(i)
        out: dict = {}
        for (alpha, m, nu), c in self.act_group(ExtWeylElem.finite(s), v).terms.items():
            out[(alpha, m, nu)] = c
        for (m, nu), f in self._groups(v).items():
            fs = _poly_act(s, f)
            if i < n:
                a, b = i - 1, i
                # u (f - f^s)/(x_{i+1} - x_i)
                d1 = divide_linear(_sub(f, fs), b, a, -1)
                # u (f^eps - f^s)/(x_{i+1} + x_i), then c_i c_{i+1} on the left of c
                d2 = divide_linear(_sub(_negate_vars(f, (a, b)), fs), b, a, 1)
                pair = (1 << a) | (1 << b)
                terms = [(d1, 0, u), (d2, pair, u)]
            elif fam == "D":
                a, b = n - 2, n - 1
                # -u (f - f^s)/(x_n + x_{n-1}) + u (f^eps - f^s)/(x_n - x_{n-1}) c_{n-1} c_n
                d1 = divide_linear(_sub(f, fs), b, a, 1)
                d2 = divide_linear(_sub(_negate_vars(f, (a, b)), fs), b, a, -1)
                pair = (1 << a) | (1 << b)
                terms = [(d1, 0, -u), (d2, pair, u)]
            else:
                # -sqrt2 v (f - f^s)/(2 x_n)
                d1 = divide_by_x(_sub(f, fs), n - 1)
                terms = [(d1, 0, -(SQRT2 * vv) / 2)]
            for poly, left, coef in terms:
                sign, mask = mono_mul(left, m)
                for alpha, c in poly.items():
                    cc = c * coef
                    _add(out, (alpha, mask, nu), cc if sign > 0 else -cc)
        return Element(self, out)

    def act_letter(self, l, v: Element) -> Element:
        if l[0] == "s":
            return self.act_s(l[1], v)
        return self.act_group(self.group.letter(l), v)

    def act_group_elem(self, g: ExtWeylElem, v: Element) -> Element:
        """Action of the algebra element g (letters applied right to left)."""
        for l in reversed(self.group.canonical_word(g)):
            v = self.act_letter(l, v)
        return v

    def act(self, a: Element, v: Element) -> Element:
        if a.alg is not self.H:
            raise TypeError("element does not belong to this algebra")
        cache: dict = {}
        acc: dict = {}
        for (alpha, m, g), c in a.terms.items():
            gv = cache.get(g)
            if gv is None:
                gv = self.act_group_elem(g, v)
                cache[g] = gv
            w = self.act_x_monomial(alpha, self.act_mask(m, gv)) if (m or any(alpha)) else gv
            for k, cc in w.terms.items():
                _add(acc, k, cc * c)
        return Element(self, acc)

    def random_vector(self, rng, terms: int = 3, max_deg: int = 3, max_nu: int = 2) -> Element:
        out = self.zero()
        half = self.typ.family == "D" and rng.random() < 0.5
        for _ in range(terms):
            alpha = [0] * self.n
            for _ in range(rng.randint(0, max_deg)):
                alpha[rng.randrange(self.n)] += 1
            nu2 = tuple(2 * rng.randint(-max_nu, max_nu) + (1 if half else 0) for _ in range(self.n))
            out = out + self.vector2(tuple(alpha), rng.randrange(1 << self.n), nu2, Scalar(rng.randint(1, 4)))
        return out


@lru_cache(maxsize=None)
def _emodule(typ: WeylType, params: Params) -> EModule:
    return EModule(typ, params)


def emodule(typ: WeylType, params: Params | None = None) -> EModule:
    return _emodule(typ, params or Params())


def act(a: Element, v: Element) -> Element:
    H = a.alg
    return emodule(H.typ, H.params).act(a, v)
