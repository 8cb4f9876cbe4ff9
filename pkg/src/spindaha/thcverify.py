"""Checks for H^c: defining relations, a faithful equality oracle, the PBW
independence probe and centrality of symmetric polynomials in x_i^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .erep import EModule, emodule
from .heckecliff import Params, THCAlgebra, act_poly_key, clifford_x_sign, thc
from .linalg import SparseEliminator
from .linear import Element
from .parse import parse
from .report import Check
from .scalar import ONE
from .weyl import IntegrityError, WeylType

__all__ = [
    "thc_relations",
    "verify_thc_presentation",
    "relation_probes",
    "equal",
    "Verdict",
    "pbw_probe",
    "PBWResult",
    "pbw_columns",
    "probe_exponents",
    "pbw_rank_exact",
    "faithful_probe",
    "center_check",
    "commutes_with_generators",
    "elementary_x2",
]


def _cimage(w, i: int) -> str:
    s, j = w.image(i - 1)
    return f"{'-' if s < 0 else ''}c{j + 1}"


def _ximage(w, i: int) -> str:
    s, j = w.image(i - 1)
    return f"{'-' if s < 0 else ''}x{j + 1}"


def thc_relations(typ: WeylType) -> list[tuple[str, str, str]]:
    """Defining relations of H^c as (name, lhs, rhs) strings in the generators."""
    from .extweyl import ext_group

    G = ext_group(typ)
    n, f, rank = typ.n, typ.family, typ.rank
    out = []
    for i in range(1, rank + 1):
        for j in range(i, rank + 1):
            m = typ.coxeter_m(i, j)
            out.append((f"(s{i} s{j})^{m} = 1", f"(s{i} s{j})^{m}", "1"))
    for i in range(1, n + 1):
        out.append((f"c{i}^2 = 1", f"c{i}^2", "1"))
        for j in range(i + 1, n + 1):
            out.append((f"c{i} c{j} = -c{j} c{i}", f"c{i} c{j}", f"-c{j} c{i}"))
            out.append((f"x{i} x{j} = x{j} x{i}", f"x{i} x{j}", f"x{j} x{i}"))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rhs = f"-c{i} x{i}" if i == j else f"c{j} x{i}"
            out.append((f"x{i} c{j} = {rhs}", f"x{i} c{j}", rhs))
    for i in range(1, min(rank, n - 1) + 1):
        w = typ.simple_reflection(i)
        for j in range(1, n + 1):
            out.append((f"s{i} c{j} = c{j}^s{i} s{i}", f"s{i} c{j}", f"{_cimage(w, j)} s{i}"))
        out.append((f"x{i + 1} s{i} - s{i} x{i} = u(1 - c{i + 1} c{i})", f"x{i + 1} s{i} - s{i} x{i}", f"u (1 - c{i + 1} c{i})"))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                out.append((f"x{j} s{i} = s{i} x{j}", f"x{j} s{i}", f"s{i} x{j}"))
    if f == "B":
        out.append((f"s{n} c{n} = -c{n} s{n}", f"s{n} c{n}", f"-c{n} s{n}"))
        for i in range(1, n):
            out.append((f"s{n} c{i} = c{i} s{n}", f"s{n} c{i}", f"c{i} s{n}"))
            out.append((f"s{n} x{i} = x{i} s{n}", f"s{n} x{i}", f"x{i} s{n}"))
        out.append((f"s{n} x{n} = -x{n} s{n} - sqrt2 v", f"s{n} x{n}", f"-x{n} s{n} - sqrt2 v"))
    if f == "D":
        out.append((f"s{n} c{n} = -c{n - 1} s{n}", f"s{n} c{n}", f"-c{n - 1} s{n}"))
        for i in range(1, n - 1):
            out.append((f"s{n} c{i} = c{i} s{n}", f"s{n} c{i}", f"c{i} s{n}"))
            out.append((f"s{n} x{i} = x{i} s{n}", f"s{n} x{i}", f"x{i} s{n}"))
        out.append((f"s{n} x{n} = -x{n - 1} s{n} - u(1 + c{n - 1} c{n})", f"s{n} x{n}", f"-x{n - 1} s{n} - u (1 + c{n - 1} c{n})"))
    for rel in G.relations():
        if rel.name.startswith("(s"):
            continue
        from .extweyl import format_word

        out.append((rel.name, format_word(rel.lhs) or "1", format_word(rel.rhs) or "1"))
    for r in G.pi_indices:
        w = G.sigma(r)
        for i in range(1, n + 1):
            out.append((f"pi{r} x{i} = x{i}^sigma pi{r}", f"pi{r} x{i}", f"{_ximage(w, i)} pi{r}"))
            out.append((f"pi{r} c{i} = c{i}^sigma pi{r}", f"pi{r} c{i}", f"{_cimage(w, i)} pi{r}"))
    return out


def relation_probes(E: EModule) -> list[Element]:
    n = E.n
    mu = tuple(range(n, 0, -1))
    alpha = tuple(range(1, n + 1))
    return [
        E.vector(alpha),
        E.vector((2,) + (0,) * (n - 1), 1, mu),
        E.vector((1,) * n, (1 << n) - 1, tuple(-x for x in mu)),
    ]


def verify_thc_presentation(typ: WeylType, params: Params | None = None) -> list[Check]:
    params = params or Params()
    H = thc(typ, params)
    E = emodule(typ, params)
    probes = relation_probes(E)
    checks = []
    for name, l, r in thc_relations(typ):
        a = parse(l, H, params)
        b = parse(r, H, params)
        d = a - b
        agree = all(not E.act(d, v) for v in probes)
        checks.append(Check(name, str(a), str(b), a == b, probe_agreement=agree))
    return checks


# -- equality oracle -------------------------------------------------------------


@dataclass
class Verdict:
    coords_equal: bool
    probe_equal: bool

    @property
    def equal(self) -> bool:
        return self.coords_equal


def faithful_probe(E: EModule, d: Element) -> Element:
    """A vector on which d acts by zero only if d = 0.

    The probe is x1 x2 (x) c1 (x) P^mu with mu = M (n, n-1, .., 1) and M larger
    than twice every translation in the support of d: the top-degree part of
    d . probe then records each PBW term of d at a distinct basis vector.
    """
    n = E.n
    big = 0
    for (_, _, g) in d.terms:
        big = max([big] + [abs(x) for x in g.lam2])
    m = big + 3
    mu = tuple(m * (n - i) for i in range(n))
    alpha = (1, 1) + (0,) * (n - 2)
    return E.vector(alpha, 1, mu)


def equal(a: Element, b: Element) -> Verdict:
    """Compare normal forms and, independently, the actions on a faithful probe.

    Raises IntegrityError when the two answers disagree.
    """
    H = a.alg
    E = emodule(H.typ, H.params)
    d = a - b
    coords = not d
    probe = faithful_probe(E, d)
    pe = not E.act(d, probe)
    if coords != pe:
        raise IntegrityError("normal form and faithful probe disagree")
    return Verdict(coords, pe)


# -- PBW independence ---------------------------------------------------------------


@dataclass
class PBWResult:
    columns: int
    rank: int
    method: str
    probes: int
    leading_checked: int

    @property
    def independent(self) -> bool:
        return self.rank == self.columns


def probe_exponents(typ: WeylType) -> list[tuple[int, ...]]:
    """Distinct exponents N_k = 4k + b_k, swept over all parity classes b for B and D.

    Only the top-degree term of g . x^N is used, so the exponents need to be
    distinct, not widely separated; small values keep the expansions cheap.
    """
    n = typ.n
    bits = [(0,) * n] if typ.family == "A" else list(product((0, 1), repeat=n))
    return [tuple(4 * k + b[k] for k in range(n)) for b in bits]


def _top_part(v: Element) -> tuple[int, dict]:
    top = max(sum(k[0]) for k in v.terms)
    return top, {k: c for k, c in v.terms.items() if sum(k[0]) == top}


def pbw_columns(typ: WeylType, radius: int = 2, max_deg: int = 2) -> list[tuple]:
    """Keys (alpha, mask, g) with |alpha| <= max_deg, every mask, g in the ball."""
    G = emodule(typ).group
    n = typ.n
    alphas = [a for a in product(range(max_deg + 1), repeat=n) if sum(a) <= max_deg]
    return [(a, m, g) for a in alphas for m in range(1 << n) for g in G.ball(radius)]


def pbw_probe(
    typ: WeylType,
    params: Params | None = None,
    monomials: list[tuple] | None = None,
    radius: int = 2,
    max_deg: int = 2,
    duplicate: bool = False,
) -> PBWResult:
    """Certify linear independence of the PBW monomials x^a c^b g.

    ``monomials`` is a list of keys (alpha, mask, g); by default every key with
    |alpha| <= max_deg and g in the ball of the given radius.  Each g is
    applied to the probes x^N (x) 1 (x) 1 and the top-degree part is required
    to be the single term +-(x^N)^w P^lambda.  The leading vector of a column
    is then x^a c^b applied to those terms; independence of the leading
    vectors within each x-degree layer implies independence of the columns,
    since lower layers cannot reach that degree.  ``duplicate`` appends a copy
    of the first column as a negative control.
    """
    params = params or Params()
    E = emodule(typ, params)
    n = typ.n
    cols = list(monomials) if monomials is not None else pbw_columns(typ, radius, max_deg)
    if duplicate and cols:
        cols.append(cols[0])
    exps = probe_exponents(typ)
    lead: dict = {}
    checked = 0
    for g in dict.fromkeys(c[2] for c in cols):
        row = []
        for k, N in enumerate(exps):
            out = E.act_group_elem(g, E.vector(N))
            top, part = _top_part(out)
            _, wn = act_poly_key(g.fin, N)
            want = (wn, 0, g.act_exponent2((0,) * n))
            if top != sum(N) or set(part) != {want} or part[want] not in (ONE, -ONE):
                raise IntegrityError("leading term of g . x^N is not +-(x^N)^w P^lambda")
            row.append((k, wn, 1 if part[want] == ONE else -1, want[2]))
            checked += 1
        lead[g] = row
    rank = 0
    by_deg: dict[int, list] = {}
    for col in cols:
        by_deg.setdefault(sum(col[0]), []).append(col)
    for layer in by_deg.values():
        elim = SparseEliminator()
        for alpha, m, g in layer:
            vec = {}
            for k, wn, s, lam2 in lead[g]:
                expo = tuple(x + y for x, y in zip(alpha, wn))
                sign = s * clifford_x_sign(m, wn)
                vec[(k, expo, m, lam2)] = ONE if sign > 0 else -ONE
            if elim.add(vec):
                rank += 1
    return PBWResult(len(cols), rank, "leading-term", len(exps), checked)


def pbw_rank_exact(H: THCAlgebra, columns: list[Element], probes: list[Element]) -> int:
    """Exact rank of the actions of the given elements on the probes."""
    E = emodule(H.typ, H.params)
    elim = SparseEliminator()
    rank = 0
    for x in columns:
        vec = {}
        for k, v in enumerate(probes):
            for key, c in E.act(x, v).terms.items():
                vec[(k,) + key] = c
        if elim.add(vec):
            rank += 1
    return rank


# -- center -------------------------------------------------------------------------


def elementary_x2(H: THCAlgebra, k: int) -> Element:
    """e_k(x_1^2, .., x_n^2)."""
    out = H.zero()
    for idx in combinations(range(H.n), k):
        a = [0] * H.n
        for i in idx:
            a[i] = 2
        out = out + H.x_monomial(a)
    return out


def commutes_with_generators(H, z: Element) -> list[Check]:
    checks = []
    for name, g in H.generators():
        lhs, rhs = z * g, g * z
        checks.append(Check(f"[z, {name}] = 0", str(lhs - rhs), "0", lhs == rhs))
    return checks


def center_check(H: THCAlgebra, f: Element) -> list[Check]:
    """Verify that f, a W-invariant polynomial in the x_i^2, is central."""
    for (alpha, m, g), _ in f.terms.items():
        if m or not g.is_identity() or any(a % 2 for a in alpha):
            raise ValueError("center_check expects a polynomial in x_1^2, .., x_n^2")
    for i in range(1, H.typ.rank + 1):
        w = H.typ.simple_reflection(i)
        moved = {}
        for (alpha, m, g), c in f.terms.items():
            s, beta = act_poly_key(w, alpha)
            moved[(beta, m, g)] = c if s > 0 else -c
        if H.elem(moved) != f:
            raise ValueError("center_check expects a W-invariant polynomial")
    return commutes_with_generators(H, f)
