import random

import pytest

from conftest import types
from spindaha import IntegrityError, WeylType, center_check, equal, pbw_probe, thc
from spindaha.erep import emodule
from spindaha.parse import parse
from spindaha.thcverify import commutes_with_generators, elementary_x2, faithful_probe, pbw_columns, pbw_rank_exact, probe_exponents


def test_oracle_examples():
    H = thc(WeylType("A", 2))
    a = parse("s1*x1", H)
    assert equal(a, a).equal
    v = equal(a, parse("x2*s1 - (1 - c2*c1)", H))
    assert v.coords_equal and v.probe_equal
    v = equal(H.x(1), H.x(2))
    assert not v.coords_equal and not v.probe_equal


def test_probe_witnesses_the_difference_at_high_degree():
    H = thc(WeylType("A", 2))
    E = emodule(H.typ)
    d = H.x(1) - H.x(2)
    out = E.act(d, faithful_probe(E, d))
    assert out and max(sum(k[0]) for k in out.terms) == 3


def test_oracle_raises_when_the_two_answers_disagree(monkeypatch):
    H = thc(WeylType("A", 2))
    E = emodule(H.typ)
    monkeypatch.setattr(E, "act", lambda a, v: E.zero())
    with pytest.raises(IntegrityError):
        equal(H.x(1), H.zero())


@pytest.mark.parametrize("typ", types([("A", 2), ("B", 2), ("D", 4)]))
def test_oracle_concordance_on_random_pairs(typ):
    H = thc(typ)
    rng = random.Random(5)
    for _ in range(40):
        p, q = H.random_element(rng), H.random_element(rng)
        assert equal(p * (q * p), (p * q) * p).equal
        v = equal(p, q)
        assert v.coords_equal == v.probe_equal


def test_small_independent_set():
    H = thc(WeylType("A", 2))
    G = H.group
    E = emodule(H.typ)
    cols = [H.one(), H.x(1), H.c(1), H.gen("s", 1)]
    probes = [E.vector(N) for N in probe_exponents(H.typ)] + [E.vector((3, 1)), E.vector((0, 0))]
    assert pbw_rank_exact(H, cols, probes) == 4
    mono = [((0, 0), 0, G.identity()), ((1, 0), 0, G.identity()), ((0, 0), 1, G.identity()), ((0, 0), 0, G.s(1))]
    assert pbw_probe(H.typ, monomials=mono).independent


def test_duplicate_is_dependent():
    G = thc(WeylType("A", 2)).group
    m = ((1, 0), 1, G.s(1))
    assert not pbw_probe(WeylType("A", 2), monomials=[m, m]).independent


def test_pi_powers_with_low_degree_polynomials():
    typ = WeylType("A", 2)
    G = thc(typ).group
    gs = [G.identity(), G.pi(1), G.pi(1) ** 2]
    alphas = [(a, b) for a in range(3) for b in range(3) if a + b <= 2]
    mono = [(a, 0, g) for a in alphas for g in gs]
    res = pbw_probe(typ, monomials=mono)
    assert res.independent and res.columns == 18


def test_leading_term_rank_agrees_with_exact_rank():
    typ = WeylType("B", 2)
    H = thc(typ)
    E = emodule(typ)
    keys = pbw_columns(typ, radius=1, max_deg=1)
    cols = [H.monomial(k) for k in keys]
    probes = [E.vector(N) for N in probe_exponents(typ)]
    assert pbw_rank_exact(H, cols, probes) == len(keys) == pbw_probe(typ, radius=1, max_deg=1).rank


def test_probe_exponents_cover_parity_classes():
    assert probe_exponents(WeylType("A", 3)) == [(0, 4, 8)]
    ex = probe_exponents(WeylType("D", 4))
    assert len(ex) == 16 and len({tuple(x % 2 for x in N) for N in ex}) == 16


@pytest.mark.parametrize("typ", types())
def test_full_pbw_probe(typ):
    assert pbw_probe(typ).independent
    assert not pbw_probe(typ, duplicate=True).independent


@pytest.mark.parametrize("typ", types([("A", 3), ("B", 2), ("D", 4)]))
def test_center(typ):
    H = thc(typ)
    for k in range(1, typ.n + 1):
        assert all(c.ok for c in center_check(H, elementary_x2(H, k)))
    assert all(c.ok for c in center_check(H, H.one()))


def test_center_check_rejects_non_invariant_input():
    H = thc(WeylType("A", 3))
    with pytest.raises(ValueError):
        center_check(H, H.x_monomial((2, 0, 0)))
    with pytest.raises(ValueError):
        center_check(H, H.x(1))


def test_non_central_element_is_reported():
    H = thc(WeylType("A", 2))
    checks = commutes_with_generators(H, H.x_monomial((2, 2)) + H.x(1))
    assert not all(c.ok for c in checks)
    assert any(c.ok for c in checks)
