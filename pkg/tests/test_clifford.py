from hypothesis import given
from hypothesis import strategies as st

import pytest

from spindaha import WeylType, clifford, ext_group
from spindaha.clifford import act_fin, beta_element, ext_weyl_action, reverse, upsilon_element, versor_inverse
from spindaha.scalar import ONE, SQRT2, Scalar

N = 4
C = clifford(N)


def word_product(a: tuple, b: tuple) -> tuple[int, tuple]:
    """Sort the concatenated generator word by adjacent swaps, cancelling squares."""
    w = list(a + b)
    sign = 1
    changed = True
    while changed:
        changed = False
        for k in range(len(w) - 1):
            if w[k] > w[k + 1]:
                w[k], w[k + 1] = w[k + 1], w[k]
                sign = -sign
                changed = True
            elif w[k] == w[k + 1]:
                del w[k:k + 2]
                changed = True
                break
    return sign, tuple(w)


def indices(mask: int) -> tuple:
    return tuple(i for i in range(N) if mask >> i & 1)


def to_mask(idx: tuple) -> int:
    return sum(1 << i for i in idx)


elements = st.dictionaries(st.integers(0, (1 << N) - 1), st.integers(-3, 3).filter(bool), max_size=4).map(
    lambda d: C.elem({k: Scalar(v) for k, v in d.items()})
)


@given(elements, elements)
def test_product_matches_word_sorting(a, b):
    expected = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            s, w = word_product(indices(ka), indices(kb))
            k = to_mask(w)
            expected[k] = expected.get(k, 0) + s * ca * cb
    assert a * b == C.elem({k: v for k, v in expected.items() if v})


@given(elements, elements, elements)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(elements, elements)
def test_reverse_is_an_anti_automorphism(a, b):
    assert reverse(a * b) == reverse(b) * reverse(a)


@given(elements, elements)
def test_weyl_action_is_an_automorphism(a, b):
    G = ext_group(WeylType("B", N))
    for g in G.ball(2):
        assert ext_weyl_action(g, a * b) == ext_weyl_action(g, a) * ext_weyl_action(g, b)


def test_generator_relations():
    c1, c2 = C.gen(1), C.gen(2)
    assert c1 * c1 == C.one()
    assert c2 * c1 == -(c1 * c2)
    assert str(c2 * c1) == "-c1 c2"


def test_beta_and_upsilon_elements():
    h = ONE / SQRT2
    assert beta_element(WeylType("A", 2), 1) == (clifford(2).gen(1) - clifford(2).gen(2)) * h
    assert beta_element(WeylType("B", 2), 2) == clifford(2).gen(2)
    assert beta_element(WeylType("D", 4), 4) == (C.gen(3) + C.gen(4)) * h
    assert upsilon_element(4, 1) == (C.gen(1) + C.gen(4)) * h
    assert upsilon_element(4, 1) ** 2 == C.one()


@pytest.mark.parametrize("f,n", [("A", 4), ("B", 3), ("D", 4)])
def test_beta_anticommutators_reproduce_the_bilinear_form(f, n):
    typ = WeylType(f, n)
    B = typ.bilinear_form()
    one = clifford(n).one()
    for i in range(1, typ.rank + 1):
        bi = beta_element(typ, i)
        for j in range(1, typ.rank + 1):
            bj = beta_element(typ, j)
            want = 2 if i == j else B[i - 1][j - 1]
            assert bi * bj + bj * bi == one.scale(want)


@pytest.mark.parametrize("f,n", [("A", 4), ("B", 3), ("D", 4)])
def test_beta_conjugation_is_minus_the_reflection(f, n):
    typ = WeylType(f, n)
    Cn = clifford(n)
    for i in range(1, typ.rank + 1):
        b = beta_element(typ, i)
        s = typ.simple_reflection(i)
        for j in range(1, n + 1):
            assert b * Cn.gen(j) * b == -act_fin(s, Cn.gen(j))


def test_weyl_action_examples():
    A = WeylType("A", 2)
    C2 = clifford(2)
    assert act_fin(A.simple_reflection(1), C2.gen(1)) == C2.gen(2)
    G = ext_group(WeylType("B", 2))
    assert ext_weyl_action(G.pi(1), C2.gen(1)) == -C2.gen(1)
    assert ext_weyl_action(G.identity(), C2.gen(1) * C2.gen(2)) == C2.gen(1) * C2.gen(2)


def test_versor_inverse():
    v = beta_element(WeylType("A", 4), 2) * upsilon_element(4, 1)
    assert v * versor_inverse(v) == C.one()
