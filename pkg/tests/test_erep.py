import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import types
from spindaha import IntegrityError, Params, WeylType, thc
from spindaha.erep import divide_by_x, divide_linear, emodule
from spindaha.scalar import ParamPoly, Scalar

U = ParamPoly.u()


def test_simple_reflection_on_vacuum_and_on_x1():
    E = emodule(WeylType("A", 2), Params.symbolic())
    H = E.H
    vac = E.vector((0, 0))
    assert E.act(H.gen("s", 1), vac) == vac
    got = E.act(H.gen("s", 1), E.vector((1, 0)))
    want = E.vector((0, 1)) - vac.scale(U) + E.vector((0, 0), 0b11).scale(-U)
    assert got == want
    # oracle: straighten s1 x1 first, then act on the vacuum
    assert got == E.act(H.gen("s", 1) * H.x(1), vac)


def test_pi_on_vacuum():
    E = emodule(WeylType("A", 3))
    assert E.act(E.H.gen("pi", 1), E.vector((0, 0, 0))) == E.vector((0, 0, 0), 0, (1, 0, 0))
    D = emodule(WeylType("D", 4))
    half = D.vector2((0, 0, 0, 0), 0, (1, 1, 1, 1))
    assert D.act(D.H.gen("pi", 4), D.vector((0, 0, 0, 0))) == half


def test_half_exponent_under_the_last_reflection():
    E = emodule(WeylType("B", 2))
    v = E.vector2((0, 0), 0, (0, 1))
    assert E.act(E.H.gen("s", 2), v) == E.vector2((0, 0), 0, (0, -1))
    assert E.act(E.H.gen("s", 1), E.vector((0, 0), 0, (1, 0))) == E.vector((0, 0), 0, (0, 1))


@pytest.mark.parametrize("typ", types())
def test_action_is_a_homomorphism(typ):
    E = emodule(typ)
    H = E.H
    rng = random.Random(f"hom-{typ}")
    for _ in range(25):
        a, b = H.random_element(rng, 2, 2, 3), H.random_element(rng, 2, 2, 3)
        e = E.random_vector(rng)
        assert E.act(a * b, e) == E.act(a, E.act(b, e))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_action_is_a_homomorphism_with_formal_parameters(seed):
    E = emodule(WeylType("D", 4), Params.symbolic())
    rng = random.Random(seed)
    a, b = E.H.random_element(rng, 2, 2, 2), E.H.random_element(rng, 2, 2, 2)
    e = E.random_vector(rng, 2, 2, 1)
    assert E.act(a * b, e) == E.act(a, E.act(b, e))


polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 2)),
    st.integers(-5, 5).filter(bool),
    max_size=5,
)


def mul(f, g):
    out = {}
    for a, c in f.items():
        for b, d in g.items():
            k = tuple(x + y for x, y in zip(a, b))
            out[k] = out.get(k, 0) + c * d
    return {k: c for k, c in out.items() if c}


@given(polys, st.sampled_from([1, -1]))
def test_divide_linear_inverts_multiplication(q, sb):
    lin = {(1, 0, 0): 1, (0, 1, 0): sb}
    assert divide_linear(mul(q, lin), 0, 1, sb) == {k: v for k, v in q.items() if v}


def test_divide_linear_rejects_a_remainder():
    with pytest.raises(IntegrityError):
        divide_linear({(1, 0): 1, (0, 0): 1}, 0, 1, -1)
    with pytest.raises(IntegrityError):
        divide_by_x({(0, 2): 1}, 0)


def test_coefficients_stay_exact():
    E = emodule(WeylType("B", 2), Params(Scalar(1), Scalar.parse("1/3")))
    out = E.act(E.H.gen("s", 2), E.vector((0, 3)))
    assert all(isinstance(c, Scalar) for c in out.terms.values())


def test_foreign_element_is_rejected():
    E = emodule(WeylType("A", 2))
    with pytest.raises(TypeError):
        E.act(thc(WeylType("A", 3)).one(), E.vector((0, 0)))
