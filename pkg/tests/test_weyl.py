from collections import deque
from itertools import permutations

import pytest

from conftest import types
from spindaha import WeylElem, WeylType
from spindaha.groupalg import verify_weyl_presentation

def cayley_distances(typ):
    """Word-length distances from the identity by breadth-first search."""
    gens = [typ.simple_reflection(i) for i in range(1, typ.rank + 1)]
    dist = {typ.identity(): 0}
    queue = deque([typ.identity()])
    while queue:
        w = queue.popleft()
        for s in gens:
            x = s * w
            if x not in dist:
                dist[x] = dist[w] + 1
                queue.append(x)
    return dist


def lex_least_reduced_word(typ, w, dist):
    word = []
    while dist[w]:
        for i in range(1, typ.rank + 1):
            x = typ.simple_reflection(i) * w
            if dist[x] < dist[w]:
                word.append(i)
                w = x
                break
    return tuple(word)


@pytest.mark.parametrize("typ", types())
def test_group_order_matches_breadth_first_closure(typ):
    if typ.order() > 2000:
        pytest.skip("closure too large for this check")
    assert len(cayley_distances(typ)) == typ.order() == sum(1 for _ in typ.elements())


@pytest.mark.parametrize("typ", types([("A", 3), ("B", 2), ("B", 3), ("D", 4)]))
def test_reduced_words_are_lexicographically_least(typ):
    dist = cayley_distances(typ)
    for w, d in dist.items():
        word = typ.reduced_word(w)
        assert len(word) == d == typ.length(w)
        assert typ.from_word(word) == w
        assert word == lex_least_reduced_word(typ, w, dist)


def test_type_a_length_counts_inversions():
    typ = WeylType("A", 4)
    for p in permutations(range(4)):
        w = WeylElem(tuple(p), (1,) * 4)
        inv = sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
        assert typ.length(w) == inv


@pytest.mark.parametrize("typ", types())
def test_coxeter_relations(typ):
    assert all(c.ok for c in verify_weyl_presentation(typ))


def test_simple_reflections_as_signed_permutations():
    b = WeylType("B", 3)
    assert b.simple_reflection(3).act((1, 2, 3)) == (1, 2, -3)
    d = WeylType("D", 4)
    assert d.simple_reflection(4).act((1, 2, 3, 4)) == (1, 2, -4, -3)
    assert d.coxeter_m(2, 4) == 3 and d.coxeter_m(3, 4) == 2
    assert b.coxeter_m(2, 3) == 4


def test_elements_are_closed_under_product_and_inverse():
    typ = WeylType("D", 4)
    els = set(typ.elements())
    sample = list(els)[:20]
    for a in sample:
        assert a.inverse() in els
        assert a * a.inverse() == typ.identity()
        for b in sample:
            assert a * b in els


@pytest.mark.parametrize("text", ["E6", "A1", "D3", "B"])
def test_bad_types_are_rejected(text):
    with pytest.raises(ValueError):
        WeylType.parse(text)


def test_type_parse():
    assert WeylType.parse("D:5") == WeylType("D", 5)
    assert WeylType.parse("B3") == WeylType("B", 3)
