from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from ptcoxeter.rootsys import (
    RationalVector,
    apply_word,
    build_group,
    embed,
    fundamental_weights,
    get_embedding,
    weyl_reflect,
)

V = RationalVector.of


def test_root_counts_and_lengths():
    a2, g2 = build_group("A2"), build_group("G2")
    assert len(a2.roots) == 6 and len(g2.roots) == 12
    assert len(a2.positive_roots) == 3 and len(g2.positive_roots) == 6
    assert len(g2.short_roots) == 6 and len(g2.long_roots) == 6
    assert {g2.norm2(r) for r in g2.long_roots} == {Fraction(6)}
    assert {a2.norm2(r) for r in a2.roots} == {Fraction(2)}
    assert a2.coxeter_number == 3 and g2.coxeter_number == 6


def test_positive_roots_g2():
    g2 = build_group("G2")
    assert set(g2.positive_roots) == {V(1, 0), V(1, 1), V(2, 1), V(0, 1), V(3, 1), V(3, 2)}


def test_unknown_group():
    with pytest.raises(ValueError):
        build_group("B2")


def test_bad_generator():
    with pytest.raises(ValueError):
        weyl_reflect(build_group("A2"), 3, V(1, 0))


def test_cartan_entries():
    for name in ("A2", "G2"):
        s = build_group(name)
        for i, j in product((1, 2), repeat=2):
            ai, aj = s.simple(i), s.simple(j)
            assert 2 * s.dot(ai, aj) / s.norm2(aj) == s.cartan[i, j]


def test_a2_reflections():
    a2 = build_group("A2")
    assert weyl_reflect(a2, 1, V(0, 1)) == V(1, 1)
    assert apply_word(a2, (1, 2, 1), V(1, 1)) == V(-1, -1)
    assert apply_word(a2, (), V(1, 0)) == V(1, 0)


def test_word_order_rightmost_first():
    g2 = build_group("G2")
    x = V(1, 0)
    assert apply_word(g2, (1, 2), x) == weyl_reflect(g2, 1, weyl_reflect(g2, 2, x))


@pytest.mark.parametrize("name", ["A2", "G2"])
def test_reflections_are_involutions_permuting_roots(name):
    s = build_group(name)
    roots = set(s.roots)
    for i in (1, 2):
        for r in s.roots:
            img = weyl_reflect(s, i, r)
            assert img in roots
            assert weyl_reflect(s, i, img) == r


def test_longest_element_is_minus_identity_g2():
    g2 = build_group("G2")
    w0 = (1, 2) * 3
    for r in g2.roots:
        assert apply_word(g2, w0, r) == -r


def test_fundamental_weights():
    for name in ("A2", "G2"):
        s = build_group(name)
        lams = fundamental_weights(s)
        for i, j in product((1, 2), repeat=2):
            aj = s.simple(j)
            assert 2 * s.dot(lams[i - 1], aj) / s.norm2(aj) == (1 if i == j else 0)
    assert fundamental_weights(build_group("G2")) == (V(2, 1), V(3, 2))
    assert fundamental_weights(build_group("A2")) == (
        V(Fraction(2, 3), Fraction(1, 3)), V(Fraction(1, 3), Fraction(2, 3)))


@pytest.mark.parametrize("name", ["A2", "G2"])
@pytest.mark.parametrize("basis", ["standard3d", "plane2d"])
def test_embeddings_reproduce_gram(name, basis):
    s = build_group(name)
    e = get_embedding(s, basis)
    for x, y in product(s.roots, repeat=2):
        got = sum(u * v for u, v in zip(e(x), e(y)))
        assert got == pytest.approx(float(s.dot(x, y)), abs=1e-12)


def test_embed_group_mismatch():
    with pytest.raises(ValueError):
        embed(build_group("A2"), get_embedding(build_group("G2")), V(1, 0))


def test_labels():
    assert V(3, 2).label() == "3a1+2a2"
    assert V(-1, 0).label() == "-a1"
    assert V(0, -1).label() == "-a2"
    assert V(0, 0).label() == "0"


@given(st.integers(-5, 5), st.integers(-5, 5), st.lists(st.sampled_from([1, 2]), max_size=8))
def test_reflections_preserve_inner_product(c1, c2, word):
    g2 = build_group("G2")
    x = V(c1, c2)
    y = apply_word(g2, word, x)
    assert g2.norm2(y) == g2.norm2(x)
