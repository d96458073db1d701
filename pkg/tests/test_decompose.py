import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from stringalg.decompose import (
    BandModule, Decomposition, StringModule, cg_tensor, jordan_tensor, make_string, normalize_band,
    parse_indecomposable,
)
from stringalg.generators import random_indecomposable, random_string_algebra
from stringalg.oracle import realize, tensor_rep, decomposition_rep
from stringalg.shapes import ShapeError

GP3_PAIR = """\
15× S[@x]
3× S[a]
1× S[a a b^-]
1× S[a^- b]
1× S[b]
"""


def test_jordan_tensor_examples():
    assert jordan_tensor(3, 2, 5, 3).sizes == (4, 2)
    assert jordan_tensor(3, 2, 5, 3).eigenvalue == 15
    assert jordan_tensor(7, 1, 2, 1).sizes == (1,)
    jd = jordan_tensor(2, 3, Fraction(1, 2), 3)
    assert jd.eigenvalue == 1 and jd.sizes == (5, 3, 1)


@given(st.integers(1, 12), st.integers(1, 12))
def test_jordan_tensor_dimension(s, t):
    jd = jordan_tensor(1, s, 1, t)
    assert jd.dimension == s * t
    assert len(jd.sizes) == min(s, t)
    assert jordan_tensor(1, t, 1, s) == jd


def test_jordan_rejects_floats_and_zero():
    with pytest.raises(TypeError):
        jordan_tensor(0.5, 2, 1, 2)
    with pytest.raises(ValueError):
        jordan_tensor(0, 2, 1, 2)
    with pytest.raises(ValueError):
        jordan_tensor(1, 0, 1, 2)


def test_gp3_pair(gp3):
    u = make_string(gp3, "a a b^- a")
    v = make_string(gp3, "b^- a a b^- b^-")
    d = cg_tensor(u, v)
    assert d.format() == GP3_PAIR
    assert d.dimension == 30
    assert sum(d.values()) == 21


def test_records_format(gp3):
    d = cg_tensor(make_string(gp3, "a"), make_string(gp3, "b"))
    assert d.format("records") == "4\tS\t@x\n"  # 2 x 2 dimensional, both arrows act by zero


def test_vertex_string_is_a_unit_on_its_support(gp3, kron):
    x = make_string(gp3, "@x")
    assert cg_tensor(x, x) == Decomposition({x: 1})
    assert cg_tensor(make_string(kron, "@x"), make_string(kron, "@y")) == Decomposition()


def test_parse_indecomposable(gp3, kron):
    assert str(parse_indecomposable(gp3, "S[b^- a]")) == "S[a^- b]"
    assert str(parse_indecomposable(gp3, "b^- a")) == "S[a^- b]"
    b = parse_indecomposable(kron, "B[(b a^-), 3, 2]")
    assert str(b) == "B[(a b^-), 1/3, 2]"
    assert b == normalize_band(kron, "(a b^-)", Fraction(1, 3), 2)
    with pytest.raises(ShapeError):
        parse_indecomposable(gp3, "(a b^-)")


def test_band_normalization(kron, gp3):
    ref = normalize_band(kron, "(a b^-)", 2, 3)
    assert normalize_band(kron, "(b^- a)", 2, 3) == ref  # rotation keeps the eigenvalue
    assert normalize_band(kron, "(b a^-)", Fraction(1, 2), 3) == ref  # reversal inverts it
    with pytest.raises(ShapeError):
        normalize_band(gp3, "(a b^- a b^-)", 2, 1)
    with pytest.raises(ShapeError):
        normalize_band(gp3, "a b^-", 2, 1)


def test_kronecker_band_product(kron):
    u = parse_indecomposable(kron, "B[(a b^-), 2, 2]")
    v = parse_indecomposable(kron, "B[(a b^-), 3, 3]")
    assert [str(k) for k, _ in cg_tensor(u, v).items_sorted()] == ["B[(a b^-), 6, 2]", "B[(a b^-), 6, 4]"]


def test_string_times_band(kron):
    b = parse_indecomposable(kron, "B[(a b^-), 5, 3]")
    s = make_string(kron, "a")
    assert cg_tensor(s, b) == cg_tensor(b, s) == Decomposition({s: 3})


def test_gp_band_square(gp3):
    b = parse_indecomposable(gp3, "B[(a b^-), 2, 2]")
    d = cg_tensor(b, b)
    x = make_string(gp3, "@x")
    assert d[x] == 8
    assert d[BandModule(b.shape, Fraction(4), 1)] == 1
    assert d[BandModule(b.shape, Fraction(4), 3)] == 1


def test_mixed_presentations_rejected(gp3, kron):
    with pytest.raises(ValueError):
        cg_tensor(make_string(gp3, "a"), make_string(kron, "a"))


def test_sort_order(gp3):
    d = cg_tensor(parse_indecomposable(gp3, "B[(a b^-), 2, 2]"), parse_indecomposable(gp3, "B[(a b^-), 1/2, 1]"))
    kinds = [isinstance(k, StringModule) for k, _ in d.items_sorted()]
    assert kinds == sorted(kinds, reverse=True)  # strings before bands


@settings(max_examples=40)
@given(st.integers(0, 10_000), st.randoms(use_true_random=False))
def test_commutative_and_dimension_vectors(seed, rnd):
    pres = random_string_algebra(random.Random(seed))
    u = random_indecomposable(pres, rnd, max_len=4, max_size=2)
    v = random_indecomposable(pres, rnd, max_len=4, max_size=2)
    d = cg_tensor(u, v)
    assert d == cg_tensor(v, u)
    # dimension vectors agree with the concrete tensor product
    assert decomposition_rep(d, pres).dim_vector() == tensor_rep(realize(u), realize(v)).dim_vector()
