import random

import pytest
from hypothesis import given, settings, strategies as st

from stringalg.generators import random_string_algebra
from stringalg.presentations import kronecker, linear_quiver
from stringalg.shapes import (
    QuiverMap, Shape, ShapeError, ShapeWord, canonical_cyclic, canonical_word, count_factorizations,
    enumerate_cyclic_shapes, enumerate_linear_shapes, factorization_count, has_trivial_automorphisms,
    is_compatible, is_strict, shape_from_map, shape_from_word, shapes_isomorphic, subshape_leq, subshapes,
)

import oracles

W = ShapeWord.parse


def words(ws):
    return [str(w) for w in ws]


def test_gp3_pair_shape(gp3):
    F = shape_from_word(gp3, "a a b^- a")
    assert F.n_vertices == 5
    assert F.arrow_images == ("a", "a", "b", "a")
    # the b arrow points backwards: from vertex 3 to vertex 2
    assert F.domain_arrows[2] == (2, 3, 2)


def test_vertex_shape(gp3):
    F = shape_from_word(gp3, "@x")
    assert F.n_vertices == 1 and F.domain_arrows == ()


@pytest.mark.parametrize("word, message", [
    ("a a^-", "not strict"),
    ("a a a", "not compatible"),
    ("(a b^- a b^-)", "nontrivial automorphism"),
    ("@z", "unknown vertex"),
])
def test_shape_errors(gp3, word, message):
    with pytest.raises(ShapeError, match=message):
        shape_from_word(gp3, word)


def test_walk_must_compose(kron):
    with pytest.raises(ShapeError, match="not a walk"):
        shape_from_word(kron, "a b")


def test_compatibility(gp3):
    assert is_compatible(W("a a"), gp3.relations)
    assert not is_compatible(W("a a a"), gp3.relations)
    assert is_compatible(W("a b^-"), gp3.relations)
    assert not is_compatible(W("b a"), gp3.relations)


def test_uniform_cycle_compatibility():
    from stringalg.quiver import make_presentation
    p = make_presentation("xy", [("a", "x", "y"), ("b", "y", "x")], [("b", "a")])
    # going round the cycle runs a then b, which is the relation
    assert not is_compatible(W("(a b)"), p.relations)


def test_is_strict():
    ident = QuiverMap((0, 1), ((0, 0, 1),), {0: "x", 1: "y"}, {0: "a"})
    assert is_strict(ident)
    two = QuiverMap((0, 1), ((0, 0, 1), (1, 0, 1)), {0: "x", 1: "y"}, {0: "a", 1: "a"})
    assert not is_strict(two)


def test_canonical_forms():
    assert str(canonical_word(W("b a^-"))) == "a b^-"
    w, flipped = canonical_cyclic(W("(b a^-)"))
    assert str(w) == "(a b^-)" and flipped
    w, flipped = canonical_cyclic(W("(b^- a)"))
    assert str(w) == "(a b^-)" and not flipped


def test_letter_order():
    assert W("a") < W("a^-") < W("b")


def test_parse_roundtrip():
    for text in ("a a b^- a", "(a b^-)", "@x", "a0 a3^-"):
        assert str(W(text)) == text


def test_isomorphism_examples(gp3, kron):
    F = shape_from_word(gp3, "a a b^- a")
    assert shapes_isomorphic(F, shape_from_word(gp3, "a^- b a^- a^-"))
    assert not shapes_isomorphic(shape_from_word(gp3, "a^- b"), shape_from_word(gp3, "a a b^-"))
    assert shapes_isomorphic(shape_from_word(kron, "(a b^-)"), shape_from_word(kron, "(b^- a)"))


def test_automorphisms(gp3, kron):
    assert has_trivial_automorphisms(W("(a b^-)"))
    assert not has_trivial_automorphisms(W("(a b^- a b^-)"))
    assert has_trivial_automorphisms(shape_from_word(kron, "(a b^-)"))


def test_enumeration_examples(gp3, kron):
    assert words(enumerate_linear_shapes(gp3, 0)) == ["@x"]
    assert words(enumerate_linear_shapes(gp3, 1)) == ["@x", "a", "b"]
    assert words(enumerate_linear_shapes(kron, 2)) == ["@x", "@y", "a", "a b^-", "a^- b", "b"]
    assert words(enumerate_cyclic_shapes(kron, 2)) == ["(a b^-)"]
    assert words(enumerate_cyclic_shapes(gp3, 2)) == ["(a b^-)"]
    assert enumerate_cyclic_shapes(linear_quiver(">"), 4) == []


@pytest.mark.parametrize("name, n", [("gp3", 5), ("kron", 4), ("gentle4", 5)])
def test_enumeration_matches_brute_force(request, name, n):
    pres = request.getfixturevalue(name)
    lin = enumerate_linear_shapes(pres, n)
    assert {oracles.word_class(w) for w in lin} == oracles.linear_classes(pres, n)
    assert len(set(map(oracles.word_class, lin))) == len(lin)
    cyc = enumerate_cyclic_shapes(pres, n)
    assert {oracles.word_class(w) for w in cyc} == oracles.cyclic_classes(pres, n)


@settings(max_examples=15)
@given(st.integers(0, 10_000))
def test_random_enumeration_matches_brute_force(seed):
    pres = random_string_algebra(random.Random(seed), max_arrows=6)
    lin = enumerate_linear_shapes(pres, 3)
    assert {oracles.word_class(w) for w in lin} == oracles.linear_classes(pres, 3)
    cyc = enumerate_cyclic_shapes(pres, 4)
    assert {oracles.word_class(w) for w in cyc} == oracles.cyclic_classes(pres, 4)


def test_factorization_examples(gp3):
    F = shape_from_word(gp3, "a a b^- a")
    assert count_factorizations(F, F).count == 1
    assert factorization_count(F, shape_from_word(gp3, "a")) == 3
    assert factorization_count(F, shape_from_word(gp3, "@x")) == 5
    assert factorization_count(shape_from_word(gp3, "a"), F) == 0
    assert subshape_leq(shape_from_word(gp3, "a a"), F)
    assert subshape_leq(F, F)
    assert subshape_leq(shape_from_word(gp3, "@x"), F)


def test_cyclic_target_counts(kron):
    G = shape_from_word(kron, "(a b^-)")
    assert factorization_count(G, G) == 1
    assert factorization_count(G, shape_from_word(kron, "a b^- a b^-")) == 1
    assert factorization_count(G, shape_from_word(kron, "@x")) == 1


def _shapes(pres, n):
    return [Shape(pres, w) for w in enumerate_linear_shapes(pres, n)]


@pytest.mark.parametrize("name", ["gp3", "kron", "gentle4"])
def test_factorizations_match_word_oracle(request, name):
    pres = request.getfixturevalue(name)
    lin = _shapes(pres, 4)
    targets = lin + [Shape(pres, w) for w in enumerate_cyclic_shapes(pres, 4)]
    for F in targets:
        for Fp in lin:
            want = oracles.factor_count(pres, oracles.as_triple(F.word), oracles.as_triple(Fp.word))
            assert factorization_count(F, Fp) == want, (str(F), str(Fp))


@settings(max_examples=25)
@given(st.integers(0, 10_000), st.randoms(use_true_random=False))
def test_random_factorizations_match_word_oracle(seed, rnd):
    pres = random_string_algebra(random.Random(seed))
    lin = _shapes(pres, 5)
    cyc = [Shape(pres, w) for w in enumerate_cyclic_shapes(pres, 5)]
    for _ in range(20):
        F = rnd.choice(lin + cyc)
        Fp = rnd.choice(lin)
        want = oracles.factor_count(pres, oracles.as_triple(F.word), oracles.as_triple(Fp.word))
        assert factorization_count(F, Fp) == want


def test_subshapes(gp3):
    F = shape_from_word(gp3, "a a b^- a")
    subs = words(sorted(subshapes(F)))
    assert subs == ["@x", "a", "a a", "a a b^-", "a a b^- a", "a b^-", "a b^- a", "a^- b", "b"]
    for w in subshapes(F):
        assert factorization_count(F, Shape(gp3, w)) > 0


def test_shape_from_map_reads_walks(gp3):
    F = shape_from_word(gp3, "a a b^- a")
    assert canonical_word(shape_from_map(gp3, F.qmap).word) == canonical_word(F.word)
    G = shape_from_word(gp3, "(a b^-)")
    assert canonical_word(shape_from_map(gp3, G.qmap).word) == G.word


def test_subshapes_reject_cycles(kron):
    with pytest.raises(ShapeError):
        subshapes(shape_from_word(kron, "(a b^-)"))
