import random

from hypothesis import given, settings, strategies as st

from stringalg.decompose import BandModule, StringModule
from stringalg.generators import random_algebras, random_indecomposable, random_string_algebra
from stringalg.quiver import validate_string_algebra


@settings(max_examples=80)
@given(st.integers(0, 100_000))
def test_random_algebras_are_valid_and_small(seed):
    pres = random_string_algebra(random.Random(seed))
    assert validate_string_algebra(pres).ok
    assert 1 <= len(pres.quiver.vertices) <= 6
    assert len(pres.quiver.arrows) <= 8


def test_seeded_generation_is_deterministic():
    assert random_algebras(5, 4) == random_algebras(5, 4)


def test_random_indecomposables():
    rng = random.Random(0)
    algs = random_algebras(3, 10)
    kinds = set()
    for pres in algs:
        for _ in range(10):
            x = random_indecomposable(pres, rng, band_prob=0.5)
            kinds.add(type(x))
            if isinstance(x, StringModule):
                assert len(x.shape.word) <= 6
            else:
                assert x.size <= 3 and x.eigenvalue in (1, 2, 0.5)
    assert kinds == {StringModule, BandModule}
