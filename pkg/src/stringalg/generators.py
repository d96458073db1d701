"""Random string algebras and random indecomposables for property tests."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .decompose import Indecomposable, StringModule, normalize_band
from .quiver import QuiverPresentation, make_presentation, validate_string_algebra
from .shapes import Shape, enumerate_cyclic_shapes, enumerate_linear_shapes, has_trivial_automorphisms


def _build(vertices, arrows, rels) -> QuiverPresentation:
    # rels are kept in traversal order; the presentation wants written order
    return make_presentation(vertices, arrows, [tuple(reversed(r)) for r in sorted(rels)])


def random_string_algebra(rng: random.Random, max_vertices: int = 6, max_arrows: int = 8,
                          long_relation_prob: float = 0.3) -> QuiverPresentation:
    """A connected string algebra with at most the given numbers of vertices and arrows.

    Arrows are drawn subject to in/out degree two; length-two relations are
    then added until every arrow has at most one continuation each way and
    no admissible cycle survives.
    """
    n = rng.randint(1, max_vertices)
    verts = [f"v{i}" for i in range(n)]
    outdeg = dict.fromkeys(verts, 0)
    indeg = dict.fromkeys(verts, 0)
    arrows: list[tuple[str, str, str]] = []

    def add(t, h):
        arrows.append((f"a{len(arrows)}", t, h))
        outdeg[t] += 1
        indeg[h] += 1

    for i in range(1, n):
        # a random spanning tree keeps the quiver connected
        while True:
            j = rng.randrange(i)
            t, h = (verts[i], verts[j]) if rng.random() < 0.5 else (verts[j], verts[i])
            if outdeg[t] < 2 and indeg[h] < 2:
                add(t, h)
                break
    target = rng.randint(len(arrows), max(len(arrows), max_arrows))
    for _ in range(50):
        if len(arrows) >= target:
            break
        t, h = rng.choice(verts), rng.choice(verts)
        if outdeg[t] < 2 and indeg[h] < 2:
            add(t, h)

    heads = {a: h for a, _, h in arrows}
    out_of: dict[str, list[str]] = {v: [] for v in verts}
    for a, t, _ in arrows:
        out_of[t].append(a)
    rels: set[tuple[str, ...]] = set()
    if rng.random() < long_relation_prob:
        # an occasional length-three relation
        paths = [(a, b, c) for a in heads for b in out_of[heads[a]] for c in out_of[heads[b]]]
        if paths:
            rels.add(rng.choice(paths))

    tails = {a: t for a, t, _ in arrows}
    into: dict[str, list[str]] = {v: [] for v in verts}
    for a, _, h in arrows:
        into[h].append(a)

    def admissible(path):
        return not any(path[i:i + len(r)] == r for r in rels for i in range(len(path) - len(r) + 1))

    for _ in range(200):
        changed = False
        for a in sorted(heads):
            after = [c for c in out_of[heads[a]] if admissible((a, c))]
            if len(after) > 1:
                rels.add((a, rng.choice(after)))
                changed = True
            before = [b for b in into[tails[a]] if admissible((b, a))]
            if len(before) > 1:
                rels.add((rng.choice(before), a))
                changed = True
        if changed:
            continue
        pres = _build(verts, arrows, rels)
        report = validate_string_algebra(pres)
        if report.ok:
            return pres
        cyc = next(v.witness for v in report.violations if v.axiom == "finite dimension")
        i = rng.randrange(len(cyc))
        rels.add((cyc[i], cyc[(i + 1) % len(cyc)]))
    raise AssertionError("could not repair the random presentation")


def random_algebras(seed: int, count: int, **kw) -> list[QuiverPresentation]:
    rng = random.Random(seed)
    return [random_string_algebra(rng, **kw) for _ in range(count)]


def random_indecomposable(pres: QuiverPresentation, rng: random.Random, max_len: int = 6,
                          max_size: int = 3, eigenvalues: Sequence = (1, 2, Fraction(1, 2)),
                          band_prob: float = 0.3, max_band_len: int | None = None) -> Indecomposable:
    """A random string of length <= ``max_len`` or, with probability
    ``band_prob`` when bands exist, a random band."""
    if max_band_len is None:
        max_band_len = max_len
    bands = [w for w in enumerate_cyclic_shapes(pres, max_band_len)
             if has_trivial_automorphisms(w)]
    if bands and rng.random() < band_prob:
        g = rng.choice(bands)
        return normalize_band(pres, g, Fraction(rng.choice(list(eigenvalues))), rng.randint(1, max_size))
    return StringModule(Shape(pres, rng.choice(enumerate_linear_shapes(pres, max_len))))
