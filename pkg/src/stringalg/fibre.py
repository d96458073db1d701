"""Fibre products of shapes and their connected components."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .shapes import QuiverMap, Shape, ShapeError, ShapeWord, canonical_word, shape_from_map

LINEAR = "linear"
DIAGONAL = "diagonal"
OTHER_CYCLIC = "cyclic"


class FibreError(RuntimeError):
    """An internal invariant failed (signals a non-strict input)."""


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass(frozen=True)
class FibreProduct:
    """The product quiver of two shapes with both projections.

    Vertices are pairs ``(x1, x2)`` of domain vertices with equal image,
    arrows pairs ``(a1, a2)`` of domain arrows with equal image.
    """

    left: Shape
    right: Shape
    vertices: tuple[tuple[int, int], ...]
    arrows: tuple[tuple[tuple[int, int], tuple[int, int], tuple[int, int]], ...]

    def projection(self, i: int) -> dict:
        return {v: v[i] for v in self.vertices}

    def wrapping(self) -> QuiverMap:
        """The induced map ``F1 o Pi1`` into the quiver."""
        vimg = self.left.vertex_images
        aimg = self.left.arrow_images
        return QuiverMap(
            self.vertices,
            self.arrows,
            {v: vimg[v[0]] for v in self.vertices},
            {a: aimg[a[0]] for a, _, _ in self.arrows},
        )

    def projection_map(self, i: int) -> QuiverMap:
        """``Pi_i`` as a map into the domain of the i-th shape, tagged by domain arrow ids."""
        return QuiverMap(
            self.vertices,
            self.arrows,
            {v: v[i] for v in self.vertices},
            {a: a[i] for a, _, _ in self.arrows},
        )


def fibre_product(F1: Shape, F2: Shape) -> FibreProduct:
    if F1.pres != F2.pres:
        raise ValueError("shapes live over different presentations")
    by_image: dict[str, list[int]] = {}
    for x2, img in enumerate(F2.vertex_images):
        by_image.setdefault(img, []).append(x2)
    verts = sorted((x1, x2) for x1, img in enumerate(F1.vertex_images)
                   for x2 in by_image.get(img, ()))
    arr_by_image: dict[str, list[tuple[int, int, int]]] = {}
    for a in F2.domain_arrows:
        arr_by_image.setdefault(F2.arrow_images[a[0]], []).append(a)
    arrows = []
    for a1, t1, h1 in F1.domain_arrows:
        for a2, t2, h2 in arr_by_image.get(F1.arrow_images[a1], ()):
            arrows.append(((a1, a2), (t1, t2), (h1, h2)))
    arrows.sort()
    return FibreProduct(F1, F2, tuple(verts), tuple(arrows))


@dataclass(frozen=True)
class Component:
    kind: str
    vertices: tuple[tuple[int, int], ...]
    arrows: tuple
    shape: Shape  # the restricted wrapping F1 o Pi1, as read off (not canonical)

    @property
    def is_linear(self) -> bool:
        return not self.shape.cyclic

    def restriction(self, fp: FibreProduct, i: int) -> QuiverMap:
        return QuiverMap(self.vertices, self.arrows,
                         {v: v[i] for v in self.vertices},
                         {a: a[i] for a, _, _ in self.arrows})


@dataclass(frozen=True)
class ComponentReport:
    product: FibreProduct
    components: tuple[Component, ...]

    def __str__(self):
        lines = [f"fibre product of {self.product.left} and {self.product.right}: "
                 f"{len(self.product.vertices)} vertices, {len(self.product.arrows)} arrows, "
                 f"{len(self.components)} components"]
        for c in self.components:
            lines.append(f"  {c.kind:8s} {canonical_word(c.shape.word)}  ({len(c.vertices)} vertices)")
        return "\n".join(lines)


def connected_components(fp: FibreProduct) -> ComponentReport:
    uf = UnionFind(fp.vertices)
    for _, t, h in fp.arrows:
        uf.union(t, h)
    groups: dict = {}
    for v in fp.vertices:
        groups.setdefault(uf.find(v), []).append(v)
    arrows_of: dict = {}
    for arr in fp.arrows:
        arrows_of.setdefault(uf.find(arr[1]), []).append(arr)

    same = fp.left == fp.right
    pres = fp.left.pres
    wrap = fp.wrapping()
    comps = []
    for root in sorted(groups, key=lambda r: min(groups[r])):
        vs = tuple(sorted(groups[root]))
        arrs = tuple(arrows_of.get(root, ()))
        sub = QuiverMap(vs, arrs, {v: wrap.vertex_map[v] for v in vs},
                        {a: wrap.arrow_map[a] for a, _, _ in arrs})
        try:
            shape = shape_from_map(pres, sub)
        except ShapeError as exc:
            raise FibreError(f"component is neither linear nor cyclic: {exc}") from None
        if same and all(x == y for x, y in vs):
            kind = DIAGONAL
        elif shape.cyclic:
            kind = OTHER_CYCLIC
        else:
            kind = LINEAR
        comps.append(Component(kind, vs, arrs, shape))

    n_diag = sum(c.kind == DIAGONAL for c in comps)
    if same and n_diag != 1:
        raise FibreError("equal shapes must have exactly one diagonal component")
    if (not fp.left.cyclic or not fp.right.cyclic) and any(c.shape.cyclic for c in comps):
        raise FibreError("a linear factor produced a cyclic component")
    return ComponentReport(fp, tuple(comps))


def linear_components(F1: Shape, F2: Shape) -> Counter:
    """The multiset ``L(F1, F2)`` as canonical words with multiplicities.

    A linear diagonal (equal linear inputs) counts as a linear component.
    """
    rep = connected_components(fibre_product(F1, F2))
    return Counter(canonical_word(c.shape.word) for c in rep.components if c.is_linear)


def split_components(F1: Shape, F2: Shape) -> tuple[Counter, list[Component], list[Component]]:
    """Linear words, the diagonal component(s) if cyclic, other cyclic components."""
    rep = connected_components(fibre_product(F1, F2))
    lin = Counter()
    diag, other = [], []
    for c in rep.components:
        if c.is_linear:
            lin[canonical_word(c.shape.word)] += 1
        elif c.kind == DIAGONAL:
            diag.append(c)
        else:
            other.append(c)
    return lin, diag, other
