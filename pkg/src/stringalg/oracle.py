"""Concrete exact representations used to check symbolic decompositions.

Nothing here consults fibre products or the decomposition formulae: modules
are realised as matrices, tensored arrow-wise with Kronecker products and
compared through dimensions of Hom spaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .decompose import BandModule, Decomposition, Indecomposable, StringModule
from .fibre import UnionFind
from .linalg import RationalMatrix, kernel_dimension
from .quiver import QuiverPresentation
from .shapes import Shape, enumerate_cyclic_shapes, enumerate_linear_shapes


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Representation:
    pres: QuiverPresentation = field(repr=False, compare=False)
    dims: dict
    mats: dict

    def __post_init__(self):
        q = self.pres.quiver
        for v in q.vertices:
            self.dims.setdefault(v, 0)
        for a in q.arrows:
            m = self.mats.setdefault(a.name, RationalMatrix(self.dims[a.head], self.dims[a.tail]))
            if m.shape != (self.dims[a.head], self.dims[a.tail]):
                raise RepresentationError(
                    f"arrow {a.name}: matrix {m.shape} does not match dims "
                    f"{self.dims[a.head]}x{self.dims[a.tail]}")

    @property
    def dimension(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.pres.quiver.vertices)

    def path_matrix(self, arrows: Sequence[str]) -> RationalMatrix:
        """Matrix of a path given in traversal order."""
        q = self.pres.quiver
        m = RationalMatrix.identity(self.dims[q.arrow[arrows[0]].tail])
        for a in arrows:
            m = self.mats[a] @ m
        return m

    def annihilated_by_relations(self) -> bool:
        return all(self.path_matrix(g).is_zero() for g in self.pres.relations.generators)

    def check_relations(self):
        for g in self.pres.relations.generators:
            if not self.path_matrix(g).is_zero():
                raise RepresentationError(f"relation {' '.join(reversed(g))} does not vanish")
        return self


def zero_representation(pres: QuiverPresentation) -> Representation:
    return Representation(pres, {}, {})


def push_down(shape: Shape, block: int = 1, gamma: int | None = None, lam=1) -> Representation:
    """Push down the module on the shape's domain with ``block``-dimensional spaces.

    Every domain arrow carries the identity, except domain arrow ``gamma``
    which carries ``J_lam(block)``.
    """
    pres = shape.pres
    fibre_index: dict[int, int] = {}
    dims: dict[str, int] = {v: 0 for v in pres.quiver.vertices}
    for x, img in enumerate(shape.vertex_images):
        fibre_index[x] = dims[img]
        dims[img] += 1
    entries: dict[str, dict] = {a.name: {} for a in pres.quiver.arrows}
    jb = RationalMatrix.jordan_block(Fraction(lam), block) if gamma is not None else None
    for i, t, h in shape.domain_arrows:
        e = entries[shape.arrow_images[i]]
        r0, c0 = fibre_index[h] * block, fibre_index[t] * block
        if i == gamma:
            for (a, b), v in jb.entries.items():
                e[(r0 + a, c0 + b)] = v
        else:
            for k in range(block):
                e[(r0 + k, c0 + k)] = Fraction(1)
    dims = {v: d * block for v, d in dims.items()}
    q = pres.quiver
    mats = {a.name: RationalMatrix(dims[a.head], dims[a.tail], entries[a.name]) for a in q.arrows}
    return Representation(pres, dims, mats)


def push_down_string(shape: Shape) -> Representation:
    if shape.cyclic:
        raise RepresentationError("strings come from linear shapes")
    return push_down(shape).check_relations()


def push_down_band(shape: Shape, lam, s: int, gamma: int | None = None) -> Representation:
    """Band module; ``gamma`` defaults to the first direct letter of the word."""
    if not shape.cyclic:
        raise RepresentationError("bands come from cyclic shapes")
    if gamma is None:
        gamma = next(i for i, (_, inv) in enumerate(shape.word.letters) if not inv)
    return push_down(shape, s, gamma, lam).check_relations()


def realize(x: Indecomposable) -> Representation:
    if isinstance(x, StringModule):
        return push_down_string(x.shape)
    return push_down_band(x.shape, x.eigenvalue, x.size)


def characteristic(pres: QuiverPresentation, vertices: Iterable[str], arrows: Iterable[str]) -> Representation:
    """``chi`` of a subquiver: one-dimensional on its vertices, identity on its arrows."""
    vs = set(vertices)
    dims = {v: (1 if v in vs else 0) for v in pres.quiver.vertices}
    mats = {}
    arrs = set(arrows)
    for a in pres.quiver.arrows:
        e = {(0, 0): 1} if a.name in arrs else {}
        mats[a.name] = RationalMatrix(dims[a.head], dims[a.tail], e)
    return Representation(pres, dims, mats)


def tensor_rep(r1: Representation, r2: Representation) -> Representation:
    if r1.pres != r2.pres:
        raise RepresentationError("representations of different presentations")
    dims = {v: r1.dims[v] * r2.dims[v] for v in r1.pres.quiver.vertices}
    mats = {a: r1.mats[a].kron(r2.mats[a]) for a in r1.mats}
    return Representation(r1.pres, dims, mats)


def direct_sum_rep(items: Iterable[tuple[Representation, int]], pres: QuiverPresentation | None = None) -> Representation:
    items = [(r, m) for r, m in items if m]
    if pres is None:
        if not items:
            raise RepresentationError("empty direct sum needs the presentation")
        pres = items[0][0].pres
    q = pres.quiver
    offs = {v: 0 for v in q.vertices}
    entries: dict[str, dict] = {a.name: {} for a in q.arrows}
    for r, mult in items:
        for _ in range(mult):
            for a in q.arrows:
                r0, c0 = offs[a.head], offs[a.tail]
                e = entries[a.name]
                for (i, j), v in r.mats[a.name].entries.items():
                    e[(r0 + i, c0 + j)] = v
            for v in q.vertices:
                offs[v] += r.dims[v]
    mats = {a.name: RationalMatrix(offs[a.head], offs[a.tail], entries[a.name]) for a in q.arrows}
    return Representation(pres, dict(offs), mats)


def decomposition_rep(d: Decomposition, pres: QuiverPresentation) -> Representation:
    return direct_sum_rep([(realize(k), v) for k, v in d.items_sorted()], pres)


# -- splitting along the support graph ----------------------------------------

def support_blocks(r: Representation) -> list[Representation]:
    """Split ``r`` into the summands visible in its current basis.

    Basis vectors joined by a nonzero matrix entry land in the same block;
    each arrow then maps a block's span into itself.
    """
    nodes = [(v, i) for v in r.pres.quiver.vertices for i in range(r.dims[v])]
    if not nodes:
        return []
    uf = UnionFind(nodes)
    q = r.pres.quiver
    for a in q.arrows:
        for (i, j) in r.mats[a.name].entries:
            uf.union((a.tail, j), (a.head, i))
    groups: dict = {}
    for n in nodes:
        groups.setdefault(uf.find(n), []).append(n)
    blocks = []
    for root in sorted(groups):
        members = groups[root]
        idx: dict[str, dict[int, int]] = {v: {} for v in q.vertices}
        for v, i in members:
            idx[v][i] = len(idx[v])
        dims = {v: len(idx[v]) for v in q.vertices}
        mats = {}
        for a in q.arrows:
            e = {}
            rows, cols = idx[a.head], idx[a.tail]
            for (i, j), val in r.mats[a.name].entries.items():
                if j in cols:
                    e[(rows[i], cols[j])] = val
            mats[a.name] = RationalMatrix(dims[a.head], dims[a.tail], e)
        blocks.append(Representation(r.pres, dims, mats))
    return blocks


def _signature(r: Representation):
    q = r.pres.quiver
    return (tuple((a.tail, a.head, a.name) for a in q.arrows),
            tuple(r.dims[v] for v in q.vertices),
            tuple(tuple(sorted(r.mats[a.name].entries.items())) for a in q.arrows))


def hom_dim_connected(r1: Representation, r2: Representation) -> int:
    """``dim Hom(r1, r2)`` by solving ``r2(a) phi_t = phi_h r1(a)`` for all arrows."""
    q = r1.pres.quiver
    offset: dict[str, int] = {}
    n = 0
    for v in q.vertices:
        offset[v] = n
        n += r1.dims[v] * r2.dims[v]
    if n == 0:
        return 0
    rows = []
    for a in q.arrows:
        t, h = a.tail, a.head
        d1t, d2h = r1.dims[t], r2.dims[h]
        if d1t == 0 or d2h == 0:
            continue
        d1h = r1.dims[h]
        eqs: dict[tuple[int, int], dict[int, Fraction]] = {}
        # r2(a) phi_t : entry (i, j) += r2a[i, k] * phi_t[k, j]
        ot = offset[t]
        for (i, k), val in r2.mats[a.name].entries.items():
            for j in range(d1t):
                row = eqs.setdefault((i, j), {})
                col = ot + k * d1t + j
                row[col] = row.get(col, 0) + val
        # - phi_h r1(a) : entry (i, j) -= phi_h[i, k] * r1a[k, j]
        oh = offset[h]
        for (k, j), val in r1.mats[a.name].entries.items():
            for i in range(d2h):
                row = eqs.setdefault((i, j), {})
                col = oh + i * d1h + k
                row[col] = row.get(col, 0) - val
        rows.extend({c: x for c, x in r.items() if x} for r in eqs.values())
    return kernel_dimension(n, rows)


_block_cache: dict = {}


def _cached_hom(b1: Representation, b2: Representation) -> int:
    key = (_signature(b1), _signature(b2))
    hit = _block_cache.get(key)
    if hit is None:
        if len(_block_cache) > 500_000:
            _block_cache.clear()
        hit = _block_cache[key] = hom_dim_connected(b1, b2)
    return hit


def hom_dim(r1: Representation, r2: Representation) -> int:
    """Dimension of the space of module morphisms ``r1 -> r2``.

    Both arguments are split into support blocks first; Hom is additive
    in each argument.
    """
    if r1.pres != r2.pres:
        raise RepresentationError("representations of different presentations")
    total = 0
    blocks2 = support_blocks(r2)
    for b1 in support_blocks(r1):
        sup1 = {v for v, d in b1.dims.items() if d}
        for b2 in blocks2:
            if any(b2.dims[v] for v in sup1):
                total += _cached_hom(b1, b2)
    return total


# -- Jordan type ------------------------------------------------------------

def jordan_type(A: RationalMatrix, lam) -> tuple[int, ...]:
    """Sizes of the Jordan blocks of ``A`` for eigenvalue ``lam``, largest first.

    Uses ``#blocks of size >= k = rank(N^(k-1)) - rank(N^k)`` with
    ``N = A - lam I``.
    """
    if A.rows != A.cols:
        raise ValueError("jordan_type needs a square matrix")
    n = A.rows
    N = A - RationalMatrix.identity(n, Fraction(lam))
    ranks = [n]
    P = RationalMatrix.identity(n)
    while True:
        P = P @ N
        ranks.append(P.rank())
        if ranks[-1] == ranks[-2]:
            break
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))] + [0]
    sizes = []
    for k in range(1, len(at_least)):
        exactly = at_least[k - 1] - at_least[k]
        sizes += [k] * exactly
    return tuple(sorted(sizes, reverse=True))


# -- verification -----------------------------------------------------------

@dataclass
class VerificationReport:
    passed: bool
    lines: list[str]
    probe_count: int
    probe_len: int | None = None

    def __str__(self):
        head = "PASS" if self.passed else "FAIL"
        depth = f", probe depth {self.probe_len}" if self.probe_len is not None else ""
        return f"{head} ({self.probe_count} probes{depth})\n" + "\n".join("  " + l for l in self.lines)


def default_probes(pres: QuiverPresentation, members: Iterable[Indecomposable], probe_len: int = 2) -> list:
    """Predicted summands and inputs, every string up to ``probe_len``, and
    bands on cyclic shapes up to ``probe_len`` with the eigenvalues and sizes
    that occur among ``members``."""
    members = list(members)
    probes: dict = {}
    for m in members:
        probes[m] = None
    for w in enumerate_linear_shapes(pres, probe_len):
        probes[StringModule(Shape(pres, w))] = None
    lams = {Fraction(1)} | {m.eigenvalue for m in members if isinstance(m, BandModule)}
    sizes = {1} | {m.size for m in members if isinstance(m, BandModule)}
    shapes = {Shape(pres, w) for w in enumerate_cyclic_shapes(pres, probe_len)}
    shapes |= {m.shape for m in members if isinstance(m, BandModule)}
    for g in sorted(shapes, key=lambda s: s.word):
        for lam in sorted(lams):
            for s in sorted(sizes):
                probes[BandModule(g, lam, s)] = None
    return sorted(probes, key=lambda k: k.sort_key())


def verify_decomposition(u: Indecomposable, v: Indecomposable, predicted: Decomposition,
                         probes: Sequence[Indecomposable] | None = None,
                         probe_len: int = 2) -> VerificationReport:
    """Compare ``u (x) v`` computed with matrices against a predicted direct sum.

    Checks dimension vectors, Hom dimensions against every probe in both
    directions, and the endomorphism dimension.  Agreement is strong
    evidence, not a proof, unless the probes exhaust all candidates.
    """
    pres = u.pres
    T = tensor_rep(realize(u), realize(v)).check_relations()
    S = decomposition_rep(predicted, pres)
    if probes is None:
        probes = default_probes(pres, [u, v, *predicted], probe_len)
        depth = probe_len
    else:
        probes = list(probes)
        probes += [k for k in predicted if k not in set(probes)]
        depth = None
    lines = []
    ok = True
    if T.dim_vector() == S.dim_vector():
        lines.append(f"dim vector {T.dim_vector()}: OK")
    else:
        ok = False
        lines.append(f"dim vector: tensor {T.dim_vector()} != predicted {S.dim_vector()}")
    bad = 0
    for p in probes:
        P = realize(p)
        a, b = hom_dim(T, P), hom_dim(S, P)
        c, d = hom_dim(P, T), hom_dim(P, S)
        if a != b or c != d:
            bad += 1
            ok = False
            lines.append(f"probe {p}: hom(T,p)={a} vs {b}, hom(p,T)={c} vs {d}")
    if bad == 0:
        lines.append(f"hom against {len(probes)} probes: OK")
    e1, e2 = hom_dim(T, T), hom_dim(S, S)
    if e1 == e2:
        lines.append(f"dim End = {e1}: OK")
    else:
        ok = False
        lines.append(f"dim End: tensor {e1} != predicted {e2}")
    return VerificationReport(ok, lines, len(probes), depth)
