"""Principal tensor ideals, truncated to a length bound."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .decompose import BandModule, Indecomposable, StringModule, cg_tensor
from .quiver import QuiverPresentation
from .shapes import Shape, ShapeWord, enumerate_cyclic_shapes, enumerate_linear_shapes, factorization_count, subshapes


class IdealBoundError(ValueError):
    """A query or generator lies outside the truncation bound."""


@dataclass(frozen=True)
class TruncatedIdeal:
    """Members of a tensor ideal among strings of length <= ``bound`` and
    bands of size <= ``max_size``.

    Band members are described by their shape classes: in characteristic
    zero every eigenvalue occurs, so ``B_G(mu, t)`` belongs for all ``mu``
    once ``G`` is listed and ``t <= max_size``.
    """

    pres: QuiverPresentation = field(repr=False)
    generators: tuple[Indecomposable, ...]
    bound: int
    max_size: int
    strings: frozenset[ShapeWord]
    band_shapes: frozenset[ShapeWord]

    def __contains__(self, x: Indecomposable) -> bool:
        return ideal_membership(x, self)

    def describe(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        lines = [f"ideal generated by {gens} (strings of length <= {self.bound}, "
                 f"band sizes <= {self.max_size})"]
        lines.append(f"strings ({len(self.strings)}):")
        lines += [f"  S[{w}]" for w in sorted(self.strings)]
        lines.append(f"bands ({len(self.band_shapes)} shape classes):")
        lines += [f"  B[{g}, mu, t] for every mu != 0 and 1 <= t <= {self.max_size}"
                  for g in sorted(self.band_shapes)]
        return "\n".join(lines) + "\n"


def _check_bound(x: Indecomposable, bound: int, max_size: int):
    if isinstance(x, StringModule):
        if len(x.shape.word) > bound:
            raise IdealBoundError(f"{x} is longer than the bound {bound}")
    else:
        if len(x.shape.word) > bound:
            raise IdealBoundError(f"{x} has a shape longer than the bound {bound}")
        if x.size > max_size:
            raise IdealBoundError(f"{x} has size {x.size} > {max_size}")


def principal_ideal(x: Indecomposable, bound: int, max_size: int | None = None) -> TruncatedIdeal:
    """``N(x)`` cut down to the bound.

    A string generates exactly its subshapes.  A band on ``G`` generates the
    strings whose shapes factor through ``G`` and every band on ``G``.
    """
    if max_size is None:
        max_size = bound
    _check_bound(x, bound, max_size)
    pres = x.pres
    if isinstance(x, StringModule):
        return TruncatedIdeal(pres, (x,), bound, max_size, frozenset(subshapes(x.shape)), frozenset())
    G = x.shape
    strings = frozenset(w for w in enumerate_linear_shapes(pres, bound)
                        if factorization_count(G, Shape(pres, w)))
    return TruncatedIdeal(pres, (x,), bound, max_size, strings, frozenset([G.word]))


def ideal_membership(x: Indecomposable, ideal: TruncatedIdeal) -> bool:
    if x.pres != ideal.pres:
        raise ValueError("indecomposable and ideal live over different presentations")
    _check_bound(x, ideal.bound, ideal.max_size)
    if isinstance(x, StringModule):
        return x.shape.word in ideal.strings
    return x.shape.word in ideal.band_shapes


def ideal_sum(ideals: Sequence[TruncatedIdeal]) -> TruncatedIdeal:
    """Union of the member descriptions, valid within the smallest bounds."""
    if not ideals:
        raise ValueError("empty sum of ideals")
    pres = ideals[0].pres
    if any(I.pres != pres for I in ideals):
        raise ValueError("cannot add ideals over different presentations")
    bound = min(I.bound for I in ideals)
    max_size = min(I.max_size for I in ideals)
    gens = tuple(dict.fromkeys(g for I in ideals for g in I.generators))
    strings = frozenset(w for I in ideals for w in I.strings if len(w) <= bound)
    bands = frozenset(g for I in ideals for g in I.band_shapes if len(g) <= bound)
    return TruncatedIdeal(pres, gens, bound, max_size, strings, bands)


# -- brute-force closure ----------------------------------------------------

def eigenvalue_window(depth: int = 1) -> tuple[Fraction, ...]:
    """``{+-2^k : |k| <= depth}``; used to sample the eigenvalue line."""
    out = []
    for k in range(-depth, depth + 1):
        out += [Fraction(2) ** k, -Fraction(2) ** k]
    return tuple(sorted(out))


def enumerate_indecomposables(pres: QuiverPresentation, bound: int, max_size: int,
                              eigenvalues: Iterable) -> list[Indecomposable]:
    out: list[Indecomposable] = [StringModule(Shape(pres, w)) for w in enumerate_linear_shapes(pres, bound)]
    lams = sorted(Fraction(l) for l in eigenvalues)
    for g in enumerate_cyclic_shapes(pres, bound):
        G = Shape(pres, g)
        out += [BandModule(G, lam, s) for lam in lams for s in range(1, max_size + 1)]
    return out


@dataclass
class ClosureResult:
    members: set
    rounds: int
    products: int

    @property
    def strings(self) -> frozenset[ShapeWord]:
        return frozenset(m.shape.word for m in self.members if isinstance(m, StringModule))

    @property
    def bands(self) -> frozenset[tuple[ShapeWord, Fraction, int]]:
        return frozenset((m.shape.word, m.eigenvalue, m.size) for m in self.members if isinstance(m, BandModule))


def tensor_closure(x: Indecomposable, bound: int, max_size: int | None = None,
                   eigenvalues: Iterable | None = None) -> ClosureResult:
    """Breadth-first closure of ``{x}`` under tensoring with every indecomposable
    of the truncated catalogue, keeping summands that stay inside it.

    Bands are sampled at the eigenvalues in ``eigenvalues`` (default
    ``eigenvalue_window()``); only members with those eigenvalues are kept.
    """
    if max_size is None:
        max_size = bound
    window = frozenset(Fraction(l) for l in (eigenvalues if eigenvalues is not None else eigenvalue_window()))
    probes = set(window)
    if isinstance(x, BandModule):
        # lets a generator outside the window reach it: B(lam) (x) B(w / lam) = B(w) + ...
        probes |= {w / x.eigenvalue for w in window}
    catalogue = enumerate_indecomposables(x.pres, bound, max_size, probes)

    def inside(m):
        if len(m.shape.word) > bound:
            return False
        return isinstance(m, StringModule) or (m.size <= max_size and m.eigenvalue in window)

    members = {x}
    frontier = [x]
    rounds = products = 0
    while frontier:
        rounds += 1
        fresh = []
        for u in frontier:
            for m in catalogue:
                products += 1
                for k in cg_tensor(m, u):
                    if k not in members and inside(k):
                        members.add(k)
                        fresh.append(k)
        frontier = fresh
    return ClosureResult(members, rounds, products)


def closure_matches(ideal: TruncatedIdeal, closure: ClosureResult, eigenvalues: Iterable) -> bool:
    """Whether a closure computed over an eigenvalue window agrees with the ideal."""
    lams = {Fraction(l) for l in eigenvalues}
    want_bands = {(g, lam, s) for g in ideal.band_shapes for lam in lams
                  for s in range(1, ideal.max_size + 1)}
    got = {b for b in closure.bands if b[1] in lams}
    return closure.strings == ideal.strings and got == want_bands
