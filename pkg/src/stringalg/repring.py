"""The representation ring: string classes, orthogonal idempotents and bands.

Elements are finite integer combinations of basis keys.  A key is either an
indecomposable (``StringModule`` or ``BandModule``) or an ``Idem`` wrapping a
linear shape class.  All identities hold inside a ``Universe``: the linear
shapes up to some length, which is closed under taking subshapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .decompose import BandModule, StringModule, cg_tensor
from .quiver import QuiverPresentation
from .shapes import Shape, ShapeWord, canonical_word, enumerate_linear_shapes, factorization_count, subshapes


class UniverseError(ValueError):
    """A shape class fell outside the universe (too small, or overflow)."""


@dataclass(frozen=True, order=True)
class Idem:
    word: ShapeWord  # canonical linear word

    def __str__(self):
        return f"e[{self.word}]"


def _key_order(k):
    if isinstance(k, Idem):
        return (2, k.word, Fraction(0), 0)
    return k.sort_key()


class RingElement(Mapping):
    """Sparse integer combination of basis keys; zero coefficients are dropped."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for k, v in items:
                if not isinstance(v, int):
                    raise TypeError("ring coefficients are integers")
                c[k] = c.get(k, 0) + v
        self._c = {k: v for k, v in c.items() if v}

    @classmethod
    def basis(cls, key) -> "RingElement":
        return cls({key: 1})

    def __getitem__(self, k):
        return self._c.get(k, 0)

    def __iter__(self) -> Iterator:
        return iter(self._c)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self._c == other._c
        if other == 0:
            return not self._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "RingElement") -> "RingElement":
        out = dict(self._c)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return RingElement(out)

    def __neg__(self):
        return RingElement({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n: int) -> "RingElement":
        if not isinstance(n, int):
            return NotImplemented
        return RingElement({k: n * v for k, v in self._c.items()})

    def terms(self):
        return sorted(self._c.items(), key=lambda kv: _key_order(kv[0]))

    def is_idempotent_form(self) -> bool:
        return not any(isinstance(k, StringModule) for k in self._c)

    def is_string_form(self) -> bool:
        return not any(isinstance(k, Idem) for k in self._c)

    def __repr__(self):
        return f"RingElement({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k, v in self.terms():
            sign = "-" if v < 0 else "+"
            mag = "" if abs(v) == 1 else f"{abs(v)} "
            parts.append(f"{sign} {mag}{k}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


class Universe:
    """Linear shape classes of length at most ``max_len``, with memo tables.

    Memo tables are filled lazily; build them from one thread (``warm``)
    before sharing the universe for concurrent reads.
    """

    def __init__(self, pres: QuiverPresentation, max_len: int):
        self.pres = pres
        self.max_len = max_len
        self.words: tuple[ShapeWord, ...] = tuple(enumerate_linear_shapes(pres, max_len))
        self._members = frozenset(self.words)
        self._sub: dict[ShapeWord, dict[ShapeWord, int]] = {}
        self._e: dict[ShapeWord, RingElement] = {}
        self._factor: dict[tuple, int] = {}
        self._cg: dict[tuple, RingElement] = {}

    def __contains__(self, word) -> bool:
        return canonical_word(word) in self._members

    def __len__(self):
        return len(self.words)

    def shape(self, word: ShapeWord) -> Shape:
        return Shape(self.pres, word)

    def require(self, word: ShapeWord, why: str):
        if word not in self._members:
            raise UniverseError(f"{why}: {word} has length {len(word)} > {self.max_len}"
                                if len(word) > self.max_len else f"{why}: {word} not in universe")

    def factor(self, big: Shape, small_word: ShapeWord) -> int:
        key = (big.word, small_word)
        hit = self._factor.get(key)
        if hit is None:
            hit = self._factor[key] = factorization_count(big, self.shape(small_word))
        return hit

    def subshape_counts(self, word: ShapeWord) -> dict[ShapeWord, int]:
        """``{F': |F:F'|}`` over all subshapes ``F'`` of ``F``."""
        hit = self._sub.get(word)
        if hit is None:
            F = self.shape(word)
            hit = {}
            for w in subshapes(F):
                self.require(w, f"universe too small for subshapes of {word}")
                hit[w] = self.factor(F, w)
            self._sub[word] = hit
        return hit

    def warm(self):
        for w in self.words:
            idempotent_to_strings(w, self)
        return self


def _word(F) -> ShapeWord:
    if isinstance(F, StringModule):
        F = F.shape
    if isinstance(F, Shape):
        F = F.word
    if isinstance(F, str):
        F = ShapeWord.parse(F)
    return canonical_word(F)


def string_to_idempotents(F, universe: Universe) -> RingElement:
    """``[S_F] = sum over subshapes F' of |F:F'| e_F'``."""
    w = _word(F)
    universe.require(w, "universe too small")
    return RingElement({Idem(sub): n for sub, n in universe.subshape_counts(w).items()})


def idempotent_to_strings(F, universe: Universe) -> RingElement:
    """``e_F = [S_F] - sum over proper subshapes F' of |F:F'| e_F'``."""
    w = _word(F)
    hit = universe._e.get(w)
    if hit is not None:
        return hit
    universe.require(w, "universe too small")
    out = RingElement.basis(StringModule(universe.shape(w)))
    for sub, n in sorted(universe.subshape_counts(w).items()):
        if sub != w:
            out = out - n * idempotent_to_strings(sub, universe)
    universe._e[w] = out
    return out


def to_idempotent_form(a: RingElement, universe: Universe) -> RingElement:
    """Rewrite string keys in the idempotent basis; band keys stay."""
    out = RingElement()
    for k, v in a.items():
        if isinstance(k, StringModule):
            out = out + v * string_to_idempotents(k, universe)
        else:
            out = out + RingElement({k: v})
    return out


def to_string_form(a: RingElement, universe: Universe) -> RingElement:
    """Rewrite idempotent keys as string combinations; band keys stay."""
    out = RingElement()
    for k, v in a.items():
        if isinstance(k, Idem):
            out = out + v * idempotent_to_strings(k.word, universe)
        else:
            out = out + RingElement({k: v})
    return out


def _decomposition_element(d, universe: Universe) -> RingElement:
    for k in d:
        if isinstance(k, StringModule):
            universe.require(k.shape.word, "universe overflow")
    return RingElement({k: v for k, v in d.items()})


def _cg(u, v, universe: Universe) -> RingElement:
    key = (u, v) if _key_order(u) <= _key_order(v) else (v, u)
    hit = universe._cg.get(key)
    if hit is None:
        hit = universe._cg[key] = _decomposition_element(cg_tensor(*key), universe)
    return hit


def multiply_indecomposables(a: RingElement, b: RingElement, universe: Universe) -> RingElement:
    """Product of two string/band combinations computed term-wise with ``cg_tensor``."""
    if not (a.is_string_form() and b.is_string_form()):
        raise ValueError("multiply_indecomposables takes string/band combinations")
    out: dict = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            for k, v in _cg(k1, k2, universe).items():
                out[k] = out.get(k, 0) + v1 * v2 * v
    return RingElement(out)


def _band_times_idem(b: BandModule, e: Idem, universe: Universe) -> int:
    return b.size * universe.factor(b.shape, e.word)


def ring_multiply(a: RingElement, b: RingElement, universe: Universe) -> RingElement:
    """Product in the ring, returned in band-plus-idempotent form.

    Idempotents are orthogonal, a band ``B_G(lam, s)`` acts on ``e_F`` by
    ``s |G:F|``, and band-band products go through ``cg_tensor``.
    """
    a = to_idempotent_form(a, universe)
    b = to_idempotent_form(b, universe)
    out: dict = {}

    def add(k, v):
        out[k] = out.get(k, 0) + v

    for k1, v1 in a.items():
        for k2, v2 in b.items():
            c = v1 * v2
            if isinstance(k1, Idem) and isinstance(k2, Idem):
                if k1 == k2:
                    add(k1, c)
            elif isinstance(k1, Idem):
                add(k1, c * _band_times_idem(k2, k1, universe))
            elif isinstance(k2, Idem):
                add(k2, c * _band_times_idem(k1, k2, universe))
            else:
                prod = to_idempotent_form(_cg(k1, k2, universe), universe)
                for k, v in prod.items():
                    add(k, c * v)
    return RingElement(out)


def band_quotient_class(b: BandModule) -> tuple[ShapeWord, Fraction, int]:
    """Coordinates of ``[b]`` in the copy of the Laurent ring indexed by its shape."""
    return b.shape.word, b.eigenvalue, b.size


def quotient_image(a: RingElement) -> dict[ShapeWord, dict[tuple[Fraction, int], int]]:
    """Image modulo the span of strings: band terms grouped by cyclic shape class."""
    out: dict = {}
    for k, v in a.items():
        if isinstance(k, BandModule):
            w, lam, s = band_quotient_class(k)
            out.setdefault(w, {})[(lam, s)] = v
    return out


def band_action_table(pres: QuiverPresentation, universe: Universe,
                      cyclic: Iterable[ShapeWord]) -> list[tuple[ShapeWord, ShapeWord, int]]:
    """Triples ``(G, F, |G:F|)`` with nonzero count, F ranging over the universe."""
    rows = []
    for g in cyclic:
        G = Shape(pres, g)
        for w in universe.words:
            n = universe.factor(G, w)
            if n:
                rows.append((g, w, n))
    return rows
