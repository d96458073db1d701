"""Clebsch-Gordan decompositions of tensor products of strings and bands."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .fibre import OTHER_CYCLIC, split_components
from .quiver import QuiverPresentation
from .shapes import (
    Shape, ShapeError, ShapeWord, canonical_cyclic, canonical_word, has_trivial_automorphisms,
    shape_from_word,
)


def to_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point eigenvalues are not allowed; use Fraction or 'p/q'")
    return Fraction(x)


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- Jordan blocks ------------------------------------------------------------

@dataclass(frozen=True)
class JordanBlock:
    eigenvalue: Fraction
    size: int

    def __post_init__(self):
        object.__setattr__(self, "eigenvalue", to_fraction(self.eigenvalue))
        if self.eigenvalue == 0:
            raise ValueError("Jordan blocks of the Laurent algebra need a nonzero eigenvalue")
        if self.size < 1:
            raise ValueError("block size must be positive")


@dataclass(frozen=True)
class JordanDecomposition:
    eigenvalue: Fraction
    sizes: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return sum(self.sizes)


def jordan_tensor(lam, s: int, mu, t: int) -> JordanDecomposition:
    """Jordan type of ``J_lam(s) (x) J_mu(t)`` in characteristic zero.

    >>> jordan_tensor(3, 2, 5, 3)
    JordanDecomposition(eigenvalue=Fraction(15, 1), sizes=(4, 2))
    """
    a, b = JordanBlock(lam, s), JordanBlock(mu, t)
    sizes = tuple(s + t - 2 * k - 1 for k in range(min(s, t)))
    return JordanDecomposition(a.eigenvalue * b.eigenvalue, sizes)


# -- indecomposables ----------------------------------------------------------

@dataclass(frozen=True)
class StringModule:
    shape: Shape  # canonical linear shape

    @property
    def pres(self) -> QuiverPresentation:
        return self.shape.pres

    @property
    def dimension(self) -> int:
        return self.shape.n_vertices

    def sort_key(self):
        return (0, self.shape.word, Fraction(0), 0)

    def __str__(self):
        return f"S[{self.shape.word}]"


@dataclass(frozen=True)
class BandModule:
    shape: Shape  # canonical cyclic shape; base arrow is its first letter
    eigenvalue: Fraction
    size: int

    @property
    def pres(self) -> QuiverPresentation:
        return self.shape.pres

    @property
    def dimension(self) -> int:
        return self.size * self.shape.n_vertices

    def sort_key(self):
        return (1, self.shape.word, self.eigenvalue, self.size)

    def __str__(self):
        return f"B[{self.shape.word}, {format_fraction(self.eigenvalue)}, {self.size}]"


Indecomposable = Union[StringModule, BandModule]


def make_string(pres: QuiverPresentation, word) -> StringModule:
    s = shape_from_word(pres, word)
    if s.cyclic:
        raise ShapeError("a string needs a linear word")
    return StringModule(s.canonical())


def normalize_band(pres: QuiverPresentation, word, lam, s: int) -> BandModule:
    """Bring a band to normal form: canonical cyclic word, eigenvalue w.r.t. its base arrow.

    The base arrow of a cyclic word is its first direct letter; when the
    canonical word reverses the orientation of the input the eigenvalue is
    inverted.
    """
    shape = shape_from_word(pres, word)
    if not shape.cyclic:
        raise ShapeError("a band needs a cyclic word")
    if not has_trivial_automorphisms(shape):
        raise ShapeError(f"{shape.word} has a nontrivial automorphism")
    lam = JordanBlock(lam, s).eigenvalue
    canon, flipped = canonical_cyclic(shape.word)
    if flipped:
        lam = 1 / lam
    return BandModule(Shape(pres, canon), lam, s)


_BAND = re.compile(r"^\s*B\s*\[\s*(\(.*\))\s*,\s*([-+]?\d+(?:/\d+)?)\s*,\s*(\d+)\s*\]\s*$")
_STRING = re.compile(r"^\s*S\s*\[(.*)\]\s*$")


def parse_indecomposable(pres: QuiverPresentation, text: str) -> Indecomposable:
    """Parse ``B[(word), p/q, s]``, ``S[word]`` or a bare linear word.

    >>> from stringalg.presentations import gelfand_ponomarev
    >>> str(parse_indecomposable(gelfand_ponomarev(3), "B[(b a^-), 2, 3]"))
    'B[(a b^-), 1/2, 3]'
    """
    m = _BAND.match(text)
    if m:
        return normalize_band(pres, m.group(1), Fraction(m.group(2)), int(m.group(3)))
    m = _STRING.match(text)
    if m:
        text = m.group(1)
    if text.strip().startswith("("):
        raise ShapeError(f"cyclic word {text.strip()} needs the band form B[(word), lambda, s]")
    return make_string(pres, text)


# -- decompositions -------------------------------------------------------------

class Decomposition(Counter):
    """Multiset of indecomposables (Krull-Schmidt normal form)."""

    def items_sorted(self):
        return sorted(((k, v) for k, v in self.items() if v), key=lambda kv: kv[0].sort_key())

    @property
    def dimension(self) -> int:
        return sum(k.dimension * v for k, v in self.items())

    def format(self, style: str = "human") -> str:
        lines = []
        for k, v in self.items_sorted():
            if style == "records":
                kind = "S" if isinstance(k, StringModule) else "B"
                lit = str(k.shape.word) if kind == "S" else str(k)
                lines.append(f"{v}\t{kind}\t{lit}")
            else:
                lines.append(f"{v}× {k}")
        return "\n".join(lines) + ("\n" if lines else "")

    def __str__(self):
        return " + ".join(f"{v}{k}" if v != 1 else str(k) for k, v in self.items_sorted()) or "0"


def _strings(pres, words: Counter, mult: int) -> Decomposition:
    d = Decomposition()
    for w, k in words.items():
        d[StringModule(Shape(pres, w))] += k * mult
    return d


def cg_tensor(u: Indecomposable, v: Indecomposable) -> Decomposition:
    """Decompose ``u (x) v`` into strings and bands."""
    if u.pres != v.pres:
        raise ValueError("indecomposables over different presentations")
    pres = u.pres
    if isinstance(u, BandModule) and not isinstance(v, BandModule):
        u, v = v, u
    if isinstance(u, StringModule):
        lin, _, other = split_components(u.shape, v.shape)
        if other:
            raise AssertionError("string factor produced a cyclic component")
        mult = v.size if isinstance(v, BandModule) else 1
        return _strings(pres, lin, mult)
    # band (x) band
    st = u.size * v.size
    if u.shape == v.shape:
        lin, diag, other = split_components(u.shape, v.shape)
        if other or len(diag) != 1:
            raise AssertionError("band with nontrivial automorphisms slipped through")
        out = _strings(pres, lin, st)
        jd = jordan_tensor(u.eigenvalue, u.size, v.eigenvalue, v.size)
        for size in jd.sizes:
            out[BandModule(u.shape, jd.eigenvalue, size)] += 1
        return out
    lin, diag, other = split_components(u.shape, v.shape)
    if other or diag:
        raise AssertionError("non-isomorphic bands produced a cyclic component; normalize bands first")
    return _strings(pres, lin, st)


def decomposition_of(items: Iterable[tuple[Indecomposable, int]]) -> Decomposition:
    d = Decomposition()
    for k, v in items:
        d[k] += v
    return d
