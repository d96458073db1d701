"""Sparse exact rational matrices and fraction-free rank."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable


def _exact(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("RationalMatrix is exact; floats are not accepted")
    return x if isinstance(x, Fraction) else Fraction(x)


class RationalMatrix:
    """A ``rows x cols`` matrix stored as ``{(i, j): Fraction}`` (zeros omitted)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], Fraction] = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise IndexError(f"entry {(i, j)} outside a {rows}x{cols} matrix")
                v = _exact(v)
                if v:
                    self.entries[(i, j)] = v

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n, scale=1):
        return cls(n, n, {(i, i): scale for i in range(n)})

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})

    @classmethod
    def jordan_block(cls, lam, s: int) -> "RationalMatrix":
        e = {(i, i): lam for i in range(s)}
        e.update({(i, i + 1): 1 for i in range(s - 1)})
        return cls(s, s, e)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> Fraction:
        return self.entries.get(ij, Fraction(0))

    def to_rows(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self):
        return f"RationalMatrix({self.rows}, {self.cols}, {self.to_rows()})"

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return RationalMatrix(self.rows, self.cols, out)

    def __neg__(self):
        return RationalMatrix(self.rows, self.cols, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict[tuple[int, int], Fraction] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + a * b
        return RationalMatrix(self.rows, other.cols, out)

    def kron(self, other: "RationalMatrix") -> "RationalMatrix":
        p, q = other.rows, other.cols
        out = {}
        for (i, j), a in self.entries.items():
            for (k, l), b in other.entries.items():
                out[(i * p + k, j * q + l)] = a * b
        return RationalMatrix(self.rows * p, self.cols * q, out)

    def power(self, k: int) -> "RationalMatrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = RationalMatrix.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out

    def rank(self) -> int:
        rows: dict[int, dict[int, Fraction]] = {}
        for (i, j), v in self.entries.items():
            rows.setdefault(i, {})[j] = v
        return sparse_rank(rows.values())


def _integer_row(row: dict) -> dict[int, int]:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {}
    for j, v in row.items():
        iv = v * den
        if isinstance(iv, Fraction):
            iv = iv.numerator
        if iv:
            out[j] = int(iv)
    return out


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def sparse_rank(rows: Iterable[dict]) -> int:
    """Rank over Q of the matrix whose rows are sparse ``{col: value}`` dicts.

    Rows are scaled to integers and eliminated fraction-free
    (``r <- p[c] * r - r[c] * p``) with content removal after every step.
    """
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = _integer_row(raw)
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                pivots[c] = _primitive(row)
                break
            a, b = p[c], row[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {j: a * v for j, v in row.items()}
            for j, v in p.items():
                w = new.get(j, 0) - b * v
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            row = _primitive(new)
    return len(pivots)


def kernel_dimension(n_unknowns: int, rows: Iterable[dict]) -> int:
    return n_unknowns - sparse_rank(rows)


def block_diagonal(blocks: list[RationalMatrix]) -> RationalMatrix:
    r = c = 0
    out = {}
    for b in blocks:
        for (i, j), v in b.entries.items():
            out[(r + i, c + j)] = v
        r += b.rows
        c += b.cols
    return RationalMatrix(r, c, out)
