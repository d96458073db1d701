"""Quivers, paths, monomial relations and the string-algebra axioms.

Paths are stored internally in *traversal order*: the first arrow applied
comes first.  The presentation file and ``str(path)`` use the written
order ``a_d ... a_1`` where the leftmost arrow is applied last, so
``relation a b`` means "``b`` then ``a``".
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

DEFAULT_PATH_CAP = 100_000

_ID = re.compile(r"[A-Za-z0-9_]+\Z")


class PresentationError(ValueError):
    """Raised for malformed presentation text or inconsistent data."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class EnumerationCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    tail: str
    head: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate vertex id")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate arrow id")
        vs = set(self.vertices)
        for a in self.arrows:
            for end in (a.tail, a.head):
                if end not in vs:
                    raise PresentationError(f"arrow {a.name}: undeclared vertex {end}")

    @cached_property
    def arrow(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def outgoing(self) -> dict[str, tuple[Arrow, ...]]:
        out = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.tail].append(a)
        return {v: tuple(sorted(al, key=lambda a: a.name)) for v, al in out.items()}

    @cached_property
    def incoming(self) -> dict[str, tuple[Arrow, ...]]:
        inc = {v: [] for v in self.vertices}
        for a in self.arrows:
            inc[a.head].append(a)
        return {v: tuple(sorted(al, key=lambda a: a.name)) for v, al in inc.items()}


@dataclass(frozen=True)
class Path:
    """A path ``e_x`` (no arrows) or a composable arrow sequence.

    ``arrows`` is in traversal order; ``start`` is the tail of the first
    arrow (or the vertex of a trivial path).
    """

    start: str
    arrows: tuple[str, ...] = ()

    def __len__(self):
        return len(self.arrows)

    def __str__(self):
        if not self.arrows:
            return f"e_{self.start}"
        return " ".join(reversed(self.arrows))

    def sort_key(self):
        if not self.arrows:
            return (0, (), self.start)
        return (len(self.arrows), tuple(reversed(self.arrows)), "")


def contains_subpath(path: tuple[str, ...], sub: tuple[str, ...]) -> bool:
    n, k = len(path), len(sub)
    if k == 0:
        return True
    return any(path[i:i + k] == sub for i in range(n - k + 1))


@dataclass(frozen=True)
class RelationSet:
    """Monomial relation generators, each a traversal-order arrow tuple."""

    generators: tuple[tuple[str, ...], ...] = ()

    @classmethod
    def normalized(cls, gens: Iterable[tuple[str, ...]]) -> "RelationSet":
        uniq = sorted(set(tuple(g) for g in gens), key=lambda g: (len(g), g))
        kept: list[tuple[str, ...]] = []
        for g in uniq:
            if not any(contains_subpath(g, h) for h in kept):
                kept.append(g)
        return cls(tuple(sorted(kept, key=lambda g: (len(g), tuple(reversed(g))))))

    @cached_property
    def max_length(self) -> int:
        return max((len(g) for g in self.generators), default=0)

    def is_admissible(self, arrows: tuple[str, ...]) -> bool:
        return not any(contains_subpath(arrows, g) for g in self.generators)


@dataclass(frozen=True)
class QuiverPresentation:
    quiver: Quiver
    relations: RelationSet = field(default_factory=RelationSet)

    def __post_init__(self):
        q = self.quiver
        for g in self.relations.generators:
            check_composable(q, g)

    @cached_property
    def _hash(self):
        return hash((self.quiver, self.relations))

    def __hash__(self):
        return self._hash

    def to_text(self) -> str:
        lines = [f"vertex {v}" for v in self.quiver.vertices]
        lines += [f"arrow {a.name}: {a.tail} -> {a.head}" for a in self.quiver.arrows]
        lines += ["relation " + " ".join(reversed(g)) for g in self.relations.generators]
        return "\n".join(lines) + "\n"


def check_composable(q: Quiver, arrows: tuple[str, ...]):
    for name in arrows:
        if name not in q.arrow:
            raise PresentationError(f"undeclared arrow {name}")
    for a, b in zip(arrows, arrows[1:]):
        if q.arrow[a].head != q.arrow[b].tail:
            raise PresentationError(
                f"arrows {b} {a} do not compose: head of {a} is "
                f"{q.arrow[a].head}, tail of {b} is {q.arrow[b].tail}")


def make_presentation(vertices, arrows, relations=()) -> QuiverPresentation:
    """Build a presentation from plain data.

    ``arrows`` is an iterable of ``(name, tail, head)``; each relation is
    given in written order (leftmost arrow applied last).

    >>> p = make_presentation("x", [("a", "x", "x")], [("a", "a", "a")])
    >>> str(p.relations.generators)
    "(('a', 'a', 'a'),)"
    """
    q = Quiver(tuple(vertices), tuple(Arrow(*a) for a in arrows))
    gens = []
    for rel in relations:
        rel = tuple(rel)
        if len(rel) < 2:
            raise PresentationError(
                f"relation {' '.join(rel)} has length {len(rel)}; relations must have length >= 2")
        gens.append(tuple(reversed(rel)))
    for g in gens:
        check_composable(q, g)
    return QuiverPresentation(q, RelationSet.normalized(gens))


def parse_presentation(text: str) -> QuiverPresentation:
    """Parse the line-oriented presentation format.

    ::

        vertex x
        arrow a: x -> x
        relation a a      # a composed with a
    """
    vertices: list[str] = []
    arrows: list[tuple[str, str, str]] = []
    relations: list[tuple[tuple[str, ...], int]] = []
    seen_v: set[str] = set()
    seen_a: dict[str, tuple[str, str]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue
        indent = len(line) - len(stripped)
        keyword, _, rest = stripped.partition(" ")
        col_rest = indent + len(keyword) + 2

        def ident(tok, col):
            if not _ID.match(tok):
                raise PresentationError(f"invalid identifier {tok!r}", lineno, col)
            return tok

        if keyword == "vertex":
            tokens = rest.split()
            if len(tokens) != 1:
                raise PresentationError("expected 'vertex <id>'", lineno, col_rest)
            v = ident(tokens[0], col_rest)
            if v in seen_v:
                raise PresentationError(f"duplicate vertex {v}", lineno, col_rest)
            seen_v.add(v)
            vertices.append(v)
        elif keyword == "arrow":
            m = re.fullmatch(r"\s*([^:\s]+)\s*:\s*(\S+)\s*->\s*(\S+)\s*", rest)
            if not m:
                raise PresentationError("expected 'arrow <id>: <tail> -> <head>'", lineno, col_rest)
            name = ident(m.group(1), col_rest)
            tail = ident(m.group(2), col_rest + m.start(2))
            head = ident(m.group(3), col_rest + m.start(3))
            for end, pos in ((tail, m.start(2)), (head, m.start(3))):
                if end not in seen_v:
                    raise PresentationError(f"undeclared vertex {end}", lineno, col_rest + pos)
            if name in seen_a:
                raise PresentationError(f"duplicate arrow {name}", lineno, col_rest)
            seen_a[name] = (tail, head)
            arrows.append((name, tail, head))
        elif keyword == "relation":
            tokens = rest.split()
            for m in re.finditer(r"\S+", rest):
                tok, col = m.group(), col_rest + m.start()
                ident(tok, col)
                if tok not in seen_a:
                    raise PresentationError(f"undeclared arrow {tok}", lineno, col)
            if len(tokens) < 2:
                raise PresentationError(
                    "relations must have length >= 2 (length 0/1 relations would delete "
                    "vertices or arrows)", lineno, col_rest)
            relations.append((tuple(tokens), lineno))
        else:
            raise PresentationError(f"unknown keyword {keyword!r}", lineno, indent + 1)

    q = Quiver(tuple(vertices), tuple(Arrow(*a) for a in arrows))
    gens = []
    for written, lineno in relations:
        g = tuple(reversed(written))
        try:
            check_composable(q, g)
        except PresentationError as exc:
            raise PresentationError(str(exc), lineno, 1) from None
        gens.append(g)
    return QuiverPresentation(q, RelationSet.normalized(gens))


def path_is_admissible(p: Path, rel: RelationSet) -> bool:
    return rel.is_admissible(p.arrows)


# -- validation -------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    axiom: str
    message: str
    witness: tuple

    def __str__(self):
        return f"[{self.axiom}] {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "string algebra: OK"
        return "string algebra: FAILED\n" + "\n".join(f"  {v}" for v in self.violations)


def _find_admissible_cycle(pres: QuiverPresentation) -> tuple[str, ...] | None:
    """Return the arrows of an infinitely repeatable admissible walk, if any.

    Admissibility only looks at windows of length ``m`` (the longest
    generator), so an infinite admissible path exists iff the graph whose
    states are admissible paths of length ``k = max(m - 1, 1)`` has a cycle.
    """
    q, rel = pres.quiver, pres.relations
    k = max(rel.max_length - 1, 1)
    states: list[tuple[str, ...]] = []
    frontier = [(a.name,) for a in q.arrows if rel.is_admissible((a.name,))]
    for _ in range(k - 1):
        nxt = []
        for p in frontier:
            for b in q.outgoing[q.arrow[p[-1]].head]:
                cand = p + (b.name,)
                if rel.is_admissible(cand):
                    nxt.append(cand)
        frontier = nxt
    states = frontier
    succ: dict[tuple[str, ...], list[tuple[str, ...]]] = {}
    for p in states:
        succ[p] = []
        for b in q.outgoing[q.arrow[p[-1]].head]:
            cand = p + (b.name,)
            if rel.is_admissible(cand):
                succ[p].append(cand[1:])

    # iterative DFS with colours
    colour = {p: 0 for p in states}
    parent: dict[tuple[str, ...], tuple[str, ...]] = {}
    for root in sorted(states):
        if colour[root]:
            continue
        stack = [(root, iter(succ[root]))]
        colour[root] = 1
        while stack:
            node, it = stack[-1]
            for nb in it:
                if colour[nb] == 0:
                    colour[nb] = 1
                    parent[nb] = node
                    stack.append((nb, iter(succ[nb])))
                    break
                if colour[nb] == 1:
                    cyc = [nb]
                    cur = node
                    while cur != nb:
                        cyc.append(cur)
                        cur = parent[cur]
                    cyc.reverse()
                    # states in cycle order, ending with nb
                    return tuple(s[-1] for s in cyc)
            else:
                colour[node] = 2
                stack.pop()
    return None


def validate_string_algebra(pres: QuiverPresentation) -> ValidationReport:
    q, rel = pres.quiver, pres.relations
    out: list[Violation] = []
    for v in q.vertices:
        if len(q.outgoing[v]) > 2:
            out.append(Violation("axiom 2", f"vertex {v} is the tail of {len(q.outgoing[v])} arrows",
                                 (v, tuple(a.name for a in q.outgoing[v]))))
        if len(q.incoming[v]) > 2:
            out.append(Violation("axiom 2", f"vertex {v} is the head of {len(q.incoming[v])} arrows",
                                 (v, tuple(a.name for a in q.incoming[v]))))
    for a in q.arrows:
        before = [b.name for b in q.incoming[a.tail] if rel.is_admissible((b.name, a.name))]
        if len(before) > 1:
            out.append(Violation(
                "axiom 3", f"arrow {a.name} admits {len(before)} arrows before it: "
                + ", ".join(f"{a.name} {b}" for b in before), (a.name, tuple(before))))
        after = [c.name for c in q.outgoing[a.head] if rel.is_admissible((a.name, c.name))]
        if len(after) > 1:
            out.append(Violation(
                "axiom 3", f"arrow {a.name} admits {len(after)} arrows after it: "
                + ", ".join(f"{c} {a.name}" for c in after), (a.name, tuple(after))))
    cyc = _find_admissible_cycle(pres)
    if cyc is not None:
        out.append(Violation(
            "finite dimension", "relation-free cycle " + " ".join(reversed(cyc))
            + " gives infinitely many admissible paths", cyc))
    return ValidationReport(tuple(out))


def iter_admissible_paths(pres: QuiverPresentation) -> Iterator[Path]:
    q, rel = pres.quiver, pres.relations
    layer = [Path(v) for v in q.vertices]
    while layer:
        yield from layer
        nxt = []
        for p in layer:
            end = q.arrow[p.arrows[-1]].head if p.arrows else p.start
            for b in q.outgoing[end]:
                cand = p.arrows + (b.name,)
                if rel.is_admissible(cand):
                    nxt.append(Path(q.arrow[cand[0]].tail, cand))
        layer = nxt


def admissible_paths(pres: QuiverPresentation, cap: int = DEFAULT_PATH_CAP) -> list[Path]:
    """All admissible paths, sorted by length then written-order arrow ids."""
    out = []
    for p in iter_admissible_paths(pres):
        out.append(p)
        if len(out) > cap:
            raise EnumerationCapExceeded(
                f"more than {cap} admissible paths; the presentation is probably not finite dimensional")
    return sorted(out, key=Path.sort_key)
