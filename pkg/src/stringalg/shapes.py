"""Linear and cyclic shapes over a quiver.

A shape is stored as the walk it traces in the quiver.  Letter ``a`` walks
along arrow ``a`` from tail to head, ``a^-`` walks against it.  Word
``c_1 ... c_n`` determines the domain: vertices ``0..n`` (or ``0..n-1``
for a cyclic word, indices taken mod ``n``), and domain arrow ``i`` joins
vertices ``i`` and ``i+1``, pointing forward for a direct letter and
backward for an inverse one.

Textual grammar: letters separated by spaces, inverse marked by ``^-``,
cyclic words wrapped in parentheses, the empty linear word written
``@<vertex>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .quiver import QuiverPresentation, RelationSet

Letter = tuple[str, bool]  # (arrow id, inverse?)


class ShapeError(ValueError):
    pass


def _flip(letter: Letter) -> Letter:
    return (letter[0], not letter[1])


def format_letter(letter: Letter) -> str:
    return letter[0] + ("^-" if letter[1] else "")


@dataclass(frozen=True, order=True)
class ShapeWord:
    """A walk word; ordering is lexicographic on letters.

    Letters compare by arrow id first, the direct letter before the
    inverse one (``a < a^- < b``).
    """

    letters: tuple[Letter, ...]
    cyclic: bool = False
    base: str = ""

    def __post_init__(self):
        if self.cyclic and not self.letters:
            raise ShapeError("a cyclic word needs at least one letter")
        if not self.cyclic and not self.letters and not self.base:
            raise ShapeError("the empty linear word needs a base vertex (@vertex)")
        if self.letters and self.base:
            object.__setattr__(self, "base", "")

    @classmethod
    def parse(cls, text: str) -> "ShapeWord":
        """
        >>> str(ShapeWord.parse("a a b^- a"))
        'a a b^- a'
        >>> ShapeWord.parse("( a b^- )").cyclic
        True
        >>> ShapeWord.parse("@x").base
        'x'
        """
        text = text.strip()
        cyclic = text.startswith("(")
        if cyclic:
            if not text.endswith(")"):
                raise ShapeError(f"unbalanced parentheses in {text!r}")
            text = text[1:-1].strip()
        if text.startswith("@"):
            if cyclic:
                raise ShapeError("a cyclic word cannot be empty")
            base = text[1:].strip()
            if not base or " " in base:
                raise ShapeError(f"bad vertex word {text!r}")
            return cls((), False, base)
        letters = []
        for tok in text.split():
            inv = tok.endswith("^-")
            name = tok[:-2] if inv else tok
            if not name or not name.replace("_", "").isalnum():
                raise ShapeError(f"bad letter {tok!r}")
            letters.append((name, inv))
        if not letters:
            raise ShapeError("empty word; write @<vertex> for a vertex shape")
        return cls(tuple(letters), cyclic)

    def __str__(self):
        if not self.letters:
            return "@" + self.base
        body = " ".join(format_letter(c) for c in self.letters)
        return f"({body})" if self.cyclic else body

    def __len__(self):
        return len(self.letters)

    def reversed(self) -> "ShapeWord":
        if not self.letters:
            return self
        return ShapeWord(tuple(_flip(c) for c in reversed(self.letters)), self.cyclic)

    def rotations(self) -> list["ShapeWord"]:
        n = len(self.letters)
        return [ShapeWord(self.letters[k:] + self.letters[:k], True) for k in range(n)]


def canonical_cyclic(word: ShapeWord) -> tuple[ShapeWord, bool]:
    """Least rotation over both orientations; flag says the reversal won.

    >>> w, flipped = canonical_cyclic(ShapeWord.parse("(b a^-)"))
    >>> str(w), flipped
    ('(a b^-)', True)
    """
    fwd = min(word.rotations())
    bwd = min(word.reversed().rotations())
    if bwd < fwd:
        return bwd, True
    return fwd, False


def canonical_word(word: ShapeWord) -> ShapeWord:
    if word.cyclic:
        return canonical_cyclic(word)[0]
    return min(word, word.reversed())


# -- quiver morphisms -------------------------------------------------------

@dataclass(frozen=True)
class QuiverMap:
    """A quiver morphism from a finite domain into the presentation quiver.

    Domain arrows are ``(id, tail, head)``; ``vertex_map`` and
    ``arrow_map`` give the images.
    """

    vertices: tuple[Hashable, ...]
    arrows: tuple[tuple[Hashable, Hashable, Hashable], ...]
    vertex_map: dict = field(hash=False, compare=False)
    arrow_map: dict = field(hash=False, compare=False)

    def check(self, pres: QuiverPresentation):
        q = pres.quiver
        for aid, t, h in self.arrows:
            img = q.arrow[self.arrow_map[aid]]
            if self.vertex_map[t] != img.tail or self.vertex_map[h] != img.head:
                raise ShapeError(f"domain arrow {aid!r} is not mapped compatibly")


def is_strict(m: QuiverMap) -> bool:
    """Wrapping and strictness test.

    Distinct parallel arrows need distinct images; distinct arrows with
    equal image need distinct tails and distinct heads.
    """
    seen_tail: set = set()
    seen_head: set = set()
    for aid, t, h in m.arrows:
        img = m.arrow_map[aid]
        if (t, img) in seen_tail or (h, img) in seen_head:
            return False
        seen_tail.add((t, img))
        seen_head.add((h, img))
    return True


# -- shapes -----------------------------------------------------------------

@dataclass(frozen=True)
class Shape:
    """A walk word realised over a presentation.

    Equality is literal equality of words (same domain, same map), not
    isomorphism; compare ``canonical()`` forms for isomorphism classes.
    """

    pres: QuiverPresentation = field(compare=False, hash=False, repr=False)
    word: ShapeWord

    @property
    def cyclic(self) -> bool:
        return self.word.cyclic

    @property
    def kind(self) -> str:
        return "cyclic" if self.cyclic else "linear"

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return str(self.word)

    @cached_property
    def n_vertices(self) -> int:
        n = len(self.word)
        return n if self.cyclic else n + 1

    @cached_property
    def domain_arrows(self) -> tuple[tuple[int, int, int], ...]:
        n, nv = len(self.word), self.n_vertices
        out = []
        for i, (_, inv) in enumerate(self.word.letters):
            j = (i + 1) % nv
            out.append((i, j, i) if inv else (i, i, j))
        return tuple(out)

    @cached_property
    def vertex_images(self) -> tuple[str, ...]:
        if not self.word.letters:
            return (self.word.base,)
        q = self.pres.quiver
        imgs = []
        for name, inv in self.word.letters:
            a = q.arrow[name]
            imgs.append(a.head if inv else a.tail)
        if not self.cyclic:
            name, inv = self.word.letters[-1]
            a = q.arrow[name]
            imgs.append(a.tail if inv else a.head)
        return tuple(imgs)

    @cached_property
    def arrow_images(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.word.letters)

    @cached_property
    def qmap(self) -> QuiverMap:
        return QuiverMap(
            tuple(range(self.n_vertices)),
            tuple((i, t, h) for i, t, h in self.domain_arrows),
            dict(enumerate(self.vertex_images)),
            dict(enumerate(self.arrow_images)),
        )

    def canonical(self) -> "Shape":
        w = canonical_word(self.word)
        return self if w == self.word else Shape(self.pres, w)

    def sort_key(self):
        return self.word


def _walk_endpoints(pres: QuiverPresentation, word: ShapeWord):
    q = pres.quiver
    ends = []
    for name, inv in word.letters:
        if name not in q.arrow:
            raise ShapeError(f"unknown arrow {name!r}")
        a = q.arrow[name]
        ends.append((a.head, a.tail) if inv else (a.tail, a.head))
    return ends


def walk_is_composable(pres: QuiverPresentation, word: ShapeWord) -> bool:
    ends = _walk_endpoints(pres, word)
    if not ends:
        return word.base in pres.quiver.vertices
    for (_, end), (start, _) in zip(ends, ends[1:]):
        if end != start:
            return False
    if word.cyclic and ends[-1][1] != ends[0][0]:
        return False
    return True


def directed_runs(word: ShapeWord) -> tuple[list[tuple[str, ...]], tuple[str, ...] | None]:
    """Maximal directed paths of the domain, in traversal order.

    For a cyclic word with a single orientation the domain is an oriented
    cycle; its arrows (in traversal order) are returned separately as the
    period of an infinite family of paths.
    """
    letters = list(word.letters)
    if not letters:
        return [], None
    if word.cyclic:
        dirs = {inv for _, inv in letters}
        if len(dirs) == 1:
            names = [n for n, _ in letters]
            if letters[0][1]:
                names.reverse()
            return [], tuple(names)
        k = next(i for i in range(len(letters)) if letters[i][1] != letters[i - 1][1])
        letters = letters[k:] + letters[:k]
    runs = []
    cur: list[str] = []
    cur_dir = None
    for name, inv in letters:
        if inv != cur_dir and cur:
            runs.append(tuple(reversed(cur)) if cur_dir else tuple(cur))
            cur = []
        cur.append(name)
        cur_dir = inv
    runs.append(tuple(reversed(cur)) if cur_dir else tuple(cur))
    return runs, None


def is_compatible(s: Shape | ShapeWord, rel: RelationSet) -> bool:
    """True iff no path of the domain maps into the relation ideal."""
    word = s.word if isinstance(s, Shape) else s
    runs, period = directed_runs(word)
    if period is not None:
        m = rel.max_length
        if m == 0:
            return True
        n = len(period)
        reps = period * (m // n + 2)
        return all(rel.is_admissible(reps[i:i + m]) for i in range(n))
    return all(rel.is_admissible(r) for r in runs)


def _automorphism_count(word: ShapeWord) -> int:
    """Dihedral symmetries of the cyclic word that fix every letter."""
    n = len(word.letters)
    count = 0
    for r in word.rotations():
        if r.letters == word.letters:
            count += 1
    for r in word.reversed().rotations():
        if r.letters == word.letters:
            count += 1
    return count


def has_trivial_automorphisms(s: Shape | ShapeWord) -> bool:
    word = s.word if isinstance(s, Shape) else s
    if not word.cyclic:
        raise ShapeError("automorphism check is for cyclic shapes")
    return _automorphism_count(word) == 1


def shape_from_word(pres: QuiverPresentation, w: ShapeWord | str, check_relations=True) -> Shape:
    """Realise a word over ``pres`` and verify every shape invariant.

    >>> from stringalg.quiver import make_presentation
    >>> kr = make_presentation("xy", [("a", "x", "y"), ("b", "x", "y")])
    >>> shape_from_word(kr, "a a^-")
    Traceback (most recent call last):
    ...
    stringalg.shapes.ShapeError: a a^- is not strict
    """
    if isinstance(w, str):
        w = ShapeWord.parse(w)
    if not w.letters and w.base not in pres.quiver.vertices:
        raise ShapeError(f"unknown vertex {w.base!r}")
    if not walk_is_composable(pres, w):
        raise ShapeError(f"{w} is not a walk in the quiver")
    s = Shape(pres, w)
    if not is_strict(s.qmap):
        raise ShapeError(f"{w} is not strict")
    if check_relations and not is_compatible(s, pres.relations):
        raise ShapeError(f"{w} is not compatible with the relations")
    if w.cyclic and not has_trivial_automorphisms(w):
        raise ShapeError(f"{w} has a nontrivial automorphism")
    return s


def word_of_shape(s: Shape) -> ShapeWord:
    return canonical_word(s.word)


# -- extracting shapes from arbitrary connected domains ----------------------

def shape_from_map(pres: QuiverPresentation, m: QuiverMap) -> Shape:
    """Read off the walk word of a connected chain or cycle domain."""
    verts = list(m.vertices)
    if not verts:
        raise ShapeError("empty domain")
    if not m.arrows:
        if len(verts) != 1:
            raise ShapeError("disconnected domain")
        return Shape(pres, ShapeWord((), False, m.vertex_map[verts[0]]))
    incident: dict = {v: [] for v in verts}
    for aid, t, h in m.arrows:
        incident[t].append((aid, t, h))
        if h != t:
            incident[h].append((aid, t, h))
        else:
            incident[t].append((aid, t, h))
    degrees = {v: len(incident[v]) for v in verts}
    if max(degrees.values()) > 2:
        raise ShapeError("domain is neither linear nor cyclic")
    n_v, n_a = len(verts), len(m.arrows)
    if n_a == n_v - 1:
        cyclic = False
        ends = sorted((v for v in verts if degrees[v] == 1), key=repr)
        if len(ends) != 2:
            raise ShapeError("domain is neither linear nor cyclic")
        start = ends[0]
    elif n_a == n_v and all(d == 2 for d in degrees.values()):
        cyclic = True
        start = min(verts, key=repr)
    else:
        raise ShapeError("domain is neither linear nor cyclic")

    letters: list[Letter] = []
    used: set = set()
    cur = start
    visited = {start}
    for _ in range(n_a):
        nxt_arrow = None
        for arr in sorted(incident[cur], key=lambda x: repr(x[0])):
            if arr[0] not in used:
                nxt_arrow = arr
                break
        if nxt_arrow is None:
            raise ShapeError("domain is disconnected")
        aid, t, h = nxt_arrow
        used.add(aid)
        if t == cur:
            letters.append((m.arrow_map[aid], False))
            cur = h
        else:
            letters.append((m.arrow_map[aid], True))
            cur = t
        visited.add(cur)
    if len(visited) != n_v or (cyclic and cur != start):
        raise ShapeError("domain is disconnected")
    return Shape(pres, ShapeWord(tuple(letters), cyclic))


# -- factorizations -------------------------------------------------------

@dataclass(frozen=True)
class FactorizationSet:
    """All strict wrappings ``G`` with ``F' = F o G``."""

    maps: tuple[tuple[dict, dict], ...]

    @property
    def count(self) -> int:
        return len(self.maps)

    def __len__(self):
        return len(self.maps)

    def __bool__(self):
        return bool(self.maps)


def _factorizations(target: QuiverMap, source: QuiverMap, limit=None):
    """Enumerate morphisms ``G: source -> target`` with ``target o G = source``.

    ``source`` must be connected and ``target`` strict; then ``G`` is
    determined by the image of one vertex and is automatically a strict
    wrapping.
    """
    out_idx: dict = {}
    in_idx: dict = {}
    for aid, t, h in target.arrows:
        img = target.arrow_map[aid]
        out_idx[(t, img)] = (aid, h)
        in_idx[(h, img)] = (aid, t)
    src_inc: dict = {v: [] for v in source.vertices}
    for aid, t, h in source.arrows:
        src_inc[t].append((aid, t, h))
        src_inc[h].append((aid, t, h))
    if not source.vertices:
        return []
    v0 = source.vertices[0]
    want = source.vertex_map[v0]
    found = []
    for anchor in target.vertices:
        if target.vertex_map[anchor] != want:
            continue
        vmap = {v0: anchor}
        amap: dict = {}
        stack = [v0]
        ok = True
        while stack and ok:
            v = stack.pop()
            for aid, t, h in src_inc[v]:
                img = source.arrow_map[aid]
                if t == v:
                    hit = out_idx.get((vmap[v], img))
                    if hit is None:
                        ok = False
                        break
                    tgt_arrow, other = hit
                    far = h
                else:
                    hit = in_idx.get((vmap[v], img))
                    if hit is None:
                        ok = False
                        break
                    tgt_arrow, other = hit
                    far = t
                if aid in amap and amap[aid] != tgt_arrow:
                    ok = False
                    break
                amap[aid] = tgt_arrow
                if far in vmap:
                    if vmap[far] != other:
                        ok = False
                        break
                else:
                    vmap[far] = other
                    stack.append(far)
        if ok and len(vmap) == len(source.vertices):
            found.append((vmap, amap))
            if limit is not None and len(found) >= limit:
                break
    return found


def count_factorizations(F: Shape, Fp: Shape) -> FactorizationSet:
    """The set ``[F:F']``; ``F'`` must be connected (a linear or cyclic shape)."""
    return FactorizationSet(tuple(_factorizations(F.qmap, Fp.qmap)))


def factorization_count(F: Shape | QuiverMap, Fp: Shape | QuiverMap) -> int:
    a = F.qmap if isinstance(F, Shape) else F
    b = Fp.qmap if isinstance(Fp, Shape) else Fp
    return len(_factorizations(a, b))


def subshape_leq(Fp: Shape, F: Shape) -> bool:
    return bool(_factorizations(F.qmap, Fp.qmap, limit=1))


def shapes_isomorphic(s1: Shape, s2: Shape):
    """Return ``(vertex_map, arrow_map)`` of an isomorphism with ``F1 = F2 o sigma``, or None."""
    if s1.cyclic != s2.cyclic or s1.n_vertices != s2.n_vertices or len(s1) != len(s2):
        return None
    for vmap, amap in _factorizations(s2.qmap, s1.qmap):
        if len(set(vmap.values())) == s1.n_vertices:
            return vmap, amap
    return None


# -- enumeration ------------------------------------------------------------

def _letters_at(pres: QuiverPresentation, vertex: str) -> list[tuple[Letter, str]]:
    q = pres.quiver
    out = [((a.name, False), a.head) for a in q.outgoing[vertex]]
    out += [((a.name, True), a.tail) for a in q.incoming[vertex]]
    return sorted(out)


def iter_reduced_walks(pres: QuiverPresentation, max_len: int):
    """All compatible reduced walks of length 1..max_len (both directions)."""
    rel = pres.relations

    def extend(letters, end, run, run_dir):
        yield tuple(letters), end
        if len(letters) == max_len:
            return
        last = letters[-1]
        for letter, nxt in _letters_at(pres, end):
            if letter == _flip(last):
                continue
            name, inv = letter
            if inv == run_dir:
                new_run = (name,) + run if inv else run + (name,)
            else:
                new_run = (name,)
            if not rel.is_admissible(new_run):
                continue
            letters.append(letter)
            yield from extend(letters, nxt, new_run, inv)
            letters.pop()

    if max_len < 1:
        return
    for v in pres.quiver.vertices:
        for letter, nxt in _letters_at(pres, v):
            if not rel.is_admissible((letter[0],)):
                continue
            yield from extend([letter], nxt, (letter[0],), letter[1])


def enumerate_linear_shapes(pres: QuiverPresentation, max_len: int) -> list[ShapeWord]:
    """One canonical word per isoclass of compatible linear shapes of length <= max_len."""
    words = {ShapeWord((), False, v) for v in pres.quiver.vertices}
    for letters, _ in iter_reduced_walks(pres, max_len):
        words.add(canonical_word(ShapeWord(letters)))
    return sorted(words)


def enumerate_cyclic_shapes(pres: QuiverPresentation, max_len: int) -> list[ShapeWord]:
    """One canonical word per isoclass of cyclic shapes of length <= max_len."""
    q = pres.quiver
    words = set()
    for letters, end in iter_reduced_walks(pres, max_len):
        start_name, start_inv = letters[0]
        a = q.arrow[start_name]
        start = a.head if start_inv else a.tail
        if end != start:
            continue
        w = ShapeWord(letters, True)
        c = canonical_word(w)
        if c in words:
            continue
        try:
            shape_from_word(pres, c)
        except ShapeError:
            continue
        words.add(c)
    return sorted(words)


def linear_shapes(pres: QuiverPresentation, max_len: int) -> list[Shape]:
    return [Shape(pres, w) for w in enumerate_linear_shapes(pres, max_len)]


def cyclic_shapes(pres: QuiverPresentation, max_len: int) -> list[Shape]:
    return [Shape(pres, w) for w in enumerate_cyclic_shapes(pres, max_len)]


def _letter_subwords(word: ShapeWord) -> set[ShapeWord]:
    letters = word.letters
    n = len(letters)
    return {canonical_word(ShapeWord(letters[i:j])) for i in range(n) for j in range(i + 1, n + 1)}


def subshapes(F: Shape) -> set[ShapeWord]:
    """Canonical words of all subshapes of a linear shape (including F)."""
    if F.cyclic:
        raise ShapeError("subshapes() is for linear shapes")
    out = {ShapeWord((), False, v) for v in set(F.vertex_images)}
    if F.word.letters:
        out |= _letter_subwords(F.word)
    return out
