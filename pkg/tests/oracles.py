"""Brute-force reference computations, independent of the library's algorithms."""

from __future__ import annotations

from itertools import product

from stringalg.quiver import QuiverPresentation


def all_letters(pres: QuiverPresentation):
    return [(a.name, inv) for a in pres.quiver.arrows for inv in (False, True)]


def letter_ends(pres, letter):
    a = pres.quiver.arrow[letter[0]]
    return (a.head, a.tail) if letter[1] else (a.tail, a.head)


def walk_vertices(pres, letters):
    """Images of the domain vertices of a walk, or None if it does not compose."""
    start = letter_ends(pres, letters[0])[0]
    verts = [start]
    for l in letters:
        s, e = letter_ends(pres, l)
        if s != verts[-1]:
            return None
        verts.append(e)
    return verts


def domain_arrows(letters, cyclic=False):
    """Domain arrows ``(tail, head, image)`` of the walk on vertices 0..n."""
    n = len(letters)
    out = []
    for i, (a, inv) in enumerate(letters):
        j = (i + 1) % n if cyclic else i + 1
        out.append((j, i, a) if inv else (i, j, a))
    return out


def is_strict_walk(letters, cyclic=False):
    arrs = domain_arrows(letters, cyclic)
    for x in range(len(arrs)):
        for y in range(x + 1, len(arrs)):
            (t1, h1, a1), (t2, h2, a2) = arrs[x], arrs[y]
            if a1 == a2 and (t1 == t2 or h1 == h2):
                return False
    return True


def directed_paths(letters, cyclic=False):
    """All directed paths (traversal order) of the walk's domain, up to length len+1."""
    arrs = domain_arrows(letters, cyclic)
    succ = {}
    for t, h, a in arrs:
        succ.setdefault(t, []).append((h, a))
    paths = []
    limit = len(letters) + 2

    def grow(v, acc):
        if acc:
            paths.append(tuple(acc))
        if len(acc) >= limit:
            return
        for h, a in succ.get(v, ()):
            grow(h, acc + [a])

    for t in {t for t, _, _ in arrs}:
        grow(t, [])
    return paths


def contains(path, rel):
    return any(path[i:i + len(rel)] == rel for i in range(len(path) - len(rel) + 1))


def is_compatible_walk(pres, letters, cyclic=False):
    gens = pres.relations.generators
    return not any(contains(p, g) for p in directed_paths(letters, cyclic) for g in gens)


def inverse_word(letters):
    return tuple((a, not inv) for a, inv in reversed(letters))


def linear_classes(pres: QuiverPresentation, max_len: int) -> set[frozenset]:
    """Isoclasses of linear shapes by exhaustive search over letter sequences.

    A class is the set of its two readings; vertex shapes are ``('@', v)``.
    """
    out = {frozenset([("@", v)]) for v in pres.quiver.vertices}
    letters = all_letters(pres)
    for n in range(1, max_len + 1):
        for w in product(letters, repeat=n):
            if walk_vertices(pres, w) is None:
                continue
            if not is_strict_walk(w) or not is_compatible_walk(pres, w):
                continue
            out.add(frozenset([w, inverse_word(w)]))
    return out


def admissible_paths(pres: QuiverPresentation, max_len: int) -> set[tuple[str, ...]]:
    """Admissible paths of length 1..max_len in traversal order."""
    q = pres.quiver
    out = set()
    for n in range(1, max_len + 1):
        for p in product([a.name for a in q.arrows], repeat=n):
            if all(q.arrow[p[i]].head == q.arrow[p[i + 1]].tail for i in range(n - 1)):
                if not any(contains(p, g) for g in pres.relations.generators):
                    out.add(p)
    return out


def factor_count(pres, big, small) -> int:
    """``|F:F'|`` by matching ``F'`` against ``F`` letter by letter.

    Shapes are ``(letters, cyclic, vertex)`` with ``vertex`` used only for
    the empty word.  Every factorization sends ``F'`` onto a stretch of ``F``
    read in one of two directions; maps are told apart by vertex images.
    """
    big_letters, big_cyclic, big_vertex = big
    small_letters, _, small_vertex = small
    n = len(big_letters)
    size = n if big_cyclic else n + 1
    verts = walk_vertices(pres, big_letters)[:size] if big_letters else [big_vertex]
    if not small_letters:
        return sum(1 for v in verts if v == small_vertex)
    m = len(small_letters)
    if not big_cyclic and m > n:
        return 0
    seen = set()
    for i in (range(n) if big_cyclic else range(n - m + 1)):
        stretch = [big_letters[(i + k) % n] for k in range(m)]
        if stretch == list(small_letters):
            seen.add(tuple((i + k) % size for k in range(m + 1)))
        if stretch == list(inverse_word(small_letters)):
            seen.add(tuple((i + m - k) % size for k in range(m + 1)))
    return len(seen)


def rotations(letters):
    return [tuple(letters[k:] + letters[:k]) for k in range(len(letters))]


def cyclic_classes(pres: QuiverPresentation, max_len: int) -> set[frozenset]:
    """Isoclasses of cyclic shapes with no symmetry fixing the word."""
    out = set()
    letters = all_letters(pres)
    for n in range(1, max_len + 1):
        for w in product(letters, repeat=n):
            verts = walk_vertices(pres, w)
            if verts is None or verts[-1] != verts[0]:
                continue
            if not is_strict_walk(w, True) or not is_compatible_walk(pres, w, True):
                continue
            readings = rotations(list(w)) + rotations(list(inverse_word(w)))
            if readings.count(tuple(w)) != 1:
                continue
            out.add(frozenset(readings))
    return out


def word_class(word) -> frozenset:
    """The oracle's class of a library ``ShapeWord``."""
    if not word.letters:
        return frozenset([("@", word.base)])
    if word.cyclic:
        w = list(word.letters)
        return frozenset(rotations(w) + rotations(list(inverse_word(w))))
    return frozenset([word.letters, inverse_word(word.letters)])


def as_triple(word):
    return (word.letters, word.cyclic, word.base)
