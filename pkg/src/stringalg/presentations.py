"""Bundled example presentations."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .quiver import QuiverPresentation, make_presentation, parse_presentation


def load_presentation(path) -> QuiverPresentation:
    return parse_presentation(Path(path).read_text(encoding="utf-8"))


def bundled(name: str) -> QuiverPresentation:
    """Load ``<name>.quiver`` from the package data directory."""
    text = resources.files("stringalg").joinpath("data", f"{name}.quiver").read_text(encoding="utf-8")
    return parse_presentation(text)


def gelfand_ponomarev(n: int = 3) -> QuiverPresentation:
    """Double loop with ``a^n = b^n = ab = ba = 0``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return make_presentation(
        ["x"], [("a", "x", "x"), ("b", "x", "x")],
        [("a",) * n, ("b",) * n, ("a", "b"), ("b", "a")])


def kronecker() -> QuiverPresentation:
    return make_presentation(["x", "y"], [("a", "x", "y"), ("b", "x", "y")])


def linear_quiver(orientation: str) -> QuiverPresentation:
    """Relation-free type A quiver; ``orientation`` has one char per arrow, '>' or '<'.

    Vertices are ``v0 .. vn``; arrow ``ai`` joins ``vi`` and ``v(i+1)``.
    """
    n = len(orientation)
    arrows = []
    for i, c in enumerate(orientation):
        if c == ">":
            arrows.append((f"a{i}", f"v{i}", f"v{i + 1}"))
        elif c == "<":
            arrows.append((f"a{i}", f"v{i + 1}", f"v{i}"))
        else:
            raise ValueError(f"bad orientation character {c!r}")
    return make_presentation([f"v{i}" for i in range(n + 1)], arrows)


def cyclic_quiver(orientation: str) -> QuiverPresentation:
    """Relation-free type A~ quiver; needs both orientations to be finite dimensional."""
    n = len(orientation)
    arrows = []
    for i, c in enumerate(orientation):
        j = (i + 1) % n
        if c == ">":
            arrows.append((f"a{i}", f"v{i}", f"v{j}"))
        elif c == "<":
            arrows.append((f"a{i}", f"v{j}", f"v{i}"))
        else:
            raise ValueError(f"bad orientation character {c!r}")
    return make_presentation([f"v{i}" for i in range(n)], arrows)
