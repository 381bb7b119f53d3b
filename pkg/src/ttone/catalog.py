"""Named graphs: small families plus the two drawings used as golden data."""

from __future__ import annotations

from .coloring import PartialColoring
from .errors import InputError
from .graph import Multigraph

NAMES = ("path:n", "cycle:n", "star:n", "complete:n", "k4_minus_e", "petersen", "fig2",
         "dodecahedron", "prism")

# Petersen: outer v1..v5 -> 0..4, inner u1..u5 -> 5..9.
# Edge ids: outer cycle 0-4, inner pentagram 5-9, spokes 10-14.
_PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
]

# 2-tone edge 6-coloring of the Petersen graph, in the edge order above.
_PETERSEN_LABELS = [
    (2, 3), (4, 5), (1, 3), (2, 5), (1, 4),
    (3, 4), (1, 5), (2, 4), (3, 5), (1, 2),
    (5, 6), (1, 6), (2, 6), (4, 6), (3, 6),
]

# Drawn labels 1..10 renumbered to 0..9 (label - 1).
_FIG2_DRAWN = [
    (8, 4), (4, 1), (1, 2), (2, 3), (3, 1), (3, 6), (6, 10), (10, 8),
    (8, 9), (9, 10), (9, 5), (5, 2), (5, 7), (7, 4), (7, 6),
]


def path(n: int) -> Multigraph:
    if n < 1:
        raise InputError("path needs at least one vertex")
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Multigraph:
    if n < 3:
        raise InputError("cycle needs at least three vertices")
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Multigraph:
    """K_{1,n} with center 0."""
    if n < 1:
        raise InputError("star needs at least one leaf")
    return Multigraph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete(n: int) -> Multigraph:
    if n < 1:
        raise InputError("complete graph needs at least one vertex")
    return Multigraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def k4_minus_e() -> Multigraph:
    return Multigraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])


def petersen() -> Multigraph:
    return Multigraph(10, _PETERSEN_EDGES)


def petersen_six_coloring() -> PartialColoring:
    return PartialColoring(2, 6, {i: frozenset(l) for i, l in enumerate(_PETERSEN_LABELS)})


def fig2() -> Multigraph:
    return Multigraph(10, [(a - 1, b - 1) for a, b in _FIG2_DRAWN])


def prism() -> Multigraph:
    return Multigraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def dodecahedron() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes_out = [(i, 5 + 2 * i) for i in range(5)]
    middle = [(5 + i, 5 + (i + 1) % 10) for i in range(10)]
    spokes_in = [(6 + 2 * i, 15 + i) for i in range(5)]
    inner = [(15 + i, 15 + (i + 1) % 5) for i in range(5)]
    return Multigraph(20, outer + spokes_out + middle + spokes_in + inner)


def catalog(name: str) -> Multigraph:
    key, _, arg = name.partition(":")
    key = key.strip().lower().replace("-", "_")
    sized = {"path": path, "cycle": cycle, "star": star, "complete": complete}
    fixed = {
        "k4_minus_e": k4_minus_e, "k4me": k4_minus_e, "petersen": petersen, "fig2": fig2,
        "prism": prism, "dodecahedron": dodecahedron,
    }
    if key in sized:
        try:
            n = int(arg)
        except ValueError:
            raise InputError(f"{key} needs an integer size, e.g. {key}:5") from None
        if n > 10_000:
            raise InputError("size out of range")
        return sized[key](n)
    if key in fixed and not arg:
        return fixed[key]()
    raise InputError(f"unknown graph name {name!r}; known: {', '.join(NAMES)}")
