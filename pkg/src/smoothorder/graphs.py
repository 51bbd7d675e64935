"""Named plane graphs used by the link table and the case analyses."""

from __future__ import annotations

from typing import Sequence

from .planegraph import PlaneGraph, cycle_graph, embed, from_edges, theta_graph, validate

__all__ = [
    "K1",
    "cycle",
    "theta",
    "multi_cycle",
    "c4_diagonal",
    "complete4",
    "k2n",
    "k24_contracted",
    "c4_multi_diagonal",
    "NAMED",
    "named",
]


def K1() -> PlaneGraph:
    return PlaneGraph([[]])


def cycle(n: int) -> PlaneGraph:
    return cycle_graph(n)


def theta(n: int) -> PlaneGraph:
    return theta_graph(n)


def multi_cycle(mults: Sequence[int]) -> PlaneGraph:
    """A cycle whose i-th side is a bundle of ``mults[i]`` parallel edges.

    ``multi_cycle([2, 1, 1])`` is the triangle with one doubled side.  The
    embedding is unique up to reflection.
    """
    n = len(mults)
    if n < 2 or min(mults) < 1:
        raise ValueError("need at least two sides of positive multiplicity")
    edges = []
    bundles = []
    for i, m in enumerate(mults):
        ids = []
        for _ in range(m):
            ids.append(len(edges))
            edges.append((i, (i + 1) % n))
        bundles.append(ids)
    rotations = []
    for i in range(n):
        back = bundles[(i - 1) % n]
        fwd = bundles[i]
        # outermost-to-innermost on one side, mirrored on the other
        rotations.append(list(reversed(back)) + fwd)
    if n == 2:
        edges = [(0, 1)] * len(edges)
        rotations = [list(range(len(edges))), list(reversed(range(len(edges))))]
    return _checked(from_edges(n, edges, rotations))


def c4_multi_diagonal(diag: int, sides: Sequence[int] = (1, 1, 1, 1), split: bool = False) -> PlaneGraph:
    """A 4-cycle 0-1-2-3 with side multiplicities *sides* and ``diag`` chords 0-2.

    The chords sit side by side (a lens of digons) unless ``split``, in which
    case the first chord runs through the outer face.
    """
    edges: list[tuple[int, int]] = []
    side_ids = []
    for i, m in enumerate(sides):
        ids = []
        for _ in range(m):
            ids.append(len(edges))
            edges.append((i, (i + 1) % 4))
        side_ids.append(ids)
    chords = []
    for _ in range(diag):
        chords.append(len(edges))
        edges.append((0, 2))
    outer = chords[:1] if split else []
    inner = chords[1:] if split else chords
    rev = lambda ids: list(reversed(ids))  # noqa: E731
    # vertex 0 west, 1 north, 2 east, 3 south; counterclockwise rotations,
    # bundles listed outermost first
    r0 = rev(inner) + rev(side_ids[0]) + outer + side_ids[3]
    r1 = side_ids[0] + rev(side_ids[1])
    r2 = inner + rev(side_ids[2]) + outer + side_ids[1]
    r3 = side_ids[2] + rev(side_ids[3])
    return _checked(from_edges(4, edges, [r0, r1, r2, r3]))


def c4_diagonal() -> PlaneGraph:
    """4-cycle with one diagonal (the Whitehead link graph)."""
    return c4_multi_diagonal(1)


def complete4() -> PlaneGraph:
    return _checked(embed(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))


def k2n(n: int) -> PlaneGraph:
    """Complete bipartite K_{2,n}; hubs are vertices 0 and 1."""
    edges = []
    for i in range(n):
        edges += [(0, 2 + i), (1, 2 + i)]
    return _checked(embed(2 + n, edges))


def k24_contracted() -> PlaneGraph:
    """K_{2,4} with one edge contracted: K_{2,3} plus an edge joining the hubs."""
    edges = [(0, 1)]
    for i in range(3):
        edges += [(0, 2 + i), (1, 2 + i)]
    return _checked(embed(5, edges))


def _checked(g: PlaneGraph) -> PlaneGraph:
    problem = validate(g)
    if problem is not None:
        raise AssertionError(f"bad catalog graph: {problem}")
    return g


NAMED = {
    # contracting the single side gives theta_4; every block with cycles of
    # length <= 3 and local connectivity <= 3 contains it or is a proper minor
    "theta4-precursor": lambda: multi_cycle([2, 2, 1]),
    "figure-eight": lambda: multi_cycle([2, 1, 1]),
    "whitehead": c4_diagonal,
    "whitehead-dual": lambda: multi_cycle([2, 2, 1]),
    # 4-cycle carrying a doubled side and a diagonal (a (2,5)-torus projection)
    "torus25-precursor": lambda: c4_multi_diagonal(1, (2, 1, 1, 1)),
    "k4": complete4,
    "k23": lambda: k2n(3),
    "k24": lambda: k2n(4),
    "k24-contracted": k24_contracted,
}


def named(name: str) -> PlaneGraph:
    try:
        return NAMED[name]()
    except KeyError:
        raise KeyError(f"unknown named graph {name!r}") from None
