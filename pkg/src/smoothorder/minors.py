"""Embedded minor testing with replayable deletion/contraction witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .planegraph import (
    GraphError,
    PlaneGraph,
    _contract,
    _delete,
    _is_connected,
    canonical_code,
    circumference,
    contract_edge,
    delete_edge,
    validate,
)

MAX_EDGES = 12


class SearchTooLarge(GraphError):
    pass


@dataclass(frozen=True)
class MinorWitness:
    """Steps ``("delete" | "contract", edge)``; edge ids refer to the graph
    reached so far (ids are renumbered densely after every step)."""

    source_code: tuple
    steps: tuple[tuple[str, int], ...]
    target_code: tuple

    def format(self) -> str:
        return "\n".join(f"{op} {e + 1}" for op, e in self.steps)


def replay(g: PlaneGraph, witness: MinorWitness) -> PlaneGraph:
    """Run the witness from *g*; every intermediate graph must be connected."""
    if canonical_code(g) != witness.source_code:
        raise GraphError("witness source does not match the graph")
    for op, e in witness.steps:
        if op == "delete":
            g = delete_edge(g, e)
        elif op == "contract":
            g = contract_edge(g, e)
        else:
            raise GraphError(f"unknown step {op!r}")
    if canonical_code(g) != witness.target_code:
        raise GraphError("witness does not reach its target")
    return g


def _non_cut_edges(g: PlaneGraph) -> list[int]:
    edges = g.edges
    out = []
    for e, u, v in edges:
        if u == v or _is_connected(g.n_vertices, [t for t in edges if t[0] != e]):
            out.append(e)
    return out


def _moves(g: PlaneGraph, contract_left: int, delete_left: int):
    seen = set()
    if contract_left:
        for e, u, v in g.edges:
            if u == v:
                continue
            child = _contract(g, e)
            code = canonical_code(child)
            if code not in seen:
                seen.add(code)
                yield ("contract", e), child, code
    if delete_left:
        for e in _non_cut_edges(g):
            child = _delete(g, e)
            code = canonical_code(child)
            if code not in seen:
                seen.add(code)
                yield ("delete", e), child, code


def find_witness(g: PlaneGraph, h: PlaneGraph, max_edges: int = MAX_EDGES) -> MinorWitness | None:
    """A connected deletion/contraction sequence from *g* to *h*, or ``None``.

    Depth-first over distinct intermediate graphs; exact because every
    unexplored branch is pruned only by edge and vertex counts.
    """
    for x in (g, h):
        problem = validate(x)
        if problem is not None:
            raise GraphError(problem)
    if g.n_edges > max_edges:
        raise SearchTooLarge(f"{g.n_edges} edges exceeds the search limit {max_edges}")
    contractions = g.n_vertices - h.n_vertices
    deletions = (g.n_edges - h.n_edges) - contractions
    if contractions < 0 or deletions < 0:
        return None
    source, target = canonical_code(g), canonical_code(h)
    dead: set[tuple] = set()

    def search(x: PlaneGraph, code: tuple, c_left: int, d_left: int):
        if c_left == 0 and d_left == 0:
            return [] if code == target else None
        if code in dead:
            return None
        for step, child, child_code in _moves(x, c_left, d_left):
            c2 = c_left - (step[0] == "contract")
            d2 = d_left - (step[0] == "delete")
            rest = search(child, child_code, c2, d2)
            if rest is not None:
                return [step] + rest
        dead.add(code)
        return None

    steps = search(g, source, contractions, deletions)
    if steps is None:
        return None
    return MinorWitness(source, tuple(steps), target)


def has_minor(g: PlaneGraph, h: PlaneGraph, max_edges: int = MAX_EDGES) -> bool:
    return find_witness(g, h, max_edges) is not None


def max_bond(g: PlaneGraph) -> int:
    """Largest number of edges between two connected halves of a vertex
    bipartition; a theta_k minor exists iff this is at least k."""
    n = g.n_vertices
    edges = [(u, v) for _, u, v in g.edges if u != v]
    best = 0
    verts = range(n)
    for size in range(1, n // 2 + 1):
        for side in combinations(verts, size):
            if size * 2 == n and 0 not in side:
                continue
            s = set(side)
            rest = [v for v in verts if v not in s]
            if not (_induced_connected(side, edges) and _induced_connected(rest, edges)):
                continue
            best = max(best, sum((u in s) != (v in s) for u, v in edges))
    return best


def _induced_connected(vs, edges) -> bool:
    index = {v: i for i, v in enumerate(vs)}
    inside = [(0, index[u], index[v]) for u, v in edges if u in index and v in index]
    return _is_connected(len(vs), inside)


FAMILIES = ("cycle", "theta")


def has_family_minor(g: PlaneGraph, family: str, k: int | None = None):
    """Whether *g* has a minor from *family*, with the witnessing parameter.

    ``family="cycle"`` asks for C_j with j >= k (answered by the longest
    cycle); ``"theta"`` for theta_j with j >= k (answered by the largest
    bond).  Any key of :data:`smoothorder.graphs.NAMED` asks for that fixed
    graph and returns ``(bool, None)``.
    """
    from .graphs import NAMED

    if family == "cycle":
        c = circumference(g)
        return c >= (k or 1), c
    if family == "theta":
        b = max_bond(g)
        return b >= (k or 1), b
    if family in NAMED:
        return has_minor(g, NAMED[family]()), None
    raise GraphError(f"unknown family {family!r}")
