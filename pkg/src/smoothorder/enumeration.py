"""Exhaustive generation of small 2-connected plane multigraphs."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations, product
from typing import Callable, Iterator, Sequence

from .planegraph import (
    GraphError,
    PlaneGraph,
    canonical_code,
    circumference,
    format_graph,
    max_local_connectivity,
    validate,
)

EDGE_LIMIT = 12


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate.  Every bound and forbidden minor survives deleting
    an edge and suppressing a degree-2 vertex, so they also prune generation."""

    max_edges: int
    min_edges: int = 2
    max_cycle: int | None = None
    max_local_connectivity: int | None = None
    forbidden_minors: Sequence = ()
    required_minors: Sequence = ()
    extra: Sequence[Callable[[PlaneGraph], bool]] = field(default=(), compare=False)

    def __post_init__(self):
        if self.max_edges < 1 or self.min_edges < 1:
            raise ValueError("edge bounds must be positive")
        for b in (self.max_cycle, self.max_local_connectivity):
            if b is not None and b < 1:
                raise ValueError("bounds must be positive")


def _resolve(g):
    from .graphs import named

    return named(g) if isinstance(g, str) else g


def subdivide(g: PlaneGraph, e: int) -> PlaneGraph:
    f = g.n_edges
    rots = [tuple(2 * f + 1 if d == 2 * e + 1 else d for d in rot) for rot in g.rotations]
    rots.append((2 * e + 1, 2 * f))
    return PlaneGraph(rots)


def insert_edges(g: PlaneGraph) -> Iterator[PlaneGraph]:
    """Every way to draw one new edge across a face between distinct vertices."""
    f = g.n_edges
    a, b = 2 * f, 2 * f + 1
    for walk in g.face_walks:
        m = len(walk)
        for i in range(m):
            for j in range(i + 1, m):
                di, dj = walk[i], walk[j]
                if g.dart_vertex[di] == g.dart_vertex[dj]:
                    continue
                rots = []
                for rot in g.rotations:
                    out = []
                    for d in rot:
                        if d == di:
                            out.append(a)
                        elif d == dj:
                            out.append(b)
                        out.append(d)
                    rots.append(tuple(out))
                yield PlaneGraph(rots)


def children(g: PlaneGraph) -> Iterator[PlaneGraph]:
    yield from insert_edges(g)
    for e in range(g.n_edges):
        yield subdivide(g, e)


def _hereditary_ok(g: PlaneGraph, spec: EnumSpec, forbidden) -> bool:
    from .minors import has_minor

    if spec.max_cycle is not None and circumference(g) > spec.max_cycle:
        return False
    if spec.max_local_connectivity is not None and max_local_connectivity(g) > spec.max_local_connectivity:
        return False
    return not any(
        h.n_edges <= g.n_edges and h.n_vertices <= g.n_vertices and has_minor(g, h)
        for h in forbidden
    )


def _expand(g: PlaneGraph) -> list[tuple[tuple, PlaneGraph]]:
    return [(canonical_code(c), c) for c in children(g)]


def enumerate_blocks(spec: EnumSpec, limit: int = EDGE_LIMIT, workers: int = 1) -> Iterator[PlaneGraph]:
    """Yield each matching 2-connected loopless plane multigraph once (up to
    reflection-closed isomorphism), by edge count, then canonical code.

    With ``workers > 1`` each level is expanded in a process pool; the output
    does not depend on the worker count.
    """
    from .minors import has_minor

    if spec.max_edges > limit:
        raise GraphError(f"edge budget {spec.max_edges} exceeds the limit {limit}")
    forbidden = [_resolve(h) for h in spec.forbidden_minors]
    required = [_resolve(h) for h in spec.required_minors]
    level = {canonical_code(PlaneGraph([[0, 2], [3, 1]])): PlaneGraph([[0, 2], [3, 1]])}
    n = 2
    while n <= spec.max_edges:
        level = {c: g for c, g in level.items() if _hereditary_ok(g, spec, forbidden)}
        if n >= spec.min_edges:
            for code in sorted(level):
                g = level[code]
                if all(has_minor(g, h) for h in required) and all(p(g) for p in spec.extra):
                    yield g
        if n == spec.max_edges:
            break
        parents = [level[c] for c in sorted(level)]
        if workers > 1 and len(parents) > 1:
            with ProcessPoolExecutor(workers) as pool:
                expanded = list(pool.map(_expand, parents))
        else:
            expanded = [_expand(g) for g in parents]
        nxt: dict[tuple, PlaneGraph] = {}
        for batch in expanded:
            for code, child in batch:
                nxt.setdefault(code, child)
        level = nxt
        n += 1


def count_blocks_brute_force(max_edges: int) -> dict[int, set[tuple]]:
    """Independent oracle: try every rotation system on every loopless
    multigraph with at most *max_edges* edges; keep 2-connected sphere maps."""
    found: dict[int, set[tuple]] = {}
    for n_e in range(2, max_edges + 1):
        codes = set()
        for n_v in range(2, n_e + 1):
            pairs = [(u, v) for u in range(n_v) for v in range(u + 1, n_v)]
            for edges in combinations_with_replacement(pairs, n_e):
                if len({x for p in edges for x in p}) != n_v:
                    continue
                incident = [[] for _ in range(n_v)]
                for e, (u, v) in enumerate(edges):
                    incident[u].append(2 * e)
                    incident[v].append(2 * e + 1)
                if any(len(r) < 2 for r in incident):
                    continue
                choices = [
                    [(r[0],) + p for p in permutations(r[1:])] for r in incident
                ]
                for rots in product(*choices):
                    g = PlaneGraph(rots)
                    if validate(g) is None and g.is_two_connected():
                        codes.add(canonical_code(g))
        found[n_e] = codes
    return found


# -- case-analysis verification --------------------------------------------------------

DEFAULT_BUDGET = 10


@dataclass
class Family:
    """Graphs of one case of an analysis, after excluding earlier cases."""

    name: str
    expected: int
    members: list[tuple[PlaneGraph, str | None]]
    maximal: list[tuple[PlaneGraph, str | None]]

    @property
    def types(self) -> int:
        return len(self.members)

    def as_dict(self) -> dict:
        return {
            "family": self.name,
            "expected": self.expected,
            "types": self.types,
            "maximal": len(self.maximal),
            "links": [sym for _, sym in self.members],
            "maximal_links": [sym for _, sym in self.maximal],
        }


@dataclass
class Sweep:
    """Every block under some hypotheses, identified, checked against the
    links the hypotheses allow."""

    name: str
    budget: int
    allowed: str
    graphs: list[tuple[PlaneGraph, str | None]]
    violations: list[str]
    families: list[Family] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "sweep": self.name,
            "budget": self.budget,
            "allowed": self.allowed,
            "graphs": len(self.graphs),
            "links": sorted({sym or "?" for _, sym in self.graphs}),
            "violations": self.violations,
            "families": [f.as_dict() for f in self.families],
        }

    def format(self) -> str:
        lines = [
            f"{self.name}: {len(self.graphs)} blocks up to {self.budget} edges, "
            f"{len(self.violations)} violations (allowed: {self.allowed})"
        ]
        lines += [f"  violation: {v}" for v in self.violations]
        for f in self.families:
            lines.append(
                f"  {f.name}: {f.types} types (expected {f.expected}), "
                f"{len(f.maximal)} minor-maximal; links {', '.join(s or '?' for _, s in f.members)}"
            )
        return "\n".join(lines)


def _label(g: PlaneGraph) -> tuple[str | None, bool, bool]:
    from .linkid import identify, is_torus_2n, is_twist_knot

    name = identify(g)
    return (name.symbol if name else None), is_torus_2n(g)[0], is_twist_knot(g)


def _sweep(name, spec, allowed_desc, allowed, workers) -> Sweep:
    graphs, bad = [], []
    for g in enumerate_blocks(spec, workers=workers):
        sym, torus, twist = _label(g)
        graphs.append((g, sym))
        if not allowed(g, sym, torus, twist):
            bad.append(f"{sym or 'unregistered'} ({g.n_edges} edges): {format_graph(g).strip()!r}")
    return Sweep(name, spec.max_edges, allowed_desc, graphs, bad)


def _minor_maximal(members):
    from .minors import has_minor

    return [
        (g, s)
        for g, s in members
        if not any(h.n_edges > g.n_edges and has_minor(h, g) for h, _ in members)
    ]


TORUS25_ALLOWED = {"0_1", "2^2_1", "3_1", "4_1", "4^2_1", "5_2", "5^2_1", "6^2_2", "6^2_3", "6^3_1", "6^3_2", "7^3_1", "8^4_1"}

CASE_CONFIGURATIONS = (
    ("4-cycle with a diagonal path of length 2", 3, lambda G: G.k2n(3)),
    ("4-cycle with a diagonal", 4, lambda G: G.c4_diagonal()),
    ("4-cycle with multiple edges", 6, lambda G: G.multi_cycle([2, 1, 1, 1])),
    ("3-cycle with multiple edges", 3, lambda G: G.multi_cycle([2, 1, 1])),
)


def verify_torus25_cases(budget: int = DEFAULT_BUDGET, workers: int = 1) -> Sweep:
    """Blocks with no C5, theta_5 or doubled-side-plus-diagonal 4-cycle minor.

    Every block must carry a link excluded from the (2,5)-torus majors.  The
    blocks with more than four edges are split by configuration, each case
    excluding the earlier ones, and counted both as isomorphism types and as
    minor-maximal types.
    """
    from . import graphs as G
    from .minors import has_minor

    spec = EnumSpec(
        max_edges=budget,
        forbidden_minors=(G.cycle(5), G.theta(5), G.named("torus25-precursor")),
    )
    sweep = _sweep(
        "torus-2-5 cases",
        spec,
        ", ".join(sorted(TORUS25_ALLOWED)),
        lambda g, sym, torus, twist: sym in TORUS25_ALLOWED,
        workers,
    )
    pool = [(g, s) for g, s in sweep.graphs if g.n_edges > 4]
    earlier: list[PlaneGraph] = []
    for name, expected, make in CASE_CONFIGURATIONS:
        conf = make(G)
        members = [
            (g, s) for g, s in pool if has_minor(g, conf) and not any(has_minor(g, h) for h in earlier)
        ]
        sweep.families.append(Family(name, expected, members, _minor_maximal(members)))
        earlier.append(conf)
    return sweep


def verify_torus24_cases(budget: int = DEFAULT_BUDGET, workers: int = 1) -> Sweep:
    """Blocks with cycles of length <= 3, local connectivity <= 3 and no
    ``theta4-precursor`` minor carry only Hopf links, trefoils and figure-eights."""
    spec = EnumSpec(
        max_edges=budget,
        max_cycle=3,
        max_local_connectivity=3,
        forbidden_minors=("theta4-precursor",),
    )
    allowed = {"0_1", "2^2_1", "3_1", "4_1"}
    return _sweep(
        "torus-2-4 cases",
        spec,
        ", ".join(sorted(allowed)),
        lambda g, sym, torus, twist: sym in allowed,
        workers,
    )


def verify_five2_cases(budget: int = DEFAULT_BUDGET, workers: int = 1) -> Sweep:
    """Blocks without a 5_2 graph minor carry (2,n)-torus links, 4_1, 5^2_1,
    6^3_1 or 6^3_2.

    Three internally disjoint paths between two vertices, one of length at
    least 3, form a subdivided 4-cycle with a doubled side; a path of length 2
    plus three more paths contract to a triangle with a tripled side.  Those
    are the two graphs of 5_2.
    """
    from . import graphs as G

    spec = EnumSpec(
        max_edges=budget,
        forbidden_minors=(G.multi_cycle([2, 1, 1, 1]), G.multi_cycle([3, 1, 1])),
    )
    allowed = {"0_1", "4_1", "5^2_1", "6^3_1", "6^3_2"}
    return _sweep(
        "5_2 cases",
        spec,
        "(2,n)-torus, " + ", ".join(sorted(allowed)),
        lambda g, sym, torus, twist: torus or sym in allowed,
        workers,
    )


def verify_all(budget: int = DEFAULT_BUDGET, workers: int = 1) -> list[Sweep]:
    return [
        verify_torus24_cases(budget, workers),
        verify_torus25_cases(budget, workers),
        verify_five2_cases(budget, workers),
    ]
