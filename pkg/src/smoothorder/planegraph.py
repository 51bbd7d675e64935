"""Connected multigraphs embedded on the 2-sphere, stored as rotation systems.

Every edge ``e`` owns two darts (edge-ends): ``2*e`` at its first endpoint and
``2*e + 1`` at its second.  A vertex is a cyclic sequence of darts (its
rotation, read counterclockwise).  Faces are the orbits of
``phi(d) = next_at_vertex(partner(d))``.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

__all__ = [
    "PlaneGraph",
    "GraphError",
    "DisconnectsError",
    "LoopContractionError",
    "InvalidGraphError",
    "validate",
    "faces",
    "dual",
    "delete_edge",
    "contract_edge",
    "blocks",
    "local_connectivity",
    "has_cycle_of_length_at_least",
    "circumference",
    "canonical_code",
    "from_edges",
    "embed",
    "cycle_graph",
    "theta_graph",
    "parse_graph",
    "parse_graphs",
    "format_graph",
]


class GraphError(ValueError):
    """Base class for rejected plane-graph operations."""


class InvalidGraphError(GraphError):
    pass


class DisconnectsError(GraphError):
    pass


class LoopContractionError(GraphError):
    pass


def partner(d: int) -> int:
    return d ^ 1


class PlaneGraph:
    """An (immutable) rotation system, optionally with per-edge signs.

    ``rotations[v]`` lists the darts around vertex ``v``.  Construction does
    not validate; call :func:`validate` or rely on the operations, which
    reject invalid input.
    """

    __slots__ = ("rotations", "signs", "__dict__")

    def __init__(self, rotations: Iterable[Iterable[int]], signs: Sequence[int] | None = None):
        self.rotations = tuple(tuple(int(d) for d in rot) for rot in rotations)
        self.signs = None if signs is None else tuple(int(s) for s in signs)

    def __repr__(self):
        return f"PlaneGraph({[list(r) for r in self.rotations]!r}" + (
            f", signs={list(self.signs)!r})" if self.signs is not None else ")"
        )

    def __eq__(self, other):
        return (
            isinstance(other, PlaneGraph)
            and self.rotations == other.rotations
            and self.signs == other.signs
        )

    def __hash__(self):
        return hash((self.rotations, self.signs))

    @property
    def n_vertices(self) -> int:
        return len(self.rotations)

    @cached_property
    def n_edges(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    @cached_property
    def dart_vertex(self) -> dict[int, int]:
        return {d: v for v, rot in enumerate(self.rotations) for d in rot}

    @cached_property
    def dart_position(self) -> dict[int, int]:
        return {d: i for rot in self.rotations for i, d in enumerate(rot)}

    def next_dart(self, d: int) -> int:
        rot = self.rotations[self.dart_vertex[d]]
        return rot[(self.dart_position[d] + 1) % len(rot)]

    def prev_dart(self, d: int) -> int:
        rot = self.rotations[self.dart_vertex[d]]
        return rot[(self.dart_position[d] - 1) % len(rot)]

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.dart_vertex[2 * e], self.dart_vertex[2 * e + 1]

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        return [(e, *self.endpoints(e)) for e in range(self.n_edges)]

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def is_loop(self, e: int) -> bool:
        u, v = self.endpoints(e)
        return u == v

    @cached_property
    def face_walks(self) -> list[list[int]]:
        if self.n_edges == 0:
            return [[]]
        seen = set()
        walks = []
        for rot in self.rotations:
            for d in rot:
                if d in seen:
                    continue
                walk = []
                x = d
                while x not in seen:
                    seen.add(x)
                    walk.append(x)
                    x = self.next_dart(partner(x))
                walks.append(walk)
        return walks

    @cached_property
    def dart_face(self) -> dict[int, int]:
        return {d: f for f, walk in enumerate(self.face_walks) for d in walk}

    @property
    def n_faces(self) -> int:
        return len(self.face_walks)

    def is_connected(self) -> bool:
        return _is_connected(self.n_vertices, self.edges)

    def multigraph(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.n_vertices))
        for e, u, v in self.edges:
            g.add_edge(u, v, key=e)
        return g

    def mirror(self) -> "PlaneGraph":
        return PlaneGraph((tuple(reversed(r)) for r in self.rotations), self.signs)

    def with_signs(self, sign: int) -> "PlaneGraph":
        return PlaneGraph(self.rotations, [sign] * self.n_edges)

    def is_two_connected(self) -> bool:
        """2-connected in the block sense: one block, no loops, at least one edge."""
        if self.n_edges == 0:
            return False
        if any(self.is_loop(e) for e in range(self.n_edges)):
            return False
        if self.n_vertices == 2:
            return self.n_edges >= 2
        return len(_block_edge_sets(self)) == 1

    def cut_edges(self) -> list[int]:
        return [e for e in range(self.n_edges) if self._is_cut_edge(e)]

    def _is_cut_edge(self, e: int) -> bool:
        if self.is_loop(e):
            return False
        rest = [t for t in self.edges if t[0] != e]
        return not _is_connected(self.n_vertices, rest)


def _is_connected(n: int, edges) -> bool:
    if n == 0:
        return False
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for _, u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps == 1


def validate(g: PlaneGraph) -> str | None:
    """Return ``None`` if *g* is a valid connected sphere embedding, else the
    name of the first violated invariant."""
    darts = [d for rot in g.rotations for d in rot]
    if len(darts) % 2 or sorted(darts) != list(range(len(darts))):
        return "edge-end multiplicity"
    if g.signs is not None and (
        len(g.signs) != len(darts) // 2 or any(s not in (1, -1) for s in g.signs)
    ):
        return "sign table"
    if not g.is_connected():
        return "not connected"
    if g.n_vertices - g.n_edges + g.n_faces != 2:
        return "not genus 0"
    return None


def _require_valid(g: PlaneGraph) -> None:
    problem = validate(g)
    if problem is not None:
        raise InvalidGraphError(problem)


def faces(g: PlaneGraph) -> list[list[int]]:
    """Face boundary walks as dart lists; every dart lies in exactly one walk."""
    _require_valid(g)
    return [list(w) for w in g.face_walks]


def dual(g: PlaneGraph) -> PlaneGraph:
    """Planar dual.  Edge ``e`` of the dual crosses edge ``e`` of *g*; its
    first end sits in the face of dart ``2e``.  ``dual(dual(g)) == g`` up to
    vertex numbering."""
    _require_valid(g)
    if g.n_edges == 0:
        return PlaneGraph([[]], g.signs)
    signs = None if g.signs is None else [-s for s in g.signs]
    return PlaneGraph(g.face_walks, signs)


def _renumber_edges(g: PlaneGraph, removed: set[int], rotations) -> PlaneGraph:
    shift = {}
    k = 0
    for e in range(g.n_edges):
        if e in removed:
            continue
        shift[e] = k
        k += 1
    rots = [tuple(2 * shift[d >> 1] + (d & 1) for d in rot) for rot in rotations]
    signs = None if g.signs is None else [s for e, s in enumerate(g.signs) if e not in removed]
    return PlaneGraph(rots, signs)


def delete_edge(g: PlaneGraph, e: int) -> PlaneGraph:
    _require_valid(g)
    if not 0 <= e < g.n_edges:
        raise GraphError(f"no edge {e}")
    if g._is_cut_edge(e):
        raise DisconnectsError(f"deleting edge {e} disconnects the graph")
    return _delete(g, e)


def _delete(g: PlaneGraph, e: int) -> PlaneGraph:
    rots = [tuple(d for d in rot if d >> 1 != e) for rot in g.rotations]
    return _renumber_edges(g, {e}, rots)


def contract_edge(g: PlaneGraph, e: int) -> PlaneGraph:
    """Contract a non-loop edge, splicing the two rotations at the ends of *e*."""
    _require_valid(g)
    if not 0 <= e < g.n_edges:
        raise GraphError(f"no edge {e}")
    if g.is_loop(e):
        raise LoopContractionError(f"edge {e} is a loop")
    return _contract(g, e)


def _contract(g: PlaneGraph, e: int) -> PlaneGraph:
    u, v = g.endpoints(e)
    ru, rv = g.rotations[u], g.rotations[v]
    pu, pv = g.dart_position[2 * e], g.dart_position[2 * e + 1]
    merged = ru[pu + 1:] + ru[:pu] + rv[pv + 1:] + rv[:pv]
    rots = []
    for w, rot in enumerate(g.rotations):
        if w == u:
            rots.append(merged)
        elif w != v:
            rots.append(rot)
    return _renumber_edges(g, {e}, rots)


def _subgraph(g: PlaneGraph, edge_set: set[int]) -> PlaneGraph:
    rots = []
    for rot in g.rotations:
        kept = tuple(d for d in rot if d >> 1 in edge_set)
        if kept:
            rots.append(kept)
    removed = set(range(g.n_edges)) - edge_set
    return _renumber_edges(g, removed, rots)


def _block_edge_sets(g: PlaneGraph) -> list[list[int]]:
    """Edge sets of the blocks (Hopcroft-Tarjan on edges; loops are blocks)."""
    adj = [[] for _ in range(g.n_vertices)]
    blocks_out = []
    for e, u, v in g.edges:
        if u == v:
            blocks_out.append([e])
            continue
        adj[u].append((v, e))
        adj[v].append((u, e))
    disc = [-1] * g.n_vertices
    low = [0] * g.n_vertices
    stack: list[int] = []
    counter = 0
    for root in range(g.n_vertices):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = counter
        counter += 1
        work = [(root, -1, iter(adj[root]))]
        while work:
            v, via, it = work[-1]
            advanced = False
            for w, e in it:
                if e == via:
                    continue
                if disc[w] == -1:
                    stack.append(e)
                    disc[w] = low[w] = counter
                    counter += 1
                    work.append((w, e, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    stack.append(e)
                    low[v] = min(low[v], disc[w])
                elif disc[w] == disc[v]:
                    pass
            if advanced:
                continue
            work.pop()
            if work:
                p = work[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    comp = []
                    while True:
                        x = stack.pop()
                        comp.append(x)
                        if x == via:
                            break
                    blocks_out.append(sorted(comp))
    return sorted(blocks_out)


def blocks(g: PlaneGraph) -> list[PlaneGraph]:
    """Blocks of *g* (2-connected pieces, bridges, loops) with induced embeddings."""
    _require_valid(g)
    if g.n_edges == 0:
        return []
    return [_subgraph(g, set(es)) for es in _block_edge_sets(g)]


def local_connectivity(g: PlaneGraph, u: int, v: int) -> int:
    """Maximum number of internally vertex-disjoint u-v paths.

    Parallel edges count separately; computed as a unit vertex-capacity
    maximum flow.
    """
    if u == v:
        raise GraphError("local connectivity needs two distinct vertices")
    flow = nx.DiGraph()

    def arc(a, b, cap):
        if flow.has_edge(a, b):
            flow[a][b]["capacity"] += cap
        else:
            flow.add_edge(a, b, capacity=cap)

    for w in range(g.n_vertices):
        if w not in (u, v):
            arc(("in", w), ("out", w), 1)
    for _, a, b in g.edges:
        if a == b:
            continue
        arc(_out(a, u, v), _in(b, u, v), 1)
        arc(_out(b, u, v), _in(a, u, v), 1)
    src, dst = _out(u, u, v), _in(v, u, v)
    if src not in flow or dst not in flow:
        return 0
    return int(nx.maximum_flow_value(flow, src, dst))


def _in(w, u, v):
    return ("t", w) if w in (u, v) else ("in", w)


def _out(w, u, v):
    return ("t", w) if w in (u, v) else ("out", w)


def max_local_connectivity(g: PlaneGraph) -> int:
    n = g.n_vertices
    return max(
        (local_connectivity(g, a, b) for a in range(n) for b in range(a + 1, n)),
        default=0,
    )


def circumference(g: PlaneGraph) -> int:
    """Length of the longest cycle (loops count 1, parallel pairs count 2)."""
    best = 0
    mult: dict[tuple[int, int], int] = {}
    nbrs = [set() for _ in range(g.n_vertices)]
    for _, a, b in g.edges:
        if a == b:
            best = max(best, 1)
            continue
        key = (min(a, b), max(a, b))
        mult[key] = mult.get(key, 0) + 1
        nbrs[a].add(b)
        nbrs[b].add(a)
    if any(m >= 2 for m in mult.values()):
        best = max(best, 2)

    # simple cycles of length >= 3 through the lowest vertex start
    def extend(start, path, visited):
        nonlocal best
        last = path[-1]
        for w in nbrs[last]:
            if w == start and len(path) >= 3:
                best = max(best, len(path))
            elif w > start and w not in visited:
                visited.add(w)
                path.append(w)
                extend(start, path, visited)
                path.pop()
                visited.discard(w)

    for s in range(g.n_vertices):
        extend(s, [s], {s})
    return best


def has_cycle_of_length_at_least(g: PlaneGraph, k: int) -> bool:
    if k < 1:
        raise GraphError("cycle length bound must be >= 1")
    return circumference(g) >= k


def _code_from(g: PlaneGraph, d0: int, forward: bool) -> tuple[int, ...]:
    rots, vert, pos = g.rotations, g.dart_vertex, g.dart_position
    start = {vert[d0]: d0}
    queue = [vert[d0]]
    label: dict[int, int] = {}
    order: list[int] = []
    i = 0
    while i < len(queue):
        v = queue[i]
        i += 1
        rot = rots[v]
        k, p = len(rot), pos[start[v]]
        step = 1 if forward else -1
        for j in range(k):
            d = rot[(p + step * j) % k]
            label[d] = len(order)
            order.append(d)
            w = vert[d ^ 1]
            if w not in start:
                start[w] = d ^ 1
                queue.append(w)
    code: list[int] = []
    signs = g.signs
    at = 0
    for v in queue:
        deg = len(rots[v])
        code.append(deg)
        for d in order[at:at + deg]:
            x = label[d ^ 1]
            if signs is not None:
                x = 2 * x + (signs[d >> 1] < 0)
            code.append(x)
        at += deg
    return tuple(code)


def canonical_code(g: PlaneGraph) -> tuple[int, ...]:
    """Code invariant under relabelling, rotation start and global reflection."""
    if g.n_edges == 0:
        return (len(g.rotations), 0)
    deg = [len(r) for r in g.rotations]
    vert = g.dart_vertex
    key = {d: (deg[vert[d]], deg[vert[d ^ 1]]) for d in vert}
    top = max(key.values())
    best = None
    for d, k in key.items():
        if k != top:
            continue
        for forward in (True, False):
            c = _code_from(g, d, forward)
            if best is None or c < best:
                best = c
    return (1,) + best


# -- constructors -----------------------------------------------------------


def from_edges(n_vertices: int, edges: Sequence[tuple[int, int]], rotations=None) -> PlaneGraph:
    """Build a graph from an edge list and per-vertex cyclic neighbour orders.

    ``rotations[v]`` lists edge indices around ``v``; a loop appears twice.
    Without *rotations*, the edges are taken in list order at every vertex,
    which is only planar for simple cases (cycles, thetas, trees).
    """
    if rotations is None:
        rotations = [[] for _ in range(n_vertices)]
        for e, (a, b) in enumerate(edges):
            rotations[a].append(e)
            rotations[b].append(e)
    used = set()
    rots = []
    for v, rot in enumerate(rotations):
        out = []
        for e in rot:
            a, b = edges[e]
            if a == b:
                d = 2 * e if 2 * e not in used else 2 * e + 1
            else:
                d = 2 * e if v == a else 2 * e + 1
            used.add(d)
            out.append(d)
        rots.append(out)
    return PlaneGraph(rots)


def embed(n_vertices: int, edges: Sequence[tuple[int, int]]) -> PlaneGraph:
    """Some sphere embedding of an abstract planar multigraph.

    Each edge is subdivided so that parallel edges and loops become a simple
    graph; its networkx planar embedding supplies the rotations.
    """
    h = nx.Graph()
    h.add_nodes_from(range(n_vertices))
    for e, (a, b) in enumerate(edges):
        if a == b:
            h.add_edges_from([(a, ("m", e, 0)), (("m", e, 0), ("m", e, 1)), (("m", e, 1), a)])
        else:
            h.add_edges_from([(a, ("m", e)), (("m", e), b)])
    planar, emb = nx.check_planarity(h)
    if not planar:
        raise InvalidGraphError("graph is not planar")
    rotations = []
    for v in range(n_vertices):
        rot = []
        for w in (emb.neighbors_cw_order(v) if h.degree(v) else []):
            rot.append(w[1])
        rotations.append(rot)
    return from_edges(n_vertices, edges, rotations)


def cycle_graph(n: int) -> PlaneGraph:
    """C_n for n >= 1 (C_1 is a loop, C_2 a digon)."""
    if n == 1:
        return PlaneGraph([[0, 1]])
    edges = [(i, (i + 1) % n) for i in range(n)]
    rots = [[(i - 1) % n, i] for i in range(n)]
    return from_edges(n, edges, rots)


def theta_graph(n: int) -> PlaneGraph:
    """Two vertices joined by n parallel edges (theta_0 is K1)."""
    if n == 0:
        return PlaneGraph([[]])
    return PlaneGraph([[2 * e for e in range(n)], [2 * e + 1 for e in reversed(range(n))]])


# -- text format ------------------------------------------------------------


def _dart_token(d: int) -> str:
    return ("+" if d % 2 == 0 else "-") + str(d // 2 + 1)


def _token_dart(tok: str) -> int:
    if tok[0] not in "+-" or not tok[1:].isdigit() or int(tok[1:]) < 1:
        raise InvalidGraphError(f"bad edge-end token {tok!r}")
    e = int(tok[1:]) - 1
    return 2 * e + (tok[0] == "-")


def format_graph(g: PlaneGraph) -> str:
    """Serialize: ``V E`` header, one rotation per line, ``.`` for an empty
    rotation, optional ``signs`` line."""
    lines = [f"{g.n_vertices} {g.n_edges}"]
    for rot in g.rotations:
        lines.append(" ".join(_dart_token(d) for d in rot) if rot else ".")
    if g.signs is not None:
        lines.append("signs " + " ".join("+" if s > 0 else "-" for s in g.signs))
    return "\n".join(lines) + "\n"


def _records(text: str) -> list[list[str]]:
    records, cur = [], []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            if cur and not raw.strip():
                records.append(cur)
                cur = []
            continue
        cur.append(line)
    if cur:
        records.append(cur)
    return records


def _parse_record(lines: list[str]) -> PlaneGraph:
    head = lines[0].split()
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise InvalidGraphError(f"bad header {lines[0]!r}")
    nv, ne = map(int, head)
    if len(lines) < nv + 1:
        raise InvalidGraphError("missing rotation lines")
    rots = []
    for line in lines[1:nv + 1]:
        rots.append([] if line == "." else [_token_dart(t) for t in line.split()])
    signs = None
    rest = lines[nv + 1:]
    if rest:
        parts = rest[0].split()
        if parts[0] != "signs" or len(rest) > 1 or any(t not in "+-" for t in parts[1:]):
            raise InvalidGraphError(f"unexpected trailing line {rest[0]!r}")
        signs = [1 if t == "+" else -1 for t in parts[1:]]
    g = PlaneGraph(rots, signs)
    if g.n_edges != ne or sum(map(len, rots)) != 2 * ne:
        raise InvalidGraphError("edge count does not match header")
    return g


def parse_graphs(text: str) -> list[PlaneGraph]:
    return [_parse_record(r) for r in _records(text)]


def parse_graph(text: str) -> PlaneGraph:
    graphs = parse_graphs(text)
    if len(graphs) != 1:
        raise InvalidGraphError(f"expected one graph record, found {len(graphs)}")
    return graphs[0]
