"""Link projections as 4-regular rotation systems and their passage to and
from plane graphs.

A crossing is a vertex with four darts ``[r0, r1, r2, r3]`` in counterclockwise
order; strands run straight through (``r0``-``r2`` and ``r1``-``r3``).  The two
planar smoothings are

* ``"A"``: join ``r0``-``r1`` and ``r2``-``r3`` (merges the corners
  ``(r1, r2)`` and ``(r3, r0)``),
* ``"B"``: join ``r1``-``r2`` and ``r3``-``r0`` (merges the corners
  ``(r0, r1)`` and ``(r2, r3)``).

:func:`medial` lays out the crossing of edge ``e`` so that its two black
corners (the vertex sides) are ``(r1, r2)`` and ``(r3, r0)``.  Hence smoothing
``"A"`` contracts ``e`` and smoothing ``"B"`` deletes it, and the dictionary
survives later smoothings because rotations keep their slot order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .planegraph import (
    GraphError,
    PlaneGraph,
    _is_connected,
    canonical_code,
    validate,
)

CONTRACT = "A"
DELETE = "B"


class ProjectionError(ValueError):
    pass


class WitnessInvalidError(ProjectionError):
    pass


class LinkProjection:
    """A (possibly split) link projection.

    ``rotations`` is a 4-regular rotation system over darts ``0..2*arcs-1``;
    ``circles`` counts crossing-free closed curves.  Separate pieces lose
    their relative position on the sphere.
    """

    def __init__(self, rotations: Sequence[Sequence[int]], circles: int = 0):
        self.rotations = tuple(tuple(r) for r in rotations)
        self.circles = int(circles)

    def __repr__(self):
        return f"LinkProjection({[list(r) for r in self.rotations]!r}, circles={self.circles})"

    def __eq__(self, other):
        return (
            isinstance(other, LinkProjection)
            and self.rotations == other.rotations
            and self.circles == other.circles
        )

    def __hash__(self):
        return hash((self.rotations, self.circles))

    @property
    def n_crossings(self) -> int:
        return len(self.rotations)

    @property
    def n_arcs(self) -> int:
        return 2 * len(self.rotations)

    @cached_property
    def _graph(self) -> PlaneGraph:
        return PlaneGraph(self.rotations)

    @cached_property
    def piece_vertex_sets(self) -> list[list[int]]:
        g = self._graph
        parent = list(range(g.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for d in range(0, 2 * self.n_arcs, 2):
            a, b = find(g.dart_vertex[d]), find(g.dart_vertex[d + 1])
            if a != b:
                parent[a] = b
        groups: dict[int, list[int]] = {}
        for v in range(g.n_vertices):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def pieces(self) -> list[PlaneGraph]:
        """Each crossing-bearing piece as a connected 4-regular plane graph."""
        out = []
        for vs in self.piece_vertex_sets:
            darts = sorted(d for v in vs for d in self.rotations[v])
            ren = {d: i for i, d in enumerate(darts)}
            out.append(PlaneGraph([[ren[d] for d in self.rotations[v]] for v in vs]))
        return out

    @property
    def n_pieces(self) -> int:
        return len(self.piece_vertex_sets) + self.circles

    def is_connected(self) -> bool:
        return self.n_pieces == 1

    def as_plane_graph(self) -> PlaneGraph:
        """The connected projection as a plane graph (a circle becomes K1)."""
        if not self.is_connected():
            raise ProjectionError("projection is split")
        if self.circles:
            return PlaneGraph([[]])
        return self._graph


def validate_projection(p: LinkProjection) -> str | None:
    if any(len(r) != 4 for r in p.rotations):
        return "not 4-regular"
    if p.circles < 0:
        return "negative circle count"
    darts = sorted(d for r in p.rotations for d in r)
    if darts != list(range(len(darts))):
        return "edge-end multiplicity"
    for piece in p.pieces():
        problem = validate(piece)
        if problem is not None:
            return problem
    if p.n_pieces == 0:
        return "empty projection"
    return None


def projection_code(p: LinkProjection) -> tuple:
    """Reflection-closed isomorphism code of a projection."""
    return (p.circles,) + tuple(sorted(canonical_code(piece) for piece in p.pieces()))


# -- construction -------------------------------------------------------------


def medial(g: PlaneGraph) -> LinkProjection:
    """The projection L(G): one crossing per edge, one arc per corner of *g*."""
    problem = validate(g)
    if problem is not None:
        raise GraphError(problem)
    if g.n_edges == 0:
        return LinkProjection([], circles=1)
    # arc k is the corner following dart k at its vertex
    rotations = []
    for e in range(g.n_edges):
        d, d2 = 2 * e, 2 * e + 1
        rotations.append(
            (
                2 * g.prev_dart(d2) + 1,
                2 * d,
                2 * g.prev_dart(d) + 1,
                2 * d2,
            )
        )
    return LinkProjection(rotations)


def components(p: LinkProjection) -> int:
    """Number of link components (closed strands traced straight through)."""
    g = p._graph
    seen = set()
    orbits = 0
    for rot in p.rotations:
        for d in rot:
            if d in seen:
                continue
            orbits += 1
            x = d
            while x not in seen:
                seen.add(x)
                y = x ^ 1
                ry = p.rotations[g.dart_vertex[y]]
                x = ry[(g.dart_position[y] + 2) % 4]
    return orbits // 2 + p.circles


def crossing_faces(p: LinkProjection) -> tuple[list[list[int]], dict[int, int]]:
    g = p.as_plane_graph()
    if g.n_edges == 0:
        return [[], []], {}
    return g.face_walks, g.dart_face


def checkerboard(p: LinkProjection) -> tuple[tuple[bool, ...], tuple[bool, ...]]:
    """The two proper face 2-colourings (``True`` = black), indexed like the
    face walks of :meth:`LinkProjection.as_plane_graph`.  For a crossing-free
    circle, face 0 is the inside."""
    walks, dart_face = crossing_faces(p)
    if not dart_face:
        return (True, False), (False, True)
    colour = {0: True}
    todo = [0]
    while todo:
        f = todo.pop()
        for d in walks[f]:
            h = dart_face[d ^ 1]
            if h not in colour:
                colour[h] = not colour[f]
                todo.append(h)
            elif colour[h] == colour[f]:
                raise ProjectionError("faces are not 2-colourable")
    first = tuple(colour[f] for f in range(len(walks)))
    return first, tuple(not c for c in first)


def tait(p: LinkProjection, colouring: Sequence[bool]) -> PlaneGraph:
    """Tait graph: a vertex per black face, edge ``x`` per crossing ``x``."""
    walks, dart_face = crossing_faces(p)
    if not dart_face:
        return PlaneGraph([[]])
    g = p.as_plane_graph()
    rotations = []
    for f, walk in enumerate(walks):
        if not colouring[f]:
            continue
        rot = []
        for k, d in enumerate(walk):
            nxt = walk[(k + 1) % len(walk)]
            x = g.dart_vertex[nxt]
            i = g.dart_position[nxt] - 1
            rot.append(2 * x + (i % 4 >= 2))
        rotations.append(rot)
    return PlaneGraph(rotations)


def vertex_colouring(p: LinkProjection) -> tuple[bool, ...]:
    """For ``p == medial(g)``: the colouring whose black faces hold g's vertices.

    Relies on the slot layout of :func:`medial`: corner ``(r1, r2)`` of
    crossing 0 is black, and that corner lies in the face of dart ``r2``.
    """
    first, second = checkerboard(p)
    _, dart_face = crossing_faces(p)
    if not dart_face:
        return first
    return first if first[dart_face[p.rotations[0][2]]] else second


def is_reduced(p: LinkProjection) -> bool:
    """No nugatory crossing: cutting out any single crossing point leaves its
    piece of the projection in one part."""
    g = p._graph
    for x, rot in enumerate(p.rotations):
        piece = next(vs for vs in p.piece_vertex_sets if x in vs)
        others = [v for v in piece if v != x]
        index = {v: i for i, v in enumerate(others)}
        loops = sum(1 for d in rot if d % 2 == 0 and d + 1 in rot)
        edges = []
        for d in range(0, 2 * p.n_arcs, 2):
            a, b = g.dart_vertex[d], g.dart_vertex[d + 1]
            if a in index and b in index:
                edges.append((0, index[a], index[b]))
        parts = loops
        if others:
            parts += 1 if _is_connected(len(others), edges) else 2
        if parts > 1:
            return False
    return True


# -- smoothing ----------------------------------------------------------------


def smooth(p: LinkProjection, crossing: int, choice: str) -> LinkProjection:
    """Replace *crossing* by one of its two planar reconnections."""
    if not 0 <= crossing < p.n_crossings:
        raise ProjectionError(f"no crossing {crossing}")
    if choice not in ("A", "B"):
        raise ProjectionError(f"smoothing choice must be 'A' or 'B', not {choice!r}")
    r = p.rotations[crossing]
    if choice == "A":
        pair = {r[0]: r[1], r[1]: r[0], r[2]: r[3], r[3]: r[2]}
    else:
        pair = {r[1]: r[2], r[2]: r[1], r[3]: r[0], r[0]: r[3]}
    removed = set(r)
    links: dict[int, int] = {}
    visited = set()
    for y0 in r:
        outer = y0 ^ 1
        if outer in removed:
            continue
        y = y0
        while True:
            visited.add(y)
            z = pair[y]
            visited.add(z)
            q = z ^ 1
            if q not in removed:
                break
            y = q
        links[outer] = q
        links[q] = outer
    circles = p.circles
    for y0 in r:
        if y0 in visited:
            continue
        circles += 1
        y = y0
        while y not in visited:
            visited.add(y)
            z = pair[y]
            visited.add(z)
            y = z ^ 1
    # re-pair surviving darts into arcs, numbered by their smaller old dart
    remaining = [d for v, rot in enumerate(p.rotations) if v != crossing for d in rot]
    mate = {d: links.get(d, d ^ 1) for d in remaining}
    firsts = sorted(d for d in remaining if d < mate[d] or (d == mate[d]))
    new_id = {}
    for k, d in enumerate(firsts):
        new_id[d] = 2 * k
        new_id[mate[d]] = 2 * k + 1
    rotations = [
        tuple(new_id[d] for d in rot) for v, rot in enumerate(p.rotations) if v != crossing
    ]
    return LinkProjection(rotations, circles)


@dataclass(frozen=True)
class SmoothingWitness:
    steps: tuple[tuple[int, str], ...]
    target_code: tuple = field(repr=False)

    def execute(self, p: LinkProjection) -> LinkProjection:
        for crossing, choice in self.steps:
            p = smooth(p, crossing, choice)
            if not p.is_connected():
                raise WitnessInvalidError("smoothing disconnected the projection")
        return p

    def verify(self, p: LinkProjection) -> bool:
        return projection_code(self.execute(p)) == self.target_code


def apply_witness(g: PlaneGraph, witness) -> SmoothingWitness:
    """Translate a minor witness from *g* into smoothings of ``medial(g)`` and
    certify that they produce ``medial(h)``."""
    from .minors import replay

    target = replay(g, witness)
    steps = tuple((e, CONTRACT if op == "contract" else DELETE) for op, e in witness.steps)
    sw = SmoothingWitness(steps, projection_code(medial(target)))
    try:
        ok = sw.verify(medial(g))
    except ProjectionError as exc:
        raise WitnessInvalidError(str(exc)) from exc
    if not ok:
        raise WitnessInvalidError("smoothed projection does not match the minor's projection")
    return sw


# -- text format ----------------------------------------------------------------


def format_projection(p: LinkProjection) -> str:
    from .planegraph import _dart_token

    lines = [f"{p.n_crossings} {p.n_arcs}"]
    for rot in p.rotations:
        lines.append(" ".join(_dart_token(d) for d in rot))
    if p.circles:
        lines.append(f"circles {p.circles}")
    return "\n".join(lines) + "\n"


def parse_projection(text: str) -> LinkProjection:
    from .planegraph import InvalidGraphError, _records, _token_dart

    records = _records(text)
    if len(records) != 1:
        raise InvalidGraphError(f"expected one projection record, found {len(records)}")
    lines = records[0]
    head = lines[0].split()
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise InvalidGraphError(f"bad header {lines[0]!r}")
    nc, na = map(int, head)
    if len(lines) < nc + 1:
        raise InvalidGraphError("missing crossing lines")
    rots = [[_token_dart(t) for t in line.split()] for line in lines[1:nc + 1]]
    circles = 0
    for line in lines[nc + 1:]:
        parts = line.split()
        if len(parts) != 2 or parts[0] != "circles" or not parts[1].isdigit():
            raise InvalidGraphError(f"unexpected trailing line {line!r}")
        circles = int(parts[1])
    p = LinkProjection(rots, circles)
    if p.n_arcs != na or sum(map(len, rots)) != 2 * na:
        raise InvalidGraphError("arc count does not match header")
    problem = validate_projection(p)
    if problem is not None:
        raise InvalidGraphError(problem)
    return p
