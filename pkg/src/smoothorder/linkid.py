"""Identify prime alternating links from their reduced Tait graphs.

Identification runs on the Kauffman bracket of the alternating diagram over
``medial(g)``, normalized up to units and closed under mirroring, together
with the component and crossing counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import graphs as G
from .medial import components, medial, smooth
from .planegraph import GraphError, PlaneGraph, canonical_code, dual, validate

MAX_BRACKET_EDGES = 16


class NotReducedError(GraphError):
    pass


class NotABlockError(GraphError):
    pass


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial ``sum(coeffs[i] * A**(low + i))``."""

    low: int
    coeffs: tuple[int, ...]

    @classmethod
    def make(cls, terms: dict[int, int]) -> "LaurentPoly":
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls(0, ())
        lo, hi = min(terms), max(terms)
        return cls(lo, tuple(terms.get(k, 0) for k in range(lo, hi + 1)))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls.make({exp: coeff})

    def terms(self) -> dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        t = self.terms()
        for k, v in other.terms().items():
            t[k] = t.get(k, 0) + v
        return LaurentPoly.make(t)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        t: dict[int, int] = {}
        for a, x in self.terms().items():
            for b, y in other.terms().items():
                t[a + b] = t.get(a + b, 0) + x * y
        return LaurentPoly.make(t)

    def __pow__(self, n: int) -> "LaurentPoly":
        out = LaurentPoly.monomial(0)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def invert_variable(self) -> "LaurentPoly":
        """Substitute A -> 1/A (the mirror image)."""
        return LaurentPoly.make({-k: v for k, v in self.terms().items()})

    def normalized(self) -> tuple[int, ...]:
        """Coefficients up to a unit +-A^k: lowest exponent 0, lowest coefficient positive."""
        if not self.coeffs:
            return ()
        sign = 1 if self.coeffs[0] > 0 else -1
        return tuple(sign * c for c in self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in sorted(self.terms().items(), reverse=True):
            mono = "" if k == 0 else ("A" if k == 1 else f"A^{k}")
            coef = str(c) if (abs(c) != 1 or not mono) else ("-" if c < 0 else "")
            parts.append(f"{coef}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


LOOP = LaurentPoly.make({2: -1, -2: -1})


def _uniform_sign(g: PlaneGraph) -> int:
    if g.signs is None:
        return 1
    if len(set(g.signs)) > 1:
        raise GraphError("bracket needs uniformly signed edges")
    return g.signs[0] if g.signs else 1


def bracket(g: PlaneGraph, max_edges: int = MAX_BRACKET_EDGES) -> LaurentPoly:
    """Kauffman bracket of the alternating diagram with Tait graph *g*.

    State sum over edge subsets ``S`` (the A-smoothed crossings); the state
    has ``2*k(S) + |S| - |V|`` loops, ``k(S)`` counting components of the
    spanning subgraph on ``S``.  A positive edge is A-smoothed by contracting it.
    """
    problem = validate(g)
    if problem is not None:
        raise GraphError(problem)
    if g.n_edges > max_edges:
        raise GraphError(f"{g.n_edges} edges exceeds the bracket limit {max_edges}")
    sign = _uniform_sign(g)
    n, m = g.n_vertices, g.n_edges
    ends = [g.endpoints(e) for e in range(m)]
    powers = {}
    terms: dict[int, int] = {}
    for mask in range(1 << m):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        k, size = n, 0
        for e in range(m):
            if mask >> e & 1:
                size += 1
                a, b = find(ends[e][0]), find(ends[e][1])
                if a != b:
                    parent[a] = b
                    k -= 1
        loops = 2 * k + size - n
        if loops not in powers:
            powers[loops] = LOOP ** (loops - 1)
        shift = sign * (2 * size - m)
        for exp, c in powers[loops].terms().items():
            terms[exp + shift] = terms.get(exp + shift, 0) + c
    return LaurentPoly.make(terms)


def bracket_by_skein(g: PlaneGraph) -> LaurentPoly:
    """Independent bracket: resolve the crossings of ``medial(g)`` one at a
    time with <D> = A<D_A> + A^-1<D_B>, counting circles at the end."""
    sign = _uniform_sign(g)
    a_choice, b_choice = ("A", "B") if sign > 0 else ("B", "A")

    def rec(p) -> LaurentPoly:
        if p.n_crossings == 0:
            return LOOP ** (p.circles - 1)
        return LaurentPoly.monomial(1) * rec(smooth(p, 0, a_choice)) + LaurentPoly.monomial(
            -1
        ) * rec(smooth(p, 0, b_choice))

    return rec(medial(g))


@dataclass(frozen=True)
class Fingerprint:
    brackets: tuple[tuple[int, ...], tuple[int, ...]]
    components: int
    crossings: int

    def as_dict(self) -> dict:
        return {
            "bracket": list(self.brackets[0]),
            "mirror_bracket": list(self.brackets[1]),
            "components": self.components,
            "crossings": self.crossings,
        }


def _check_reduced(g: PlaneGraph) -> None:
    problem = validate(g)
    if problem is not None:
        raise GraphError(problem)
    if any(g.is_loop(e) for e in range(g.n_edges)) or g.cut_edges():
        raise NotReducedError("graph has a loop or a cut edge")


def fingerprint(g: PlaneGraph) -> Fingerprint:
    """Mirror-closed invariant of the link of the alternating diagram on ``medial(g)``."""
    _check_reduced(g)
    b = bracket(PlaneGraph(g.rotations))
    pair = sorted([b.normalized(), b.invert_variable().normalized()])
    return Fingerprint((pair[0], pair[1]), components(medial(g)), g.n_edges)


def _is_block(g: PlaneGraph) -> bool:
    return g.n_edges == 0 or g.is_two_connected()


def _check_block(g: PlaneGraph) -> None:
    _check_reduced(g)
    if not _is_block(g):
        raise NotABlockError("graph has a cut vertex")


# -- families ------------------------------------------------------------------


def is_torus_2n(g: PlaneGraph) -> tuple[bool, int]:
    """Whether *g* is C_n or theta_n (the (2, n)-torus link graphs), with n = |E|."""
    n = g.n_edges
    if n < 2:
        return False, n
    code = canonical_code(PlaneGraph(g.rotations))
    ok = code in (canonical_code(G.cycle(n)), canonical_code(G.theta(n)))
    return ok, n


def twist_graph(n: int) -> PlaneGraph:
    """n-cycle with one side doubled: the twist knot with n + 1 crossings."""
    return G.multi_cycle([2] + [1] * (n - 1))


def is_twist_knot(g: PlaneGraph) -> bool:
    """C_n (n >= 3) with exactly one doubled side, or a planar dual of one."""
    n = g.n_edges - 1
    if n < 3:
        return False
    t = twist_graph(n)
    code = canonical_code(PlaneGraph(g.rotations))
    return code in (canonical_code(t), canonical_code(dual(t)))


def crossing_number(g: PlaneGraph) -> int:
    _check_block(g)
    return g.n_edges


# -- table -----------------------------------------------------------------------


@dataclass(frozen=True)
class LinkName:
    symbol: str
    crossings: int
    components: int

    def __str__(self):
        return self.symbol


@dataclass(frozen=True)
class TableEntry:
    name: LinkName
    graphs: tuple[Callable[[], PlaneGraph], ...]
    torus: bool = False
    twist: bool = False
    external: bool = False


def _pair(f):
    return (f, lambda: dual(f()))


ENTRIES = (
    TableEntry(LinkName("0_1", 0, 1), (G.K1,)),
    TableEntry(LinkName("2^2_1", 2, 2), (lambda: G.theta(2),), torus=True),
    TableEntry(LinkName("3_1", 3, 1), (lambda: G.cycle(3), lambda: G.theta(3)), torus=True),
    TableEntry(LinkName("4_1", 4, 1), (lambda: G.multi_cycle([2, 1, 1]),), twist=True),
    TableEntry(LinkName("4^2_1", 4, 2), (lambda: G.cycle(4), lambda: G.theta(4)), torus=True),
    TableEntry(LinkName("5_1", 5, 1), (lambda: G.cycle(5), lambda: G.theta(5)), torus=True),
    TableEntry(
        LinkName("5_2", 5, 1),
        (lambda: G.multi_cycle([2, 1, 1, 1]), lambda: G.multi_cycle([3, 1, 1])),
        twist=True,
    ),
    TableEntry(LinkName("5^2_1", 5, 2), (G.c4_diagonal, lambda: G.multi_cycle([2, 2, 1]))),
    TableEntry(LinkName("6_1", 6, 1), _pair(lambda: G.multi_cycle([2, 1, 1, 1, 1])), twist=True),
    TableEntry(LinkName("6_2", 6, 1), _pair(lambda: G.multi_cycle([3, 1, 2])), external=True),
    TableEntry(
        LinkName("6_3", 6, 1),
        _pair(lambda: G.c4_multi_diagonal(1, (2, 1, 1, 1))),
        external=True,
    ),
    TableEntry(LinkName("6^2_1", 6, 2), (lambda: G.cycle(6), lambda: G.theta(6)), torus=True),
    TableEntry(LinkName("6^2_2", 6, 2), _pair(lambda: G.multi_cycle([3, 1, 1, 1]))),
    TableEntry(
        LinkName("6^2_3", 6, 2),
        (
            lambda: G.c4_multi_diagonal(2),
            lambda: G.multi_cycle([2, 2, 1, 1]),
            lambda: G.c4_multi_diagonal(2, split=True),
            lambda: G.multi_cycle([2, 1, 2, 1]),
        ),
    ),
    TableEntry(LinkName("6^3_1", 6, 3), (lambda: G.k2n(3), lambda: G.multi_cycle([2, 2, 2]))),
    TableEntry(LinkName("6^3_2", 6, 3), (G.complete4,)),
    TableEntry(LinkName("7^3_1", 7, 3), (lambda: G.multi_cycle([2, 2, 2, 1]), G.k24_contracted)),
    TableEntry(LinkName("8^4_1", 8, 4), (lambda: G.multi_cycle([2, 2, 2, 2]), lambda: G.k2n(4))),
)

HASSE_LINKS = (
    "0_1", "2^2_1", "3_1", "4_1", "4^2_1", "5_1", "5_2", "5^2_1",
    "6_1", "6_2", "6_3", "6^2_1", "6^2_2", "6^2_3", "6^3_1", "6^3_2",
)


class TableError(AssertionError):
    pass


class LinkTable:
    """Registry of named links keyed by symbol, built from its canonical
    graphs; construction asserts the fingerprints separate every entry."""

    def __init__(self, entries=ENTRIES):
        self.entries = {t.name.symbol: t for t in entries}
        self.fingerprints: dict[str, Fingerprint] = {}
        by_print: dict[Fingerprint, str] = {}
        for sym, entry in self.entries.items():
            prints = {fingerprint(f()) for f in entry.graphs}
            if len(prints) != 1:
                raise TableError(f"graphs registered for {sym} disagree")
            (fp,) = prints
            if fp.components != entry.name.components or fp.crossings != entry.name.crossings:
                raise TableError(f"{sym}: graph gives {fp.components} components, {fp.crossings} crossings")
            if fp in by_print:
                raise TableError(f"{sym} and {by_print[fp]} share a fingerprint")
            by_print[fp] = sym
            self.fingerprints[sym] = fp
        self._by_print = by_print

    def __contains__(self, symbol: str) -> bool:
        return self.resolve(symbol) is not None

    def resolve(self, symbol: str) -> str | None:
        """Accept ``6^2_3`` or the ASCII alias ``6_2_3``."""
        if symbol in self.entries:
            return symbol
        parts = symbol.split("_")
        if len(parts) == 3:
            alias = f"{parts[0]}^{parts[1]}_{parts[2]}"
            if alias in self.entries:
                return alias
        return None

    def entry(self, symbol: str) -> TableEntry:
        sym = self.resolve(symbol)
        if sym is None:
            raise KeyError(f"unknown link {symbol!r}")
        return self.entries[sym]

    def name(self, symbol: str) -> LinkName:
        return self.entry(symbol).name

    def graph(self, symbol: str) -> PlaneGraph:
        return self.entry(symbol).graphs[0]()

    def lookup(self, fp: Fingerprint) -> LinkName | None:
        sym = self._by_print.get(fp)
        return None if sym is None else self.entries[sym].name


@lru_cache(maxsize=1)
def link_table() -> LinkTable:
    return LinkTable()


def identify(g: PlaneGraph) -> LinkName | None:
    """The registry link whose alternating diagram has Tait graph *g*, if any."""
    _check_block(g)
    return link_table().lookup(fingerprint(g))

