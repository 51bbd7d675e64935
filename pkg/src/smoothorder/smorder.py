"""Decision rules for the smoothing order and its Hasse diagram.

Each characterized target has a rule that is existential over the prime
factors of the source link; a non-split link is given by its factors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence

import networkx as nx

from . import graphs as G
from .linkid import identify, is_torus_2n, is_twist_knot, link_table
from .medial import SmoothingWitness, apply_witness, medial, tait, vertex_colouring
from .minors import MinorWitness, find_witness
from .planegraph import GraphError, PlaneGraph, canonical_code, dual


class NotCharacterizedError(ValueError):
    pass


@dataclass(frozen=True)
class Factor:
    """A prime alternating factor, from the table or from a reduced block."""

    symbol: str | None
    crossings: int
    torus: bool
    twist: bool
    graph: PlaneGraph | None = field(default=None, compare=False, repr=False)

    @property
    def label(self) -> str:
        return self.symbol or f"<{self.crossings}-crossing graph>"

    @classmethod
    def from_symbol(cls, symbol: str) -> "Factor":
        table = link_table()
        entry = table.entry(symbol)
        return cls(entry.name.symbol, entry.name.crossings, entry.torus, entry.twist, entry.graphs[0]())

    @classmethod
    def from_graph(cls, g: PlaneGraph) -> "Factor":
        name = identify(g)
        if name is not None:
            f = cls.from_symbol(name.symbol)
            return cls(f.symbol, f.crossings, f.torus, f.twist, g)
        return cls(None, g.n_edges, is_torus_2n(g)[0], is_twist_knot(g), g)


@dataclass(frozen=True)
class LinkSpec:
    """A non-split link as a connected sum of prime factors (split links are
    not representable).  Trivial-knot summands are dropped."""

    factors: tuple[Factor, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a link needs at least one factor")

    @classmethod
    def of(cls, *parts: str | PlaneGraph | Factor) -> "LinkSpec":
        factors = []
        for p in parts:
            if isinstance(p, Factor):
                factors.append(p)
            elif isinstance(p, PlaneGraph):
                factors.append(Factor.from_graph(p))
            else:
                factors.append(Factor.from_symbol(p))
        nontrivial = [f for f in factors if f.symbol != "0_1"]
        return cls(tuple(nontrivial) if nontrivial else (Factor.from_symbol("0_1"),))

    @classmethod
    def parse(cls, text: str) -> "LinkSpec":
        """``"3_1#3_1"`` style connected sums of table symbols."""
        return cls.of(*(t.strip() for t in text.split("#")))

    @property
    def nontrivial(self) -> tuple[Factor, ...]:
        return tuple(f for f in self.factors if f.symbol != "0_1")

    @property
    def crossings(self) -> int:
        return sum(f.crossings for f in self.factors)

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1

    def __str__(self):
        return "#".join(f.label for f in self.factors)


@dataclass(frozen=True)
class OrderResult:
    verdict: bool
    rule: str
    reason: str
    factor: str | None = None
    witness: SmoothingWitness | None = None

    def __bool__(self):
        return self.verdict

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "rule": self.rule,
            "reason": self.reason,
            "factor": self.factor,
            "witness": None if self.witness is None else [list(s) for s in self.witness.steps],
        }


def _exists(L: LinkSpec, rule: str, pred: Callable[[Factor], bool], says: str, fails: str) -> OrderResult:
    for f in L.nontrivial:
        if pred(f):
            return OrderResult(True, rule, f"factor {f.label} {says}", f.label)
    return OrderResult(False, rule, f"every factor {fails}")


def smajor_trivial(L: LinkSpec) -> OrderResult:
    return OrderResult(True, "trivial-knot", "non-split links smooth to the trivial knot")


def smajor_hopf(L: LinkSpec) -> OrderResult:
    if L.nontrivial:
        return OrderResult(True, "hopf", "not the trivial knot", L.nontrivial[0].label)
    return OrderResult(False, "hopf", "the trivial knot")


def smajor_trefoil(L: LinkSpec) -> OrderResult:
    return _exists(L, "trefoil", lambda f: f.symbol != "2^2_1", "is not a Hopf link", "is a Hopf link")


_SMALL = {"2^2_1", "3_1", "4_1"}


def smajor_torus24(L: LinkSpec) -> OrderResult:
    return _exists(
        L,
        "torus-2-4",
        lambda f: f.symbol not in _SMALL,
        "is none of 2^2_1, 3_1, 4_1",
        "is 2^2_1, 3_1 or 4_1",
    )


def smajor_fig8(L: LinkSpec) -> OrderResult:
    return _exists(
        L, "figure-eight", lambda f: not f.torus, "is not a (2,n)-torus link", "is a (2,n)-torus link"
    )


def smajor_whitehead(L: LinkSpec) -> OrderResult:
    return _exists(
        L,
        "whitehead",
        lambda f: not f.torus and not f.twist,
        "is neither a (2,n)-torus link nor a twist knot",
        "is a (2,n)-torus link or a twist knot",
    )


TORUS25_EXCLUDED = frozenset({"5_2", "5^2_1", "6^2_2", "6^2_3", "6^3_1", "6^3_2", "7^3_1", "8^4_1"})
FIVE2_EXCLUDED = frozenset({"5^2_1", "6^3_1", "6^3_2"})


def smajor_torus25(L: LinkSpec) -> OrderResult:
    return _exists(
        L,
        "torus-2-5",
        lambda f: f.crossings > 4 and f.symbol not in TORUS25_EXCLUDED,
        "has more than 4 crossings and is not excluded",
        "has at most 4 crossings or is one of " + ", ".join(sorted(TORUS25_EXCLUDED)),
    )


def smajor_52(L: LinkSpec) -> OrderResult:
    return _exists(
        L,
        "5_2",
        lambda f: f.crossings > 4 and not f.torus and f.symbol not in FIVE2_EXCLUDED,
        "has more than 4 crossings, is not (2,n)-torus and is not excluded",
        "has at most 4 crossings, is (2,n)-torus, or is one of " + ", ".join(sorted(FIVE2_EXCLUDED)),
    )


ORACLES: dict[str, Callable[[LinkSpec], OrderResult]] = {
    "0_1": smajor_trivial,
    "2^2_1": smajor_hopf,
    "3_1": smajor_trefoil,
    "4^2_1": smajor_torus24,
    "4_1": smajor_fig8,
    "5^2_1": smajor_whitehead,
    "5_1": smajor_torus25,
    "5_2": smajor_52,
}


def smajor(L1: LinkSpec | str, target: str) -> OrderResult:
    """Decide ``L1 >= target`` in the smoothing order, where decidable."""
    if isinstance(L1, str):
        L1 = LinkSpec.parse(L1)
    table = link_table()
    sym = table.resolve(target)
    if sym is None:
        raise NotCharacterizedError(f"unknown target {target!r}")
    if sym in ORACLES:
        return ORACLES[sym](L1)
    t = table.name(sym)
    if L1.is_prime and L1.factors[0].symbol == sym:
        return OrderResult(True, "reflexive", "a link is its own s-major", sym)
    if L1.crossings < t.crossings:
        return OrderResult(False, "crossing-number", f"{L1} has fewer crossings than {sym}")
    if L1.is_prime and L1.crossings == t.crossings:
        return OrderResult(
            False,
            "equal-crossings",
            f"distinct prime alternating links with {t.crossings} crossings are incomparable",
        )
    raise NotCharacterizedError(f"{L1} >= {sym} is not decided by the known criteria")


# -- witnesses -------------------------------------------------------------------------

# Graphs whose projections carry a diagram of the target: its Tait graphs,
# plus the non-alternating projections used in the case analyses.
EXTRA_PROJECTIONS: dict[str, tuple[Callable[[], PlaneGraph], ...]] = {
    "5_1": (G.NAMED["torus25-precursor"],),
    "5^2_1": (lambda: G.multi_cycle([3, 1, 1, 1]),),
}


def target_graphs(target: str, alternating_only: bool = False) -> list[PlaneGraph]:
    entry = link_table().entry(target)
    out = []
    seen = set()
    for f in entry.graphs:
        for g in (f(), dual(f())):
            c = canonical_code(g)
            if c not in seen:
                seen.add(c)
                out.append(g)
    if not alternating_only:
        out += [f() for f in EXTRA_PROJECTIONS.get(entry.name.symbol, ())]
    return out


def find_mechanism_minor(g: PlaneGraph, target: str, alternating_only: bool = False) -> tuple[PlaneGraph, MinorWitness] | None:
    """First target projection graph that is a minor of *g*, with its witness."""
    for h in target_graphs(target, alternating_only):
        if h.n_edges > g.n_edges:
            continue
        w = find_witness(g, h)
        if w is not None:
            return h, w
    return None


def smoothing_witness(source: str, target: str) -> tuple[SmoothingWitness, MinorWitness, PlaneGraph]:
    """Smoothings turning the minimal projection of *source* into a
    projection of *target* whose alternating link is *target* itself."""
    g = link_table().graph(source)
    for src in (g, dual(g)):
        found = find_mechanism_minor(src, target, alternating_only=True)
        if found is None:
            continue
        h, mw = found
        return apply_witness(src, mw), mw, src
    raise GraphError(f"no alternating projection of {target} is a minor of {source}")


def witness_identifies(source: str, target: str) -> bool:
    """Execute the smoothing witness and identify the resulting projection."""
    sw, _, src = smoothing_witness(source, target)
    p = sw.execute(medial(src))
    result = tait(p, vertex_colouring(p))
    name = identify(result)
    return name is not None and name.symbol == link_table().resolve(target)


# -- order ----------------------------------------------------------------------------


def relation(links: Iterable[str]) -> dict[tuple[str, str], OrderResult]:
    table = link_table()
    syms = [table.resolve(s) or s for s in links]
    for s in syms:
        if s not in table.entries:
            raise KeyError(f"unknown link {s!r}")
        if table.name(s).crossings > 6:
            raise NotCharacterizedError(f"{s} has more than 6 crossings")
    return {(a, b): smajor(LinkSpec.of(a), b) for a, b in product(syms, syms)}


@dataclass
class Hasse:
    nodes: list[str]
    covers: list[tuple[str, str]]  # (upper, lower)
    order: set[tuple[str, str]]

    def to_dot(self) -> str:
        lines = ["digraph smoothing_order {", "  rankdir=BT;"]
        for n in self.nodes:
            lines.append(f'  "{n}";')
        for upper, lower in self.covers:
            lines.append(f'  "{lower}" -> "{upper}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {"nodes": self.nodes, "covers": [list(c) for c in self.covers]}, indent=2, sort_keys=True
        )


def hasse(links: Sequence[str]) -> Hasse:
    rel = relation(links)
    table = link_table()
    nodes = sorted({table.resolve(s) for s in links}, key=_sort_key)
    order = {pair for pair, r in rel.items() if r.verdict}
    dag = nx.DiGraph()
    dag.add_nodes_from(nodes)
    dag.add_edges_from((a, b) for a, b in order if a != b)
    if not nx.is_directed_acyclic_graph(dag):
        raise ValueError("computed relation has a cycle")
    reduced = nx.transitive_reduction(dag)
    covers = sorted(reduced.edges(), key=lambda e: (_sort_key(e[0]), _sort_key(e[1])))
    return Hasse(nodes, covers, order)


def _sort_key(sym: str):
    name = link_table().name(sym)
    return (name.crossings, name.components, sym)


@dataclass
class AxiomReport:
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_order_axioms(order: set[tuple[str, str]], nodes: Iterable[str], crossings: dict[str, int] | None = None) -> AxiomReport:
    """Reflexivity, transitivity, antisymmetry and crossing monotonicity."""
    nodes = list(nodes)
    if crossings is None:
        crossings = {n: link_table().name(n).crossings for n in nodes}
    bad = []
    for a in nodes:
        if (a, a) not in order:
            bad.append(f"reflexivity: {a}")
    for a, b in order:
        if a != b and (b, a) in order:
            bad.append(f"antisymmetry: {a} and {b}")
        if crossings[a] < crossings[b]:
            bad.append(f"crossing monotonicity: {a} >= {b}")
        for c in nodes:
            if (b, c) in order and (a, c) not in order:
                bad.append(f"transitivity: {a} >= {b} >= {c}")
    return AxiomReport(sorted(set(bad)))
