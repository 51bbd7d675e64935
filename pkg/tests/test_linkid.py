from fractions import Fraction

import pytest
from hypothesis import given

from smoothorder import graphs as G
from smoothorder.linkid import (
    ENTRIES,
    LaurentPoly,
    NotABlockError,
    NotReducedError,
    bracket,
    bracket_by_skein,
    crossing_number,
    fingerprint,
    identify,
    is_torus_2n,
    is_twist_knot,
    link_table,
)
from smoothorder.planegraph import dual, embed, from_edges

from .conftest import block_strategy

# Jones polynomial coefficients (lowest power first) from standard knot tables.
JONES = {
    "3_1": (1, 0, 1, -1),
    "4_1": (1, -1, 1, -1, 1),
    "5_1": (1, 0, 1, -1, 1, -1),
    "5_2": (1, -1, 2, -1, 1, -1),
    "6_1": (1, -1, 2, -2, 1, -1, 1),
    "6_2": (1, -1, 2, -2, 2, -2, 1),
    "6_3": (1, -2, 2, -3, 2, -2, 1),
}

# Determinants |V(-1)| from standard tables.
DETERMINANT = {
    "0_1": 1, "2^2_1": 2, "3_1": 3, "4_1": 5, "4^2_1": 4, "5_1": 5, "5_2": 7,
    "5^2_1": 8, "6_1": 9, "6_2": 11, "6_3": 13, "6^2_1": 6, "6^3_2": 16,
}


def spanning_trees(g) -> int:
    """Kirchhoff: any cofactor of the Laplacian, over the rationals."""
    n = g.n_vertices
    if n == 1:
        return 1
    lap = [[Fraction(0)] * n for _ in range(n)]
    for _, u, v in g.edges:
        if u != v:
            lap[u][u] += 1
            lap[v][v] += 1
            lap[u][v] -= 1
            lap[v][u] -= 1
    m = [row[1:] for row in lap[1:]]
    det = Fraction(1)
    for i in range(n - 1):
        pivot = next(r for r in range(i, n - 1) if m[r][i] != 0)
        if pivot != i:
            m[i], m[pivot] = m[pivot], m[i]
            det = -det
        det *= m[i][i]
        for r in range(i + 1, n - 1):
            f = m[r][i] / m[i][i]
            m[r] = [a - f * b for a, b in zip(m[r], m[i])]
    return abs(int(det))


def jones_shape(g) -> tuple[int, ...]:
    """Bracket coefficients at spacing 4, up to sign and reversal."""
    coeffs = bracket(g).normalized()[::4]
    rev = tuple(reversed(coeffs))
    rev = tuple(-c for c in rev) if rev[0] < 0 else rev
    return min(coeffs, rev)


def canonical_jones(seq):
    rev = tuple(reversed(seq))
    rev = tuple(-c for c in rev) if rev[0] < 0 else rev
    return min(tuple(seq), rev)


class TestBracket:
    def test_unknot(self):
        assert bracket(G.K1()) == LaurentPoly.monomial(0)

    def test_hopf(self):
        assert bracket(G.theta(2)) == LaurentPoly.make({4: -1, -4: -1})

    def test_trefoil(self):
        b = bracket(G.cycle(3))
        expected = LaurentPoly.make({5: -1, -3: -1, -7: 1})
        assert b in (expected, expected.invert_variable())

    def test_signs_mirror(self):
        g = G.cycle(3)
        assert bracket(g.with_signs(-1)) == bracket(g.with_signs(1)).invert_variable()

    def test_arithmetic(self):
        a = LaurentPoly.make({1: 2, -1: 1})
        assert a * a == LaurentPoly.make({2: 4, 0: 4, -2: 1})
        assert (a + a.invert_variable()).terms() == {1: 3, -1: 3}
        assert str(LaurentPoly.make({2: -1, -2: -1})) == "-A^2 - A^-2"

    @given(block_strategy(6))
    def test_state_sum_matches_skein(self, g):
        assert bracket(g) == bracket_by_skein(g)

    @given(block_strategy(7))
    def test_coefficients_count_spanning_trees(self, g):
        assert sum(abs(c) for c in bracket(g).coeffs) == spanning_trees(g)

    @given(block_strategy(7))
    def test_dual_same_up_to_unit(self, g):
        assert fingerprint(g) == fingerprint(dual(g))


class TestTable:
    def test_eighteen_distinct_entries(self):
        table = link_table()
        assert len(table.entries) == 18
        prints = list(table.fingerprints.values())
        assert len(set(prints)) == 18

    @pytest.mark.parametrize("symbol", sorted(DETERMINANT))
    def test_determinants(self, symbol):
        for make in link_table().entry(symbol).graphs:
            assert sum(abs(c) for c in bracket(make()).coeffs) == DETERMINANT[symbol]

    @pytest.mark.parametrize("symbol", sorted(JONES))
    def test_knot_brackets_match_jones(self, symbol):
        assert jones_shape(link_table().graph(symbol)) == canonical_jones(JONES[symbol])

    @pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name.symbol)
    def test_every_registered_graph_identifies(self, entry):
        for make in entry.graphs:
            assert identify(make()).symbol == entry.name.symbol
            assert identify(dual(make())).symbol == entry.name.symbol

    def test_aliases(self):
        table = link_table()
        assert table.resolve("6_2_3") == "6^2_3"
        assert table.resolve("9_42") is None
        with pytest.raises(KeyError):
            table.entry("9_42")


class TestIdentify:
    @pytest.mark.parametrize(
        "graph,symbol",
        [
            (G.complete4(), "6^3_2"),
            (G.k2n(3), "6^3_1"),
            (G.multi_cycle([2, 1, 1, 1]), "5_2"),
            (G.multi_cycle([2, 1, 1]), "4_1"),
            (G.c4_diagonal(), "5^2_1"),
            (G.multi_cycle([3, 1, 1, 1]), "6^2_2"),
            (G.theta(2), "2^2_1"),
            (G.K1(), "0_1"),
        ],
    )
    def test_examples(self, graph, symbol):
        assert identify(graph).symbol == symbol

    def test_mirror_invariant(self):
        g = G.c4_multi_diagonal(1, (2, 1, 1, 1))
        assert identify(g.mirror()) == identify(g)

    def test_unregistered(self):
        assert identify(G.cycle(7)) is None

    def test_composite_rejected(self):
        bowtie = embed(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
        with pytest.raises(NotABlockError):
            identify(bowtie)

    def test_nugatory_rejected(self):
        with pytest.raises(NotReducedError):
            identify(from_edges(2, [(0, 1), (0, 1), (1, 1)]))


class TestFamilies:
    def test_torus(self):
        assert is_torus_2n(G.cycle(5)) == (True, 5)
        assert is_torus_2n(G.theta(4)) == (True, 4)
        assert not is_torus_2n(G.complete4())[0]

    def test_twist(self):
        assert is_twist_knot(G.multi_cycle([2, 1, 1]))
        assert is_twist_knot(G.multi_cycle([2, 1, 1, 1]))
        assert is_twist_knot(G.multi_cycle([3, 1, 1]))
        assert not is_twist_knot(G.cycle(5))

    def test_doubled_path_is_not_a_twist_knot(self):
        # two digons sharing a vertex: a Hopf-link sum, not a figure-eight
        g = from_edges(3, [(0, 1), (0, 1), (1, 2), (1, 2)])
        assert not is_twist_knot(g)
        assert bracket(g) == bracket(G.theta(2)) * bracket(G.theta(2))

    def test_crossing_number(self):
        assert crossing_number(G.cycle(3)) == 3
        assert crossing_number(G.complete4()) == 6
        assert crossing_number(G.multi_cycle([3, 1, 1, 1])) == 6
