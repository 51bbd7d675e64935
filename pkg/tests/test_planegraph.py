import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smoothorder import graphs as G
from smoothorder.planegraph import (
    DisconnectsError,
    InvalidGraphError,
    LoopContractionError,
    PlaneGraph,
    blocks,
    canonical_code,
    circumference,
    contract_edge,
    delete_edge,
    dual,
    embed,
    faces,
    format_graph,
    from_edges,
    has_cycle_of_length_at_least,
    local_connectivity,
    max_local_connectivity,
    parse_graph,
    parse_graphs,
    validate,
)

from .conftest import block_strategy


def relabel(g: PlaneGraph, vperm, eperm, flips, shifts) -> PlaneGraph:
    """Same map under new vertex ids, edge ids, edge directions and rotation starts."""

    def dart(d):
        e, end = divmod(d, 2)
        return 2 * eperm[e] + (end ^ flips[e])

    rots = [None] * g.n_vertices
    for v, rot in enumerate(g.rotations):
        r = [dart(d) for d in rot]
        k = shifts[v] % len(r) if r else 0
        rots[vperm[v]] = r[k:] + r[:k]
    signs = None
    if g.signs is not None:
        signs = [0] * g.n_edges
        for e, s in enumerate(g.signs):
            signs[eperm[e]] = s
    return PlaneGraph(rots, signs)


@st.composite
def relabelled(draw, max_edges=6):
    g = draw(block_strategy(max_edges))
    vperm = draw(st.permutations(range(g.n_vertices)))
    eperm = draw(st.permutations(range(g.n_edges)))
    flips = draw(st.lists(st.integers(0, 1), min_size=g.n_edges, max_size=g.n_edges))
    shifts = draw(st.lists(st.integers(0, 10), min_size=g.n_vertices, max_size=g.n_vertices))
    return g, relabel(g, vperm, eperm, flips, shifts)


def k5_rotation_system():
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    return from_edges(5, edges)


class TestValidate:
    def test_triangle_is_spherical(self):
        g = G.cycle(3)
        assert validate(g) is None
        assert g.n_vertices - g.n_edges + g.n_faces == 2

    def test_duplicated_edge_end(self):
        g = PlaneGraph([[0, 0, 5], [1, 2], [3, 4]])
        assert validate(g) == "edge-end multiplicity"

    def test_k5_is_not_genus_zero(self):
        g = k5_rotation_system()
        assert g.n_vertices - g.n_edges + g.n_faces < 2
        assert validate(g) == "not genus 0"

    def test_disconnected(self):
        g = PlaneGraph([[0, 2], [3, 1], []])
        assert validate(g) == "not connected"

    def test_sign_table_length(self):
        assert validate(PlaneGraph(G.cycle(3).rotations, [1, 1])) == "sign table"


class TestFaces:
    def test_triangle(self):
        walks = faces(G.cycle(3))
        assert sorted(len(w) for w in walks) == [3, 3]

    def test_single_vertex(self):
        assert G.K1().n_faces == 1

    def test_theta3(self):
        assert G.theta(3).n_faces == 3

    @given(block_strategy(7))
    def test_every_dart_on_one_face(self, g):
        darts = [d for w in faces(g) for d in w]
        assert sorted(darts) == list(range(2 * g.n_edges))
        assert g.n_vertices - g.n_edges + g.n_faces == 2


class TestDual:
    def test_c4_to_theta4(self):
        assert canonical_code(dual(G.cycle(4))) == canonical_code(G.theta(4))

    def test_k1_self_dual(self):
        assert canonical_code(dual(G.K1())) == canonical_code(G.K1())

    def test_tripled_triangle_to_k23(self):
        assert canonical_code(dual(G.multi_cycle([2, 2, 2]))) == canonical_code(G.k2n(3))

    def test_k4_self_dual(self):
        assert canonical_code(dual(G.complete4())) == canonical_code(G.complete4())

    @given(block_strategy(7))
    def test_involution_and_counts(self, g):
        d = dual(g)
        assert validate(d) is None
        assert (d.n_vertices, d.n_edges, d.n_faces) == (g.n_faces, g.n_edges, g.n_vertices)
        assert canonical_code(dual(d)) == canonical_code(g)

    def test_rejects_invalid(self):
        with pytest.raises(InvalidGraphError):
            dual(k5_rotation_system())


class TestDeleteContract:
    def test_theta3_minus_edge(self):
        assert canonical_code(delete_edge(G.theta(3), 0)) == canonical_code(G.theta(2))

    def test_bridge_refused(self):
        g = embed(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
        bridge = next(e for e, u, v in g.edges if {u, v} == {2, 3})
        with pytest.raises(DisconnectsError):
            delete_edge(g, bridge)

    def test_k4_minus_edge_is_whitehead_graph(self):
        for e in range(6):
            assert canonical_code(delete_edge(G.complete4(), e)) == canonical_code(G.c4_diagonal())

    def test_digon_contraction_leaves_loop(self):
        g = contract_edge(G.theta(2), 0)
        assert g.n_vertices == 1 and g.n_edges == 1 and g.is_loop(0)
        assert validate(g) is None

    def test_theta4_from_one_contraction(self):
        g = G.named("theta4-precursor")
        single = next(e for e, u, v in g.edges if sum(1 for _, a, b in g.edges if {a, b} == {u, v}) == 1)
        assert canonical_code(contract_edge(g, single)) == canonical_code(G.theta(4))

    def test_c4_to_c3(self):
        assert canonical_code(contract_edge(G.cycle(4), 2)) == canonical_code(G.cycle(3))

    def test_loop_contraction_refused(self):
        with pytest.raises(LoopContractionError):
            contract_edge(G.cycle(1), 0)

    @given(block_strategy(6), st.data())
    def test_deletion_contraction_duality(self, g, data):
        e = data.draw(st.integers(0, g.n_edges - 1))
        if not g.is_loop(e):
            assert canonical_code(dual(contract_edge(g, e))) == canonical_code(delete_edge(dual(g), e))

    @given(block_strategy(6), st.data())
    def test_results_stay_spherical(self, g, data):
        e = data.draw(st.integers(0, g.n_edges - 1))
        for op in (delete_edge, contract_edge):
            try:
                h = op(g, e)
            except (DisconnectsError, LoopContractionError):
                continue
            assert validate(h) is None
            assert h.n_edges == g.n_edges - 1


class TestBlocks:
    def test_bowtie(self):
        g = embed(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
        bs = blocks(g)
        assert len(bs) == 2
        assert all(canonical_code(b) == canonical_code(G.cycle(3)) for b in bs)

    def test_theta3(self):
        (b,) = blocks(G.theta(3))
        assert canonical_code(b) == canonical_code(G.theta(3))

    def test_triangles_joined_by_bridge(self):
        g = embed(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
        assert sorted(b.n_edges for b in blocks(g)) == [1, 3, 3]

    @given(block_strategy(6))
    def test_edges_partitioned(self, g):
        assert sum(b.n_edges for b in blocks(g)) == g.n_edges


class TestConnectivity:
    def test_theta4(self):
        assert local_connectivity(G.theta(4), 0, 1) == 4

    def test_c4_opposite(self):
        assert local_connectivity(G.cycle(4), 0, 2) == 2

    def test_k4_all_pairs(self):
        g = G.complete4()
        assert {local_connectivity(g, u, v) for u in range(4) for v in range(u + 1, 4)} == {3}

    @given(block_strategy(6))
    def test_simple_graphs_match_networkx(self, g):
        m = g.multigraph()
        if any(m.number_of_edges(u, v) > 1 for u, v in m.edges()):
            return
        simple = nx.Graph(m)
        for u in simple:
            for v in simple:
                if u < v and not simple.has_edge(u, v):
                    assert local_connectivity(g, u, v) == nx.node_connectivity(simple, u, v)

    def test_max_over_pairs(self):
        assert max_local_connectivity(G.multi_cycle([2, 2, 1])) == 3


class TestCycles:
    def test_c4(self):
        assert has_cycle_of_length_at_least(G.cycle(4), 4)
        assert not has_cycle_of_length_at_least(G.cycle(4), 5)

    def test_theta3(self):
        assert not has_cycle_of_length_at_least(G.theta(3), 3)

    def test_k4(self):
        assert has_cycle_of_length_at_least(G.complete4(), 4)

    @given(block_strategy(6))
    def test_matches_networkx_simple_cycles(self, g):
        m = nx.Graph(g.multigraph())
        parallel = any(g.multigraph().number_of_edges(u, v) > 1 for u, v in m.edges())
        longest = max((len(c) for c in nx.simple_cycles(m)), default=0)
        longest = max(longest, 2 if parallel else 0)
        assert circumference(g) == longest


class TestCanonicalCode:
    def test_relabelled_triangle(self):
        g = G.cycle(3)
        h = relabel(g, [2, 0, 1], [1, 2, 0], [1, 0, 1], [1, 0, 2])
        assert canonical_code(g) == canonical_code(h)

    def test_triangle_vs_theta3(self):
        assert canonical_code(G.cycle(3)) != canonical_code(G.theta(3))

    @given(relabelled())
    @settings(max_examples=200)
    def test_invariant_under_relabelling(self, pair):
        g, h = pair
        assert validate(h) is None
        assert canonical_code(g) == canonical_code(h)

    @given(block_strategy(7))
    def test_mirror(self, g):
        assert canonical_code(g.mirror()) == canonical_code(g)

    def test_distinguishes_embeddings(self):
        # same multigraph, two different plane embeddings
        a = G.c4_multi_diagonal(2)
        b = G.c4_multi_diagonal(2, split=True)
        assert nx.is_isomorphic(a.multigraph(), b.multigraph())
        assert canonical_code(a) != canonical_code(b)

    @given(block_strategy(6), block_strategy(6))
    def test_equal_codes_imply_isomorphic_multigraphs(self, g, h):
        if canonical_code(g) == canonical_code(h):
            assert nx.is_isomorphic(g.multigraph(), h.multigraph())


class TestTextFormat:
    @given(block_strategy(7))
    def test_round_trip(self, g):
        assert parse_graph(format_graph(g)) == g

    def test_signs_and_comments(self):
        text = "# hopf\n2 2\n+1 +2\n-2 -1\nsigns + -\n"
        g = parse_graph(text)
        assert g.signs == (1, -1)
        assert parse_graph(format_graph(g)) == g

    def test_several_records(self):
        text = format_graph(G.cycle(3)) + "\n" + format_graph(G.K1())
        assert [h.n_edges for h in parse_graphs(text)] == [3, 0]

    @pytest.mark.parametrize(
        "text",
        ["x y\n", "2 1\n+1\n", "1 1\n+1 +1 extra\n", "2 2\n+1 +2\n-2 -1\nbogus\n", "1 1\n+a -1\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(InvalidGraphError):
            g = parse_graph(text)
            if validate(g) is not None:
                raise InvalidGraphError(validate(g))
