import json

import pytest
from hypothesis import given, settings

from smoothorder import graphs as G
from smoothorder.linkid import HASSE_LINKS, link_table
from smoothorder.planegraph import dual
from smoothorder.smorder import (
    ORACLES,
    LinkSpec,
    NotCharacterizedError,
    check_order_axioms,
    find_mechanism_minor,
    hasse,
    relation,
    smajor,
    smajor_52,
    smajor_fig8,
    smajor_hopf,
    smajor_torus24,
    smajor_torus25,
    smajor_trefoil,
    smajor_trivial,
    smajor_whitehead,
    smoothing_witness,
    witness_identifies,
)

from .conftest import block_strategy

# Cover relations of the order on prime alternating links up to six crossings,
# worked out by hand from the characterizations of the eight small targets.
EXPECTED_COVERS = {
    ("2^2_1", "0_1"),
    ("3_1", "2^2_1"),
    ("4_1", "3_1"),
    ("4^2_1", "3_1"),
    ("5_1", "4^2_1"),
    ("5_2", "4_1"), ("5_2", "4^2_1"),
    ("5^2_1", "4_1"), ("5^2_1", "4^2_1"),
    ("6_1", "5_1"), ("6_1", "5_2"),
    ("6_2", "5_1"), ("6_2", "5_2"), ("6_2", "5^2_1"),
    ("6_3", "5_1"), ("6_3", "5_2"), ("6_3", "5^2_1"),
    ("6^2_1", "5_1"),
    ("6^2_2", "5_2"), ("6^2_2", "5^2_1"),
    ("6^2_3", "5_2"), ("6^2_3", "5^2_1"),
    ("6^3_1", "5^2_1"),
    ("6^3_2", "5^2_1"),
}


def L(text):
    return LinkSpec.parse(text)


@pytest.mark.parametrize(
    "oracle,link,verdict",
    [
        (smajor_trivial, "0_1", True),
        (smajor_trivial, "2^2_1", True),
        (smajor_trivial, "3_1#3_1", True),
        (smajor_hopf, "0_1", False),
        (smajor_hopf, "2^2_1", True),
        (smajor_hopf, "4_1", True),
        (smajor_trefoil, "2^2_1#2^2_1", False),
        (smajor_trefoil, "4^2_1", True),
        (smajor_trefoil, "3_1", True),
        (smajor_torus24, "4_1", False),
        (smajor_torus24, "5_1", True),
        (smajor_torus24, "3_1#4_1", False),
        (smajor_fig8, "5_1", False),
        (smajor_fig8, "5_2", True),
        (smajor_fig8, "6^2_1", False),
        (smajor_whitehead, "6_1", False),
        (smajor_whitehead, "6^2_2", True),
        (smajor_whitehead, "5_2", False),
        (smajor_torus25, "6_1", True),
        (smajor_torus25, "6^3_2", False),
        (smajor_torus25, "4_1#4_1", False),
        (smajor_52, "6^2_2", True),
        (smajor_52, "6^3_1", False),
        (smajor_52, "6^2_1", False),
    ],
)
def test_oracle_examples(oracle, link, verdict):
    assert oracle(L(link)).verdict is verdict


class TestDispatch:
    def test_examples(self):
        assert smajor(L("4_1"), "2^2_1").verdict
        assert not smajor(L("6_2"), "6_3").verdict
        assert smajor(L("5_1"), "5_1").verdict

    def test_justification_names_factor(self):
        r = smajor(L("3_1#6_1"), "5_1")
        assert r.verdict and r.factor == "6_1"

    def test_fewer_crossings(self):
        r = smajor(L("5_2"), "6_1")
        assert not r.verdict and r.rule == "crossing-number"

    def test_not_characterized(self):
        with pytest.raises(NotCharacterizedError):
            smajor(L("7^3_1"), "6_1")
        with pytest.raises(NotCharacterizedError):
            smajor(L("3_1#3_1"), "6_1")
        with pytest.raises(NotCharacterizedError):
            smajor(L("3_1"), "9_42")

    def test_alias(self):
        assert smajor("6_2_3", "5_2").verdict

    def test_trivial_summands_dropped(self):
        assert L("0_1#3_1") == L("3_1")
        assert L("0_1#0_1") == L("0_1")


class TestGraphFactors:
    def test_unregistered_torus(self):
        f = LinkSpec.of(G.cycle(7)).factors[0]
        assert f.symbol is None and f.torus and f.crossings == 7
        assert smajor(LinkSpec.of(G.cycle(7)), "5_1").verdict
        assert not smajor(LinkSpec.of(G.cycle(7)), "4_1").verdict

    def test_unregistered_twist(self):
        f = LinkSpec.of(G.multi_cycle([2, 1, 1, 1, 1, 1])).factors[0]
        assert f.twist and not f.torus

    @given(block_strategy(8))
    @settings(max_examples=150, deadline=None)
    def test_verdicts_match_projection_minors(self, g):
        # a minor that is a projection of the target certifies >=; the
        # characterizations claim nothing else does
        link = LinkSpec.of(g)
        for target in ORACLES:
            assert smajor(link, target).verdict == (find_mechanism_minor(g, target) is not None)


class TestHasse:
    def test_lower_chain(self):
        assert set(hasse(["0_1", "2^2_1", "3_1"]).covers) == {("3_1", "2^2_1"), ("2^2_1", "0_1")}

    def test_four_crossings(self):
        h = hasse(["3_1", "4_1", "4^2_1"])
        assert set(h.covers) == {("4_1", "3_1"), ("4^2_1", "3_1")}
        assert ("4_1", "4^2_1") not in h.order and ("4^2_1", "4_1") not in h.order

    def test_full_diagram(self):
        assert set(hasse(HASSE_LINKS).covers) == EXPECTED_COVERS

    def test_relation_matches_minors(self):
        for (a, b), r in relation(HASSE_LINKS).items():
            for make in link_table().entry(a).graphs:
                for g in (make(), dual(make())):
                    assert r.verdict == (find_mechanism_minor(g, b) is not None), (a, b)

    def test_exports(self):
        h = hasse(["0_1", "2^2_1"])
        assert json.loads(h.to_json()) == {"nodes": ["0_1", "2^2_1"], "covers": [["2^2_1", "0_1"]]}
        assert '"0_1" -> "2^2_1";' in h.to_dot()

    def test_rejects_large_links(self):
        with pytest.raises(NotCharacterizedError):
            hasse(["7^3_1", "3_1"])


class TestAxioms:
    def test_computed_order(self):
        h = hasse(HASSE_LINKS)
        assert check_order_axioms(h.order, h.nodes).ok

    def test_injected_cycle(self):
        h = hasse(HASSE_LINKS)
        order = h.order | {("5_2", "5_1"), ("5_1", "5_2")}
        report = check_order_axioms(order, h.nodes)
        assert any(v.startswith("antisymmetry") for v in report.violations)

    def test_injected_crossing_violation(self):
        h = hasse(HASSE_LINKS)
        report = check_order_axioms(h.order | {("4_1", "5_2")}, h.nodes)
        assert "crossing monotonicity: 4_1 >= 5_2" in report.violations

    def test_missing_reflexive_and_transitive(self):
        order = {("3_1", "2^2_1"), ("2^2_1", "0_1"), ("3_1", "3_1"), ("2^2_1", "2^2_1")}
        report = check_order_axioms(order, ["0_1", "2^2_1", "3_1"])
        assert "reflexivity: 0_1" in report.violations
        assert "transitivity: 3_1 >= 2^2_1 >= 0_1" in report.violations


class TestWitnesses:
    @pytest.mark.parametrize(
        "source,target",
        [("3_1", "2^2_1"), ("5_2", "4_1"), ("6_1", "5_1"), ("6^3_2", "5^2_1"), ("6_1", "5_2"), ("4_1", "0_1")],
    )
    def test_pipeline(self, source, target):
        assert witness_identifies(source, target)

    def test_trefoil_to_hopf_is_one_smoothing(self):
        sw, mw, _ = smoothing_witness("3_1", "2^2_1")
        assert len(sw.steps) == 1

    def test_every_positive_verdict_has_a_projection_minor(self):
        for a in HASSE_LINKS:
            for t in ORACLES:
                if smajor(a, t).verdict:
                    assert find_mechanism_minor(link_table().graph(a), t) is not None
