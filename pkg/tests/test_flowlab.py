import pytest

import soficlab as sl
from soficlab import presets
from soficlab.errors import InputError, UnknownSymbol

AB = sl.Alphabet(("a", "b"))


def test_invariant_report_even_pinned(even):
    r = sl.invariant_report(even)
    assert r.order == 7
    assert r.idempotents == 4
    assert r.aperiodic is False
    assert r.j_classes == 3
    assert r.regular_j_classes == 3
    assert r.skeleton_objects == 3
    assert r.skeleton_hom_matrix == [[2, 3, 1], [3, 7, 1], [1, 1, 1]]
    assert r.irreducible is True


def test_invariant_report_render_golden_pinned(golden):
    assert sl.invariant_report(golden).render() == (
        "order: 5\n"
        "idempotents: 4\n"
        "aperiodic: true\n"
        "j_classes: 2\n"
        "regular_j_classes: 2\n"
        "skeleton_objects: 2\n"
        "skeleton_hom_matrix: [[2,1],[1,1]]\n"
        "irreducible: true\n"
    )


def test_flow_compare_separates_even_from_golden(even, golden):
    verdict = sl.flow_compare(even, golden)
    assert verdict.kind is sl.Verdict.NOT_FLOW_EQUIVALENT
    assert verdict.token == "NOT_FLOW_EQUIVALENT"
    assert "3 objects" in verdict.note and "2 objects" in verdict.note


def test_flow_compare_cannot_separate_golden_from_period2(golden, period2):
    verdict = sl.flow_compare(golden, period2)
    assert verdict.kind is sl.Verdict.NOT_DISTINGUISHED


def test_flow_compare_never_affirms(even, golden, full2, period2):
    shifts = [even, golden, full2, period2]
    for p in shifts:
        for q in shifts:
            assert sl.flow_compare(p, q).kind is not sl.Verdict.FLOW_EQUIVALENT


def test_flow_compare_kind_is_symmetric(even, golden, full2, period2):
    shifts = [even, golden, full2, period2]
    for p in shifts:
        for q in shifts:
            assert sl.flow_compare(p, q).kind is sl.flow_compare(q, p).kind


def test_apply_move_dispatch(golden):
    expanded = sl.apply_move(golden, sl.SymbolExpand("a"))
    assert sl.EXPANSION_SYMBOL in expanded.alphabet
    recoded = sl.apply_move(golden, sl.HigherBlock(2))
    assert all("." in s for s in recoded.alphabet)


def test_expansion_invariance_on_presets(even, golden, period2):
    moves = [sl.SymbolExpand("a"), sl.SymbolExpand("b"), sl.HigherBlock(2),
             sl.HigherBlock(3)]
    for p in (even, golden, period2):
        for move in moves:
            assert sl.expansion_invariance_check(p, [move])


def test_expansion_invariance_on_composed_chain(golden):
    chain = [sl.SymbolExpand("b"), sl.HigherBlock(2)]
    assert sl.expansion_invariance_check(golden, chain)


def test_expansion_invariance_rejects_unknown_symbol(golden):
    with pytest.raises(UnknownSymbol):
        sl.expansion_invariance_check(golden, [sl.SymbolExpand("z")])


class TestRandomPresentations:
    def test_deterministic(self):
        a = sl.random_presentation(7, 3, AB, 0.4)
        b = sl.random_presentation(7, 3, AB, 0.4)
        assert a == b

    def test_seed_changes_output(self):
        outputs = {sl.random_presentation(seed, 3, AB, 0.4) for seed in range(8)}
        assert len(outputs) > 1

    def test_always_essential_and_irreducible(self):
        for seed in range(12):
            p = sl.random_presentation(seed, 2 + seed % 3, AB, 0.3)
            assert sl.is_irreducible(p)
            for v in p.vertices:
                assert p.out_edges[v] and p.in_edges[v]

    def test_parameter_validation(self):
        with pytest.raises(InputError):
            sl.random_presentation(0, 0, AB, 0.5)
        with pytest.raises(InputError):
            sl.random_presentation(0, 2, AB, 1.5)

    def test_proper_stream_filters(self):
        picked = sl.random_proper_presentations(10, AB)
        assert len(picked) == 10
        seeds = [s for s, _ in picked]
        assert seeds == sorted(seeds)
        for _, p in picked:
            assert not sl.is_full_shift(p)
            assert {e[1] for e in p.edges} == {"a", "b"}

    def test_proper_stream_deterministic(self):
        assert sl.random_proper_presentations(6, AB) == sl.random_proper_presentations(6, AB)

    def test_proper_stream_empty(self):
        assert sl.random_proper_presentations(0, AB) == []


class TestBracketComparison:
    def test_distinct_loop_counts(self):
        d2 = presets.dyck_graph("D2")
        d3 = presets.dyck_graph("D3")
        assert sl.markov_dyck_flow_compare(d2, d3).kind is sl.Verdict.NOT_FLOW_EQUIVALENT

    def test_equal_graphs(self):
        d2 = presets.dyck_graph("D2")
        assert sl.markov_dyck_flow_compare(d2, d2).kind is sl.Verdict.FLOW_EQUIVALENT

    def test_renamed_graph_is_flow_equivalent(self):
        d2 = presets.dyck_graph("D2")
        renamed = sl.DyckGraph(("v",), (("x", "v", "v"), ("y", "v", "v")))
        assert sl.markov_dyck_flow_compare(d2, renamed).kind is sl.Verdict.FLOW_EQUIVALENT

    def test_out_degree_one_is_inapplicable(self):
        d1 = presets.dyck_graph("D1")
        d2 = presets.dyck_graph("D2")
        assert sl.markov_dyck_flow_compare(d1, d2).kind is sl.Verdict.INAPPLICABLE
        assert sl.markov_dyck_flow_compare(d2, d1).kind is sl.Verdict.INAPPLICABLE

    def test_missing_in_edge_is_inapplicable(self):
        dangling = sl.DyckGraph(
            ("1", "2"),
            (("e", "1", "1"), ("f", "1", "1"), ("g", "2", "1"), ("h", "2", "1")),
        )
        d2 = presets.dyck_graph("D2")
        assert sl.markov_dyck_flow_compare(dangling, d2).kind is sl.Verdict.INAPPLICABLE

    def test_same_degrees_different_wiring(self):
        # both have two vertices with two loops each vs a 4-cycle pair; the
        # degree multisets differ from D2 so compare against each other
        doubled = sl.DyckGraph(
            ("1", "2"),
            (
                ("e", "1", "1"), ("f", "1", "1"),
                ("g", "2", "2"), ("h", "2", "2"),
            ),
        )
        crossed = sl.DyckGraph(
            ("1", "2"),
            (
                ("e", "1", "2"), ("f", "1", "2"),
                ("g", "2", "1"), ("h", "2", "1"),
            ),
        )
        verdict = sl.markov_dyck_flow_compare(doubled, crossed)
        assert verdict.kind is sl.Verdict.NOT_FLOW_EQUIVALENT

    def test_isomorphic_two_vertex_graphs(self):
        left = sl.DyckGraph(
            ("1", "2"),
            (("e", "1", "2"), ("f", "1", "2"), ("g", "2", "1"), ("h", "2", "1")),
        )
        right = sl.DyckGraph(
            ("x", "y"),
            (("p", "y", "x"), ("q", "y", "x"), ("r", "x", "y"), ("s", "x", "y")),
        )
        assert sl.markov_dyck_flow_compare(left, right).kind is sl.Verdict.FLOW_EQUIVALENT
