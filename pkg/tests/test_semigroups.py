from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import soficlab as sl
from soficlab.errors import CapExceeded, NotIdempotent, ParseError

from oracles import generator_map_isomorphic


def witnesses(semigroup):
    return [semigroup.witness_name(i) for i in range(semigroup.size)]


def test_minimal_dfa_sizes(even, golden, full2):
    assert sl.determinize_minimal(even).size == 4
    assert sl.determinize_minimal(golden).size == 3
    assert sl.determinize_minimal(full2).size == 2


def test_even_semigroup_pinned(even):
    s, _ = sl.syntactic_semigroup(even)
    assert witnesses(s) == ["a", "b", "ab", "ba", "bb", "aba", "bab"]
    assert s.witness_name(s.zero) == "aba"
    assert [s.witness_name(i) for i in sl.idempotents(s)] == ["a", "bb", "aba", "bab"]
    assert not sl.is_aperiodic(s)


def test_golden_semigroup_pinned(golden):
    s, _ = sl.syntactic_semigroup(golden)
    assert witnesses(s) == ["a", "b", "ab", "ba", "bb"]
    assert s.witness_name(s.zero) == "bb"
    assert [s.witness_name(i) for i in sl.idempotents(s)] == ["a", "ab", "ba", "bb"]
    assert sl.is_aperiodic(s)


def test_full_shift_semigroup_is_trivial(full2):
    s, _ = sl.syntactic_semigroup(full2)
    assert s.size == 1
    assert s.zero is None


def test_period2_semigroup_pinned(period2):
    s, _ = sl.syntactic_semigroup(period2)
    assert witnesses(s) == ["a", "b", "aa", "ab", "ba"]
    assert s.witness_name(s.zero) == "aa"


def test_zero_absorbs(even):
    s, _ = sl.syntactic_semigroup(even)
    z = s.zero
    for i in range(s.size):
        assert s.mul(i, z) == z
        assert s.mul(z, i) == z


def test_table_is_associative(even, golden, period2):
    for p in (even, golden, period2):
        s, _ = sl.syntactic_semigroup(p)
        n = s.size
        for i, j, k in product(range(n), repeat=3):
            assert s.mul(s.mul(i, j), k) == s.mul(i, s.mul(j, k))


def test_witness_words_evaluate_to_their_element(even):
    s, _ = sl.syntactic_semigroup(even)
    for i, w in enumerate(s.witnesses):
        assert s.evaluate(w) == i


def test_morphism_respects_concatenation(even):
    s, m = sl.syntactic_semigroup(even)
    for u in product("ab", repeat=3):
        for v in product("ab", repeat=2):
            assert m.image(u + v) == s.mul(m.image(u), m.image(v))


# Words with the same image must be interchangeable in the language: the
# syntactic congruence can only merge words the block language cannot
# tell apart by membership of whole words.
@pytest.mark.parametrize("preset", ["even", "golden", "period2"])
def test_image_classes_have_uniform_membership(preset, request):
    p = request.getfixturevalue(preset)
    s, m = sl.syntactic_semigroup(p)
    by_image = {}
    for n in range(1, 6):
        for w in product(p.alphabet.symbols, repeat=n):
            by_image.setdefault(m.image(w), []).append(w)
    assert len(by_image) == s.size
    for members in by_image.values():
        verdicts = {sl.contains_block(p, w) for w in members}
        assert len(verdicts) == 1


def test_recognize_matches_membership(golden):
    s, m = sl.syntactic_semigroup(golden)
    accept = {m.image(w) for w in sl.blocks(golden, 5)}
    for n in range(1, 6):
        for w in product("ab", repeat=n):
            assert sl.recognize(m, accept, w) == sl.contains_block(golden, w)


class TestRelationSemigroups:
    def test_even_from_edge_relations(self, even):
        r, _ = sl.relation_semigroup({"a": {(1, 1)}, "b": {(1, 2), (2, 1)}})
        assert r.size == 7
        assert r.witness_name(r.zero) == "aba"
        s, _ = sl.syntactic_semigroup(even)
        assert generator_map_isomorphic(s, r)
        assert generator_map_isomorphic(r, s)

    def test_golden_from_edge_relations(self, golden):
        r, _ = sl.relation_semigroup({"a": {(1, 1), (2, 1)}, "b": {(1, 2)}})
        assert r.size == 5
        assert r.witness_name(r.zero) == "bb"
        s, _ = sl.syntactic_semigroup(golden)
        assert generator_map_isomorphic(s, r)

    def test_composition_is_left_to_right(self):
        # ab relates x to z when a goes x->y and b goes y->z
        r, m = sl.relation_semigroup({"a": {("x", "y")}, "b": {("y", "z")}})
        ab = m.image(("a", "b"))
        assert r.witnesses[ab] == ("a", "b")
        ba = m.image(("b", "a"))
        assert r.witness_name(ba) != "ab"
        assert r.zero is not None  # ba composes to nothing

    def test_cap(self):
        with pytest.raises(CapExceeded):
            sl.relation_semigroup(
                {"a": {(i, (i + 1) % 11) for i in range(11)},
                 "b": {(0, 0), (1, 0)}},
                cap=5,
            )


class TestSyntacticOracle:
    def test_even_classes(self, even):
        classes = sl.syntactic_oracle(even, 6, 6)
        assert len(classes) == 7
        firsts = {sl.render_word(c[0]) for c in classes}
        assert firsts == {"a", "b", "ab", "ba", "bb", "aba", "bab"}

    def test_golden_classes(self, golden):
        assert len(sl.syntactic_oracle(golden, 6, 6)) == 5

    def test_full_shift_single_class(self, full2):
        # (4, 4) keeps the 2^k block enumeration small; one class either way
        assert len(sl.syntactic_oracle(full2, 4, 4)) == 1

    def test_agrees_with_semigroup_on_even(self, even):
        s, m = sl.syntactic_semigroup(even)
        for members in sl.syntactic_oracle(even, 5, 5):
            images = {m.image(w) for w in members}
            assert len(images) == 1

    def test_cap(self, even):
        with pytest.raises(CapExceeded):
            sl.syntactic_oracle(even, 10, 2, cap=100)


class TestGreenJ:
    def test_even_structure(self, even):
        s, _ = sl.syntactic_semigroup(even)
        j = sl.green_j(s)
        named = [sorted(s.witness_name(i) for i in c) for c in j.classes]
        assert named == [["a", "ab", "ba", "bab"], ["b", "bb"], ["aba"]]
        assert j.regular == (True, True, True)
        # zero class is strictly below the other two
        assert (2, 0) in j.below and (2, 1) in j.below and (0, 1) in j.below

    def test_golden_structure(self, golden):
        s, _ = sl.syntactic_semigroup(golden)
        j = sl.green_j(s)
        named = [sorted(s.witness_name(i) for i in c) for c in j.classes]
        assert named == [["a", "ab", "b", "ba"], ["bb"]]
        assert j.below == frozenset({(1, 0)})
        assert j.regular == (True, True)

    def test_below_is_a_strict_partial_order(self, even):
        s, _ = sl.syntactic_semigroup(even)
        j = sl.green_j(s)
        for i, k in j.below:
            assert i != k
            assert (k, i) not in j.below


def test_maximal_subgroup_at_bb_is_cyclic_of_order_two(even):
    s, _ = sl.syntactic_semigroup(even)
    bb = witnesses(s).index("bb")
    group = sl.maximal_subgroup(s, bb)
    assert sorted(s.witness_name(i) for i in group) == ["b", "bb"]
    b = witnesses(s).index("b")
    assert s.mul(b, b) == bb

def test_maximal_subgroup_needs_idempotent(even):
    s, _ = sl.syntactic_semigroup(even)
    with pytest.raises(NotIdempotent):
        sl.maximal_subgroup(s, witnesses(s).index("b"))


def test_aperiodicity_and_star_freeness(even, golden):
    assert sl.is_plus_free(golden)
    assert not sl.is_plus_free(even)


def test_cayley_table_round_trip(even):
    s, _ = sl.syntactic_semigroup(even)
    text = sl.render_cayley_table(s)
    back = sl.parse_cayley_table(text)
    assert back.table == s.table
    assert back.zero == s.zero


@pytest.mark.parametrize(
    "text",
    [
        "a b\na\n",                  # no header keyword
        "elements a a\na a\na a\n",  # repeated names
        "elements a b\na b\n",       # missing row
        "elements a b\na\nb a\n",    # short row
        "elements a b\na c\nb a\n",  # unknown entry
    ],
)
def test_cayley_parse_rejects(text):
    with pytest.raises(ParseError):
        sl.parse_cayley_table(text)


@settings(max_examples=30, deadline=None)
@given(
    st.dictionaries(
        st.sampled_from("ab"),
        st.sets(
            st.tuples(st.integers(0, 2), st.integers(0, 2)), max_size=4
        ),
        min_size=2,
        max_size=2,
    )
)
def test_relation_closure_is_associative_and_zero_absorbs(gens):
    s, _ = sl.relation_semigroup(gens)
    n = s.size
    for i, j, k in product(range(n), repeat=3):
        assert s.mul(s.mul(i, j), k) == s.mul(i, s.mul(j, k))
    if s.zero is not None:
        assert all(
            s.mul(i, s.zero) == s.zero and s.mul(s.zero, i) == s.zero
            for i in range(n)
        )
