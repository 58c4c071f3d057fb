import pytest

import soficlab as sl
from soficlab.errors import CapExceeded, SearchTimeout, UnknownObject


@pytest.fixture
def golden_env(golden):
    s, _ = sl.syntactic_semigroup(golden)
    return s, sl.karoubi_envelope(s)


@pytest.fixture
def even_env(even):
    s, _ = sl.syntactic_semigroup(even)
    return s, sl.karoubi_envelope(s)


def test_objects_are_the_idempotents(golden_env):
    s, cat = golden_env
    assert list(cat.objects) == sl.idempotents(s)
    assert len(cat.objects) == 4


def test_every_arrow_satisfies_the_sandwich_law(golden_env, even_env):
    for s, cat in (golden_env, even_env):
        for e, x, f in cat.arrows:
            assert s.mul(s.mul(e, x), f) == x


def test_arrow_count_formula(golden_env, even_env):
    # count, per element, the (e, f) pairs that fix it
    for s, cat in (golden_env, even_env):
        idem = sl.idempotents(s)
        expected = sum(
            1
            for x in range(s.size)
            for e in idem
            for f in idem
            if s.mul(s.mul(e, x), f) == x
        )
        assert len(cat.arrows) == expected


def test_envelope_sizes_pinned(golden_env, even_env):
    assert len(golden_env[1].arrows) == 25
    assert len(even_env[1].arrows) == 34


def test_identities_and_unit_laws(golden_env):
    _, cat = golden_env
    for e in cat.objects:
        assert cat.identity(e) in cat.hom(e, e)
    for x in cat.arrows:
        assert cat.compose(cat.identity(x[0]), x) == x
        assert cat.compose(x, cat.identity(x[2])) == x


def test_composition_closed_and_associative(golden_env):
    _, cat = golden_env
    arrows = set(cat.arrows)
    for x in cat.arrows:
        for y in cat.arrows:
            if x[2] != y[0]:
                continue
            xy = cat.compose(x, y)
            assert xy in arrows
            for z in cat.arrows:
                if y[2] == z[0]:
                    assert cat.compose(xy, z) == cat.compose(x, cat.compose(y, z))


def test_compose_rejects_nonconsecutive(golden_env):
    _, cat = golden_env
    x = cat.arrows[0]
    bad = next(a for a in cat.arrows if a[0] != x[2])
    with pytest.raises(ValueError):
        cat.compose(x, bad)


def test_hom_and_identity_check_objects(golden_env):
    _, cat = golden_env
    with pytest.raises(UnknownObject):
        cat.hom(-17, cat.objects[0])
    with pytest.raises(UnknownObject):
        cat.identity(-17)


def test_envelope_cap(golden):
    s, _ = sl.syntactic_semigroup(golden)
    with pytest.raises(CapExceeded):
        sl.karoubi_envelope(s, cap=3)


def test_object_isomorphism_is_reflexive_and_symmetric(even_env):
    _, cat = even_env
    for e in cat.objects:
        assert sl.objects_isomorphic(cat, e, e)
    for e in cat.objects:
        for f in cat.objects:
            assert sl.objects_isomorphic(cat, e, f) == sl.objects_isomorphic(
                cat, f, e
            )


def test_skeleton_golden(golden_env):
    s, cat = golden_env
    sk = sl.skeleton(cat)
    assert [s.witness_name(o) for o in sk.objects] == ["a", "bb"]
    assert sl.hom_size_matrix(sk) == [[2, 1], [1, 1]]


def test_skeleton_even(even_env):
    s, cat = even_env
    sk = sl.skeleton(cat)
    assert len(sk.objects) == 3
    assert sl.hom_size_matrix(sk) == [[2, 3, 1], [3, 7, 1], [1, 1, 1]]


def test_skeleton_is_idempotent(golden_env, even_env):
    for _, cat in (golden_env, even_env):
        once = sl.skeleton(cat)
        twice = sl.skeleton(once)
        assert once.objects == twice.objects
        assert once.arrows == twice.arrows


def test_isomorphic_to_itself_with_relabeled_objects(golden_env):
    _, cat = golden_env
    sk = sl.skeleton(cat)
    flipped = sl.FiniteCategory(
        tuple(reversed(sk.objects)),
        tuple(sorted(sk.arrows, reverse=True)),
        sk.mul,
        sk.name,
    )
    assert sl.categories_isomorphic(sk, flipped)


def test_nonisomorphic_categories(golden_env, even_env):
    golden_sk = sl.skeleton(golden_env[1])
    even_sk = sl.skeleton(even_env[1])
    assert not sl.categories_isomorphic(golden_sk, even_sk)


def test_empty_categories_are_isomorphic():
    empty = sl.FiniteCategory((), (), lambda x, y: x)
    assert sl.categories_isomorphic(empty, empty)


def test_search_budget_raises(golden_env):
    sk = sl.skeleton(golden_env[1])
    with pytest.raises(SearchTimeout):
        sl.categories_isomorphic(sk, sk, budget=0)


def test_equivalence_golden_period2(golden_env, period2):
    s2, _ = sl.syntactic_semigroup(period2)
    env2 = sl.karoubi_envelope(s2)
    assert sl.categories_equivalent(golden_env[1], env2)


def test_equivalence_rejects_full_shift_vs_golden(golden_env, full2):
    sf, _ = sl.syntactic_semigroup(full2)
    envf = sl.karoubi_envelope(sf)
    assert not sl.categories_equivalent(golden_env[1], envf)


def test_dump_category_golden_skeleton_pinned(golden_env):
    sk = sl.skeleton(golden_env[1])
    assert sl.dump_category(sk) == (
        "objects a bb\n"
        "arrow a a a\n"
        "arrow a bb a\n"
        "arrow a bb bb\n"
        "arrow bb bb a\n"
        "arrow bb bb bb\n"
        "compose a:a:a a:a:a = a:a:a\n"
        "compose a:a:a a:bb:a = a:bb:a\n"
        "compose a:a:a a:bb:bb = a:bb:bb\n"
        "compose a:bb:a a:a:a = a:bb:a\n"
        "compose a:bb:a a:bb:a = a:bb:a\n"
        "compose a:bb:a a:bb:bb = a:bb:bb\n"
        "compose a:bb:bb bb:bb:a = a:bb:a\n"
        "compose a:bb:bb bb:bb:bb = a:bb:bb\n"
        "compose bb:bb:a a:a:a = bb:bb:a\n"
        "compose bb:bb:a a:bb:a = bb:bb:a\n"
        "compose bb:bb:a a:bb:bb = bb:bb:bb\n"
        "compose bb:bb:bb bb:bb:a = bb:bb:a\n"
        "compose bb:bb:bb bb:bb:bb = bb:bb:bb\n"
    )
