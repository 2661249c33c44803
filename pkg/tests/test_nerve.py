"""Simplices, reindexing, and the truncated 2-nerve."""

import pytest

from bicatkit.bicat import from_category
from bicatkit.catcore import chain_category, validate_category, validate_functor
from bicatkit.corpus import get_bicategory
from bicatkit.laxfun import classify
from bicatkit.nerve import (
    as_lax_functor,
    enumerate_simplices,
    ordinal_as_bicategory,
    ordinal_inclusion_check,
    ordinal_map_functor,
    reindex_simplex,
    simplex_from_lax,
    two_nerve,
    validate_simplex,
)
from bicatkit.oracles import (
    chain_simplex_key,
    classical_chains,
    classical_degeneracy,
    classical_face,
)


def test_ordinal_is_strict_and_locally_discrete():
    b = ordinal_as_bicategory(3)
    assert b.is_strict()
    assert len(list(b.one_cells())) == 10
    assert all(len(cat.morphisms) == len(cat.objects)
               for cat in b.homs.values())


def test_simplices_validate_and_round_trip():
    b = get_bicategory("walking-two-cell")
    sims = list(enumerate_simplices(b, 2))
    assert sims
    for s in sims:
        assert validate_simplex(s).ok
        fun = as_lax_functor(s)
        assert classify(fun).is_normal
        assert simplex_from_lax(fun).key() == s.key()


@pytest.mark.parametrize("name", ["walking-two-cell", "sigma-idem"])
def test_low_level_counts(name):
    b = get_bicategory(name)
    assert len(list(enumerate_simplices(b, 0))) == len(b.objects)
    assert len(list(enumerate_simplices(b, 1))) == len(list(b.one_cells()))


def test_level_one_is_the_disjoint_union_of_the_homs():
    b = get_bicategory("walking-two-cell")
    nerve = two_nerve(b, 1)
    lvl = nerve.levels[1]
    assert len(lvl.objects) == len(list(b.one_cells()))
    assert len(lvl.morphisms) == len(list(b.two_cells()))


def test_reindexing():
    b = get_bicategory("walking-two-cell")
    s = next(s for s in enumerate_simplices(b, 1)
             if s.objects == {0: "a", 1: "b"})
    assert reindex_simplex(s, (0, 1)).key() == s.key()
    collapsed = reindex_simplex(s, (0, 0))
    assert validate_simplex(collapsed).ok
    assert collapsed.cells[(0, 1)] == b.unit["a"]
    with pytest.raises(ValueError):
        ordinal_map_functor((1, 0), 1)
    with pytest.raises(ValueError):
        ordinal_map_functor((0, 5), 1)


def test_nerve_matches_the_classical_nerve_on_a_chain():
    c = chain_category(2)
    b = from_category(c)
    nerve = two_nerve(b, 3)
    for k in range(4):
        chains = classical_chains(c, k)
        keys = {chain: chain_simplex_key(b, c, chain) for chain in chains}
        assert sorted(map(repr, keys.values())) == sorted(
            map(repr, nerve.levels[k].objects))
        # a locally discrete base leaves no room for non-identity morphisms
        assert set(nerve.levels[k].morphisms) == set(
            nerve.levels[k].identity.values())
        for chain in chains:
            if k >= 1:
                for i in range(k + 1):
                    assert nerve.face[(k, i)].object_map[keys[chain]] == \
                        chain_simplex_key(b, c, classical_face(c, chain, i))
            if k <= 2:
                for i in range(k + 1):
                    assert nerve.degeneracy[(k, i)].object_map[keys[chain]] == \
                        chain_simplex_key(b, c, classical_degeneracy(c, chain, i))


@pytest.mark.parametrize("builder", [
    lambda: from_category(chain_category(2)),
    lambda: get_bicategory("walking-two-cell"),
])
def test_simplicial_identities_to_level_four(builder):
    nerve = two_nerve(builder(), 4)
    assert nerve.report.ok, nerve.report.summary()


def test_levels_and_structure_maps_are_well_formed():
    nerve = two_nerve(get_bicategory("walking-two-cell"), 2)
    for lvl in nerve.levels.values():
        assert validate_category(lvl).ok
    for fun in list(nerve.face.values()) + list(nerve.degeneracy.values()):
        assert validate_functor(fun).ok


def test_cocycle_two_simplices_count_group_squared_times_coefficients():
    nerve = two_nerve(get_bicategory("cocycle-twisted"), 2)
    assert len(nerve.levels[2].objects) == 8


def test_truncation_bound():
    with pytest.raises(ValueError):
        two_nerve(get_bicategory("terminal"), 5)


def test_ordinal_inclusion_check():
    assert ordinal_inclusion_check(3).ok
