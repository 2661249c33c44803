"""Bicategory validation: builders, laws, and corruption detection."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicatkit import corpus
from bicatkit.bicat import Magma, codiscrete_bicategory, strict_bicategory, validate_bicategory
from bicatkit.oracles import brute_z2_twist_ok


def test_corpus_bicategories_all_validate():
    for name, build in corpus.BICATEGORIES.items():
        rep = validate_bicategory(build())
        assert rep.ok, f"{name}: {rep.summary()}"


def test_strictness_flags():
    assert corpus.walking_arrow().is_strict()
    assert corpus.ordinal(2).is_strict()
    assert corpus.sigma_idem().is_strict()
    assert corpus.sigma_z2().is_strict()
    assert not corpus.cocycle_twisted().is_strict()
    assert not corpus.codiscrete3().is_strict()


def test_ordinal_composition():
    b = corpus.ordinal(2)
    assert b.compose1(("le", 1, 2), ("le", 0, 1)) == ("le", 0, 2)
    with pytest.raises(ValueError):
        b.compose1(("le", 0, 1), ("le", 1, 2))


def test_magma3_is_not_associative():
    m = corpus.magma3()
    assert not m.is_associative()
    assert m.associativity_failure() == ("a", "a", "a")


def test_codiscrete_requires_unit_basepoint():
    m = corpus.magma3()
    with pytest.raises(ValueError):
        codiscrete_bicategory("bad", Magma(m.elements, m.table, "a"))


def test_strict_builder_rejects_nonassociative_composition():
    m = corpus.magma3()
    hom = corpus.hom_category("m3", m.elements)

    def comp1(g, f):
        return m.table[(g, f)]

    def comp2(d, c):
        return ("i", comp1(d[1], c[1]))

    with pytest.raises(ValueError, match="associative"):
        strict_bicategory("bad", ["*"], {("*", "*"): hom}, {"*": "e"},
                          comp1, comp2)


def test_twist_corruption_yields_pentagon_witness():
    sites = [t for t in itertools.product((0, 1), repeat=3) if t != (1, 1, 1)]
    base = {(1, 1, 1): 1}
    for site in sites:
        twist = dict(base)
        twist[site] = 1 - twist.get(site, 0)
        rep = validate_bicategory(corpus.z2_twist_instance("corrupt", twist))
        kinds = {v.kind for v in rep.violations}
        assert "pentagon" in kinds, f"site {site}: {rep.summary()}"
        wit = rep.first("pentagon")
        assert wit is not None and len(wit.witness) == 4


def test_twist_flip_at_top_site_stays_valid():
    # flipping the all-ones site turns the trivial twist into the classical
    # non-trivial one, which is still a valid structure
    rep = validate_bicategory(corpus.z2_twist_instance("flip", {(1, 1, 1): 1}))
    assert rep.ok


@settings(max_examples=60, deadline=None)
@given(st.tuples(*[st.integers(0, 1)] * 8))
def test_twist_validity_matches_direct_arithmetic(bits):
    triples = sorted(itertools.product((0, 1), repeat=3))
    twist = dict(zip(triples, bits))
    rep = validate_bicategory(corpus.z2_twist_instance("rand", twist))
    assert rep.ok == brute_z2_twist_ok(twist)


def test_middle_four_interchange():
    for b in (corpus.sigma_idem(), corpus.cocycle_twisted()):
        for d1 in b.two_cells():
            for c1 in b.two_cells():
                if b.home2(c1)[1] != b.home2(d1)[0]:
                    continue
                for d2 in b.two_cells():
                    if b.src2(d2) != b.tgt2(d1):
                        continue
                    for c2 in b.two_cells():
                        if b.src2(c2) != b.tgt2(c1):
                            continue
                        lhs = b.vcomp(b.hcomp(d2, c2), b.hcomp(d1, c1))
                        rhs = b.hcomp(b.vcomp(d2, d1), b.vcomp(c2, c1))
                        assert lhs == rhs


def test_horizontal_composite_factors_through_whiskers():
    for b in (corpus.sigma_idem(), corpus.walking_two_cell()):
        for d in b.two_cells():
            for c in b.two_cells():
                if b.home2(c)[1] != b.home2(d)[0]:
                    continue
                both = b.hcomp(d, c)
                late_first = b.vcomp(b.whisker_right(d, b.tgt2(c)),
                                     b.whisker_left(b.src2(d), c))
                early_first = b.vcomp(b.whisker_left(b.tgt2(d), c),
                                      b.whisker_right(d, b.src2(c)))
                assert both == late_first == early_first


def test_unitor_corruption_detected():
    b = corpus.parallel_pair()
    b.left_unitor["p"] = b.id2("q")
    rep = validate_bicategory(b)
    assert not rep.ok
    assert rep.first("left-unitor-endpoints") is not None


def test_noninvertible_associator_detected():
    b = corpus.sigma_idem()
    b.associator[("s", "s", "s")] = "k"
    rep = validate_bicategory(b)
    assert not rep.ok
    assert rep.first("associator-not-invertible") is not None


def test_cell_id_clash_detected():
    b = corpus.parallel_pair()
    b.homs[("a", "b")] = corpus.hom_category("pp-ab", ["p", "1a"])
    rep = validate_bicategory(b)
    assert not rep.ok
    assert rep.first("1-cell-clash") is not None
    assert rep.structural_failure


def test_missing_hom_detected():
    b = corpus.walking_arrow()
    del b.homs[(0, 1)]
    rep = validate_bicategory(b)
    assert rep.first("missing-hom") is not None
