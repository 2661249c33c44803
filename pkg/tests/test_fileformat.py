import pathlib

import pytest

from bicatkit import corpus
from bicatkit import fileformat as ff
from bicatkit.catcore import chain_category
from bicatkit.cylinder import lax_cylinder

DATA = pathlib.Path(ff.__file__).parent / "data"


def roundtrip(obj, name=None):
    sf = ff.document_for(obj, name)
    return ff.parse(ff.serialize(sf))


@pytest.mark.parametrize("name", sorted(corpus.BICATEGORIES))
def test_bicategory_roundtrip(name):
    b = corpus.get_bicategory(name)
    back = roundtrip(b)
    assert back.bicategories[b.name] == b


@pytest.mark.parametrize("name", sorted(corpus.LAX_FUNCTORS))
def test_laxfunctor_roundtrip(name):
    fun = corpus.get_lax_functor(name)
    back = roundtrip(fun)
    assert back.laxfunctors[fun.name] == fun


@pytest.mark.parametrize("name", sorted(corpus.ICONS))
def test_icon_roundtrip(name):
    icon = corpus.get_icon(name)
    back = roundtrip(icon)
    assert back.icons[icon.name] == icon


@pytest.mark.parametrize("name", sorted(corpus.OPLAX))
def test_oplax_roundtrip(name):
    u = corpus.get_oplax(name)
    back = roundtrip(u)
    assert back.oplaxes[u.name] == u


@pytest.mark.parametrize("pair", sorted(corpus.MONOIDAL_PAIRS))
def test_monoidal_roundtrip(pair):
    m = corpus.get_monoidal_pair(pair)[0].source
    back = roundtrip(m)
    assert back.monoidals[m.name] == m


def test_category_roundtrip_with_tuple_ids():
    cat = corpus.get_bicategory("walking-two-cell").homs[("a", "b")]
    back = roundtrip(cat)
    assert back.categories[cat.name] == cat
    chain = chain_category(2)  # morphism ids are tuples ("le", i, j)
    back = roundtrip(chain)
    assert back.categories[chain.name] == chain


def test_cylinder_total_roundtrip():
    cyl = lax_cylinder(corpus.get_bicategory("walking-two-cell"))
    back = roundtrip(cyl.total)
    assert back.bicategories[cyl.total.name] == cyl.total
    back = roundtrip(cyl.crossing)
    assert back.oplaxes[cyl.crossing.name] == cyl.crossing


def test_serialization_is_deterministic():
    b = corpus.get_bicategory("codiscrete3")
    once = ff.serialize(ff.document_for(b))
    again = ff.serialize(ff.document_for(b))
    assert once == again
    reparsed = ff.serialize(ff.parse(once))
    assert reparsed == once


# ---------------------------------------------------------------------------
# builder directives

COCYCLE_DOC = """
cocycledata "z2"
  element 0
  element 1
  unit 0
  op 0 0 = 0
  op 0 1 = 1
  op 1 0 = 1
  op 1 1 = 0
  coelement 0
  coelement 1
  counit 0
  coop 0 0 = 0
  coop 0 1 = 1
  coop 1 0 = 1
  coop 1 1 = 0
  twist 1 1 1 = 1
end

build "cocycle-twisted" = cocycle "z2"
"""


def test_cocycle_directive_matches_builder():
    sf = ff.parse(COCYCLE_DOC)
    assert sf.bicategories["cocycle-twisted"] == corpus.get_bicategory("cocycle-twisted")


def test_from_category_and_cylinder_directives():
    base = chain_category(1)
    text = ("\n".join(ff.serialize_category(base))
            + '\n\nbuild "walking-arrow" = from_category ' + ff.dump_id(base.name)
            + '\nbuild "cyl" = cylinder "walking-arrow"\n')
    sf = ff.parse(text)
    assert sf.bicategories["walking-arrow"] == corpus.get_bicategory("walking-arrow")
    assert set(sf.laxfunctors) == {"cyl-bottom", "cyl-top"}
    assert "cyl-crossing" in sf.oplaxes
    assert sf.oplaxes["cyl-crossing"].source is sf.laxfunctors["cyl-bottom"]


def test_ordinal_directive():
    sf = ff.parse('build "ordinal-2" = ordinal 2\n')
    assert sf.bicategories["ordinal-2"] == corpus.get_bicategory("ordinal-2")


def test_sigma_directive_renames():
    m = corpus.get_monoidal_pair("idem-pair")[0].source
    text = ff.serialize(ff.document_for(m)) + '\nbuild "sig" = sigma ' + ff.dump_id(m.name)
    sf = ff.parse(text)
    assert sf.bicategories["sig"].name == "sig"
    assert list(sf.bicategories["sig"].homs[("*", "*")].objects) == list(m.cat.objects)


# ---------------------------------------------------------------------------
# failure modes: parsing is fail-fast and names the line

def test_unknown_reference_fails():
    with pytest.raises(ff.StructureError, match="unknown magma"):
        ff.parse('build "x" = codiscrete "nope"\n')


def test_invalid_structure_fails_with_location():
    bad = ('category "c"\n  object "x"\n  morphism "f" : "x" -> "x"\n'
           '  identity "x" = "f"\n  compose "f" after "f" = "g"\nend\n')
    with pytest.raises(ff.StructureError, match="<string>:1.*fails validation"):
        ff.parse(bad)


def test_duplicate_name_fails():
    doc = 'build "b" = ordinal 1\nbuild "b" = ordinal 2\n'
    with pytest.raises(ff.StructureError, match="duplicate"):
        ff.parse(doc)


def test_missing_end_fails():
    with pytest.raises(ff.StructureError, match="missing its end"):
        ff.parse('category "c"\n  object "x"\n')


def test_non_json_id_fails():
    with pytest.raises(ff.StructureError, match="unexpected line"):
        ff.parse('category "c"\n  object bare-word\nend\n')


def test_ordinal_directive_rejects_bad_argument():
    with pytest.raises(ff.StructureError, match="non-negative integer"):
        ff.parse('build "b" = ordinal "two"\n')


# ---------------------------------------------------------------------------
# the bundled corpus files

def bundled():
    sf = ff.StructureFile()
    for path in sorted(DATA.glob("*.bc")):
        ff.parse_path(path, into=sf)
    return sf


def test_bundled_files_cover_the_corpus():
    sf = bundled()
    for key in sorted(corpus.BICATEGORIES):
        b = corpus.get_bicategory(key)
        assert sf.bicategories[b.name] == b
    for key in sorted(corpus.LAX_FUNCTORS):
        fun = corpus.get_lax_functor(key)
        assert sf.laxfunctors[fun.name] == fun
    for key in sorted(corpus.ICONS):
        icon = corpus.get_icon(key)
        assert sf.icons[icon.name] == icon
    for key in sorted(corpus.OPLAX):
        u = corpus.get_oplax(key)
        assert sf.oplaxes[u.name] == u


def test_bundled_files_reserialize_cleanly():
    sf = bundled()
    text = ff.serialize(sf)
    again = ff.parse(text)
    assert sorted(again.bicategories) == sorted(sf.bicategories)
    assert again.bicategories["codiscrete3"] == sf.bicategories["codiscrete3"]
