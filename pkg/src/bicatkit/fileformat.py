"""A line-diffable text format for every structure the toolkit builds.

One document holds named definitions — categories, magmas, cocycle data,
bicategories, monoidal categories, lax functors, icons, oplax transformations
— plus builder directives (`build X = from_category C`, `sigma`, `codiscrete`,
`cocycle`, `ordinal`, `cylinder`).  References point at names defined earlier
in the same document (or in a document already merged into the namespace),
and every definition is validated the moment it is complete: a file that
parses is a file whose every structure passes its validator.

Cell identifiers are written as compact JSON values (strings, integers,
arrays for tuples), so heterogeneous ids round-trip exactly; composition
lines fix the textual order as ``compose g after f = h``, meaning g runs
after f.  Serializing any structure and parsing the result yields an equal
structure, names included.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .bicat import (
    FiniteBicategory,
    Magma,
    MonoidalCategory,
    cocycle_bicategory,
    codiscrete_bicategory,
    from_category,
    sigma_bicategory,
    validate_bicategory,
    validate_monoidal,
)
from .catcore import (
    FiniteCategory,
    Functor,
    NatTrans,
    chain_category,
    product_category,
    validate_category,
)
from .cylinder import lax_cylinder
from .icon import Icon, validate_icon
from .laxfun import LaxFunctor, validate_lax_functor
from .oplax import OplaxNat, validate_oplax
from .report import sorted_ids


class StructureError(ValueError):
    """A document is malformed, dangling, or fails a validator."""


# ---------------------------------------------------------------------------
# identifiers as one-token JSON

def dump_id(x) -> str:
    """A cell id as one compact JSON token; tuples become arrays."""
    return json.dumps(_listify(x), separators=(",", ":"), ensure_ascii=False)


def _listify(x):
    if isinstance(x, tuple):
        return [_listify(v) for v in x]
    if isinstance(x, (str, int, bool)) or x is None:
        return x
    raise StructureError(f"id {x!r} is not representable in the file format")


def _tuplify(x):
    if isinstance(x, list):
        return tuple(_tuplify(v) for v in x)
    return x


_DECODER = json.JSONDecoder()


def _tokenize(line: str, where: str):
    """Keywords, punctuation (: -> => =), and JSON values, in order."""
    out, i, n = [], 0, len(line)
    while i < n:
        while i < n and line[i] in " \t":
            i += 1
        if i >= n or line[i] == "#":
            break
        if line.startswith("->", i):
            out.append(("p", "->"))
            i += 2
            continue
        if line.startswith("=>", i):
            out.append(("p", "=>"))
            i += 2
            continue
        ch = line[i]
        if ch in "=:":
            out.append(("p", ch))
            i += 1
            continue
        if ch == '"' or ch == "[" or ch == "-" or ch.isdigit() or \
                line.startswith(("true", "false", "null"), i):
            try:
                val, i = _DECODER.raw_decode(line, i)
            except ValueError:
                raise StructureError(f"{where}: bad value in {line.strip()!r}")
            out.append(("v", _tuplify(val)))
            continue
        j = i
        while j < n and line[j] not in " \t":
            j += 1
        out.append(("w", line[i:j]))
        i = j
    return out


class _Lines:
    """Tokenized, comment-stripped lines with one-line lookahead."""

    def __init__(self, text: str, source: str = "<string>"):
        self.source = source
        self.rows = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            toks = _tokenize(raw, f"{source}:{lineno}")
            if toks:
                self.rows.append((lineno, toks))
        self.pos = 0

    def done(self):
        return self.pos >= len(self.rows)

    def peek(self):
        return self.rows[self.pos][1]

    def next(self):
        row = self.rows[self.pos]
        self.pos += 1
        return row

    def fail(self, message, lineno=None):
        if lineno is None and self.pos < len(self.rows):
            lineno = self.rows[self.pos][0]
        raise StructureError(f"{self.source}:{lineno}: {message}")


def _shape(toks):
    """The keyword/punctuation skeleton of a token list."""
    return tuple(t[1] if t[0] in ("w", "p") else "@" for t in toks)


def _values(toks):
    return [t[1] for t in toks if t[0] == "v"]


# ---------------------------------------------------------------------------
# the document

@dataclass
class CocycleData:
    """Raw data for a group delooping with abelian coefficients and a twist."""
    g_elements: list
    g_op: dict
    g_unit: object
    a_elements: list
    a_op: dict
    a_unit: object
    twist: dict


_KINDS = ("category", "magma", "cocycledata", "bicategory", "monoidal",
          "laxfunctor", "icon", "oplax")


@dataclass
class StructureFile:
    """Named structures of every kind, in definition order."""
    categories: dict = field(default_factory=dict)
    magmas: dict = field(default_factory=dict)
    cocycledata: dict = field(default_factory=dict)
    bicategories: dict = field(default_factory=dict)
    monoidals: dict = field(default_factory=dict)
    laxfunctors: dict = field(default_factory=dict)
    icons: dict = field(default_factory=dict)
    oplaxes: dict = field(default_factory=dict)
    order: list = field(default_factory=list)       # (kind, name)

    def _registry(self, kind):
        return {"category": self.categories, "magma": self.magmas,
                "cocycledata": self.cocycledata,
                "bicategory": self.bicategories, "monoidal": self.monoidals,
                "laxfunctor": self.laxfunctors, "icon": self.icons,
                "oplax": self.oplaxes}[kind]

    def add(self, kind, name, obj, replace=False):
        reg = self._registry(kind)
        if name in reg and not replace:
            raise StructureError(f"duplicate {kind} {name!r}")
        if name not in reg:
            self.order.append((kind, name))
        reg[name] = obj

    def get(self, kind, name):
        reg = self._registry(kind)
        if name not in reg:
            raise StructureError(f"unknown {kind} {name!r}")
        return reg[name]

    def lookup(self, name):
        """(kind, structure) for a name of any kind."""
        for kind in _KINDS:
            reg = self._registry(kind)
            if name in reg:
                return kind, reg[name]
        raise StructureError(f"unknown name {name!r}")


# ---------------------------------------------------------------------------
# parsing

def parse(text: str, source: str = "<string>", into: StructureFile = None) -> StructureFile:
    sf = into if into is not None else StructureFile()
    lines = _Lines(text, source)
    while not lines.done():
        lineno, toks = lines.next()
        head = _shape(toks)
        if head[:1] == ("category",):
            name, cat = _parse_category(toks, lines)
            sf.add("category", name, cat)
        elif head[:1] == ("magma",):
            _parse_magma(toks, lines, sf)
        elif head[:1] == ("cocycledata",):
            _parse_cocycledata(toks, lines, sf)
        elif head[:1] == ("bicategory",):
            _parse_bicategory(toks, lines, sf)
        elif head[:1] == ("monoidal",):
            _parse_monoidal(toks, lines, sf)
        elif head[:1] == ("laxfunctor",):
            _parse_laxfunctor(toks, lines, sf)
        elif head[:1] == ("icon",):
            _parse_icon(toks, lines, sf)
        elif head[:1] == ("oplax",):
            _parse_oplax(toks, lines, sf)
        elif head[:1] == ("build",):
            _run_build(toks, lines, sf)
        else:
            lines.fail(f"unknown directive {toks[0][1]!r}", lineno)
    return sf


def parse_path(path, into: StructureFile = None) -> StructureFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), source=str(path), into=into)


def _expect(lines, toks, shape, what):
    if _shape(toks) != shape:
        lines.fail(f"malformed {what} line")
    return _values(toks)


def _check(report, what, lines, lineno):
    if not report.ok:
        first = report.first()
        raise StructureError(
            f"{lines.source}:{lineno}: {what} fails validation: "
            f"{first.kind}: {first.message}")


def _parse_category_body(name, lines):
    objects, morphisms, identity, table = [], {}, {}, {}
    while True:
        if lines.done():
            lines.fail(f"category {name!r} is missing its end line")
        lineno, toks = lines.next()
        shape = _shape(toks)
        if shape == ("end",):
            return FiniteCategory(name, objects, morphisms, identity, table), lineno
        if shape == ("object", "@"):
            objects.append(_values(toks)[0])
        elif shape == ("morphism", "@", ":", "@", "->", "@"):
            m, s, t = _values(toks)
            morphisms[m] = (s, t)
        elif shape == ("identity", "@", "=", "@"):
            x, m = _values(toks)
            identity[x] = m
        elif shape == ("compose", "@", "after", "@", "=", "@"):
            g, f, h = _values(toks)
            table[(f, g)] = h
        else:
            lines.fail(f"unexpected line in category {name!r}", lineno)


def _parse_category(toks, lines):
    name, = _expect(lines, toks, ("category", "@"), "category header")
    start = lines.rows[lines.pos - 1][0]
    cat, _ = _parse_category_body(name, lines)
    _check(validate_category(cat), f"category {name!r}", lines, start)
    return name, cat


def _parse_magma(toks, lines, sf):
    name, = _expect(lines, toks, ("magma", "@"), "magma header")
    elements, table, basepoint = [], {}, None
    start = lines.rows[lines.pos - 1][0]
    while True:
        if lines.done():
            lines.fail(f"magma {name!r} is missing its end line")
        lineno, toks = lines.next()
        shape = _shape(toks)
        if shape == ("end",):
            break
        if shape == ("element", "@"):
            elements.append(_values(toks)[0])
        elif shape == ("basepoint", "@"):
            basepoint, = _values(toks)
        elif shape == ("op", "@", "@", "=", "@"):
            x, y, z = _values(toks)
            table[(x, y)] = z
        else:
            lines.fail(f"unexpected line in magma {name!r}", lineno)
    missing = [(x, y) for x in elements for y in elements
               if (x, y) not in table]
    if missing or basepoint not in elements:
        raise StructureError(f"{lines.source}:{start}: magma {name!r} is "
                             f"incomplete (missing {missing or 'basepoint'})")
    sf.add("magma", name, Magma(elements, table, basepoint))


def _parse_cocycledata(toks, lines, sf):
    name, = _expect(lines, toks, ("cocycledata", "@"), "cocycledata header")
    data = CocycleData([], {}, None, [], {}, None, {})
    while True:
        if lines.done():
            lines.fail(f"cocycledata {name!r} is missing its end line")
        lineno, toks = lines.next()
        shape = _shape(toks)
        if shape == ("end",):
            break
        if shape == ("element", "@"):
            data.g_elements.append(_values(toks)[0])
        elif shape == ("unit", "@"):
            data.g_unit, = _values(toks)
        elif shape == ("op", "@", "@", "=", "@"):
            x, y, z = _values(toks)
            data.g_op[(x, y)] = z
        elif shape == ("coelement", "@"):
            data.a_elements.append(_values(toks)[0])
        elif shape == ("counit", "@"):
            data.a_unit, = _values(toks)
        elif shape == ("coop", "@", "@", "=", "@"):
            x, y, z = _values(toks)
            data.a_op[(x, y)] = z
        elif shape == ("twist", "@", "@", "@", "=", "@"):
            x, y, z, a = _values(toks)
            data.twist[(x, y, z)] = a
        else:
            lines.fail(f"unexpected line in cocycledata {name!r}", lineno)
    sf.add("cocycledata", name, data)


def _parse_functor_block(fname, src_cat, tgt_cat, lines, owner):
    omap, mmap = {}, {}
    while True:
        if lines.done():
            lines.fail(f"functor block in {owner!r} is missing its end line")
        lineno, toks = lines.next()
        shape = _shape(toks)
        if shape == ("end",):
            return Functor(fname, src_cat, tgt_cat, omap, mmap)
        if shape == ("on1", "@", "after", "@", "=", "@"):
            g, f, h = _values(toks)
            omap[(g, f)] = h
        elif shape == ("on2", "@", "after", "@", "=", "@"):
            d, c, e = _values(toks)
            mmap[(d, c)] = e
        else:
            lines.fail(f"unexpected line in functor block of {owner!r}", lineno)


def _parse_bicategory(toks, lines, sf):
    name, = _expect(lines, toks, ("bicategory", "@"), "bicategory header")
    start = lines.rows[lines.pos - 1][0]
    objects, homs, comp, unit = [], {}, {}, {}
    associator, left_unitor, right_unitor = {}, {}, {}
    while True:
        if lines.done():
            lines.fail(f"bicategory {name!r} is missing its end line")
        lineno, toks = lines.next()
        shape = _shape(toks)
        if shape == ("end",):
            break
        if shape == ("object", "@"):
            objects.append(_values(toks)[0])
        elif shape == ("unit", "@", "=", "@"):
            x, f = _values(toks)
            unit[x] = f
        elif shape == ("hom", "@", "@", "=", "category", "@"):
            a, b, cname = _values(toks)
            cat, _ = _parse_category_body(cname, lines)
            _check(validate_category(cat), f"hom {a!r}->{b!r} of {name!r}",
                   lines, lineno)
            homs[(a, b)] = cat
        elif shape == ("compose", "@", "@", "@", "=", "functor", "@"):
            x, y, z, fname = _values(toks)
            for pair in ((y, z), (x, y), (x, z)):
                if pair not in homs:
                    lines.fail(f"compose {x} {y} {z} precedes hom {pair}", lineno)
            prod = product_category(homs[(y, z)], homs[(x, y)])
            comp[(x, y, z)] = _parse_functor_block(fname, prod, homs[(x, z)],
                                                   lines, name)
        elif shape == ("assoc", "@", "@", "@", "=", "@"):
            h, g, f, c = _values(toks)
            associator[(h, g, f)] = c
        elif shape == ("lunit", "@", "=", "@"):
            f, c = _values(toks)
            left_unitor[f] = c
        elif shape == ("runit", "@", "=", "@"):
            f, c = _values(toks)
            right_unitor[f] = c
        else:
            lines.fail(f"unexpected line in bicategory {name!r}", lineno)
    b = FiniteBicategory(name, objects, homs, comp, unit,
                         associator, left_unitor, right_unitor)
    _check(validate_bicategory(b), f"bicategory {name!r}", lines, start)
    sf.add("bicategory", name, b)


def _parse_monoidal(toks, lines, sf):
    name, = _expect(lines, toks, ("monoidal", "@"), "monoidal header")
    start = lines.rows[lines.pos - 1][0]
    cat = unit_obj = None
    tensor_obj, tensor_mor = {}, {}
    associator, left_unitor, right_unitor = {}, {}, {}
    while True:
        if lines.done():
            lines.fail(f"monoidal {name!r} is missing its end line")
        lineno, toks = lines.next()
        shape = _shape(toks)
        if shape == ("end",):
            break
        if shape == ("base", "=", "category", "@"):
            cname, = _values(toks)
            cat, _ = _parse_category_body(cname, lines)
            _check(validate_category(cat), f"base of {name!r}", lines, lineno)
        elif shape == ("unitobj", "@"):
            unit_obj, = _values(toks)
        elif shape == ("tensor", "@", "@", "=", "@"):
            x, y, z = _values(toks)
            tensor_obj[(x, y)] = z
        elif shape == ("tensormor", "@", "@", "=", "@"):
            f, g, h = _values(toks)
            tensor_mor[(f, g)] = h
        elif shape == ("massoc", "@", "@", "@", "=", "@"):
            x, y, z, m = _values(toks)
            associator[(x, y, z)] = m
        elif shape == ("mlunit", "@", "=", "@"):
            x, m = _values(toks)
            left_unitor[x] = m
        elif shape == ("mrunit", "@", "=", "@"):
            x, m = _values(toks)
            right_unitor[x] = m
        else:
            lines.fail(f"unexpected line in monoidal {name!r}", lineno)
    if cat is None:
        raise StructureError(f"{lines.source}:{start}: monoidal {name!r} "
                             f"has no base category")
    m = MonoidalCategory(name, cat, tensor_obj, tensor_mor, unit_obj,
                         associator, left_unitor, right_unitor)
    _check(validate_monoidal(m), f"monoidal {name!r}", lines, start)
    sf.add("monoidal", name, m)


def _parse_laxfunctor(toks, lines, sf):
    vals = _expect(lines, toks, ("laxfunctor", "@", ":", "@", "->", "@"),
                   "laxfunctor header")
    name, src_name, tgt_name = vals
    start = lines.rows[lines.pos - 1][0]
    src = sf.get("bicategory", src_name)
    tgt = sf.get("bicategory", tgt_name)
    object_map, hom_functors, comp_c, unit_c = {}, {}, {}, {}
    while True:
        if lines.done():
            lines.fail(f"laxfunctor {name!r} is missing its end line")
        lineno, toks = lines.next()
        shape = _shape(toks)
        if shape == ("end",):
            break
        if shape == ("object", "@", "->", "@"):
            a, b = _values(toks)
            object_map[a] = b
        elif shape == ("hom", "@", "@", "=", "functor", "@"):
            a, b, fname = _values(toks)
            if a not in object_map or b not in object_map:
                lines.fail(f"hom {a} {b} precedes its object lines", lineno)
            image = (object_map[a], object_map[b])
            hom_functors[(a, b)] = _parse_arrow_functor_block(
                fname, src.homs[(a, b)], tgt.homs[image], lines, name)
        elif shape == ("comp", "@", "@", "=", "@"):
            g, f, c = _values(toks)
            comp_c[(g, f)] = c
        elif shape == ("unitcell", "@", "=", "@"):
            a, c = _values(toks)
            unit_c[a] = c
        else:
            lines.fail(f"unexpected line in laxfunctor {name!r}", lineno)
    fun = LaxFunctor(name, src, tgt, object_map, hom_functors, comp_c, unit_c)
    _check(validate_lax_functor(fun), f"laxfunctor {name!r}", lines, start)
    sf.add("laxfunctor", name, fun)


def _parse_arrow_functor_block(fname, src_cat, tgt_cat, lines, owner):
    omap, mmap = {}, {}
    while True:
        if lines.done():
            lines.fail(f"functor block in {owner!r} is missing its end line")
        lineno, toks = lines.next()
        shape = _shape(toks)
        if shape == ("end",):
            return Functor(fname, src_cat, tgt_cat, omap, mmap)
        if shape == ("on1", "@", "->", "@"):
            f, g = _values(toks)
            omap[f] = g
        elif shape == ("on2", "@", "->", "@"):
            c, d = _values(toks)
            mmap[c] = d
        else:
            lines.fail(f"unexpected line in functor block of {owner!r}", lineno)


def _parse_icon(toks, lines, sf):
    vals = _expect(lines, toks, ("icon", "@", ":", "@", "=>", "@"),
                   "icon header")
    name, f_name, g_name = vals
    start = lines.rows[lines.pos - 1][0]
    f = sf.get("laxfunctor", f_name)
    g = sf.get("laxfunctor", g_name)
    components = {}
    while True:
        if lines.done():
            lines.fail(f"icon {name!r} is missing its end line")
        lineno, toks = lines.next()
        shape = _shape(toks)
        if shape == ("end",):
            break
        if shape == ("at", "@", "@", "=", "nat", "@"):
            a, b, nt_name = _values(toks)
            cells = _parse_nat_cells(nt_name, lines, name)
            if (a, b) not in f.hom_functors:
                lines.fail(f"icon {name!r} names a missing hom {a} {b}", lineno)
            components[(a, b)] = NatTrans(nt_name, f.hom_functors[(a, b)],
                                          g.hom_functors[(a, b)], cells)
        else:
            lines.fail(f"unexpected line in icon {name!r}", lineno)
    icon = Icon(name, f, g, components)
    _check(validate_icon(icon), f"icon {name!r}", lines, start)
    sf.add("icon", name, icon)


def _parse_nat_cells(nt_name, lines, owner):
    cells = {}
    while True:
        if lines.done():
            lines.fail(f"nat block in {owner!r} is missing its end line")
        lineno, toks = lines.next()
        shape = _shape(toks)
        if shape == ("end",):
            return cells
        if shape == ("cell", "@", "=", "@"):
            f, c = _values(toks)
            cells[f] = c
        else:
            lines.fail(f"unexpected line in nat block of {owner!r}", lineno)


def _parse_oplax(toks, lines, sf):
    vals = _expect(lines, toks, ("oplax", "@", ":", "@", "=>", "@"),
                   "oplax header")
    name, f_name, g_name = vals
    start = lines.rows[lines.pos - 1][0]
    f = sf.get("laxfunctor", f_name)
    g = sf.get("laxfunctor", g_name)
    components, constraints = {}, {}
    while True:
        if lines.done():
            lines.fail(f"oplax {name!r} is missing its end line")
        lineno, toks = lines.next()
        shape = _shape(toks)
        if shape == ("end",):
            break
        if shape == ("component", "@", "=", "@"):
            a, c = _values(toks)
            components[a] = c
        elif shape == ("constraint", "@", "=", "@"):
            w, c = _values(toks)
            constraints[w] = c
        else:
            lines.fail(f"unexpected line in oplax {name!r}", lineno)
    u = OplaxNat(name, f, g, components, constraints)
    _check(validate_oplax(u), f"oplax {name!r}", lines, start)
    sf.add("oplax", name, u)


# ---------------------------------------------------------------------------
# builder directives

def _run_build(toks, lines, sf):
    lineno = lines.rows[lines.pos - 1][0]
    shape = _shape(toks)
    if len(shape) != 5 or shape[:1] != ("build",) or shape[2] != "=":
        lines.fail("malformed build line (build NAME = KIND ARG)", lineno)
    name = _values(toks[:2])[0]
    kind = toks[3][1]
    arg, = _values(toks[4:])
    if kind == "from_category":
        b = from_category(sf.get("category", arg), name)
    elif kind == "sigma":
        b = sigma_bicategory(sf.get("monoidal", arg))
        b.name = name
    elif kind == "codiscrete":
        try:
            b = codiscrete_bicategory(name, sf.get("magma", arg))
        except ValueError as e:
            raise StructureError(f"{lines.source}:{lineno}: {e}")
    elif kind == "cocycle":
        d = sf.get("cocycledata", arg)
        b = cocycle_bicategory(name, d.g_elements, d.g_op, d.g_unit,
                               d.a_elements, d.a_op, d.a_unit, d.twist)
    elif kind == "ordinal":
        if not isinstance(arg, int) or arg < 0:
            lines.fail("ordinal takes a non-negative integer", lineno)
        b = from_category(chain_category(arg), name)
    elif kind == "cylinder":
        base = sf.get("bicategory", arg)
        try:
            cyl = lax_cylinder(base)
        except Exception as e:
            raise StructureError(f"{lines.source}:{lineno}: {e}")
        sf.add("bicategory", name, cyl.total)
        sf.add("laxfunctor", f"{name}-bottom", cyl.bottom)
        sf.add("laxfunctor", f"{name}-top", cyl.top)
        sf.add("oplax", f"{name}-crossing", cyl.crossing)
        return
    else:
        lines.fail(f"unknown builder {kind!r}", lineno)
    _check(validate_bicategory(b), f"built bicategory {name!r}", lines, lineno)
    sf.add("bicategory", name, b)


# ---------------------------------------------------------------------------
# serialization

def _category_lines(cat: FiniteCategory, header: str, out: list):
    out.append(header)
    for x in cat.objects:
        out.append(f"  object {dump_id(x)}")
    for m in sorted_ids(cat.morphisms):
        s, t = cat.morphisms[m]
        out.append(f"  morphism {dump_id(m)} : {dump_id(s)} -> {dump_id(t)}")
    for x in sorted_ids(cat.identity):
        out.append(f"  identity {dump_id(x)} = {dump_id(cat.identity[x])}")
    for f, g in sorted_ids(cat.table):
        out.append(f"  compose {dump_id(g)} after {dump_id(f)} "
                   f"= {dump_id(cat.table[(f, g)])}")
    out.append("end")


def serialize_category(cat: FiniteCategory) -> list:
    out = []
    _category_lines(cat, f"category {dump_id(cat.name)}", out)
    return out


def serialize_magma(name, m: Magma) -> list:
    out = [f"magma {dump_id(name)}"]
    for x in m.elements:
        out.append(f"  element {dump_id(x)}")
    out.append(f"  basepoint {dump_id(m.basepoint)}")
    for x, y in sorted_ids(m.table):
        out.append(f"  op {dump_id(x)} {dump_id(y)} = {dump_id(m.table[(x, y)])}")
    out.append("end")
    return out


def serialize_cocycledata(name, d: CocycleData) -> list:
    out = [f"cocycledata {dump_id(name)}"]
    for g in d.g_elements:
        out.append(f"  element {dump_id(g)}")
    out.append(f"  unit {dump_id(d.g_unit)}")
    for x, y in sorted_ids(d.g_op):
        out.append(f"  op {dump_id(x)} {dump_id(y)} = {dump_id(d.g_op[(x, y)])}")
    for a in d.a_elements:
        out.append(f"  coelement {dump_id(a)}")
    out.append(f"  counit {dump_id(d.a_unit)}")
    for x, y in sorted_ids(d.a_op):
        out.append(f"  coop {dump_id(x)} {dump_id(y)} = {dump_id(d.a_op[(x, y)])}")
    for x, y, z in sorted_ids(d.twist):
        out.append(f"  twist {dump_id(x)} {dump_id(y)} {dump_id(z)} "
                   f"= {dump_id(d.twist[(x, y, z)])}")
    out.append("end")
    return out


def serialize_bicategory(b: FiniteBicategory) -> list:
    out = [f"bicategory {dump_id(b.name)}"]
    inner = []
    for x in b.objects:
        out.append(f"  object {dump_id(x)}")
    for x in sorted_ids(b.unit):
        out.append(f"  unit {dump_id(x)} = {dump_id(b.unit[x])}")
    for a, bb in sorted_ids(b.homs):
        cat = b.homs[(a, bb)]
        inner.clear()
        _category_lines(cat, f"  hom {dump_id(a)} {dump_id(bb)} "
                             f"= category {dump_id(cat.name)}", inner)
        out.append(inner[0])
        out.extend("  " + ln for ln in inner[1:])
    for x, y, z in sorted_ids(b.comp):
        fun = b.comp[(x, y, z)]
        out.append(f"  compose {dump_id(x)} {dump_id(y)} {dump_id(z)} "
                   f"= functor {dump_id(fun.name)}")
        for g, f in sorted_ids(fun.object_map):
            out.append(f"    on1 {dump_id(g)} after {dump_id(f)} "
                       f"= {dump_id(fun.object_map[(g, f)])}")
        for d, c in sorted_ids(fun.morphism_map):
            out.append(f"    on2 {dump_id(d)} after {dump_id(c)} "
                       f"= {dump_id(fun.morphism_map[(d, c)])}")
        out.append("  end")
    for h, g, f in sorted_ids(b.associator):
        out.append(f"  assoc {dump_id(h)} {dump_id(g)} {dump_id(f)} "
                   f"= {dump_id(b.associator[(h, g, f)])}")
    for f in sorted_ids(b.left_unitor):
        out.append(f"  lunit {dump_id(f)} = {dump_id(b.left_unitor[f])}")
    for f in sorted_ids(b.right_unitor):
        out.append(f"  runit {dump_id(f)} = {dump_id(b.right_unitor[f])}")
    out.append("end")
    return out


def serialize_monoidal(m: MonoidalCategory) -> list:
    out = [f"monoidal {dump_id(m.name)}"]
    inner = []
    _category_lines(m.cat, f"  base = category {dump_id(m.cat.name)}", inner)
    out.append(inner[0])
    out.extend("  " + ln for ln in inner[1:])
    out.append(f"  unitobj {dump_id(m.unit_obj)}")
    for x, y in sorted_ids(m.tensor_obj):
        out.append(f"  tensor {dump_id(x)} {dump_id(y)} "
                   f"= {dump_id(m.tensor_obj[(x, y)])}")
    for f, g in sorted_ids(m.tensor_mor):
        out.append(f"  tensormor {dump_id(f)} {dump_id(g)} "
                   f"= {dump_id(m.tensor_mor[(f, g)])}")
    for x, y, z in sorted_ids(m.associator):
        out.append(f"  massoc {dump_id(x)} {dump_id(y)} {dump_id(z)} "
                   f"= {dump_id(m.associator[(x, y, z)])}")
    for x in sorted_ids(m.left_unitor):
        out.append(f"  mlunit {dump_id(x)} = {dump_id(m.left_unitor[x])}")
    for x in sorted_ids(m.right_unitor):
        out.append(f"  mrunit {dump_id(x)} = {dump_id(m.right_unitor[x])}")
    out.append("end")
    return out


def serialize_laxfunctor(fun: LaxFunctor) -> list:
    out = [f"laxfunctor {dump_id(fun.name)} : {dump_id(fun.source.name)} "
           f"-> {dump_id(fun.target.name)}"]
    for a in sorted_ids(fun.object_map):
        out.append(f"  object {dump_id(a)} -> {dump_id(fun.object_map[a])}")
    for a, b in sorted_ids(fun.hom_functors):
        hf = fun.hom_functors[(a, b)]
        out.append(f"  hom {dump_id(a)} {dump_id(b)} = functor {dump_id(hf.name)}")
        for f in sorted_ids(hf.object_map):
            out.append(f"    on1 {dump_id(f)} -> {dump_id(hf.object_map[f])}")
        for c in sorted_ids(hf.morphism_map):
            out.append(f"    on2 {dump_id(c)} -> {dump_id(hf.morphism_map[c])}")
        out.append("  end")
    for g, f in sorted_ids(fun.comp_constraints):
        out.append(f"  comp {dump_id(g)} {dump_id(f)} "
                   f"= {dump_id(fun.comp_constraints[(g, f)])}")
    for a in sorted_ids(fun.unit_constraints):
        out.append(f"  unitcell {dump_id(a)} = {dump_id(fun.unit_constraints[a])}")
    out.append("end")
    return out


def serialize_icon(icon: Icon) -> list:
    out = [f"icon {dump_id(icon.name)} : {dump_id(icon.source.name)} "
           f"=> {dump_id(icon.target.name)}"]
    for a, b in sorted_ids(icon.components):
        nt = icon.components[(a, b)]
        out.append(f"  at {dump_id(a)} {dump_id(b)} = nat {dump_id(nt.name)}")
        for f in sorted_ids(nt.components):
            out.append(f"    cell {dump_id(f)} = {dump_id(nt.components[f])}")
        out.append("  end")
    out.append("end")
    return out


def serialize_oplax(u: OplaxNat) -> list:
    out = [f"oplax {dump_id(u.name)} : {dump_id(u.source.name)} "
           f"=> {dump_id(u.target.name)}"]
    for a in sorted_ids(u.components):
        out.append(f"  component {dump_id(a)} = {dump_id(u.components[a])}")
    for f in sorted_ids(u.constraints):
        out.append(f"  constraint {dump_id(f)} = {dump_id(u.constraints[f])}")
    out.append("end")
    return out


def serialize(sf: StructureFile) -> str:
    """The whole document, one blank line between definitions; built
    structures are expanded to full blocks so the text stands alone."""
    chunks = []
    for kind, name in sf.order:
        obj = sf.get(kind, name)
        if kind == "category":
            chunks.append(serialize_category(obj))
        elif kind == "magma":
            chunks.append(serialize_magma(name, obj))
        elif kind == "cocycledata":
            chunks.append(serialize_cocycledata(name, obj))
        elif kind == "bicategory":
            chunks.append(serialize_bicategory(obj))
        elif kind == "monoidal":
            chunks.append(serialize_monoidal(obj))
        elif kind == "laxfunctor":
            chunks.append(serialize_laxfunctor(obj))
        elif kind == "icon":
            chunks.append(serialize_icon(obj))
        elif kind == "oplax":
            chunks.append(serialize_oplax(obj))
    return "\n\n".join("\n".join(c) for c in chunks) + "\n"


def document_for(obj, name=None) -> StructureFile:
    """A StructureFile holding one structure plus everything it references,
    dependencies first — the shape `serialize` needs to stand alone."""
    sf = StructureFile()
    _include(sf, obj, name)
    return sf


def _include(sf, obj, name=None):
    if isinstance(obj, FiniteCategory):
        _add_once(sf, "category", name or obj.name, obj)
    elif isinstance(obj, FiniteBicategory):
        _add_once(sf, "bicategory", name or obj.name, obj)
    elif isinstance(obj, Magma):
        _add_once(sf, "magma", name, obj)
    elif isinstance(obj, MonoidalCategory):
        _add_once(sf, "monoidal", name or obj.name, obj)
    elif isinstance(obj, LaxFunctor):
        _include(sf, obj.source)
        _include(sf, obj.target)
        _add_once(sf, "laxfunctor", name or obj.name, obj)
    elif isinstance(obj, Icon):
        _include(sf, obj.source)
        _include(sf, obj.target)
        _add_once(sf, "icon", name or obj.name, obj)
    elif isinstance(obj, OplaxNat):
        _include(sf, obj.source)
        _include(sf, obj.target)
        _add_once(sf, "oplax", name or obj.name, obj)
    else:
        raise StructureError(f"cannot serialize {type(obj).__name__}")


def _add_once(sf, kind, name, obj):
    if name is None:
        raise StructureError(f"a {kind} needs a name to be serialized")
    reg = sf._registry(kind)
    if name in reg:
        if reg[name] != obj:
            raise StructureError(f"name clash on {kind} {name!r}")
        return
    sf.add(kind, name, obj)
