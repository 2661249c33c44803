"""Oplax natural transformations between lax functors.

The data: a component 1-cell per object and a constraint 2-cell per 1-cell,
``constraints[f]: compose1(comp[B], F(f)) => compose1(G(f), comp[A])`` for
f: A -> B.  Validation handles fully weak ambients by normalizing both sides
of every law to right-associated composites (associators inserted in a fixed
order).  Vertical composition is likewise defined in full generality — that
is what lets the non-associative codiscrete example demonstrate that these
transformations do NOT form the 2-cells of anything strict.

Whiskering, interchange, and the strictness/costrictness machinery are
deliberately restricted to strict 2-categories and strict functors; outside
that setting they raise UnsupportedSettingError rather than guess at one of
several inequivalent pastings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bicat import FiniteBicategory, UnsupportedSettingError
from .catcore import NatTrans
from .icon import Icon, validate_icon
from .laxfun import LaxFunctor, classify, compose_lax, two_functor
from .report import ValidationReport, sorted_ids


@dataclass
class OplaxNat:
    name: str
    source: LaxFunctor
    target: LaxFunctor
    components: dict     # object A -> 1-cell F(A) -> G(A)
    constraints: dict    # 1-cell f -> 2-cell comp[B].F(f) => G(f).comp[A]

    def component(self, a):
        return self.components[a]

    def constraint(self, f):
        return self.constraints[f]


def validate_oplax(u: OplaxNat) -> ValidationReport:
    rep = ValidationReport(f"oplax transformation {u.name}")
    f, g = u.source, u.target
    if (f.source is not g.source and f.source != g.source) or \
       (f.target is not g.target and f.target != g.target):
        rep.add("parallel", "the two lax functors are not parallel", structural=True)
        return rep
    s, t = f.source, f.target

    for a in sorted_ids(s.objects):
        cell = u.components.get(a)
        if cell is None:
            rep.add("missing-component", f"no component at {a!r}", (a,), structural=True)
            continue
        try:
            pair = t.home1(cell)
        except KeyError:
            rep.add("dangling-component", f"component at {a!r} is not a 1-cell", (a,),
                    structural=True)
            continue
        if pair != (f.object_map[a], g.object_map[a]):
            rep.add("component-endpoints",
                    f"component at {a!r} must run from the first image to the second",
                    (a,), structural=True)
    if rep.violations:
        return rep

    for w in s.one_cells():
        a, b = s.home1(w)
        cell = u.constraints.get(w)
        want_src = t.compose1(u.components[b], f.on_1(w))
        want_tgt = t.compose1(g.on_1(w), u.components[a])
        cat = t.homs[t.home1(want_src)]
        if cell is None:
            rep.add("missing-constraint", f"no constraint at {w!r}", (w,), structural=True)
        elif cell not in cat.morphisms:
            rep.add("dangling-constraint",
                    f"constraint at {w!r} is not a 2-cell of its hom", (w,), structural=True)
        elif cat.morphisms[cell] != (want_src, want_tgt):
            rep.add("constraint-endpoints",
                    f"constraint at {w!r} must run comp.F{w!r} => G{w!r}.comp", (w,))
    if rep.violations:
        return rep

    # ON0: naturality in every 2-cell
    for c in s.two_cells():
        w, w2 = s.src2(c), s.tgt2(c)
        a, b = s.home2(c)
        lhs = t.vcomp(t.whisker_right(g.on_2(c), u.components[a]), u.constraints[w])
        rhs = t.vcomp(u.constraints[w2], t.whisker_left(u.components[b], f.on_2(c)))
        if lhs != rhs:
            rep.add("naturality", f"constraint family is not natural under {c!r}", (c,))

    # ON1: compatibility with composition, fully padded
    for x in s.one_cells():
        for y in s.one_cells():
            if s.home1(y)[1] != s.home1(x)[0]:
                continue
            a = s.home1(y)[0]
            c_ = s.home1(x)[1]
            fx, fy, gx, gy = f.on_1(x), f.on_1(y), g.on_1(x), g.on_1(y)
            ca, cb, cc = u.components[a], u.components[s.home1(y)[1]], u.components[c_]
            lhs = t.vcomp(
                t.whisker_right(g.comp_constraints[(x, y)], ca),
                t.vcomp(
                    t.assoc_inv(gx, gy, ca),
                    t.vcomp(
                        t.whisker_left(gx, u.constraints[y]),
                        t.vcomp(
                            t.assoc(gx, cb, fy),
                            t.vcomp(t.whisker_right(u.constraints[x], fy),
                                    t.assoc_inv(cc, fx, fy))))))
            rhs = t.vcomp(u.constraints[s.compose1(x, y)],
                          t.whisker_left(cc, f.comp_constraints[(x, y)]))
            if lhs != rhs:
                rep.add("composition-compat",
                        f"constraint pasting disagrees at the pair ({x!r}, {y!r})", (x, y))

    # ON2: compatibility with units
    for a in sorted_ids(s.objects):
        ca = u.components[a]
        lhs = t.vcomp(t.whisker_right(g.unit_constraints[a], ca),
                      t.vcomp(t.lunit_inv(ca), t.runit(ca)))
        rhs = t.vcomp(u.constraints[s.unit[a]],
                      t.whisker_left(ca, f.unit_constraints[a]))
        if lhs != rhs:
            rep.add("unit-compat", f"unit constraint pasting disagrees at {a!r}", (a,))
    return rep


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class OplaxClass:
    strict: bool         # every constraint is an identity 2-cell
    pseudonatural: bool  # every constraint is invertible
    icon: bool           # every component is a unit 1-cell

    @property
    def labels(self):
        out = []
        if self.strict:
            out.append("strict")
        if self.pseudonatural:
            out.append("pseudonatural")
        if self.icon:
            out.append("icon")
        return tuple(out) if out else ("general",)

    @property
    def label(self):
        return "+".join(self.labels)


def classify_oplax(u: OplaxNat) -> OplaxClass:
    t = u.source.target
    cons = list(u.constraints.values())
    strict = all(c == t.id2(t.src2(c)) for c in cons)
    pseudo = all(t.inv2(c) is not None for c in cons)
    icon = all(u.components[a] == t.unit[u.source.object_map[a]]
               for a in u.source.source.objects)
    return OplaxClass(strict, pseudo, icon)


# ---------------------------------------------------------------------------
# identity / vertical composition

def identity_oplax(fun: LaxFunctor) -> OplaxNat:
    t = fun.target
    comps = {a: t.unit[fun.object_map[a]] for a in fun.source.objects}
    cons = {}
    for w in fun.source.one_cells():
        fw = fun.on_1(w)
        cons[w] = t.vcomp(t.runit_inv(fw), t.lunit(fw))
    return OplaxNat(f"1_{fun.name}", fun, fun, comps, cons)


def vcomp_oplax(later: OplaxNat, earlier: OplaxNat) -> OplaxNat:
    """Vertical composite, valid in any ambient: components compose as
    1-cells, constraints paste with associator corrections."""
    u, v = earlier, later
    if u.target is not v.source and u.target != v.source:
        raise ValueError("transformations are not vertically composable")
    f, g, h = u.source, u.target, v.target
    t = f.target
    comps = {a: t.compose1(v.components[a], u.components[a])
             for a in f.source.objects}
    cons = {}
    for w in f.source.one_cells():
        a, b = f.source.home1(w)
        fw, gw, hw = f.on_1(w), g.on_1(w), h.on_1(w)
        ua, ub = u.components[a], u.components[b]
        va, vb = v.components[a], v.components[b]
        cons[w] = t.vcomp(
            t.assoc(hw, va, ua),
            t.vcomp(
                t.whisker_right(v.constraints[w], ua),
                t.vcomp(
                    t.assoc_inv(vb, gw, ua),
                    t.vcomp(t.whisker_left(vb, u.constraints[w]),
                            t.assoc(vb, ub, fw)))))
    return OplaxNat(f"{v.name}.{u.name}", f, h, comps, cons)


# ---------------------------------------------------------------------------
# the strict setting: whiskering, interchange, strictness, costrictness

def _require_strict_setting(what, bicats=(), functors=()):
    for b in bicats:
        if not b.is_strict():
            raise UnsupportedSettingError(
                f"{what} is only defined over strict 2-categories; "
                f"{b.name} is not strict")
    for f in functors:
        if not classify(f).is_strict:
            raise UnsupportedSettingError(
                f"{what} is only defined along strict functors; "
                f"{f.name} is not strict")


def whisker_oplax_left(fun: LaxFunctor, u: OplaxNat) -> OplaxNat:
    """Apply a strict functor after both sides of u."""
    _require_strict_setting("whiskering", (u.source.source, u.source.target,
                                           fun.target), (fun,))
    comps = {a: fun.on_1(u.components[a]) for a in u.components}
    cons = {w: fun.on_2(u.constraints[w]) for w in u.constraints}
    return OplaxNat(f"{fun.name}.{u.name}", compose_lax(fun, u.source),
                    compose_lax(fun, u.target), comps, cons)


def whisker_oplax_right(u: OplaxNat, fun: LaxFunctor) -> OplaxNat:
    """Restrict u along a strict functor into its source."""
    _require_strict_setting("whiskering", (fun.source, u.source.source,
                                           u.source.target), (fun,))
    comps = {a: u.components[fun.object_map[a]] for a in fun.source.objects}
    cons = {w: u.constraints[fun.on_1(w)] for w in fun.source.one_cells()}
    return OplaxNat(f"{u.name}.{fun.name}", compose_lax(u.source, fun),
                    compose_lax(u.target, fun), comps, cons)


def interchange_check(beta: OplaxNat, alpha: OplaxNat) -> ValidationReport:
    """Compare the two horizontal composites of beta (the later
    transformation) with alpha, component by component and constraint by
    constraint.  The law famously fails in general: it holds for all alpha
    exactly when beta's constraints are identities, and for all beta exactly
    when alpha's components are."""
    f, g = alpha.source, alpha.target
    h, k = beta.source, beta.target
    if h.source != f.target:
        raise ValueError("beta's source 2-category must be alpha's target")
    _require_strict_setting("interchange",
                            (f.source, f.target, h.target), (f, g, h, k))
    rep = ValidationReport(f"interchange of {beta.name} with {alpha.name}")
    one = vcomp_oplax(whisker_oplax_left(k, alpha), whisker_oplax_right(beta, f))
    two = vcomp_oplax(whisker_oplax_right(beta, g), whisker_oplax_left(h, alpha))
    for a in sorted_ids(f.source.objects):
        if one.components[a] != two.components[a]:
            rep.add("interchange-component",
                    f"the two composites have different components at {a!r}", (a,))
    for w in f.source.one_cells():
        if one.constraints[w] != two.constraints[w]:
            rep.add("interchange-constraint",
                    f"the two composites have different constraints at {w!r}", (w,))
    return rep


def arrow_witness(b: FiniteBicategory, f) -> OplaxNat:
    """The universal probe for a 1-cell f: A -> B of a strict 2-category:
    a strict transformation between two functors out of the walking arrow,
    one constant at A, the other picking out f, with components (1_A, f)."""
    from .corpus import walking_arrow  # deferred: corpus imports this module

    _require_strict_setting("the arrow witness", (b,))
    wa = walking_arrow()
    a, bb = b.home1(f)
    ua, ub = b.unit[a], b.unit[bb]
    const = two_functor(f"const[{a!r}]", wa, b, {0: a, 1: a},
                        {w: ua for w in wa.one_cells()},
                        {c: b.id2(ua) for c in wa.two_cells()})
    u01 = ("le", 0, 1)
    pick = two_functor(f"pick[{f!r}]", wa, b, {0: a, 1: bb},
                       {("le", 0, 0): ua, u01: f, ("le", 1, 1): ub},
                       {("id", ("le", 0, 0)): b.id2(ua),
                        ("id", u01): b.id2(f),
                        ("id", ("le", 1, 1)): b.id2(ub)})
    cons = {("le", 0, 0): b.id2(ua), u01: b.id2(f), ("le", 1, 1): b.id2(f)}
    return OplaxNat(f"witness[{f!r}]", const, pick, {0: ua, 1: f}, cons)


@dataclass
class StrictnessVerdict:
    strict: bool
    witnesses: list      # 1-cells whose probe makes interchange fail

    @property
    def verdict(self):
        return "strict" if self.strict else "non-strict"


def strictness_by_witness(beta: OplaxNat) -> StrictnessVerdict:
    """Decide strictness of beta purely by running interchange against the
    arrow-witness probes, one per 1-cell of beta's source 2-category."""
    b = beta.source.source
    _require_strict_setting("strictness probing",
                            (b, beta.source.target), (beta.source, beta.target))
    bad = []
    for f in b.one_cells():
        if not interchange_check(beta, arrow_witness(b, f)).ok:
            bad.append(f)
    return StrictnessVerdict(not bad, bad)


# ---------------------------------------------------------------------------
# conversions with icons

def icon_as_oplax(icon: Icon) -> OplaxNat:
    """Pad an icon with unit components; the constraint at f becomes the
    component 2-cell conjugated by the unitors."""
    f, g = icon.source, icon.target
    t = f.target
    comps = {a: t.unit[f.object_map[a]] for a in f.source.objects}
    cons = {}
    for w in f.source.one_cells():
        fw, gw = f.on_1(w), g.on_1(w)
        cons[w] = t.vcomp(t.runit_inv(gw), t.vcomp(icon.at(w), t.lunit(fw)))
    return OplaxNat(f"oplax[{icon.name}]", f, g, comps, cons)


def oplax_is_icon(u: OplaxNat):
    """Strip an icon-shaped transformation (unit components) back to its
    icon; None when some component is not a unit 1-cell."""
    f, g = u.source, u.target
    t = f.target
    if not classify_oplax(u).icon:
        return None
    comps = {}
    for pair, hf in f.hom_functors.items():
        cells = {}
        for w in hf.object_map:
            fw, gw = f.on_1(w), g.on_1(w)
            cells[w] = t.vcomp(t.runit(gw), t.vcomp(u.constraints[w], t.lunit_inv(fw)))
        comps[pair] = NatTrans(f"strip{pair!r}", hf, g.hom_functors[pair], cells)
    return Icon(f"icon[{u.name}]", f, g, comps)


# ---------------------------------------------------------------------------
# enumeration and costrictness

def enumerate_oplax(f: LaxFunctor, g: LaxFunctor):
    """All oplax transformations f => g, exhaustively; tiny inputs only."""
    import itertools

    if f.source != g.source or f.target != g.target:
        return
    s, t = f.source, f.target
    objs = sorted_ids(s.objects)
    comp_opts = [sorted_ids(t.homs[(f.object_map[a], g.object_map[a])].objects)
                 for a in objs]
    if any(not opts for opts in comp_opts):
        return
    cells = list(s.one_cells())
    for picks in itertools.product(*comp_opts):
        comps = dict(zip(objs, picks))
        con_opts = []
        for w in cells:
            a, b = s.home1(w)
            src = t.compose1(comps[b], f.on_1(w))
            tgt = t.compose1(g.on_1(w), comps[a])
            con_opts.append(t.homs[t.home1(src)].hom(src, tgt))
        if any(not opts for opts in con_opts):
            continue
        for cons in itertools.product(*con_opts):
            cand = OplaxNat("enum", f, g, comps, dict(zip(cells, cons)))
            if validate_oplax(cand).ok:
                yield cand


DEFAULT_BATTERY_TARGET_NAMES = ("terminal", "walking-two-cell", "sigma-idem")


def battery_transformations(b: FiniteBicategory, target_names=None):
    """The costrictness battery: every oplax transformation between every
    pair of strict functors from b into each (small, strict) named corpus
    target, plus the crossing of b's cylinder.  Deterministic order."""
    from . import corpus
    from .cylinder import lax_cylinder
    from .laxfun import enumerate_two_functors

    names = target_names or DEFAULT_BATTERY_TARGET_NAMES
    out = []
    for name in names:
        tgt = corpus.get_bicategory(name)
        funs = list(enumerate_two_functors(b, tgt))
        for h in funs:
            for k in funs:
                out.extend(enumerate_oplax(h, k))
    out.append(lax_cylinder(b).crossing)
    return out


@dataclass
class CostrictVerdict:
    costrict: bool
    icon: Icon | None = None
    battery_checked: int = 0
    battery_failures: list = field(default_factory=list)
    refutation: object = None

    @property
    def verdict(self):
        return "costrict" if self.costrict else "not-costrict"


def is_costrict(u: OplaxNat, battery=None) -> CostrictVerdict:
    """Decide whether u behaves as an icon: interchange with u holds against
    every transformation on its other side.  Positive answers are certified
    by stripping to a validated icon and sweeping the battery; negative ones
    by an explicit cylinder refutation that replays as a failing interchange."""
    from .cylinder import costrict_refutation

    _require_strict_setting("costrictness",
                            (u.source.source, u.source.target),
                            (u.source, u.target))
    stripped = oplax_is_icon(u)
    if stripped is None or not validate_icon(stripped).ok:
        return CostrictVerdict(False, refutation=costrict_refutation(u))
    betas = battery if battery is not None else \
        battery_transformations(u.source.target)
    failures = []
    for beta in betas:
        rep = interchange_check(beta, u)
        if not rep.ok:
            failures.append((beta.name, rep.first().kind, rep.first().witness))
    return CostrictVerdict(not failures, icon=stripped,
                           battery_checked=len(betas), battery_failures=failures)
