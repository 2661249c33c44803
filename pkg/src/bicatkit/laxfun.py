"""Lax functors between finite bicategories.

A lax functor carries an object map, a functor between each pair of
hom-categories, a comparison 2-cell ``comp_constraints[(g, f)]`` from
``F(g) . F(f)`` to ``F(g.f)`` for every composable pair, and a comparison
``unit_constraints[A]`` from the target's unit at ``F(A)`` to ``F`` of the
source's unit.  Nothing is assumed invertible; ``classify`` reports how strict
a given functor actually is.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bicat import FiniteBicategory, MonoidalCategory, sigma_bicategory
from .catcore import Functor, compose_functors, enumerate_functors, validate_functor
from .report import ValidationReport, sorted_ids


@dataclass
class LaxFunctor:
    name: str
    source: FiniteBicategory
    target: FiniteBicategory
    object_map: dict        # object -> object
    hom_functors: dict      # (A, B) -> Functor hom(A,B) -> hom(FA, FB)
    comp_constraints: dict  # (g, f) -> 2-cell F(g).F(f) => F(g.f)
    unit_constraints: dict  # A -> 2-cell unit_{FA} => F(unit_A)

    def on_obj(self, a):
        return self.object_map[a]

    def on_1(self, f):
        return self.hom_functors[self.source.home1(f)].object_map[f]

    def on_2(self, c):
        return self.hom_functors[self.source.home2(c)].morphism_map[c]


def validate_lax_functor(fun: LaxFunctor) -> ValidationReport:
    rep = ValidationReport(f"lax functor {fun.name}")
    s, t = fun.source, fun.target
    tobj = set(t.objects)
    for a in sorted_ids(s.objects):
        x = fun.object_map.get(a)
        if x is None:
            rep.add("missing-object-image", f"no image for object {a!r}", (a,),
                    structural=True)
        elif x not in tobj:
            rep.add("dangling-object-image", f"image of {a!r} is not a target object",
                    (a,), structural=True)
    if rep.structural_failure:
        return rep

    for a in sorted_ids(s.objects):
        for b in sorted_ids(s.objects):
            hf = fun.hom_functors.get((a, b))
            if hf is None:
                rep.add("missing-hom-functor", f"no hom functor at {(a, b)!r}", (a, b),
                        structural=True)
                continue
            rebuilt = Functor(f"{fun.name}({a},{b})", s.homs[(a, b)],
                              t.homs[(fun.object_map[a], fun.object_map[b])],
                              hf.object_map, hf.morphism_map)
            sub = validate_functor(rebuilt)
            for v in sub.violations:
                rep.add("hom-functor:" + v.kind, f"hom functor {(a, b)!r}: {v.message}",
                        v.witness, v.structural)
    if rep.violations:
        return rep

    pairs = [(g, f) for f in s.one_cells() for g in s.one_cells()
             if s.home1(f)[1] == s.home1(g)[0]]
    for g, f in pairs:
        a = s.home1(f)[0]
        c_ = s.home1(g)[1]
        cat = t.homs[(fun.object_map[a], fun.object_map[c_])]
        cell = fun.comp_constraints.get((g, f))
        if cell is None:
            rep.add("missing-comp-constraint", f"no comparison for the pair ({g!r}, {f!r})",
                    (g, f), structural=True)
            continue
        want = (t.compose1(fun.on_1(g), fun.on_1(f)), fun.on_1(s.compose1(g, f)))
        if cell not in cat.morphisms:
            rep.add("dangling-comp-constraint",
                    f"comparison at ({g!r}, {f!r}) is not a 2-cell of its hom", (g, f),
                    structural=True)
        elif cat.morphisms[cell] != want:
            rep.add("comp-constraint-endpoints",
                    f"comparison at ({g!r}, {f!r}) must run F{g!r}.F{f!r} => F(g.f)",
                    (g, f))
    for a in sorted_ids(s.objects):
        fa = fun.object_map[a]
        cat = t.homs[(fa, fa)]
        cell = fun.unit_constraints.get(a)
        if cell is None:
            rep.add("missing-unit-constraint", f"no unit comparison at {a!r}", (a,),
                    structural=True)
        elif cell not in cat.morphisms:
            rep.add("dangling-unit-constraint",
                    f"unit comparison at {a!r} is not a 2-cell of its hom", (a,),
                    structural=True)
        elif cat.morphisms[cell] != (t.unit[fa], fun.on_1(s.unit[a])):
            rep.add("unit-constraint-endpoints",
                    f"unit comparison at {a!r} must run from the target unit to the "
                    f"image of the source unit", (a,))
    if rep.violations:
        return rep

    # naturality of the comparison in both slots at once
    for d in s.two_cells():
        for c in s.two_cells():
            if s.home2(c)[1] != s.home2(d)[0]:
                continue
            lhs = t.vcomp(fun.comp_constraints[(s.tgt2(d), s.tgt2(c))],
                          t.hcomp(fun.on_2(d), fun.on_2(c)))
            rhs = t.vcomp(fun.on_2(s.hcomp(d, c)),
                          fun.comp_constraints[(s.src2(d), s.src2(c))])
            if lhs != rhs:
                rep.add("comp-constraint-naturality",
                        f"comparison is not natural under ({d!r}, {c!r})", (d, c))

    for g, f in pairs:
        for h in s.one_cells():
            if s.home1(h)[0] != s.home1(g)[1]:
                continue
            fh, fg, ff = fun.on_1(h), fun.on_1(g), fun.on_1(f)
            lhs = t.vcomp(fun.comp_constraints[(h, s.compose1(g, f))],
                          t.vcomp(t.whisker_left(fh, fun.comp_constraints[(g, f)]),
                                  t.assoc(fh, fg, ff)))
            rhs = t.vcomp(fun.on_2(s.assoc(h, g, f)),
                          t.vcomp(fun.comp_constraints[(s.compose1(h, g), f)],
                                  t.whisker_right(fun.comp_constraints[(h, g)], ff)))
            if lhs != rhs:
                rep.add("comp-coherence",
                        f"the two comparison pastings disagree at ({h!r}, {g!r}, {f!r})",
                        (h, g, f))

    for f in s.one_cells():
        a, b = s.home1(f)
        ff = fun.on_1(f)
        lhs = t.lunit(ff)
        rhs = t.vcomp(fun.on_2(s.lunit(f)),
                      t.vcomp(fun.comp_constraints[(s.unit[b], f)],
                              t.whisker_right(fun.unit_constraints[b], ff)))
        if lhs != rhs:
            rep.add("left-unit-coherence", f"left unit axiom fails at {f!r}", (f,))
        lhs = t.runit(ff)
        rhs = t.vcomp(fun.on_2(s.runit(f)),
                      t.vcomp(fun.comp_constraints[(f, s.unit[a])],
                              t.whisker_left(ff, fun.unit_constraints[a])))
        if lhs != rhs:
            rep.add("right-unit-coherence", f"right unit axiom fails at {f!r}", (f,))
    return rep


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class LaxClass:
    comp_identity: bool
    comp_invertible: bool
    unit_identity: bool
    unit_invertible: bool

    @property
    def is_strict(self):
        return self.comp_identity and self.unit_identity

    @property
    def is_normal(self):
        """Unit comparisons are identities and the rest is invertible."""
        return self.unit_identity and self.comp_invertible

    @property
    def is_homomorphism(self):
        return self.comp_invertible and self.unit_invertible

    @property
    def label(self):
        if self.is_strict:
            return "strict"
        if self.is_normal:
            return "normal homomorphism"
        if self.is_homomorphism:
            return "homomorphism"
        return "lax"


def classify(fun: LaxFunctor) -> LaxClass:
    t = fun.target

    def is_id(cell):
        return cell == t.id2(t.src2(cell))

    comps = list(fun.comp_constraints.values())
    units = list(fun.unit_constraints.values())
    return LaxClass(
        comp_identity=all(is_id(c) for c in comps),
        comp_invertible=all(t.inv2(c) is not None for c in comps),
        unit_identity=all(is_id(c) for c in units),
        unit_invertible=all(t.inv2(c) is not None for c in units),
    )


# ---------------------------------------------------------------------------
# identity / composition / builders

def identity_lax(b: FiniteBicategory) -> LaxFunctor:
    homs = {}
    for pair in b.homs:
        cat = b.homs[pair]
        homs[pair] = Functor(f"1{pair!r}", cat, cat,
                             {x: x for x in cat.objects},
                             {m: m for m in cat.morphisms})
    comp = {}
    for f in b.one_cells():
        for g in b.one_cells():
            if b.home1(f)[1] == b.home1(g)[0]:
                comp[(g, f)] = b.id2(b.compose1(g, f))
    unit = {a: b.id2(b.unit[a]) for a in b.objects}
    return LaxFunctor(f"1_{b.name}", b, b,
                      {a: a for a in b.objects}, homs, comp, unit)


def compose_lax(later: LaxFunctor, earlier: LaxFunctor) -> LaxFunctor:
    """The composite "later after earlier"; comparisons are pasted, and the
    result of pasting two lax functors is again lax on the nose."""
    f, g = earlier, later
    t = g.target
    omap = {a: g.object_map[f.object_map[a]] for a in f.source.objects}
    homs = {}
    for (a, b_) in f.hom_functors:
        inner = f.hom_functors[(a, b_)]
        outer = g.hom_functors[(f.object_map[a], f.object_map[b_])]
        homs[(a, b_)] = compose_functors(outer, inner)
    comp = {}
    for (x, y), cell in f.comp_constraints.items():
        comp[(x, y)] = t.vcomp(g.on_2(cell),
                               g.comp_constraints[(f.on_1(x), f.on_1(y))])
    unit = {}
    for a, cell in f.unit_constraints.items():
        unit[a] = t.vcomp(g.on_2(cell), g.unit_constraints[f.object_map[a]])
    return LaxFunctor(f"{g.name}.{f.name}", f.source, g.target, omap, homs, comp, unit)


def two_functor(name, s: FiniteBicategory, t: FiniteBicategory,
                object_map, cell1_map, cell2_map) -> LaxFunctor:
    """A strict functor of bicategories given by raw cell maps.  Raises if the
    maps are not strictly compatible with units and composition — use a
    hand-built LaxFunctor when genuine comparison cells are needed."""
    homs = {}
    for a in s.objects:
        for b_ in s.objects:
            cat = s.homs[(a, b_)]
            homs[(a, b_)] = Functor(
                f"{name}({a},{b_})", cat,
                t.homs[(object_map[a], object_map[b_])],
                {x: cell1_map[x] for x in cat.objects},
                {m: cell2_map[m] for m in cat.morphisms})
    comp = {}
    for f in s.one_cells():
        for g in s.one_cells():
            if s.home1(f)[1] != s.home1(g)[0]:
                continue
            image = cell1_map[s.compose1(g, f)]
            if t.compose1(cell1_map[g], cell1_map[f]) != image:
                raise ValueError(f"{name} does not strictly preserve the composite "
                                 f"of ({g!r}, {f!r})")
            comp[(g, f)] = t.id2(image)
    unit = {}
    for a in s.objects:
        if cell1_map[s.unit[a]] != t.unit[object_map[a]]:
            raise ValueError(f"{name} does not strictly preserve the unit at {a!r}")
        unit[a] = t.id2(t.unit[object_map[a]])
    return LaxFunctor(name, s, t, dict(object_map), homs, comp, unit)


def enumerate_two_functors(s: FiniteBicategory, t: FiniteBicategory):
    """All strict functors s -> t, for finite strict search settings."""
    objs = sorted_ids(s.objects)
    pairs = [(a, b) for a in objs for b in objs]
    for images in itertools.product(sorted_ids(t.objects), repeat=len(objs)):
        omap = dict(zip(objs, images))
        per_pair = []
        ok = True
        for (a, b_) in pairs:
            cands = list(enumerate_functors(s.homs[(a, b_)],
                                            t.homs[(omap[a], omap[b_])]))
            if s.homs[(a, b_)].objects and not cands:
                ok = False
                break
            per_pair.append((cands if s.homs[(a, b_)].objects else [None]))
        if not ok:
            continue
        for combo in itertools.product(*per_pair):
            cell1, cell2 = {}, {}
            for (a, b_), hf in zip(pairs, combo):
                if hf is None:
                    continue
                cell1.update(hf.object_map)
                cell2.update(hf.morphism_map)
            if any(cell1[s.unit[a]] != t.unit[omap[a]] for a in objs):
                continue
            good = True
            for f in s.one_cells():
                for g in s.one_cells():
                    if s.home1(f)[1] != s.home1(g)[0]:
                        continue
                    if t.compose1(cell1[g], cell1[f]) != cell1[s.compose1(g, f)]:
                        good = False
                        break
                if not good:
                    break
            if good:
                for d in s.two_cells():
                    for c in s.two_cells():
                        if s.home2(c)[1] != s.home2(d)[0]:
                            continue
                        if t.hcomp(cell2[d], cell2[c]) != cell2[s.hcomp(d, c)]:
                            good = False
                            break
                    if not good:
                        break
            if good:
                yield two_functor("enum", s, t, omap, cell1, cell2)


def enumerate_lax_functors(s: FiniteBicategory, t: FiniteBicategory):
    """All lax functors s -> t.  Exhaustive; meant for very small instances."""
    objs = sorted_ids(s.objects)
    pairs = [(a, b) for a in objs for b in objs]
    comp_pairs = [(g, f) for f in s.one_cells() for g in s.one_cells()
                  if s.home1(f)[1] == s.home1(g)[0]]
    for images in itertools.product(sorted_ids(t.objects), repeat=len(objs)):
        omap = dict(zip(objs, images))
        per_pair = []
        dead = False
        for (a, b_) in pairs:
            cands = list(enumerate_functors(s.homs[(a, b_)],
                                            t.homs[(omap[a], omap[b_])]))
            if s.homs[(a, b_)].objects and not cands:
                dead = True
                break
            per_pair.append(cands if s.homs[(a, b_)].objects else [None])
        if dead:
            continue
        for combo in itertools.product(*per_pair):
            homs = {}
            for (a, b_), hf in zip(pairs, combo):
                cat = s.homs[(a, b_)]
                if hf is None:
                    homs[(a, b_)] = Functor("empty", cat, t.homs[(omap[a], omap[b_])],
                                            {}, {})
                else:
                    homs[(a, b_)] = hf
            draft = LaxFunctor("enum", s, t, omap, homs, {}, {})
            comp_opts = []
            for g, f in comp_pairs:
                a = s.home1(f)[0]
                c_ = s.home1(g)[1]
                cat = t.homs[(omap[a], omap[c_])]
                comp_opts.append(cat.hom(t.compose1(draft.on_1(g), draft.on_1(f)),
                                         draft.on_1(s.compose1(g, f))))
            unit_opts = []
            for a in objs:
                cat = t.homs[(omap[a], omap[a])]
                unit_opts.append(cat.hom(t.unit[omap[a]], draft.on_1(s.unit[a])))
            if any(not o for o in comp_opts) or any(not o for o in unit_opts):
                continue
            for comp_pick in itertools.product(*comp_opts):
                for unit_pick in itertools.product(*unit_opts):
                    cand = LaxFunctor("enum", s, t, omap, homs,
                                      dict(zip(comp_pairs, comp_pick)),
                                      dict(zip(objs, unit_pick)))
                    if validate_lax_functor(cand).ok:
                        yield cand


# ---------------------------------------------------------------------------
# monoidal functors, as lax functors between one-object deloopings

@dataclass
class MonoidalFunctor:
    name: str
    source: MonoidalCategory
    target: MonoidalCategory
    functor: Functor        # between the underlying categories
    comp: dict              # (x, y) -> morphism F(x) tensor F(y) -> F(x tensor y)
    unit: object            # morphism: target unit object -> F(source unit object)


def sigma_functor(mf: MonoidalFunctor, source_bicat=None, target_bicat=None) -> LaxFunctor:
    """Transport a (lax) monoidal functor to a lax functor of deloopings."""
    s = source_bicat or sigma_bicategory(mf.source)
    t = target_bicat or sigma_bicategory(mf.target)
    star_s, star_t = s.objects[0], t.objects[0]
    hom = Functor(f"{mf.name}-hom", s.homs[(star_s, star_s)],
                  t.homs[(star_t, star_t)],
                  dict(mf.functor.object_map), dict(mf.functor.morphism_map))
    return LaxFunctor(f"sigma[{mf.name}]", s, t, {star_s: star_t},
                      {(star_s, star_s): hom}, dict(mf.comp), {star_s: mf.unit})
