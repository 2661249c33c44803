"""Simplices in a bicategory and the truncated 2-nerve.

An n-simplex is a normal homomorphism out of the linear order 0 < ... < n
(viewed as a locally discrete 2-category): a choice of objects, of 1-cells
between them, and of invertible comparison 2-cells for the genuinely
composite triangles; the degenerate triangles carry unitors and are not free
data.  Morphisms of simplices are icons, so each nerve level is a finite
category, and reindexing along a monotone map is just composition of lax
functors — faces and degeneracies come out as functors between levels, and
the simplicial identities can be checked as equalities of functors.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from .bicat import FiniteBicategory, from_category
from .catcore import Functor, FiniteCategory, chain_category, compose_functors
from .icon import Icon, enumerate_icons, identity_icon, whisker_icon_right
from .laxfun import LaxFunctor, classify, two_functor, compose_lax, validate_lax_functor
from .report import ValidationReport, sorted_ids


@functools.lru_cache(maxsize=None)
def ordinal_as_bicategory(n: int) -> FiniteBicategory:
    return from_category(chain_category(n), f"ordinal-{n}")


@dataclass
class SimplexData:
    """An n-simplex: objects at the vertices, 1-cells over the edges (i < j),
    and an invertible comparison 2-cell over each triangle i < j < k, running
    from the composite edge(j,k) . edge(i,j) to edge(i,k)."""
    n: int
    base: FiniteBicategory
    objects: dict        # i -> object
    cells: dict          # (i, j) -> 1-cell, i < j
    constraints: dict    # (i, j, k) -> invertible 2-cell, i < j < k

    def cell(self, i, j):
        if i == j:
            return self.base.unit[self.objects[i]]
        return self.cells[(i, j)]

    def key(self):
        return ("sx", self.n, tuple(self.objects[i] for i in range(self.n + 1)),
                tuple(sorted(self.cells.items())),
                tuple(sorted(self.constraints.items())))


def as_lax_functor(s: SimplexData) -> LaxFunctor:
    """The normal homomorphism the simplex data describes: units map to
    units with identity constraints, degenerate triangles to unitors."""
    src = ordinal_as_bicategory(s.n)
    b = s.base
    homs = {}
    for i in range(s.n + 1):
        for j in range(s.n + 1):
            cat = src.homs[(i, j)]
            omap = {f: s.cell(i, j) for f in cat.objects}
            mmap = {m: b.id2(s.cell(i, j)) for m in cat.morphisms}
            pair_tgt = (s.objects[i], s.objects[j])
            homs[(i, j)] = Functor(f"simplex({i},{j})", cat,
                                   b.homs[pair_tgt], omap, mmap)
    comp = {}
    for i in range(s.n + 1):
        for j in range(i, s.n + 1):
            for k in range(j, s.n + 1):
                pair = (("le", j, k), ("le", i, j))
                if i < j < k:
                    comp[pair] = s.constraints[(i, j, k)]
                elif i == j and j < k:
                    comp[pair] = b.runit(s.cell(j, k))
                elif i < j and j == k:
                    comp[pair] = b.lunit(s.cell(i, j))
                else:
                    comp[pair] = b.lunit(s.cell(i, i))
    units = {i: b.id2(b.unit[s.objects[i]]) for i in range(s.n + 1)}
    return LaxFunctor(f"simplex{s.key()[1:3]!r}", src, b,
                      dict(s.objects), homs, comp, units)


def simplex_from_lax(fun: LaxFunctor) -> SimplexData:
    """Read simplex data back off a normal homomorphism out of an ordinal."""
    n = max(fun.source.objects)
    objects = {i: fun.object_map[i] for i in range(n + 1)}
    cells = {(i, j): fun.on_1(("le", i, j))
             for i in range(n + 1) for j in range(i + 1, n + 1)}
    cons = {(i, j, k): fun.comp_constraints[(("le", j, k), ("le", i, j))]
            for i in range(n + 1) for j in range(i + 1, n + 1)
            for k in range(j + 1, n + 1)}
    return SimplexData(n, fun.target, objects, cells, cons)


def validate_simplex(s: SimplexData) -> ValidationReport:
    rep = ValidationReport(f"simplex over {s.base.name}")
    fun = as_lax_functor(s)
    inner = validate_lax_functor(fun)
    for v in inner.violations:
        rep.add(v.kind, v.message, v.witness, v.structural)
    if inner.ok:
        cls = classify(fun)
        if not cls.is_normal:
            rep.add("not-normal", "simplex data must give a normal homomorphism")
        for key, c in s.constraints.items():
            if s.base.inv2(c) is None:
                rep.add("constraint-not-invertible",
                        f"comparison at {key} is not invertible", key)
    return rep


def enumerate_simplices(b: FiniteBicategory, n: int):
    """All n-simplices in b, by exhaustive choice of vertices, edges, and
    invertible triangle comparisons, keeping the ones that cohere."""
    idx = list(range(n + 1))
    edges = [(i, j) for i in idx for j in idx if i < j]
    tris = [(i, j, k) for i in idx for j in idx for k in idx if i < j < k]
    for objs in itertools.product(sorted_ids(b.objects), repeat=n + 1):
        objects = dict(enumerate(objs))
        cell_opts = [sorted_ids(b.homs[(objs[i], objs[j])].objects)
                     for (i, j) in edges]
        if any(not o for o in cell_opts):
            continue
        for picks in itertools.product(*cell_opts):
            cells = dict(zip(edges, picks))
            con_opts = []
            for (i, j, k) in tris:
                cat = b.homs[(objs[i], objs[k])]
                src = b.compose1(cells[(j, k)], cells[(i, j)])
                opts = [c for c in cat.hom(src, cells[(i, k)])
                        if cat.iso_inverse(c) is not None]
                con_opts.append(opts)
            if any(not o for o in con_opts):
                continue
            for cons in itertools.product(*con_opts):
                s = SimplexData(n, b, objects, cells, dict(zip(tris, cons)))
                if validate_simplex(s).ok:
                    yield s


def ordinal_map_functor(theta, n: int) -> LaxFunctor:
    """A monotone map [m] -> [n], given as the tuple of its values, as a
    strict functor between the ordinal 2-categories."""
    m = len(theta) - 1
    if any(theta[i] > theta[i + 1] for i in range(m)) or \
            any(not 0 <= v <= n for v in theta):
        raise ValueError(f"{theta!r} is not a monotone map into [{n}]")
    src, tgt = ordinal_as_bicategory(m), ordinal_as_bicategory(n)
    cell1 = {f: ("le", theta[f[1]], theta[f[2]]) for f in src.one_cells()}
    cell2 = {c: ("id", cell1[c[1]]) for c in src.two_cells()}
    return two_functor(f"ordmap{tuple(theta)!r}", src, tgt,
                       {i: theta[i] for i in range(m + 1)}, cell1, cell2)


def reindex_simplex(s: SimplexData, theta) -> SimplexData:
    """Restrict a simplex along a monotone map; faces and degeneracies are
    the instances at the coface and codegeneracy maps."""
    return simplex_from_lax(compose_lax(as_lax_functor(s),
                                        ordinal_map_functor(theta, s.n)))


def enumerate_nerve_morphisms(s1: SimplexData, s2: SimplexData):
    """All simplex morphisms s1 -> s2: icons between the homomorphisms."""
    yield from enumerate_icons(as_lax_functor(s1), as_lax_functor(s2))


# ---------------------------------------------------------------------------
# the truncated 2-nerve

def _icon_flat(icon: Icon, n: int):
    """The component 2-cells of a simplex morphism, in edge order."""
    return tuple(icon.at(("le", i, j))
                 for i in range(n + 1) for j in range(i, n + 1))


def _level_category(b: FiniteBicategory, k: int, sims):
    keys = {}
    for s in sims:
        keys[s.key()] = s
    objects = sorted_ids(keys)
    morphisms, identity, table = {}, {}, {}
    arrows = {}   # mid -> (src simplex, tgt simplex, flat cells)
    for sk in objects:
        for tk in objects:
            for icon in enumerate_nerve_morphisms(keys[sk], keys[tk]):
                flat = _icon_flat(icon, k)
                mid = ("ic", sk, tk, flat)
                morphisms[mid] = (sk, tk)
                arrows[mid] = flat
        identity[sk] = ("ic", sk, sk,
                        _icon_flat(identity_icon(as_lax_functor(keys[sk])), k))
    for m1, (s1, t1) in morphisms.items():
        for m2, (s2, t2) in morphisms.items():
            if t1 != s2:
                continue
            flat = tuple(b.vcomp(c2, c1)
                         for c1, c2 in zip(arrows[m1], arrows[m2]))
            table[(m1, m2)] = ("ic", s1, t2, flat)
    cat = FiniteCategory(f"nerve-{k}[{b.name}]", objects, morphisms,
                         identity, table)
    return cat, keys


def _level_functor(nerve, k: int, k2: int, theta, name):
    src_cat, src_sims = nerve.levels[k], nerve.simplices[k]
    tgt_cat = nerve.levels[k2]
    omap, mmap = {}, {}
    for sk, s in src_sims.items():
        omap[sk] = reindex_simplex(s, theta).key()
    for mid in src_cat.morphisms:
        _, sk, tk, flat = mid
        # recover the icon behind the morphism id, then transport it
        icon = None
        for cand in enumerate_nerve_morphisms(src_sims[sk], src_sims[tk]):
            if _icon_flat(cand, k) == flat:
                icon = cand
                break
        moved = whisker_icon_right(icon, ordinal_map_functor(theta, k))
        mmap[mid] = ("ic", omap[sk], omap[tk], _icon_flat(moved, k2))
    return Functor(name, src_cat, tgt_cat, omap, mmap)


@dataclass
class TwoNerve:
    base: FiniteBicategory
    truncation: int
    levels: dict                        # k -> FiniteCategory
    simplices: dict                     # k -> key -> SimplexData
    face: dict = field(default_factory=dict)        # (k, i): level k -> k-1
    degeneracy: dict = field(default_factory=dict)  # (k, i): level k -> k+1
    report: ValidationReport | None = None


def _functors_equal(f: Functor, g: Functor) -> bool:
    return f.object_map == g.object_map and f.morphism_map == g.morphism_map


def two_nerve(b: FiniteBicategory, truncation: int = 3) -> TwoNerve:
    """Levels 0..truncation of the simplex categories, with face and
    degeneracy functors and a certification report for every simplicial
    identity expressible inside the truncation."""
    if not 0 <= truncation <= 4:
        raise ValueError("truncation must be between 0 and 4")
    nerve = TwoNerve(b, truncation, {}, {})
    for k in range(truncation + 1):
        cat, sims = _level_category(b, k, enumerate_simplices(b, k))
        nerve.levels[k], nerve.simplices[k] = cat, sims

    def coface(k, i):      # the injection [k-1] -> [k] missing i
        return tuple(v if v < i else v + 1 for v in range(k))

    def codegeneracy(k, i):  # the surjection [k+1] -> [k] hitting i twice
        return tuple(v if v <= i else v - 1 for v in range(k + 2))

    for k in range(1, truncation + 1):
        for i in range(k + 1):
            nerve.face[(k, i)] = _level_functor(
                nerve, k, k - 1, coface(k, i), f"face({k},{i})")
    for k in range(truncation):
        for i in range(k + 1):
            nerve.degeneracy[(k, i)] = _level_functor(
                nerve, k, k + 1, codegeneracy(k, i), f"degeneracy({k},{i})")

    rep = ValidationReport(f"2-nerve of {b.name} to level {truncation}")
    t = truncation
    for k in range(2, t + 1):
        for j in range(k + 1):
            for i in range(j):
                lhs = compose_functors(nerve.face[(k - 1, i)], nerve.face[(k, j)])
                rhs = compose_functors(nerve.face[(k - 1, j - 1)], nerve.face[(k, i)])
                if not _functors_equal(lhs, rhs):
                    rep.add("face-face", f"d{i} d{j} != d{j - 1} d{i}", (k, i, j))
    for k in range(t - 1):
        for j in range(k + 1):
            for i in range(j + 1):
                lhs = compose_functors(nerve.degeneracy[(k + 1, i)],
                                       nerve.degeneracy[(k, j)])
                rhs = compose_functors(nerve.degeneracy[(k + 1, j + 1)],
                                       nerve.degeneracy[(k, i)])
                if not _functors_equal(lhs, rhs):
                    rep.add("degeneracy-degeneracy",
                            f"s{i} s{j} != s{j + 1} s{i}", (k, i, j))
    for k in range(t):
        for j in range(k + 1):
            for i in range(k + 2):
                lhs = compose_functors(nerve.face[(k + 1, i)],
                                       nerve.degeneracy[(k, j)])
                if i == j or i == j + 1:
                    ident = Functor("id", nerve.levels[k], nerve.levels[k],
                                    {o: o for o in nerve.levels[k].objects},
                                    {m: m for m in nerve.levels[k].morphisms})
                    if not _functors_equal(lhs, ident):
                        rep.add("face-degeneracy", f"d{i} s{j} != id", (k, i, j))
                elif i < j:
                    rhs = compose_functors(nerve.degeneracy[(k - 1, j - 1)],
                                           nerve.face[(k, i)]) if k else None
                    if rhs is None or not _functors_equal(lhs, rhs):
                        rep.add("face-degeneracy",
                                f"d{i} s{j} != s{j - 1} d{i}", (k, i, j))
                else:
                    rhs = compose_functors(nerve.degeneracy[(k - 1, j)],
                                           nerve.face[(k, i - 1)]) if k else None
                    if rhs is None or not _functors_equal(lhs, rhs):
                        rep.add("face-degeneracy",
                                f"d{i} s{j} != s{j} d{i - 1}", (k, i, j))
    nerve.report = rep
    return nerve


def ordinal_inclusion_check(max_n: int = 3) -> ValidationReport:
    """The embedding of the linear orders into 2-categories is as faithful as
    it looks: strict functors between ordinals are exactly the monotone maps,
    and there are no simplex morphisms between distinct ones."""
    import math

    from .laxfun import enumerate_two_functors

    rep = ValidationReport(f"ordinal inclusion to [{max_n}]")
    for m in range(max_n + 1):
        for n in range(max_n + 1):
            src, tgt = ordinal_as_bicategory(m), ordinal_as_bicategory(n)
            found = list(enumerate_two_functors(src, tgt))
            want = math.comb(n + m + 1, m + 1)
            if len(found) != want:
                rep.add("functor-count",
                        f"[{m}] -> [{n}]: {len(found)} functors, "
                        f"expected {want}", (m, n))
            for f in found:
                for g in found:
                    icons = list(enumerate_icons(f, g))
                    same = f.object_map == g.object_map and all(
                        f.on_1(w) == g.on_1(w) for w in src.one_cells())
                    want_icons = 1 if same else 0
                    if len(icons) != want_icons:
                        rep.add("icon-count",
                                f"[{m}] -> [{n}]: unexpected icon count "
                                f"between {f.name} and {g.name}", (m, n))
    return rep
