"""The category whose objects are the wide subcategories of a module category.

Objects are wide subcategories; a morphism out of W is a formal symbol
carrying a basic support tau-rigid object T of C(W), with target the
associated wide subcategory of T inside W.  Composition pulls the second
label back through the inverse reduction bijection and takes the direct sum.
Irreducible morphisms are exactly those with an indecomposable label,
equivalently those whose target drops the rank by one; both readings are
computed and cross-checked on every query.

Exports render the irreducible morphisms as a labelled graph: each label is
shown by its module part, and the pair of morphisms attached to an
Ext-projective summand (the module and its shift have the same image) is
drawn as a single doubled edge.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .context import Context
from .errors import NotComposable, WidecatError
from .reduction import f_map, wide_of
from .taurigid import (CObject, ZERO_COBJECT, WideSubcategory,
                       ext_projective_ids, full_subcategory, strigid_objects,
                       wide_rank)


@dataclass(frozen=True)
class WideCatMorphism:
    source: WideSubcategory
    target: WideSubcategory
    label: CObject

    @property
    def is_identity(self) -> bool:
        return self.label.is_zero

    def describe(self, ctx: Context) -> str:
        return (f"g[{self.label.describe(ctx)}]: {self.source.describe(ctx)}"
                f" -> {self.target.describe(ctx)}")


def morphism(ctx: Context, w: WideSubcategory, label: CObject) -> WideCatMorphism:
    """The morphism out of W carrying the given support tau-rigid label."""
    return WideCatMorphism(w, wide_of(ctx, w, label), label)


def identity_of(w: WideSubcategory) -> WideCatMorphism:
    return WideCatMorphism(w, w, ZERO_COBJECT)


def enumerate_wide_subcategories(ctx: Context) -> list[WideSubcategory]:
    """All wide subcategories, as images of support tau-rigid objects.

    Sorted by descending rank (member count breaking ties by key) so the
    whole module category comes first and the zero subcategory last.
    """
    if "wides" in ctx.memo:
        return list(ctx.memo["wides"])
    full = full_subcategory(ctx)
    seen = {wide_of(ctx, full, u) for u in strigid_objects(ctx, full)}
    out = sorted(seen, key=lambda w: (-len(w.key), w.key))
    ctx.memo["wides"] = tuple(out)
    return out


class WideCategory:
    """Materialized objects, Hom-sets, ranks, and composition of the category."""

    def __init__(self, ctx: Context, drop_zero_object: bool = False):
        self.ctx = ctx
        self.drop_zero_object = drop_zero_object
        self.objects = [w for w in enumerate_wide_subcategories(ctx)
                        if w.members or not drop_zero_object]
        self.rank = {w.key: wide_rank(ctx, w) for w in self.objects}
        self._homs: dict[tuple, list[WideCatMorphism]] = {}
        self._compose_memo: dict[tuple, WideCatMorphism] = {}
        for w in self.objects:
            for u in strigid_objects(ctx, w):
                m = morphism(ctx, w, u)
                if drop_zero_object and not m.target.members:
                    continue
                self._homs.setdefault((w.key, m.target.key), []).append(m)

    def object_index(self, w: WideSubcategory) -> int:
        return self.objects.index(w)

    def hom_set(self, w1: WideSubcategory, w2: WideSubcategory
                ) -> list[WideCatMorphism]:
        return list(self._homs.get((w1.key, w2.key), []))

    def morphisms_from(self, w: WideSubcategory) -> list[WideCatMorphism]:
        out = []
        for w2 in self.objects:
            out.extend(self.hom_set(w, w2))
        return out

    def all_morphisms(self) -> list[WideCatMorphism]:
        out = []
        for w in self.objects:
            out.extend(self.morphisms_from(w))
        return out

    def compose(self, b: WideCatMorphism, a: WideCatMorphism) -> WideCatMorphism:
        """b after a.  The label is label(a) plus the pullback of label(b)."""
        if a.target != b.source:
            raise NotComposable(
                "target of the first morphism is not the source of the second")
        memo_key = (a.source.key, a.label, b.label)
        if memo_key in self._compose_memo:
            return self._compose_memo[memo_key]
        pulled = f_map(self.ctx, a.source, a.label, b.label)
        out = morphism(self.ctx, a.source, a.label.union(pulled))
        if out.target != b.target:
            raise WidecatError(
                "composition landed outside the expected target")
        self._compose_memo[memo_key] = out
        return out

    def corank(self, m: WideCatMorphism) -> int:
        return self.rank[m.source.key] - self.rank[m.target.key]

    def is_irreducible(self, m: WideCatMorphism) -> bool:
        """Indecomposable label; cross-checked against the rank drop."""
        by_label = m.label.delta == 1
        by_corank = self.corank(m) == 1
        if (self.corank(m) == m.label.delta) is False:
            raise WidecatError(
                "rank drop disagrees with the number of label summands")
        if by_label != by_corank:
            raise WidecatError(
                "irreducibility readings disagree (label vs corank)")
        return by_label


# ---------------------------------------------------------------------------
# graph export


def _vertex_name(ctx: Context, w: WideSubcategory) -> str:
    if not w.members:
        return "0"
    return "{" + ",".join(ctx.label(i) for i in w.key) + "}"


def _irreducible_edges(cat: WideCategory) -> list[dict]:
    """Irreducible morphisms grouped into plain and doubled edges.

    For each Ext-projective summand P of W the two morphisms labelled P and
    P[1] share their target and are reported as one edge with doubled=True.
    """
    ctx = cat.ctx
    edges = []
    for w in cat.objects:
        projs = set(ext_projective_ids(ctx, w))
        for m in cat.morphisms_from(w):
            if not cat.is_irreducible(m):
                continue
            if m.label.shifts:
                continue  # merged into the doubled edge of the module partner
            i = m.label.mods[0]
            edges.append({
                "source": _vertex_name(ctx, m.source),
                "target": _vertex_name(ctx, m.target),
                "label": ctx.label(i),
                "doubled": i in projs,
            })
    edges.sort(key=lambda e: (e["source"], e["target"], e["label"]))
    return edges


def category_json(cat: WideCategory) -> str:
    """Deterministic JSON: objects (key, rank, members) and all morphisms."""
    ctx = cat.ctx
    objects = [{
        "key": list(w.key),
        "members": [ctx.label(i) for i in w.key],
        "rank": cat.rank[w.key],
    } for w in cat.objects]
    morphisms = []
    for w in cat.objects:
        for m in cat.morphisms_from(w):
            morphisms.append({
                "source": cat.object_index(m.source),
                "target": cat.object_index(m.target),
                "label": [{"id": i, "name": ctx.label(i), "shift": False}
                          for i in m.label.mods] +
                         [{"id": p, "name": ctx.label(p), "shift": True}
                          for p in m.label.shifts],
                "irreducible": cat.is_irreducible(m),
            })
    morphisms.sort(key=lambda m: (m["source"], m["target"],
                                  json.dumps(m["label"], sort_keys=True)))
    doc = {"objects": objects, "morphisms": morphisms,
           "edges": _irreducible_edges(cat)}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def category_dot(cat: WideCategory) -> str:
    """DOT graph of the irreducible morphisms, ranks laid out in rows."""
    ctx = cat.ctx
    names = {w.key: _vertex_name(ctx, w) for w in cat.objects}
    ids = {w.key: f"w{k}" for k, w in enumerate(cat.objects)}
    lines = ["digraph wide_subcategories {",
             '  rankdir="TB";',
             '  node [shape=box, fontsize=10];']
    by_rank: dict[int, list] = {}
    for w in cat.objects:
        by_rank.setdefault(cat.rank[w.key], []).append(w)
    for r in sorted(by_rank, reverse=True):
        row = " ".join(ids[w.key] + ";" for w in by_rank[r])
        lines.append(f"  {{ rank=same; {row} }}")
    for w in cat.objects:
        lines.append(f'  {ids[w.key]} [label="{names[w.key]}"];')
    for e in _irreducible_edges(cat):
        src = next(ids[w.key] for w in cat.objects if names[w.key] == e["source"])
        dst = next(ids[w.key] for w in cat.objects if names[w.key] == e["target"])
        style = ', color="black:white:black"' if e["doubled"] else ""
        lines.append(f'  {src} -> {dst} [label="{e["label"]}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
