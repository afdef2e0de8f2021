"""Reduction along a support tau-rigid object.

Given a support tau-rigid object in the world W, `wide_of` computes the
associated wide subcategory (the members of W with no maps from the module
part, no extensions against its generated classes, and no maps from the
shifted projectives).  `e_map` computes the reduction bijection on summands:

* module part U first (case I):
  (a) X not generated by U inside W: E(X) = X / trace of U;
  (b) X generated by U: take a right approximation by the relative
      presentations of the U-summands in the two-term homotopy category,
      and shift the torsion-free part of the degree -1 cone homology;
  (c) a shifted summand Q[1]: the same cone construction aimed at (Q -> 0).
* then the image of the shifted part acts on the result (case II):
  modules pass through, shifted summands get the torsion-free quotient.

The cone route tolerates non-minimal approximations: a surplus summand that
factors through the rest contributes only add(U) pieces to the degree -1
homology, and the torsion-free quotient deletes those.  Every case asserts
its postconditions (indecomposable outputs landing in the reduced world) and
raises CaseDispatchError when they fail, so a wrong branch can never return
a plausible-looking value silently.
"""
from __future__ import annotations

from .context import Context
from .errors import CaseDispatchError, NotCompatible, NotInImage, NotSupportTauRigid
from .homology import (TwoTermComplex, chain_maps_mod_homotopy,
                       complex_direct_sum, cone_homology, shifted_complex)
from .modules import (Module, decompose, hstack_morphisms, kernel,
                      zero_module, zero_morphism)
from .taurigid import (CObject, Key, WideSubcategory, candidate_keys, cover_in,
                       ext_projective_ids, full_subcategory,
                       is_support_tau_rigid, keys_compatible,
                       torsion_free_quotient)


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise CaseDispatchError(msg)


def wide_of(ctx: Context, w: WideSubcategory | None, obj: CObject) -> WideSubcategory:
    """The wide subcategory of W attached to a support tau-rigid object."""
    if w is None:
        w = full_subcategory(ctx)
    memo_key = ("wide_of", w.key, obj)
    if memo_key in ctx.memo:
        return ctx.memo[memo_key]
    if not is_support_tau_rigid(ctx, w, obj):
        raise NotSupportTauRigid(
            f"object {obj} is not support tau-rigid in the given world")
    members = []
    for x in w.key:
        if any(ctx.hom_dim(u, x) for u in obj.mods):
            continue
        genx = ctx.gen_members(frozenset([x])) & w.members
        if any(ctx.ext1(u, g) for u in obj.mods for g in sorted(genx)):
            continue
        if any(ctx.hom_dim(p, x) for p in obj.shifts):
            continue
        members.append(x)
    out = WideSubcategory(frozenset(members))
    ctx.memo[memo_key] = out
    return out


def rel_presentation(ctx: Context, w: WideSubcategory, i: int) -> TwoTermComplex:
    """Presentation of a member of W by the Ext-projectives of W (cached)."""
    memo_key = ("relpres", w.key, i)
    if memo_key in ctx.memo:
        return ctx.memo[memo_key]
    pw = ext_projective_ids(ctx, w)
    cover0, _ = cover_in(ctx, pw, ctx.rep(i))
    om, om_incl = kernel(cover0)
    cover1, _ = cover_in(ctx, pw, om)
    d = om_incl.compose(cover1)
    out = TwoTermComplex(cover1.source, cover0.source, d)
    ctx.memo[memo_key] = out
    return out


def _strip_and_register(ctx: Context, u_ids, m: Module, what: str) -> int:
    """f_U of a module, asserted indecomposable, returned as a class id."""
    fm = torsion_free_quotient(ctx, u_ids, m)[0] if u_ids else m
    pieces = decompose(fm)
    _expect(len(pieces) == 1,
            f"{what}: torsion-free part decomposed into {len(pieces)} pieces")
    idx = ctx.id_of(pieces[0])
    _expect(idx is not None, f"{what}: result escaped the enumerated classes")
    return idx


def _cone_reduction(ctx: Context, w: WideSubcategory, u_ids, target: TwoTermComplex,
                    require_h0_zero: bool, what: str) -> int:
    """Common core of cases I(b) and I(c): approximate, cone, strip, shift."""
    sources: list[TwoTermComplex] = []
    maps1 = []
    maps0 = []
    for u in u_ids:
        src = rel_presentation(ctx, w, u)
        for f1, f0 in chain_maps_mod_homotopy(src, target):
            sources.append(src)
            maps1.append(f1)
            maps0.append(f0)
    if sources:
        total = complex_direct_sum(sources)
        big1 = hstack_morphisms(maps1, source_sum=total.p1)
        big0 = hstack_morphisms(maps0, source_sum=total.p0)
    else:
        z = zero_module(ctx.alg)
        total = TwoTermComplex(z, z, zero_morphism(z, z))
        big1 = zero_morphism(z, target.p1)
        big0 = zero_morphism(z, target.p0)
    b, h0 = cone_homology(big1, big0, total, target)
    if require_h0_zero:
        _expect(h0.is_zero, f"{what}: approximation is not surjective on degree 0")
    return _strip_and_register(ctx, u_ids, b, what)


def _e_module_stage(ctx: Context, w: WideSubcategory, u_ids: tuple[int, ...],
                    key: Key) -> Key:
    """E along the module part U (case I), on one summand key."""
    if not u_ids:
        return key
    w1 = wide_of(ctx, w, CObject.of(u_ids))
    kind, x = key
    if kind == "m":
        if x in ctx.gen_members(frozenset(u_ids)):
            # I(b): generated by U; two-term cone, result is shifted
            target = rel_presentation(ctx, w, x)
            idx = _cone_reduction(ctx, w, u_ids, target, True, "case I(b)")
            _expect(idx in set(ext_projective_ids(ctx, w1)),
                    "case I(b): result is not Ext-projective in the reduced world")
            return ("s", idx)
        # I(a): plain torsion-free quotient
        idx = _strip_and_register(ctx, u_ids, ctx.rep(x), "case I(a)")
        _expect(idx in w1.members, "case I(a): result left the reduced world")
        return ("m", idx)
    # I(c): shifted summand, cone against (Q -> 0)
    target = shifted_complex(ctx.rep(x))
    idx = _cone_reduction(ctx, w, u_ids, target, False, "case I(c)")
    _expect(idx in set(ext_projective_ids(ctx, w1)),
            "case I(c): result is not Ext-projective in the reduced world")
    return ("s", idx)


def _e_shift_stage(ctx: Context, w1: WideSubcategory, q_ids: tuple[int, ...],
                   key: Key) -> Key:
    """E along a purely shifted object Q[1] inside the world w1 (case II)."""
    if not q_ids:
        return key
    kind, x = key
    if kind == "m":
        _expect(all(ctx.hom_dim(q, x) == 0 for q in q_ids),
                "case II(a): module summand admits maps from the support part")
        return key
    _expect(x not in q_ids, "case II(b): summand collides with the support part")
    idx = _strip_and_register(ctx, q_ids, ctx.rep(x), "case II(b)")
    return ("s", idx)


def e_map_key(ctx: Context, w: WideSubcategory | None, obj: CObject, key: Key) -> Key:
    """The reduction bijection on a single summand key."""
    if w is None:
        w = full_subcategory(ctx)
    stage1 = _e_module_stage(ctx, w, obj.mods, key)
    w1 = wide_of(ctx, w, CObject.of(obj.mods))
    q_ids = tuple(_e_module_stage(ctx, w, obj.mods, ("s", p))[1] for p in obj.shifts)
    out = _e_shift_stage(ctx, w1, q_ids, stage1)
    w_final = wide_of(ctx, w, obj)
    if out[0] == "m":
        _expect(out[1] in w_final.members, "reduction image left the target world")
    else:
        _expect(out[1] in set(ext_projective_ids(ctx, w_final)),
                "reduction image is not supported in the target world")
    return out


def e_map(ctx: Context, w: WideSubcategory | None, obj: CObject, x: CObject) -> CObject:
    """E applied summand-wise to a compatible support tau-rigid object."""
    if w is None:
        w = full_subcategory(ctx)
    try:
        union = obj.union(x)
    except NotSupportTauRigid as exc:
        raise NotCompatible(str(exc)) from exc
    if not is_support_tau_rigid(ctx, w, union):
        raise NotCompatible(
            "the direct sum with the reduction object is not support tau-rigid")
    keys = [e_map_key(ctx, w, obj, k) for k in x.keys()]
    _expect(len(set(keys)) == len(keys), "reduction images of summands collided")
    out = CObject.from_keys(keys)
    _expect(out.delta == x.delta, "reduction changed the number of summands")
    return out


def e_table(ctx: Context, w: WideSubcategory | None, obj: CObject) -> dict[Key, Key]:
    """The full value table of the reduction on compatible single summands."""
    if w is None:
        w = full_subcategory(ctx)
    memo_key = ("etable", w.key, obj)
    if memo_key in ctx.memo:
        return ctx.memo[memo_key]
    table: dict[Key, Key] = {}
    obj_keys = set(obj.keys())
    for k in candidate_keys(ctx, w):
        if k in obj_keys:
            continue
        if not all(keys_compatible(ctx, w, k, o) for o in obj.keys()):
            continue
        table[k] = e_map_key(ctx, w, obj, k)
    ctx.memo[memo_key] = table
    return table


def f_map(ctx: Context, w: WideSubcategory | None, obj: CObject, y: CObject) -> CObject:
    """The inverse bijection: summands of C(J_W(obj)) pulled back to C(W)."""
    if w is None:
        w = full_subcategory(ctx)
    table = e_table(ctx, w, obj)
    inverse: dict[Key, Key] = {}
    for k, v in table.items():
        inverse.setdefault(v, k)
    keys = []
    for k in y.keys():
        if k not in inverse:
            raise NotInImage(
                f"summand {k} is not a reduction image for the given object")
        keys.append(inverse[k])
    return CObject.from_keys(keys)
