"""Support tau-rigid objects, torsion quotients, and approximations.

Everything here is computed inside an ambient extension-closed "world" W
given as a set of iso-class ids (the module category itself is the full
set).  The key translation making relative computations cheap:

    Hom_W(A, tau_W B) = 0   iff   Ext^1(B, X) = 0 for every X in Gen(A) & W

so relative rigidity needs only absolute Ext groups and generated-class
membership, never an explicit equivalence with a second algebra.  A
support tau-rigid object in W is a pair (module part, shifted part): the
module part is a basic tau_W-rigid module in W, the shifted part a basic
Ext-projective of W with no maps into the module part, and the whole thing
is determined by pairwise conditions — so enumeration is clique search in
the compatibility graph.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .context import Context
from .errors import NotSupportTauRigid, WidecatError
from .modules import (Module, ModuleMorphism, cokernel, hom_basis,
                      hstack_morphisms, local_radical_basis, zero_module,
                      zero_morphism)

# A summand key: ('m', class_id) for a module summand, ('s', class_id) for a
# shifted Ext-projective summand.
Key = tuple[str, int]


@dataclass(frozen=True)
class CObject:
    """A basic object of the shifted-projectives category: U + P[1]."""

    mods: tuple[int, ...]
    shifts: tuple[int, ...]

    def __post_init__(self):
        if list(self.mods) != sorted(set(self.mods)):
            raise NotSupportTauRigid("module summands must be distinct (basic object)")
        if list(self.shifts) != sorted(set(self.shifts)):
            raise NotSupportTauRigid("shifted summands must be distinct (basic object)")
        if set(self.mods) & set(self.shifts):
            raise NotSupportTauRigid("a class appears both plain and shifted")

    @staticmethod
    def of(mods=(), shifts=()) -> "CObject":
        return CObject(tuple(sorted(set(mods))), tuple(sorted(set(shifts))))

    @staticmethod
    def from_keys(keys) -> "CObject":
        mods = [i for kind, i in keys if kind == "m"]
        shifts = [i for kind, i in keys if kind == "s"]
        return CObject.of(mods, shifts)

    @property
    def delta(self) -> int:
        return len(self.mods) + len(self.shifts)

    @property
    def is_zero(self) -> bool:
        return not self.mods and not self.shifts

    def keys(self) -> list[Key]:
        return [("m", i) for i in self.mods] + [("s", i) for i in self.shifts]

    def union(self, other: "CObject") -> "CObject":
        overlap = (set(self.mods) & set(other.mods)) | (set(self.shifts) & set(other.shifts))
        if overlap or (set(self.mods) & set(other.shifts)) or (set(self.shifts) & set(other.mods)):
            raise NotSupportTauRigid("summand sets overlap; union is not basic")
        return CObject.of(self.mods + other.mods, self.shifts + other.shifts)

    def describe(self, ctx: Context) -> str:
        parts = [ctx.label(i) for i in self.mods] + \
                [ctx.label(i) + "[1]" for i in self.shifts]
        return "+".join(parts) if parts else "0"


ZERO_COBJECT = CObject((), ())


@dataclass(frozen=True)
class WideSubcategory:
    """A wide subcategory of the module category, as its set of class ids."""

    members: frozenset[int]

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @property
    def rank_hint(self) -> int:
        return len(self.members)

    def contains(self, i: int) -> bool:
        return i in self.members

    def describe(self, ctx: Context) -> str:
        if len(self.members) == ctx.ind_count():
            return "mod"
        if not self.members:
            return "0"
        return "{" + ",".join(ctx.label(i) for i in self.key) + "}"


def full_subcategory(ctx: Context) -> WideSubcategory:
    return WideSubcategory(frozenset(ctx.ind_ids()))


# -- torsion machinery ----------------------------------------------------------

def trace_submodule(ctx: Context, u_ids, x: Module) -> tuple[Module, ModuleMorphism]:
    """The trace of the classes u_ids in x: sum of images of all maps."""
    alg = ctx.alg
    fd = alg.field
    maps: list[ModuleMorphism] = []
    for u in sorted(set(u_ids)):
        maps.extend(hom_basis(ctx.rep(u), x))
    incls = {}
    dims = []
    for v in range(alg.n):
        cols = []
        for f in maps:
            for c in range(f.source.dims[v]):
                cols.append([f.mats[v][r][c] for r in range(x.dims[v])])
        basis = []
        span: list[list] = []
        for cvec in cols:
            if any(t != 0 for t in cvec) and not linalg.in_row_span(fd, span, cvec):
                basis.append(cvec)
                span = linalg.row_space_reduce(fd, span + [cvec])
        dims.append(len(basis))
        incls[v] = linalg.transpose(basis) if basis else [[] for _ in range(x.dims[v])]
    mats = {}
    from .modules import _solve_through
    for ai, a in enumerate(alg.arrows):
        mats[ai] = _solve_through(fd, incls[a.target], x.mats[ai], incls[a.source],
                                  x.dims[a.target], dims[a.target],
                                  x.dims[a.source], dims[a.source], "trace")
    t = Module(alg, dims, mats)
    return t, ModuleMorphism(t, x, incls)


def torsion_free_quotient(ctx: Context, u_ids, x: Module
                          ) -> tuple[Module, ModuleMorphism]:
    """x / trace(U, x) with its projection (the functor f_U)."""
    _, incl = trace_submodule(ctx, u_ids, x)
    return cokernel(incl)


def in_gen(ctx: Context, u_ids: frozenset[int], x_id: int) -> bool:
    return x_id in ctx.gen_members(frozenset(u_ids))


# -- rigidity predicates ---------------------------------------------------------

def hom_tau_vanishes(ctx: Context, w: WideSubcategory | None, i: int, j: int) -> bool:
    """Hom_W(X_i, tau_W X_j) = 0, via the Ext-Gen translation for proper W."""
    if w is None or len(w.members) == ctx.ind_count():
        t = ctx.tau(j)
        return t is None or ctx.hom_dim(i, t) == 0
    gen = ctx.gen_members(frozenset([i])) & w.members
    return all(ctx.ext1(j, g) == 0 for g in sorted(gen))


def ext_projective_ids(ctx: Context, w: WideSubcategory) -> list[int]:
    """Ext-projectives of W (extensions in W are absolute, so Ext^1 is too)."""
    out = []
    for i in w.key:
        if all(ctx.ext1(i, j) == 0 for j in w.key):
            out.append(i)
    return out


def keys_compatible(ctx: Context, w: WideSubcategory | None, a: Key, b: Key) -> bool:
    """Can the two summands coexist in one support tau-rigid object of C(W)?"""
    (ka, ia), (kb, ib) = a, b
    if ka == "m" and kb == "m":
        return hom_tau_vanishes(ctx, w, ia, ib) and hom_tau_vanishes(ctx, w, ib, ia)
    if ka == "s" and kb == "s":
        return True
    if ka == "s":
        (ka, ia), (kb, ib) = b, a
    # module + shifted projective: no maps from the projective to the module
    return ctx.hom_dim(ib, ia) == 0


def candidate_keys(ctx: Context, w: WideSubcategory) -> list[Key]:
    """All single-summand keys valid in C(W), deterministically ordered."""
    keys: list[Key] = []
    for i in w.key:
        if hom_tau_vanishes(ctx, w, i, i):
            keys.append(("m", i))
    for p in ext_projective_ids(ctx, w):
        keys.append(("s", p))
    return keys


def is_support_tau_rigid(ctx: Context, w: WideSubcategory | None, obj: CObject) -> bool:
    if w is None:
        w = full_subcategory(ctx)
    if not set(obj.mods) <= w.members:
        return False
    pw = set(ext_projective_ids(ctx, w))
    if not set(obj.shifts) <= pw:
        return False
    keys = obj.keys()
    for x in range(len(keys)):
        for y in range(x, len(keys)):
            if not keys_compatible(ctx, w, keys[x], keys[y]):
                return False
    return True


def strigid_objects(ctx: Context, w: WideSubcategory) -> list[CObject]:
    """All basic support tau-rigid objects of C(W), the zero object included.

    Clique enumeration over the pairwise compatibility graph; pairwise
    compatibility (including each key with itself) is exactly support
    tau-rigidity of the direct sum.
    """
    memo_key = ("strigid", w.key)
    if memo_key in ctx.memo:
        return list(ctx.memo[memo_key])
    keys = candidate_keys(ctx, w)
    adj: dict[Key, set[Key]] = {k: set() for k in keys}
    for x in range(len(keys)):
        for y in range(x + 1, len(keys)):
            if keys_compatible(ctx, w, keys[x], keys[y]):
                adj[keys[x]].add(keys[y])
                adj[keys[y]].add(keys[x])
    out: list[CObject] = []

    def extend(chosen: list[Key], rest: list[Key]):
        out.append(CObject.from_keys(chosen))
        for idx, k in enumerate(rest):
            nxt = [r for r in rest[idx + 1:] if r in adj[k]]
            extend(chosen + [k], nxt)

    extend([], keys)
    out.sort(key=lambda o: (o.delta, o.mods, o.shifts))
    ctx.memo[memo_key] = tuple(out)
    return out


def stilting_objects(ctx: Context, w: WideSubcategory) -> list[CObject]:
    """Maximal (support tau-tilting) objects: the cliques of maximal size."""
    objs = strigid_objects(ctx, w)
    if not objs:
        return []
    rank = max(o.delta for o in objs)
    return [o for o in objs if o.delta == rank]


def wide_rank(ctx: Context, w: WideSubcategory) -> int:
    objs = strigid_objects(ctx, w)
    return max((o.delta for o in objs), default=0)


# -- minimal approximations -------------------------------------------------------

def _radical_hom(ctx: Context, i: int, j: int) -> list[ModuleMorphism]:
    if i != j:
        return ctx.hom(i, j)
    return local_radical_basis(ctx.rep(i), ctx.hom(i, i))


def minimal_right_approximation(ctx: Context, source_ids, x: Module
                                ) -> tuple[ModuleMorphism, list[int]]:
    """Minimal right add(sum of the sources)-approximation of x.

    Returns (map from a direct sum of source representatives, the list of
    summand ids used).  Multiplicities are read off from Hom(A_i, x) modulo
    maps factoring through the radical of add(A).
    """
    source_ids = sorted(set(source_ids))
    fd = ctx.alg.field
    chosen: list[ModuleMorphism] = []
    chosen_ids: list[int] = []
    for i in source_ids:
        homs = hom_basis(ctx.rep(i), x)
        if not homs:
            continue
        rad_vecs = []
        for j in source_ids:
            outer = hom_basis(ctx.rep(j), x)
            if not outer:
                continue
            for r in _radical_hom(ctx, i, j):
                for g in outer:
                    vec = g.compose(r).flatten()
                    if any(t != 0 for t in vec):
                        rad_vecs.append(vec)
        span = linalg.row_space_reduce(fd, rad_vecs)
        for f in homs:
            vec = f.flatten()
            if not linalg.in_row_span(fd, span, vec):
                chosen.append(f)
                chosen_ids.append(i)
                span = linalg.row_space_reduce(fd, span + [vec])
    if not chosen:
        z = zero_module(ctx.alg)
        return zero_morphism(z, x), []
    return hstack_morphisms(chosen), chosen_ids


def cover_in(ctx: Context, proj_ids, x: Module) -> tuple[ModuleMorphism, list[int]]:
    """Minimal right approximation required to be surjective (a relative cover)."""
    f, ids = minimal_right_approximation(ctx, proj_ids, x)
    if not f.is_surjective():
        raise WidecatError(
            "relative projective cover is not surjective; the target does "
            "not lie in the subcategory generated by the given projectives")
    return f, ids


# -- Bongartz completion -----------------------------------------------------------

def perp_tau_members(ctx: Context, u_ids) -> frozenset[int]:
    """{X : Hom(X, tau U) = 0}, the Bongartz torsion class of a tau-rigid U."""
    taus = [ctx.tau(u) for u in sorted(set(u_ids))]
    taus = [t for t in taus if t is not None]
    out = set()
    for x in ctx.ind_ids():
        if all(ctx.hom_dim(x, t) == 0 for t in taus):
            out.add(x)
    return frozenset(out)


def ext_projectives_of_class(ctx: Context, members: frozenset[int]) -> list[int]:
    """Ext-projectives of a torsion class given by its member ids."""
    out = []
    for i in sorted(members):
        if all(ctx.ext1(i, j) == 0 for j in sorted(members)):
            out.append(i)
    return out


def bongartz_complement(ctx: Context, u_ids) -> tuple[int, ...]:
    """Summand ids completing a tau-rigid module to a tau-tilting one."""
    u_set = set(u_ids)
    perp = perp_tau_members(ctx, u_ids)
    projs = ext_projectives_of_class(ctx, perp)
    if not u_set <= set(projs):
        raise NotSupportTauRigid(
            "input is not tau-rigid (it is not Ext-projective in its own "
            "Bongartz class)")
    return tuple(i for i in projs if i not in u_set)


def split_projective_part(ctx: Context, t_ids) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(split, non-split) summands of a tau-tilting module.

    An indecomposable summand X is split projective in Gen(T) exactly when
    X does not lie in the class generated by the other summands.
    """
    t_list = sorted(set(t_ids))
    split, nonsplit = [], []
    for x in t_list:
        others = frozenset(t for t in t_list if t != x)
        if x in ctx.gen_members(others):
            nonsplit.append(x)
        else:
            split.append(x)
    return tuple(split), tuple(nonsplit)
