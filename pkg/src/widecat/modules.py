"""Modules (quiver representations) over a bound path algebra.

A Module assigns to each vertex an exact vector space dimension and to each
arrow a matrix (target_dim x source_dim).  Everything downstream — Hom
spaces, kernels, images, cokernels, traces, decompositions — is plain exact
linear algebra from `linalg`.

Modules are treated as immutable after construction.  Each instance carries
a serial number so caches can key on identity without hashing matrices.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

from . import linalg
from .algebra import Algebra
from .errors import AlgebraMismatch, DecompositionFailure

_serial_counter = itertools.count()


def _mm(field, a, b, r: int, k: int, c: int):
    """Product of an r x k and a k x c matrix with shapes given explicitly.

    Plain list-of-rows matrices cannot represent the column count of a
    0-row matrix, so every multiplication that may touch a 0-dimensional
    vertex space goes through here.
    """
    if r == 0 or c == 0 or k == 0:
        return linalg.zeros(field, r, c)
    return linalg.matmul(field, a, b)


class Module:
    def __init__(self, alg: Algebra, dims, mats, check: bool = False):
        self.alg = alg
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != alg.n:
            raise ValueError("dimension vector length != number of vertices")
        self.mats = {}
        for ai, a in enumerate(alg.arrows):
            r, c = self.dims[a.target], self.dims[a.source]
            m = mats.get(ai)
            if m is None or r == 0 or c == 0:
                m = linalg.zeros(alg.field, r, c)
            self.mats[ai] = m
        self.serial = next(_serial_counter)
        if check:
            self._validate()

    def _validate(self):
        for ai, a in enumerate(self.alg.arrows):
            r, c = linalg.shape(self.mats[ai])
            er, ec = self.dims[a.target], self.dims[a.source]
            if r != er or (r > 0 and c != ec):
                raise ValueError(f"arrow {a.label}: matrix is {r}x{c}, expected "
                                 f"{er}x{ec}")
        for rel in self.alg._relations:
            src = self.alg.arrows[rel[0][1][0]].source
            tgt = self.alg.arrows[rel[0][1][-1]].target
            acc = linalg.zeros(self.alg.field, self.dims[tgt], self.dims[src])
            for coeff, arrs in rel:
                m = self._path_matrix(src, arrs)
                acc = linalg.mat_add(self.alg.field, acc, linalg.mat_scale(self.alg.field, coeff, m))
            if any(x != 0 for row in acc for x in row):
                raise ValueError("relation does not vanish on the module")

    # -- structure --------------------------------------------------------

    @property
    def dim_vector(self) -> tuple[int, ...]:
        return self.dims

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @property
    def is_zero(self) -> bool:
        return self.total_dim == 0

    def _path_matrix(self, src: int, arrs: tuple[int, ...]):
        m = linalg.identity(self.alg.field, self.dims[src])
        for ai in arrs:
            a = self.alg.arrows[ai]
            m = _mm(self.alg.field, self.mats[ai], m,
                    self.dims[a.target], self.dims[a.source], self.dims[src])
        return m

    def path_action(self, path) -> list[list]:
        """Matrix of a path acting M_source -> M_target."""
        return self._path_matrix(path[0], path[1])

    def element_action(self, elem: dict[int, object], src: int, tgt: int):
        """Matrix of a sparse algebra element supported on paths src -> tgt."""
        acc = linalg.zeros(self.alg.field, self.dims[tgt], self.dims[src])
        for bi, coeff in elem.items():
            p = self.alg.basis[bi]
            acc = linalg.mat_add(self.alg.field, acc,
                                 linalg.mat_scale(self.alg.field, coeff, self.path_action(p)))
        return acc

    def __repr__(self):
        return f"Module{self.dims}"


class ModuleMorphism:
    def __init__(self, source: Module, target: Module, mats, check: bool = False):
        if source.alg is not target.alg:
            raise AlgebraMismatch("morphism between modules over different algebras")
        self.source = source
        self.target = target
        self.mats = {}
        for v in range(source.alg.n):
            r, c = target.dims[v], source.dims[v]
            self.mats[v] = mats[v] if r and c else linalg.zeros(source.alg.field, r, c)
        if check:
            self._validate()

    def _validate(self):
        alg = self.source.alg
        for v in range(alg.n):
            r, c = linalg.shape(self.mats[v])
            er, ec = self.target.dims[v], self.source.dims[v]
            if r != er or (r > 0 and c != ec):
                raise ValueError("morphism block shape mismatch")
        f = alg.field
        for ai, a in enumerate(alg.arrows):
            lhs = _mm(f, self.mats[a.target], self.source.mats[ai],
                      self.target.dims[a.target], self.source.dims[a.target],
                      self.source.dims[a.source])
            rhs = _mm(f, self.target.mats[ai], self.mats[a.source],
                      self.target.dims[a.target], self.target.dims[a.source],
                      self.source.dims[a.source])
            if lhs != rhs:
                raise ValueError(f"morphism does not commute with arrow {a.label}")

    def compose(self, other: "ModuleMorphism") -> "ModuleMorphism":
        """self o other (apply `other` first)."""
        if other.target is not self.source and other.target.serial != self.source.serial:
            if other.target.dims != self.source.dims:
                raise AlgebraMismatch("composition endpoint mismatch")
        alg = self.source.alg
        mats = {v: _mm(alg.field, self.mats[v], other.mats[v],
                       self.target.dims[v], self.source.dims[v], other.source.dims[v])
                for v in range(alg.n)}
        return ModuleMorphism(other.source, self.target, mats)

    def add(self, other: "ModuleMorphism") -> "ModuleMorphism":
        alg = self.source.alg
        mats = {v: linalg.mat_add(alg.field, self.mats[v], other.mats[v])
                for v in range(alg.n)}
        return ModuleMorphism(self.source, self.target, mats)

    def scale(self, c) -> "ModuleMorphism":
        alg = self.source.alg
        mats = {v: linalg.mat_scale(alg.field, c, self.mats[v]) for v in range(alg.n)}
        return ModuleMorphism(self.source, self.target, mats)

    def neg(self) -> "ModuleMorphism":
        return self.scale(self.source.alg.field.of(-1))

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for m in self.mats.values() for row in m for x in row)

    def rank(self) -> int:
        f = self.source.alg.field
        return sum(linalg.rank(f, m) for m in self.mats.values())

    def is_injective(self) -> bool:
        return self.rank() == self.source.total_dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.total_dim

    def is_invertible(self) -> bool:
        return (self.source.dims == self.target.dims
                and all(linalg.is_invertible(self.source.alg.field, m)
                        for m in self.mats.values()))

    def flatten(self) -> list:
        out = []
        for v in range(self.source.alg.n):
            for row in self.mats[v]:
                out.extend(row)
        return out

    def __repr__(self):
        return f"ModuleMorphism({self.source.dims} -> {self.target.dims})"


def identity_morphism(m: Module) -> ModuleMorphism:
    f = m.alg.field
    return ModuleMorphism(m, m, {v: linalg.identity(f, m.dims[v]) for v in range(m.alg.n)})


def zero_morphism(source: Module, target: Module) -> ModuleMorphism:
    f = source.alg.field
    return ModuleMorphism(source, target,
                          {v: linalg.zeros(f, target.dims[v], source.dims[v])
                           for v in range(source.alg.n)})


def morphism_from_flat(source: Module, target: Module, flat: list) -> ModuleMorphism:
    mats = {}
    pos = 0
    for v in range(source.alg.n):
        r, c = target.dims[v], source.dims[v]
        mats[v] = [flat[pos + i * c: pos + (i + 1) * c] for i in range(r)]
        pos += r * c
    return ModuleMorphism(source, target, mats)


# -- basic module constructions -------------------------------------------

def zero_module(alg: Algebra) -> Module:
    return Module(alg, [0] * alg.n, {})


def simple_module(alg: Algebra, v: int) -> Module:
    dims = [0] * alg.n
    dims[v] = 1
    return Module(alg, dims, {})


def direct_sum(mods: list[Module]) -> Module:
    if not mods:
        raise ValueError("direct_sum of empty list; use zero_module")
    alg = mods[0].alg
    for m in mods:
        if m.alg is not alg:
            raise AlgebraMismatch("direct sum across algebras")
    dims = [sum(m.dims[v] for m in mods) for v in range(alg.n)]
    mats = {}
    for ai, a in enumerate(alg.arrows):
        big = linalg.zeros(alg.field, dims[a.target], dims[a.source])
        r0 = c0 = 0
        for m in mods:
            br, bc = m.dims[a.target], m.dims[a.source]
            for i in range(br):
                big[r0 + i][c0:c0 + bc] = m.mats[ai][i][:]
            r0 += br
            c0 += bc
        mats[ai] = big
    return Module(alg, dims, mats)


def sum_inclusion(mods: list[Module], k: int, total: Module | None = None) -> ModuleMorphism:
    total = total or direct_sum(mods)
    alg = mods[0].alg
    f = alg.field
    mats = {}
    for v in range(alg.n):
        m = linalg.zeros(f, total.dims[v], mods[k].dims[v])
        off = sum(mods[i].dims[v] for i in range(k))
        for i in range(mods[k].dims[v]):
            m[off + i][i] = f.one
        mats[v] = m
    return ModuleMorphism(mods[k], total, mats)


def sum_projection(mods: list[Module], k: int, total: Module | None = None) -> ModuleMorphism:
    total = total or direct_sum(mods)
    alg = mods[0].alg
    f = alg.field
    mats = {}
    for v in range(alg.n):
        m = linalg.zeros(f, mods[k].dims[v], total.dims[v])
        off = sum(mods[i].dims[v] for i in range(k))
        for i in range(mods[k].dims[v]):
            m[i][off + i] = f.one
        mats[v] = m
    return ModuleMorphism(total, mods[k], mats)


def hstack_morphisms(fs: list[ModuleMorphism], source_sum: Module | None = None) -> ModuleMorphism:
    """Combine maps f_k: M_k -> N into one map from the direct sum of sources."""
    target = fs[0].target
    alg = target.alg
    source_sum = source_sum or direct_sum([f.source for f in fs])
    mats = {v: linalg.hstack([f.mats[v] for f in fs]) for v in range(alg.n)}
    return ModuleMorphism(source_sum, target, mats)


def vstack_morphisms(fs: list[ModuleMorphism], target_sum: Module | None = None) -> ModuleMorphism:
    """Combine maps f_k: M -> N_k into one map into the direct sum of targets."""
    source = fs[0].source
    alg = source.alg
    target_sum = target_sum or direct_sum([f.target for f in fs])
    mats = {v: linalg.vstack([f.mats[v] for f in fs]) for v in range(alg.n)}
    return ModuleMorphism(source, target_sum, mats)


# -- projectives and injectives -------------------------------------------

def projective_sum(alg: Algebra, vertices: list[int]) -> tuple[Module, list[dict]]:
    """Direct sum of indecomposable projectives P_v for v in `vertices`.

    Returns (module, layout) with layout[k][w] = (offset, path_indices): the
    coordinates of summand k at vertex w are indexed by the listed basis
    paths of the algebra (paths from vertices[k] to w).
    """
    f = alg.field
    dims = [0] * alg.n
    layout: list[dict] = []
    for v in vertices:
        entry = {}
        for w in range(alg.n):
            paths = alg.paths_from_to(v, w)
            entry[w] = (dims[w], paths)
            dims[w] += len(paths)
        layout.append(entry)
    mats = {}
    for ai, a in enumerate(alg.arrows):
        m = linalg.zeros(f, dims[a.target], dims[a.source])
        for k, v in enumerate(vertices):
            s_off, s_paths = layout[k][a.source]
            t_off, t_paths = layout[k][a.target]
            t_pos = {pi: r for r, pi in enumerate(t_paths)}
            for c, pi in enumerate(s_paths):
                for qi, coeff in alg.arrow_times_path(ai, pi).items():
                    m[t_off + t_pos[qi]][s_off + c] = coeff
        mats[ai] = m
    return Module(alg, dims, mats), layout


def projective_module(alg: Algebra, v: int) -> Module:
    return projective_sum(alg, [v])[0]


def injective_sum(alg: Algebra, vertices: list[int]) -> tuple[Module, list[dict]]:
    """Direct sum of indecomposable injectives I_v (duals of paths into v)."""
    f = alg.field
    dims = [0] * alg.n
    layout: list[dict] = []
    for v in vertices:
        entry = {}
        for w in range(alg.n):
            paths = alg.paths_from_to(w, v)  # coordinates dual to paths w -> v
            entry[w] = (dims[w], paths)
            dims[w] += len(paths)
        layout.append(entry)
    mats = {}
    for ai, a in enumerate(alg.arrows):
        # a: w -> u acts (I_v)_w -> (I_v)_u by (a.phi)(q) = phi(q composed after a)
        m = linalg.zeros(f, dims[a.target], dims[a.source])
        for k, v in enumerate(vertices):
            s_off, s_paths = layout[k][a.source]
            t_off, t_paths = layout[k][a.target]
            s_pos = {pi: c for c, pi in enumerate(s_paths)}
            for r, qi in enumerate(t_paths):
                for pi, coeff in alg.path_times_arrow(qi, ai).items():
                    m[t_off + r][s_off + s_pos[pi]] = coeff
        mats[ai] = m
    return Module(alg, dims, mats), layout


def injective_module(alg: Algebra, v: int) -> Module:
    return injective_sum(alg, [v])[0]


# -- hom spaces -------------------------------------------------------------

def hom_basis(m: Module, n: Module) -> list[ModuleMorphism]:
    """Deterministic basis of Hom(m, n)."""
    if m.alg is not n.alg:
        raise AlgebraMismatch("hom between modules over different algebras")
    alg = m.alg
    f = alg.field
    offsets = []
    pos = 0
    for v in range(alg.n):
        offsets.append(pos)
        pos += n.dims[v] * m.dims[v]
    nvars = pos
    if nvars == 0:
        return []
    rows = []
    for ai, a in enumerate(alg.arrows):
        s, t = a.source, a.target
        ma, na = m.mats[ai], n.mats[ai]
        for i in range(n.dims[t]):
            for j in range(m.dims[s]):
                row = [f.zero] * nvars
                # (f_t . m_a)[i][j] = sum_k f_t[i,k] m_a[k,j]
                for k in range(m.dims[t]):
                    if ma[k][j] != 0:
                        row[offsets[t] + i * m.dims[t] + k] = \
                            f.add(row[offsets[t] + i * m.dims[t] + k], ma[k][j])
                # -(n_a . f_s)[i][j] = -sum_k n_a[i,k] f_s[k,j]
                for k in range(n.dims[s]):
                    if na[i][k] != 0:
                        idx = offsets[s] + k * m.dims[s] + j
                        row[idx] = f.sub(row[idx], na[i][k])
                if any(x != 0 for x in row):
                    rows.append(row)
    if not rows:
        basis_vecs = [row[:] for row in linalg.identity(f, nvars)]
    else:
        basis_vecs = linalg.nullspace(f, rows)
    out = []
    for vec in basis_vecs:
        mats = {}
        for v in range(alg.n):
            r, c = n.dims[v], m.dims[v]
            base = offsets[v]
            mats[v] = [vec[base + i * c: base + (i + 1) * c] for i in range(r)]
        out.append(ModuleMorphism(m, n, mats))
    return out


def hom_dim(m: Module, n: Module) -> int:
    return len(hom_basis(m, n))


# -- kernels, images, cokernels --------------------------------------------

def kernel(f: ModuleMorphism) -> tuple[Module, ModuleMorphism]:
    """(K, inclusion K -> source)."""
    alg = f.source.alg
    fd = alg.field
    incls = {}
    dims = []
    for v in range(alg.n):
        if f.source.dims[v] == 0:
            basis = []
        elif f.target.dims[v] == 0:
            basis = [row[:] for row in linalg.identity(fd, f.source.dims[v])]
        else:
            basis = linalg.nullspace(fd, f.mats[v])
        dims.append(len(basis))
        incls[v] = linalg.transpose(basis) if basis else \
            [[] for _ in range(f.source.dims[v])]
    mats = {}
    for ai, a in enumerate(alg.arrows):
        mats[ai] = _solve_through(fd, incls[a.target], f.source.mats[ai],
                                  incls[a.source],
                                  f.source.dims[a.target], dims[a.target],
                                  f.source.dims[a.source], dims[a.source],
                                  "kernel")
    k = Module(alg, dims, mats)
    inc = ModuleMorphism(k, f.source, incls)
    return k, inc


def _solve_through(fd, incl_t, big_mat, incl_s, amb_t: int, sub_t: int,
                   amb_s: int, sub_s: int, what: str):
    """Induced arrow matrix of a subrepresentation.

    Solves incl_t . X = big_mat . incl_s where incl_* have full column rank;
    all shapes passed explicitly so 0-dimensional spaces are safe.
    """
    prod = _mm(fd, big_mat, incl_s, amb_t, amb_s, sub_s)
    if sub_t == 0:
        if any(x != 0 for row in prod for x in row):
            raise RuntimeError(f"{what} is not a subrepresentation (bug)")
        return linalg.zeros(fd, 0, sub_s)
    if sub_s == 0:
        return linalg.zeros(fd, sub_t, 0)
    sol = linalg.solve_matrix(fd, incl_t, prod)
    if sol is None:
        raise RuntimeError(f"{what} is not a subrepresentation (bug)")
    return sol


def image(f: ModuleMorphism) -> tuple[Module, ModuleMorphism, ModuleMorphism]:
    """(I, inclusion I -> target, projection source -> I)."""
    alg = f.source.alg
    fd = alg.field
    incls = {}
    dims = []
    for v in range(alg.n):
        cols = linalg.column_space_basis(fd, f.mats[v]) if f.target.dims[v] else []
        dims.append(len(cols))
        incls[v] = linalg.transpose(cols) if cols else \
            [[] for _ in range(f.target.dims[v])]
    mats = {}
    projs = {}
    for ai, a in enumerate(alg.arrows):
        mats[ai] = _solve_through(fd, incls[a.target], f.target.mats[ai],
                                  incls[a.source],
                                  f.target.dims[a.target], dims[a.target],
                                  f.target.dims[a.source], dims[a.source],
                                  "image")
    for v in range(alg.n):
        if dims[v] == 0 or f.source.dims[v] == 0:
            projs[v] = linalg.zeros(fd, dims[v], f.source.dims[v])
            continue
        sol = linalg.solve_matrix(fd, incls[v], f.mats[v])
        if sol is None:
            raise RuntimeError("image projection failed (bug)")
        projs[v] = sol
    i = Module(alg, dims, mats)
    return i, ModuleMorphism(i, f.target, incls), ModuleMorphism(f.source, i, projs)


def cokernel(f: ModuleMorphism) -> tuple[Module, ModuleMorphism]:
    """(C, projection target -> C)."""
    alg = f.source.alg
    fd = alg.field
    projs = {}
    sections = {}
    dims = []
    for v in range(alg.n):
        d = f.target.dims[v]
        img_cols = linalg.column_space_basis(fd, f.mats[v]) if d else []
        comp = linalg.complement_basis(fd, img_cols, d)
        dims.append(len(comp))
        cols = [list(c) for c in img_cols] + [list(c) for c in comp]
        if d == 0:
            projs[v] = []
            sections[v] = [[] for _ in range(0)]
            continue
        t = linalg.transpose(cols)  # d x d, invertible
        tinv = linalg.inverse(fd, t)
        projs[v] = tinv[len(img_cols):]
        sections[v] = linalg.transpose(comp) if comp else [[] for _ in range(d)]
    mats = {}
    for ai, a in enumerate(alg.arrows):
        dt, ds = f.target.dims[a.target], f.target.dims[a.source]
        step = _mm(fd, f.target.mats[ai], sections[a.source],
                   dt, ds, dims[a.source])
        mats[ai] = _mm(fd, projs[a.target], step, dims[a.target], dt, dims[a.source])
    c = Module(alg, dims, mats)
    return c, ModuleMorphism(f.target, c, projs)


# -- radical, top, socle -----------------------------------------------------

def radical_inclusion(m: Module) -> tuple[Module, ModuleMorphism]:
    """rad M = sum of images of all arrow actions, as a submodule."""
    alg = m.alg
    fd = alg.field
    incls = {}
    dims = []
    for v in range(alg.n):
        cols = []
        for ai, a in enumerate(alg.arrows):
            if a.target == v:
                for j in range(m.dims[a.source]):
                    cols.append([m.mats[ai][i][j] for i in range(m.dims[v])])
        basis = []
        span: list[list] = []
        for cvec in cols:
            if not linalg.in_row_span(fd, span, cvec):
                basis.append(cvec)
                span = linalg.row_space_reduce(fd, span + [cvec])
        dims.append(len(basis))
        incls[v] = linalg.transpose(basis) if basis else [[] for _ in range(m.dims[v])]
    mats = {}
    for ai, a in enumerate(alg.arrows):
        mats[ai] = _solve_through(fd, incls[a.target], m.mats[ai], incls[a.source],
                                  m.dims[a.target], dims[a.target],
                                  m.dims[a.source], dims[a.source], "radical")
    r = Module(alg, dims, mats)
    return r, ModuleMorphism(r, m, incls)


def top_lifts(m: Module) -> list[tuple[int, list]]:
    """Vectors lifting a basis of M / rad M, as (vertex, coordinate vector)."""
    alg = m.alg
    fd = alg.field
    _, inc = radical_inclusion(m)
    out = []
    for v in range(alg.n):
        rad_cols = linalg.transpose(inc.mats[v]) if m.dims[v] else []
        comp = linalg.complement_basis(fd, rad_cols, m.dims[v])
        for c in comp:
            out.append((v, c))
    return out


def socle_vectors(m: Module) -> dict[int, list[list]]:
    """Per-vertex basis of the socle (vectors killed by every arrow)."""
    alg = m.alg
    fd = alg.field
    out = {}
    for v in range(alg.n):
        rows = []
        for ai, a in enumerate(alg.arrows):
            if a.source == v:
                rows.extend(m.mats[ai])
        if not rows:
            out[v] = [row[:] for row in linalg.identity(fd, m.dims[v])]
        else:
            out[v] = linalg.nullspace(fd, rows)
    return out


# -- projective covers and injective envelopes -------------------------------

def projective_cover(m: Module) -> tuple[Module, list[int], ModuleMorphism]:
    """(P, cover_vertices, epimorphism P -> M), minimal by construction."""
    alg = m.alg
    fd = alg.field
    lifts = top_lifts(m)
    vertices = [v for v, _ in lifts]
    p, layout = projective_sum(alg, vertices)
    mats = {w: linalg.zeros(fd, m.dims[w], p.dims[w]) for w in range(alg.n)}
    for k, (v, lift) in enumerate(lifts):
        for w in range(alg.n):
            off, paths = layout[k][w]
            for c, pi in enumerate(paths):
                col = linalg.mat_vec(fd, m.path_action(alg.basis[pi]), lift)
                for i in range(m.dims[w]):
                    mats[w][i][off + c] = col[i]
    cover = ModuleMorphism(p, m, mats)
    return p, vertices, cover


def injective_envelope(m: Module) -> tuple[Module, list[int], ModuleMorphism]:
    """(I, envelope_vertices, monomorphism M -> I), minimal by construction."""
    alg = m.alg
    fd = alg.field
    soc = socle_vectors(m)
    vertices = []
    functionals = []  # (vertex, row functional on M_v)
    for v in range(alg.n):
        basis = soc[v]
        if not basis:
            continue
        comp = linalg.complement_basis(fd, basis, m.dims[v])
        t = linalg.transpose([list(b) for b in basis] + [list(c) for c in comp])
        tinv = linalg.inverse(fd, t)
        for i in range(len(basis)):
            vertices.append(v)
            functionals.append((v, tinv[i]))
    i_mod, layout = injective_sum(alg, vertices)
    mats = {w: linalg.zeros(fd, i_mod.dims[w], m.dims[w]) for w in range(alg.n)}
    for k, (v, phi) in enumerate(functionals):
        for w in range(alg.n):
            off, paths = layout[k][w]
            for r, pi in enumerate(paths):
                act = m.path_action(alg.basis[pi])  # M_w -> M_v
                row = [fd.zero] * m.dims[w]
                for j in range(m.dims[w]):
                    acc = fd.zero
                    for t_ in range(m.dims[v]):
                        if phi[t_] != 0 and act[t_][j] != 0:
                            acc = fd.add(acc, fd.mul(phi[t_], act[t_][j]))
                    row[j] = acc
                mats[w][off + r] = row
    emb = ModuleMorphism(m, i_mod, mats)
    return i_mod, vertices, emb


# -- minimal polynomial and eigenvalues --------------------------------------

def _total_matrix(f: ModuleMorphism) -> list[list]:
    return linalg.block_diag(f.source.alg.field, [f.mats[v] for v in range(f.source.alg.n)])


def minimal_polynomial(field, a: list[list]) -> list:
    """Monic minimal polynomial of a square matrix, ascending coefficients."""
    d = len(a)
    if d == 0:
        return [field.one]  # convention: minimal polynomial 1 for the empty matrix
    powers = [linalg.identity(field, d)]
    flat = [[x for row in powers[0] for x in row]]
    while True:
        nxt = linalg.matmul(field, a, powers[-1])
        target = [x for row in nxt for x in row]
        sol = linalg.solve(field, linalg.transpose(flat), target)
        if sol is not None:
            return [field.neg(c) for c in sol] + [field.one]
        powers.append(nxt)
        flat.append(target)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def rational_eigenvalues(field, poly: list) -> list:
    """Roots of the polynomial lying in the field (rationals or F_p)."""
    if field.kind == "Fp":
        roots = []
        for c in range(field.p):
            acc = field.zero
            for coeff in reversed(poly):
                acc = field.add(field.mul(acc, c), coeff)
            if acc == 0:
                roots.append(c)
        return roots
    # rational roots of an integer-cleared polynomial
    fracs = [Fraction(c) for c in poly]
    lcm = 1
    for c in fracs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in fracs]
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        return [Fraction(0)]
    roots = set()
    k = 0
    while k < len(ints) and ints[k] == 0:
        k += 1
    if k > 0:
        roots.add(Fraction(0))
        ints = ints[k:]
    if len(ints) > 1:
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    acc = Fraction(0)
                    for coeff in reversed(ints):
                        acc = acc * cand + coeff
                    if acc == 0:
                        roots.add(cand)
    return sorted(roots)


# -- decomposition ------------------------------------------------------------

def _fitting_split(m: Module, f: ModuleMorphism) -> tuple[Module, Module] | None:
    """Split M = ker f^d + im f^d if proper, else None."""
    alg = m.alg
    d = m.total_dim
    power = f
    for _ in range(max(d - 1, 0)):
        power = power.compose(f)
    k, _ = kernel(power)
    if 0 < k.total_dim < d:
        i, _, _ = image(power)
        return k, i
    return None


def _is_nilpotent(field, a: list[list]) -> bool:
    d = len(a)
    p = a
    k = 1
    while k < d:
        p = linalg.matmul(field, p, p)
        k *= 2
    return all(x == 0 for row in p for x in row)


def local_radical_basis(m: Module, ends: list[ModuleMorphism] | None = None
                        ) -> list[ModuleMorphism]:
    """Basis of rad End(M), certified; requires End(M) local with End/rad = k.

    Every End-basis element must have a single eigenvalue lying in the field
    (b - c id nilpotent), and the span N of the nilpotent parts must be
    closed under multiplication.  Then N is a nil subalgebra of codimension
    one, hence the radical, and End(M) is local.  Raises
    DecompositionFailure when the certificate does not apply.
    """
    fd = m.alg.field
    if ends is None:
        ends = hom_basis(m, m)
    nil_parts: list[ModuleMorphism] = []
    for b in ends:
        total = _total_matrix(b)
        poly = minimal_polynomial(fd, total)
        roots = rational_eigenvalues(fd, poly)
        shifted = None
        for c in roots:
            cand = b.add(identity_morphism(m).scale(fd.neg(c))) if c != 0 else b
            if _is_nilpotent(fd, _total_matrix(cand)):
                shifted = cand
                break
        if shifted is None:
            raise DecompositionFailure(
                "endomorphism with no rational single eigenvalue; "
                "End(M) is not local split over the base field")
        nil_parts.append(shifted)
    flat = [n.flatten() for n in nil_parts]
    reduced = linalg.row_space_reduce(fd, [f for f in flat if any(x != 0 for x in f)])
    if len(reduced) != len(ends) - 1:
        raise DecompositionFailure("nilpotent parts do not span a hyperplane of End(M)")
    # multiplicative closure of the nilpotent span
    span_rows = reduced
    for a in nil_parts:
        for b in nil_parts:
            prod = a.compose(b).flatten()
            if any(x != 0 for x in prod) and not linalg.in_row_span(fd, span_rows, prod):
                raise DecompositionFailure(
                    "nilpotent parts are not multiplicatively closed; "
                    "cannot certify End(M) local")
    # return morphisms matching the reduced basis
    out = []
    for row in reduced:
        out.append(morphism_from_flat(m, m, list(row)))
    return out


def certify_local_end(m: Module, ends: list[ModuleMorphism]) -> bool:
    try:
        local_radical_basis(m, ends)
        return True
    except DecompositionFailure:
        return False


def decompose(m: Module) -> list[Module]:
    """Indecomposable direct summands of M (with multiplicity, deterministic).

    Strategy: Fitting splits along End-basis elements and pairwise sums,
    shifted by the rational eigenvalues of their minimal polynomials.  If
    nothing splits, indecomposability is certified by dim End/rad = 1;
    otherwise DecompositionFailure.
    """
    if m.is_zero:
        return []
    ends = hom_basis(m, m)
    if len(ends) == 1:
        return [m]
    fd = m.alg.field
    candidates = list(ends)
    for i in range(len(ends)):
        for j in range(i + 1, len(ends)):
            candidates.append(ends[i].add(ends[j]))
    for f in candidates:
        poly = minimal_polynomial(fd, _total_matrix(f))
        for c in [fd.zero] + rational_eigenvalues(fd, poly):
            shifted = f.add(identity_morphism(m).scale(fd.neg(c))) if c != 0 else f
            split = _fitting_split(m, shifted)
            if split is not None:
                a, b = split
                return decompose(a) + decompose(b)
    if certify_local_end(m, ends):
        return [m]
    raise DecompositionFailure(
        f"cannot split module with dim vector {m.dims} and "
        f"dim End = {len(ends)}")


def is_indecomposable(m: Module) -> bool:
    return len(decompose(m)) == 1


def _invertible_in_homs(homs: list[ModuleMorphism]) -> ModuleMorphism | None:
    for f in homs:
        if f.is_invertible():
            return f
    return None


def indec_isomorphic(m: Module, n: Module) -> bool:
    """Isomorphism test, COMPLETE only for indecomposable inputs.

    For indecomposables the non-isomorphisms form a subspace of Hom, so an
    isomorphism exists iff some basis element is one.
    """
    if m.dims != n.dims:
        return False
    return _invertible_in_homs(hom_basis(m, n)) is not None


def is_isomorphic(m: Module, n: Module) -> bool:
    """Isomorphism test for arbitrary finite-dimensional modules."""
    if m.alg is not n.alg:
        raise AlgebraMismatch("isomorphism test across algebras")
    if m.dims != n.dims:
        return False
    if _invertible_in_homs(hom_basis(m, n)) is not None:
        return True
    ms, ns = decompose(m), decompose(n)
    if len(ms) == 1 and len(ns) == 1:
        return False  # both indecomposable and the basis scan found nothing
    return _match_summands(ms, ns)


def _match_summands(ms: list[Module], ns: list[Module]) -> bool:
    if len(ms) != len(ns):
        return False
    used = [False] * len(ns)
    for a in ms:
        for k, b in enumerate(ns):
            if not used[k] and indec_isomorphic(a, b):
                used[k] = True
                break
        else:
            return False
    return True


def find_isomorphism(m: Module, n: Module) -> ModuleMorphism | None:
    """An explicit isomorphism, or None.

    Basis scan first; for decomposable modules a structured integer grid
    over the Hom basis is searched (complete because the determinant of a
    generic combination is a polynomial of degree <= total dimension in each
    coefficient, and the grid has more points per axis than that degree).
    """
    if m.dims != n.dims:
        return None
    homs = hom_basis(m, n)
    direct = _invertible_in_homs(homs)
    if direct is not None:
        return direct
    if not is_isomorphic(m, n):
        return None
    fd = m.alg.field
    d = m.total_dim
    grid = [fd.of(k) for k in range(d + 2)]
    if len(grid) ** len(homs) > 2_000_000:
        raise DecompositionFailure(
            "isomorphism search grid too large; modules are isomorphic but "
            "no explicit map was constructed")
    for point in itertools.product(grid, repeat=len(homs)):
        f = homs[0].scale(point[0])
        for c, h in zip(point[1:], homs[1:]):
            f = f.add(h.scale(c))
        if f.is_invertible():
            return f
    raise DecompositionFailure("isomorphic modules but grid found no isomorphism")


# -- iso-class registry --------------------------------------------------------

class IsoClassRegistry:
    """First-seen numbering of indecomposable iso-classes.

    Also memoizes nothing else; higher-level caches live in Context.
    """

    def __init__(self, alg: Algebra):
        self.alg = alg
        self.reps: list[Module] = []
        self._by_dims: dict[tuple[int, ...], list[int]] = {}

    def __len__(self):
        return len(self.reps)

    def rep(self, i: int) -> Module:
        return self.reps[i]

    def find(self, m: Module) -> int | None:
        """Id of the class of an indecomposable module, if registered."""
        for i in self._by_dims.get(m.dims, []):
            if indec_isomorphic(self.reps[i], m):
                return i
        return None

    def register(self, m: Module) -> int:
        found = self.find(m)
        if found is not None:
            return found
        self.reps.append(m)
        idx = len(self.reps) - 1
        self._by_dims.setdefault(m.dims, []).append(idx)
        return idx
