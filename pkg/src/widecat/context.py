"""Per-algebra computation context.

Owns the iso-class registry and every cache keyed by class ids: Hom bases,
Ext^1 dimensions, minimal presentations, the AR translate tables, and
generated-subcategory membership.  Enumeration of all indecomposables runs
once, breadth-first from the projectives (then injectives), closing under
radical summands, both AR translates, almost-split middle terms, and socle
quotients; a budget caps the number of iso classes so representation-infinite
input fails fast instead of spinning.

Caches are plain dicts; values are deterministic, so a rare duplicated
computation under concurrent access is harmless.
"""
from __future__ import annotations

from . import linalg
from .algebra import Algebra
from .errors import BudgetExceeded
from .homology import Presentation, ar_translate, ar_translate_inverse, ext1_dim, minimal_presentation
from .modules import (IsoClassRegistry, Module, ModuleMorphism, cokernel,
                      decompose, hom_basis, injective_module,
                      projective_module, radical_inclusion, socle_vectors,
                      zero_module)

DEFAULT_BUDGET = 10_000


class Context:
    def __init__(self, alg: Algebra, budget: int = DEFAULT_BUDGET,
                 snapshot: dict | None = None):
        self.alg = alg
        self.budget = budget
        self.registry = IsoClassRegistry(alg)
        self.projective_ids: list[int] = []
        self.injective_ids: list[int] = []
        self._hom: dict[tuple[int, int], list[ModuleMorphism]] = {}
        self._ext: dict[tuple[int, int], int] = {}
        self._pres: dict[int, Presentation] = {}
        self._tau: dict[int, int | None] = {}
        self._tau_inv: dict[int, int | None] = {}
        self._gen: dict[frozenset, frozenset] = {}
        self._labels: dict[int, str] = {}
        self.memo: dict = {}  # cross-module cache (reductions, tables)
        if snapshot is None:
            self._enumerate()
            self._fill_translate_tables()
            self._fill_labels()
        else:
            self._restore(snapshot)

    def _restore(self, snap: dict) -> None:
        """Rebuild the registry and tables from a stored enumeration."""
        for k, m in enumerate(snap["modules"]):
            if self._register(m) != k:
                raise ValueError("stored module list has duplicate classes")
        self.projective_ids = list(snap["projective_ids"])
        self.injective_ids = list(snap["injective_ids"])
        if len(self.projective_ids) != self.alg.n or len(self.injective_ids) != self.alg.n:
            raise ValueError("stored projective/injective id lists have wrong length")
        for v in range(self.alg.n):
            if self.registry.find(projective_module(self.alg, v)) != self.projective_ids[v]:
                raise ValueError("stored projective ids are wrong")
            if self.registry.find(injective_module(self.alg, v)) != self.injective_ids[v]:
                raise ValueError("stored injective ids are wrong")
        self._tau = dict(enumerate(snap["tau"]))
        self._tau_inv = dict(enumerate(snap["tau_inv"]))
        self._labels = dict(enumerate(snap["labels"]))
        n = len(self.registry)
        if not (len(self._tau) == len(self._tau_inv) == len(self._labels) == n):
            raise ValueError("stored tables do not match the module count")

    # -- enumeration -----------------------------------------------------

    def _register(self, m: Module) -> int:
        idx = self.registry.register(m)
        if len(self.registry) > self.budget:
            raise BudgetExceeded(
                f"more than {self.budget} indecomposable classes; "
                "raise the budget if the algebra really is this large")
        return idx

    def _socle_quotient(self, m: Module) -> Module:
        soc = socle_vectors(m)
        dims = [len(soc[v]) for v in range(self.alg.n)]
        if sum(dims) == 0:
            return zero_module(self.alg)
        incls = {v: linalg.transpose(soc[v]) if soc[v] else
                 [[] for _ in range(m.dims[v])] for v in range(self.alg.n)}
        sub = Module(self.alg, dims, {})  # socle: all arrows act by zero
        inc = ModuleMorphism(sub, m, incls)
        return cokernel(inc)[0]

    def _enumerate(self) -> None:
        from .arquiver import almost_split_sequence
        for v in range(self.alg.n):
            self.projective_ids.append(self._register(projective_module(self.alg, v)))
        for v in range(self.alg.n):
            self.injective_ids.append(self._register(injective_module(self.alg, v)))
        i = 0
        while i < len(self.registry):
            m = self.registry.rep(i)
            produced: list[Module] = []
            produced.extend(decompose(radical_inclusion(m)[0]))
            tinv = ar_translate_inverse(m)
            produced.extend(decompose(tinv))
            if not tinv.is_zero:
                produced.extend(decompose(almost_split_sequence(m).middle))
            produced.extend(decompose(ar_translate(m)))
            produced.extend(decompose(self._socle_quotient(m)))
            for piece in produced:
                self._register(piece)
            i += 1

    def _fill_translate_tables(self) -> None:
        for i in range(len(self.registry)):
            t = decompose(ar_translate(self.registry.rep(i)))
            if not t:
                self._tau[i] = None
            else:
                assert len(t) == 1, "AR translate of an indecomposable split"
                self._tau[i] = self.registry.find(t[0])
                assert self._tau[i] is not None, "translate escaped enumeration"
            ti = decompose(ar_translate_inverse(self.registry.rep(i)))
            if not ti:
                self._tau_inv[i] = None
            else:
                assert len(ti) == 1
                self._tau_inv[i] = self.registry.find(ti[0])
                assert self._tau_inv[i] is not None

    def _fill_labels(self) -> None:
        for k, i in enumerate(self.projective_ids):
            self._labels.setdefault(i, f"P{self.alg.vertex_labels[k]}")
        for k, i in enumerate(self.injective_ids):
            self._labels.setdefault(i, f"I{self.alg.vertex_labels[k]}")
        for i in range(len(self.registry)):
            dims = self.registry.rep(i).dims
            if sum(dims) == 1:
                v = dims.index(1)
                self._labels.setdefault(i, f"S{self.alg.vertex_labels[v]}")
        for i in range(len(self.registry)):
            self._labels.setdefault(i, f"M{i}")

    # -- accessors ---------------------------------------------------------

    def ind_count(self) -> int:
        return len(self.registry)

    def ind_ids(self) -> list[int]:
        return list(range(len(self.registry)))

    def rep(self, i: int) -> Module:
        return self.registry.rep(i)

    def dims(self, i: int) -> tuple[int, ...]:
        return self.registry.rep(i).dims

    def label(self, i: int) -> str:
        return self._labels[i]

    def id_of(self, m: Module) -> int | None:
        """Class id of an indecomposable module, if enumerated."""
        return self.registry.find(m)

    def hom(self, i: int, j: int) -> list[ModuleMorphism]:
        key = (i, j)
        if key not in self._hom:
            self._hom[key] = hom_basis(self.registry.rep(i), self.registry.rep(j))
        return self._hom[key]

    def hom_dim(self, i: int, j: int) -> int:
        return len(self.hom(i, j))

    def pres(self, i: int) -> Presentation:
        if i not in self._pres:
            self._pres[i] = minimal_presentation(self.registry.rep(i))
        return self._pres[i]

    def ext1(self, i: int, j: int) -> int:
        key = (i, j)
        if key not in self._ext:
            self._ext[key] = ext1_dim(self.registry.rep(i), self.registry.rep(j),
                                      self.pres(i))
        return self._ext[key]

    def tau(self, i: int) -> int | None:
        return self._tau[i]

    def tau_inv(self, i: int) -> int | None:
        return self._tau_inv[i]

    def is_projective(self, i: int) -> bool:
        return i in self.projective_ids

    def is_injective(self, i: int) -> bool:
        return i in self.injective_ids

    # -- generated subcategories -------------------------------------------

    def gen_members(self, gens: frozenset[int]) -> frozenset[int]:
        """Ids of indecomposables lying in Gen(direct sum of the given classes)."""
        gens = frozenset(gens)
        if gens in self._gen:
            return self._gen[gens]
        out = set()
        glist = sorted(gens)
        for x in range(len(self.registry)):
            target = self.registry.rep(x)
            ok = True
            for v in range(self.alg.n):
                if target.dims[v] == 0:
                    continue
                cols = []
                for g in glist:
                    for f in self.hom(g, x):
                        cols.extend([[f.mats[v][r][c] for r in range(target.dims[v])]
                                     for c in range(f.source.dims[v])])
                if len(linalg.row_space_reduce(self.alg.field, cols)) < target.dims[v]:
                    ok = False
                    break
            if ok:
                out.add(x)
        res = frozenset(out)
        self._gen[gens] = res
        return res


def build_context(alg: Algebra, budget: int = DEFAULT_BUDGET) -> Context:
    return Context(alg, budget)
