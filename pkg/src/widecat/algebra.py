"""Bound path algebras kQ/I.

A presentation is a quiver plus admissible relations; `build_algebra` turns
it into a concrete finite-dimensional algebra with

* a deterministic path basis (sorted by length, then lexicographically by
  arrow labels, then by source vertex),
* a reduction map expressing any path in that basis,
* structure constants for products of basis paths.

Relation handling is degreewise row reduction: the two-sided ideal generated
by the relations is spanned by prefix*relation*suffix products, and every
product whose homogeneous components fit under the working length bound is
echelonized against a fixed monomial order (leading term = longest path,
ties broken lexicographically).  This is exact whenever the ideal is graded
by path length (monomial or length-homogeneous relations, as in every
shipped corpus algebra).  For mixed-length relations a reduction requiring
intermediate terms beyond the bound could in principle be missed; the
finite-dimensionality certificate below is unaffected (it only uses that
the generated rows really lie in the ideal), so the failure mode would be
an overcounted basis, never a silently wrong finite-dimensionality claim.

Finite-dimensionality certificate: if every path one longer than the longest
surviving basis path reduces into shorter ones, then by induction (multiply
a reducible prefix on the right) so does every longer path, and the basis is
complete for all degrees.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import linalg
from .errors import InconsistentRelation, NonAdmissible, NotFiniteDimensional, UnknownVertex
from .fields import FieldSpec, QQ

# A path is (source_vertex_index, tuple_of_arrow_indices_in_application_order):
# the first arrow of the tuple is applied first.  The trivial path at v is
# (v, ()).
Path = tuple[int, tuple[int, ...]]

_MAX_FREE_PATHS = 200_000


@dataclass(frozen=True)
class Arrow:
    label: str
    source: int
    target: int


@dataclass(frozen=True)
class QuiverPresentation:
    """Plain data: vertex labels, arrows, relations, field, length bound.

    A relation is a tuple of terms; a term is (coefficient_string, arrows)
    with arrows a tuple of arrow labels in application order (first applied
    first).  Coefficients are rational strings like '1', '-2', '3/2'.
    """

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...] = ()  # (label, source_label, target_label)
    relations: tuple[tuple[tuple[str, tuple[str, ...]], ...], ...] = ()
    field: FieldSpec = QQ
    path_length_bound: int = 12

    def canonical_text(self) -> str:
        """Stable serialization used for cache keys."""
        chunks = [f"field {self.field.name()}", f"bound {self.path_length_bound}"]
        for v in self.vertices:
            chunks.append(f"vertex {v}")
        for lab, s, t in self.arrows:
            chunks.append(f"arrow {lab} : {s} -> {t}")
        for rel in self.relations:
            terms = []
            for coeff, labels in rel:
                terms.append(coeff + " " + "*".join(reversed(labels)))
            chunks.append("relation " + " + ".join(terms))
        return "\n".join(chunks) + "\n"


class Algebra:
    """A bound path algebra with a fixed basis of paths.

    Not constructed directly; use `build_algebra`.
    """

    def __init__(self, presentation: QuiverPresentation):
        self.presentation = presentation
        self.field = presentation.field
        self.vertex_labels = list(presentation.vertices)
        self.n = len(self.vertex_labels)
        self._vertex_index = {v: i for i, v in enumerate(self.vertex_labels)}
        if len(self._vertex_index) != self.n:
            raise UnknownVertex("duplicate vertex label")
        self.arrows: list[Arrow] = []
        self._arrow_index: dict[str, int] = {}
        for lab, s, t in presentation.arrows:
            if s not in self._vertex_index:
                raise UnknownVertex(f"arrow {lab}: unknown source vertex {s!r}")
            if t not in self._vertex_index:
                raise UnknownVertex(f"arrow {lab}: unknown target vertex {t!r}")
            if lab in self._arrow_index or lab in self._vertex_index:
                raise InconsistentRelation(f"duplicate label {lab!r}")
            self._arrow_index[lab] = len(self.arrows)
            self.arrows.append(Arrow(lab, self._vertex_index[s], self._vertex_index[t]))
        self._relations = [self._check_relation(r) for r in presentation.relations]
        self._build_basis()
        self._mult_memo: dict[tuple[int, int], dict[int, object]] = {}

    # ----- presentation checks ------------------------------------------

    def _check_relation(self, rel) -> list[tuple[object, tuple[int, ...]]]:
        if not rel:
            raise InconsistentRelation("empty relation")
        terms = []
        endpoints = None
        for coeff_str, labels in rel:
            if len(labels) < 2:
                raise NonAdmissible(
                    "relation term of length < 2 (relations must lie in the "
                    "square of the arrow ideal)")
            idxs = []
            for lab in labels:
                if lab not in self._arrow_index:
                    raise InconsistentRelation(f"unknown arrow {lab!r} in relation")
                idxs.append(self._arrow_index[lab])
            for a, b in zip(idxs, idxs[1:]):
                if self.arrows[a].target != self.arrows[b].source:
                    raise InconsistentRelation(
                        f"arrows {self.arrows[a].label}, {self.arrows[b].label} "
                        "do not compose")
            ep = (self.arrows[idxs[0]].source, self.arrows[idxs[-1]].target)
            if endpoints is None:
                endpoints = ep
            elif endpoints != ep:
                raise InconsistentRelation("relation terms are not parallel")
            coeff = self.field.of(Fraction(coeff_str))
            if coeff != 0:
                terms.append((coeff, tuple(idxs)))
        if not terms:
            raise InconsistentRelation("relation is identically zero")
        return terms

    # ----- path combinatorics -------------------------------------------

    def path_source(self, p: Path) -> int:
        return p[0]

    def path_target(self, p: Path) -> int:
        src, arrs = p
        return self.arrows[arrs[-1]].target if arrs else src

    def _path_sort_key(self, p: Path):
        src, arrs = p
        return (len(arrs), tuple(self.arrows[a].label for a in arrs), src)

    def _build_basis(self) -> None:
        bound = self.presentation.path_length_bound
        by_length: list[list[Path]] = [[(v, ()) for v in range(self.n)]]
        total = self.n
        for length in range(1, bound + 1):
            nxt: list[Path] = []
            for p in by_length[-1]:
                t = self.path_target(p)
                for ai, a in enumerate(self.arrows):
                    if a.source == t:
                        nxt.append((p[0], p[1] + (ai,)))
            total += len(nxt)
            if total > _MAX_FREE_PATHS:
                raise NotFiniteDimensional(
                    f"more than {_MAX_FREE_PATHS} paths below length {length}; "
                    "missing or insufficient relations?")
            by_length.append(nxt)
            if not nxt:
                break
        all_paths = [p for layer in by_length for p in layer]
        # Monomial order: descending, so column 0 is the greatest path and
        # rref pivots are leading terms.
        all_paths.sort(key=self._path_sort_key, reverse=True)
        col_of = {p: i for i, p in enumerate(all_paths)}

        rows = []
        zero = self.field.zero
        for terms in self._relations:
            min_len = min(len(t[1]) for t in terms)
            for pre in all_paths:
                pre_len = len(pre[1])
                if pre_len + min_len > bound:
                    continue
                for coeff0, rel_arrs in terms:
                    src_needed = self.arrows[rel_arrs[0]].source
                    break
                if self.path_target(pre) != src_needed:
                    continue
                rel_tgt = self.arrows[terms[0][1][-1]].target
                for post in all_paths:
                    if self.path_source(post) != rel_tgt:
                        continue
                    tot_max = pre_len + len(post[1]) + max(len(t[1]) for t in terms)
                    if tot_max > bound:
                        continue
                    vec = [zero] * len(all_paths)
                    for coeff, rel_arrs in terms:
                        prod: Path = (pre[0], pre[1] + rel_arrs + post[1])
                        vec[col_of[prod]] = self.field.add(vec[col_of[prod]], coeff)
                    rows.append(vec)
        reduced = linalg.row_space_reduce(self.field, rows) if rows else []
        lead_cols = set()
        for r in reduced:
            for j, x in enumerate(r):
                if x != 0:
                    lead_cols.add(j)
                    break

        survivors = [p for i, p in enumerate(all_paths) if i not in lead_cols]
        max_len = max((len(p[1]) for p in survivors), default=0)
        if max_len >= bound:
            raise NotFiniteDimensional(
                f"paths of length {bound} survive reduction at the length "
                f"bound {bound}; the algebra is infinite-dimensional or the "
                "bound is too small")

        self._all_paths = all_paths
        self._col_of = col_of
        self._ideal_rows = reduced
        self.basis: list[Path] = sorted(survivors, key=self._path_sort_key)
        self.path_pos = {p: i for i, p in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.max_path_length = max_len
        self._by_src_tgt: dict[tuple[int, int], list[int]] = {}
        for i, p in enumerate(self.basis):
            key = (self.path_source(p), self.path_target(p))
            self._by_src_tgt.setdefault(key, []).append(i)
        self._reduce_memo: dict[Path, dict[int, object]] = {}

    # ----- reduction and multiplication ----------------------------------

    def paths_from_to(self, v: int, w: int) -> list[int]:
        """Basis indices of paths from vertex v to vertex w (sorted)."""
        return self._by_src_tgt.get((v, w), [])

    def trivial_path_index(self, v: int) -> int:
        return self.path_pos[(v, ())]

    def reduce_path(self, p: Path) -> dict[int, object]:
        """Expand a path (not necessarily short) in the basis.

        Returns a sparse {basis_index: coefficient} dict.
        """
        if p in self._reduce_memo:
            return self._reduce_memo[p]
        src, arrs = p
        if len(arrs) <= self.presentation.path_length_bound:
            out = self._reduce_enumerated(p)
        else:
            # Split off a reducible prefix; every path strictly longer than
            # the longest basis path reduces into shorter ones.
            cut = self.max_path_length + 1
            prefix: Path = (src, arrs[:cut])
            rest = arrs[cut:]
            out: dict[int, object] = {}
            for bi, c in self._reduce_enumerated(prefix).items():
                bp = self.basis[bi]
                sub = self.reduce_path((bp[0], bp[1] + rest))
                for bj, c2 in sub.items():
                    acc = self.field.add(out.get(bj, self.field.zero), self.field.mul(c, c2))
                    if acc == 0:
                        out.pop(bj, None)
                    else:
                        out[bj] = acc
        self._reduce_memo[p] = out
        return out

    def _reduce_enumerated(self, p: Path) -> dict[int, object]:
        col = self._col_of.get(p)
        if col is None:
            return {}
        vec = [self.field.zero] * len(self._all_paths)
        vec[col] = self.field.one
        for row in self._ideal_rows:
            lead = next(j for j, x in enumerate(row) if x != 0)
            if vec[lead] != 0:
                f = self.field.div(vec[lead], row[lead])
                vec = [self.field.sub(x, self.field.mul(f, y)) for x, y in zip(vec, row)]
        out = {}
        for j, x in enumerate(vec):
            if x != 0:
                out[self.path_pos[self._all_paths[j]]] = x
        return out

    def mult(self, i: int, j: int) -> dict[int, object]:
        """Product basis[i] * basis[j] = "apply path j, then path i"."""
        key = (i, j)
        if key in self._mult_memo:
            return self._mult_memo[key]
        pi, pj = self.basis[i], self.basis[j]
        if self.path_target(pj) != self.path_source(pi):
            out: dict[int, object] = {}
        else:
            out = self.reduce_path((pj[0], pj[1] + pi[1]))
        self._mult_memo[key] = out
        return out

    def arrow_times_path(self, arrow_idx: int, path_basis_idx: int) -> dict[int, object]:
        """Left multiplication of a basis path by one arrow (sparse result)."""
        p = self.basis[path_basis_idx]
        if self.path_target(p) != self.arrows[arrow_idx].source:
            return {}
        return self.reduce_path((p[0], p[1] + (arrow_idx,)))

    def path_times_arrow(self, path_basis_idx: int, arrow_idx: int) -> dict[int, object]:
        """Right multiplication: (path) * (arrow) = apply arrow first."""
        p = self.basis[path_basis_idx]
        a = self.arrows[arrow_idx]
        if a.target != self.path_source(p):
            return {}
        return self.reduce_path((a.source, (arrow_idx,) + p[1]))

    def path_label(self, i: int) -> str:
        src, arrs = self.basis[i]
        if not arrs:
            return f"e_{self.vertex_labels[src]}"
        return "*".join(self.arrows[a].label for a in reversed(arrs))

    def __repr__(self):
        return (f"Algebra({len(self.vertex_labels)} vertices, "
                f"{len(self.arrows)} arrows, dim {self.dim}, "
                f"field {self.field.name()})")


def build_algebra(presentation: QuiverPresentation) -> Algebra:
    """Validate a presentation and construct the bound path algebra."""
    return Algebra(presentation)
