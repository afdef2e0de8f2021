"""Dense exact linear algebra over a FieldSpec.

Matrices are lists of row lists of field elements.  Pivoting is "first
nonzero from the left, first candidate row from the top", so every result
(echelon forms, kernels, solutions) is deterministic for a given input.
The scale here is tiny (corpus matrices stay under ~50 rows) so no effort
is spent on asymptotics; correctness and reproducibility only.
"""
from __future__ import annotations

from .fields import FieldSpec


def zeros(field: FieldSpec, rows: int, cols: int) -> list[list]:
    z = field.zero
    return [[z] * cols for _ in range(rows)]


def identity(field: FieldSpec, n: int) -> list[list]:
    m = zeros(field, n, n)
    for i in range(n):
        m[i][i] = field.one
    return m


def copy_matrix(m: list[list]) -> list[list]:
    return [row[:] for row in m]


def shape(m: list[list]) -> tuple[int, int]:
    return (len(m), len(m[0]) if m else 0)


def matmul(field: FieldSpec, a: list[list], b: list[list]) -> list[list]:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"matmul shape mismatch {ra}x{ca} * {rb}x{cb}")
    out = zeros(field, ra, cb)
    for i in range(ra):
        arow = a[i]
        orow = out[i]
        for k in range(ca):
            aik = arow[k]
            if aik == 0:
                continue
            brow = b[k]
            for j in range(cb):
                if brow[j] != 0:
                    orow[j] = field.add(orow[j], field.mul(aik, brow[j]))
    return out


def mat_add(field: FieldSpec, a, b):
    return [[field.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(field: FieldSpec, a, b):
    return [[field.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(field: FieldSpec, c, a):
    return [[field.mul(c, x) for x in row] for row in a]


def mat_neg(field: FieldSpec, a):
    return [[field.neg(x) for x in row] for row in a]


def transpose(m: list[list]) -> list[list]:
    rows, cols = shape(m)
    return [[m[i][j] for i in range(rows)] for j in range(cols)]


def mat_vec(field: FieldSpec, m: list[list], v: list) -> list:
    rows, cols = shape(m)
    out = [field.zero] * rows
    for i in range(rows):
        acc = field.zero
        row = m[i]
        for j in range(cols):
            if row[j] != 0 and v[j] != 0:
                acc = field.add(acc, field.mul(row[j], v[j]))
        out[i] = acc
    return out


def hstack(blocks: list[list[list]]) -> list[list]:
    rows = len(blocks[0])
    for b in blocks:
        if len(b) != rows:
            raise ValueError("hstack row mismatch")
    return [sum((b[i] for b in blocks), []) for i in range(rows)]


def vstack(blocks: list[list[list]]) -> list[list]:
    out = []
    for b in blocks:
        out.extend(copy_matrix(b))
    return out


def block_diag(field: FieldSpec, blocks: list[list[list]]) -> list[list]:
    total_r = sum(len(b) for b in blocks)
    total_c = sum(shape(b)[1] for b in blocks)
    out = zeros(field, total_r, total_c)
    r0 = c0 = 0
    for b in blocks:
        br, bc = shape(b)
        for i in range(br):
            out[r0 + i][c0:c0 + bc] = b[i][:]
        r0 += br
        c0 += bc
    return out


def rref(field: FieldSpec, m: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    m = copy_matrix(m)
    rows, cols = shape(m)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(field: FieldSpec, m: list[list]) -> int:
    if not m or not m[0]:
        return 0
    return len(rref(field, m)[1])


def nullspace(field: FieldSpec, m: list[list]) -> list[list]:
    """Basis of the right kernel {v : m v = 0}, as a list of vectors.

    The basis is the standard rref one: free columns in increasing order,
    each basis vector has a 1 in its free column.
    """
    rows, cols = shape(m)
    if cols == 0:
        return []
    if rows == 0:
        return [row[:] for row in identity(field, cols)]
    red, pivots = rref(field, m)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [field.zero] * cols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(red[r][fc])
        basis.append(v)
    return basis


def solve(field: FieldSpec, m: list[list], b: list) -> list | None:
    """One solution of m x = b, or None if inconsistent (deterministic)."""
    rows, cols = shape(m)
    aug = [m[i][:] + [b[i]] for i in range(rows)]
    red, pivots = rref(field, aug)
    for r in range(len(pivots)):
        if pivots[r] == cols:
            return None  # pivot in the constant column
    x = [field.zero] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def solve_matrix(field: FieldSpec, m: list[list], b: list[list]) -> list[list] | None:
    """Solve m X = b columnwise; None if any column is inconsistent."""
    rows, cols = shape(m)
    br, bc = shape(b)
    if br != rows:
        raise ValueError("solve_matrix shape mismatch")
    xcols = []
    for j in range(bc):
        col = [b[i][j] for i in range(rows)]
        x = solve(field, m, col)
        if x is None:
            return None
        xcols.append(x)
    return transpose(xcols) if xcols else zeros(field, cols, 0)


def column_space_basis(field: FieldSpec, m: list[list]) -> list[list]:
    """Deterministic basis of the column space, as column vectors."""
    rows, cols = shape(m)
    _, pivots = rref(field, m)
    return [[m[i][c] for i in range(rows)] for c in pivots]


def row_space_reduce(field: FieldSpec, vectors: list[list]) -> list[list]:
    """Echelonized basis of the span of the given vectors (rows)."""
    if not vectors:
        return []
    red, pivots = rref(field, vectors)
    return [red[i] for i in range(len(pivots))]


def in_row_span(field: FieldSpec, basis_rref: list[list], v: list) -> bool:
    """Is v in the span of an already-echelonized row basis?"""
    v = v[:]
    for row in basis_rref:
        pc = next((j for j, x in enumerate(row) if x != 0), None)
        if pc is None:
            continue
        if v[pc] != 0:
            f = field.div(v[pc], row[pc])
            v = [field.sub(x, field.mul(f, y)) for x, y in zip(v, row)]
    return all(x == 0 for x in v)


def is_invertible(field: FieldSpec, m: list[list]) -> bool:
    rows, cols = shape(m)
    return rows == cols and rank(field, m) == rows


def inverse(field: FieldSpec, m: list[list]) -> list[list]:
    rows, cols = shape(m)
    if rows != cols:
        raise ValueError("inverse of non-square matrix")
    aug = hstack([m, identity(field, rows)]) if rows else []
    red, pivots = rref(field, aug)
    if len(pivots) != rows or any(p >= rows for p in pivots):
        raise ValueError("matrix is singular")
    return [row[rows:] for row in red]


def complement_basis(field: FieldSpec, inside: list[list], dim: int) -> list[list]:
    """Coordinate vectors completing span(inside) to the full space k^dim.

    Deterministic: standard basis vectors are tried in index order and kept
    when independent from the running span.
    """
    span = row_space_reduce(field, [v[:] for v in inside])
    chosen = []
    for i in range(dim):
        e = [field.zero] * dim
        e[i] = field.one
        if not in_row_span(field, span, e):
            chosen.append(e)
            span = row_space_reduce(field, span + [e])
    return chosen
