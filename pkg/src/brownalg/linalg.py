"""Exact linear algebra over Q and F_p.

Matrices are tuples of row tuples of raw field values.  Prime-field paths are
routed through the selected kernel backend; rational paths run the generic
Fraction code.
"""

from __future__ import annotations

from .fields import PRIME, FieldSpec
from .kernels import mod_mat_mul, mod_mat_vec, mod_rref


def identity(n: int, field: FieldSpec):
    one, zero = field.one(), field.zero()
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def zero_matrix(m: int, n: int, field: FieldSpec):
    zero = field.zero()
    return tuple(tuple(zero for _ in range(n)) for _ in range(m))


def transpose(a):
    return tuple(zip(*a))


def mat_mul(a, b, field: FieldSpec):
    if field.kind == PRIME:
        return mod_mat_mul(a, b, field.p)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a, v, field: FieldSpec):
    if field.kind == PRIME:
        return mod_mat_vec(a, v, field.p)
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_add(u, v, field: FieldSpec):
    return tuple(field.add(a, b) for a, b in zip(u, v))

def vec_sub(u, v, field: FieldSpec):
    return tuple(field.sub(a, b) for a, b in zip(u, v))

def vec_scale(c, v, field: FieldSpec):
    return tuple(field.mul(c, a) for a in v)

def vec_dot(u, v, field: FieldSpec):
    acc = field.zero()
    for a, b in zip(u, v):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc


def rref(a, field: FieldSpec):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    if field.kind == PRIME:
        return mod_rref(a, field.p)
    rows = [list(r) for r in a]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if rows[i][c]), -1)
        if pr < 0:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [v * inv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rr = rows[r]
                rows[i] = [vi - f * vr for vi, vr in zip(rows[i], rr)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(a, field: FieldSpec) -> int:
    return len(rref(a, field)[1])


def nullspace(a, field: FieldSpec):
    """Basis of {v : a v = 0}, one vector per free column."""
    rows, pivots = rref(a, field)
    n = len(a[0]) if a else 0
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = []
    one, zero = field.one(), field.zero()
    for fc in free:
        v = [zero] * n
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(rows[r][fc])
        basis.append(tuple(v))
    return basis


def inverse(a, field: FieldSpec):
    """Exact inverse; returns None when singular."""
    n = len(a)
    aug = tuple(tuple(a[i]) + identity(n, field)[i] for i in range(n))
    rows, pivots = rref(aug, field)
    if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) != n:
        return None
    return tuple(r[n:] for r in rows[:n])


def solve_right(a, b, field: FieldSpec):
    """Solve a X = b for square invertible a (b a matrix); None if singular."""
    n = len(a)
    k = len(b[0])
    aug = tuple(tuple(a[i]) + tuple(b[i]) for i in range(n))
    rows, pivots = rref(aug, field)
    if tuple(pivots[:n]) != tuple(range(n)):
        return None
    return tuple(r[n : n + k] for r in rows[:n])


def row_space_rref(vectors, field: FieldSpec):
    """RREF basis of the span of the given vectors (zero rows dropped)."""
    if not vectors:
        return ()
    rows, pivots = rref(tuple(vectors), field)
    return rows[: len(pivots)], pivots


def in_span(rref_rows, pivots, v, field: FieldSpec) -> bool:
    """Membership of v in a row space presented in RREF."""
    w = list(v)
    if field.kind == PRIME:
        p = field.p
        for row, pc in zip(rref_rows, pivots):
            f = w[pc]
            if f:
                w = [(wi - f * ri) % p for wi, ri in zip(w, row)]
    else:
        for row, pc in zip(rref_rows, pivots):
            f = w[pc]
            if f:
                w = [wi - f * ri for wi, ri in zip(w, row)]
    return not any(w)


def same_span(vecs_a, vecs_b, field: FieldSpec) -> bool:
    ra, pa = row_space_rref(vecs_a, field) if vecs_a else ((), ())
    rb, pb = row_space_rref(vecs_b, field) if vecs_b else ((), ())
    return ra == rb


def mat_pow(a, k: int, field: FieldSpec):
    n = len(a)
    out = identity(n, field)
    base = a
    while k:
        if k & 1:
            out = mat_mul(out, base, field)
        base = mat_mul(base, base, field)
        k >>= 1
    return out
