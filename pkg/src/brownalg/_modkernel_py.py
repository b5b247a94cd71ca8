"""Pure-Python mod-p kernels; signature-compatible twin of the Cython
extension `brownalg._modkernel`.  All matrices are tuples of row tuples of
ints in [0, p), tables are parallel index/coefficient sequences."""


def bilinear_apply(ti, tj, tk, tc, x, y, n_out, p):
    out = [0] * n_out
    for e in range(len(ti)):
        xv = x[ti[e]]
        if xv:
            yv = y[tj[e]]
            if yv:
                out[tk[e]] += tc[e] * xv * yv
    return tuple(v % p for v in out)


def mat_mul(a, b, p):
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % p for col in bt) for row in a
    )


def mat_vec(a, v, p):
    return tuple(sum(x * y for x, y in zip(row, v)) % p for row in a)


def rref(a, p):
    """Reduced row echelon form mod p; returns (rows, pivot_columns)."""
    rows = [list(r) for r in a]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        pr = -1
        for i in range(r, m):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri, rr = rows[i], rows[r]
                rows[i] = [(ri[j] - f * rr[j]) % p for j in range(n)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return tuple(tuple(row) for row in rows), tuple(pivots)
