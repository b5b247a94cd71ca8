import random
from fractions import Fraction

from brownalg import _modkernel_py, kernels, linalg
from brownalg.fields import Fp, Q
from brownalg.kernels import BACKEND, MulTable


def _random_matrix(rng, m, n, p):
    return tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(m))


def test_backend_reports():
    assert BACKEND in ("compiled", "pure")


def test_rref_known():
    f = Q()
    a = ((Fraction(1), Fraction(2)), (Fraction(2), Fraction(4)))
    rows, pivots = linalg.rref(a, f)
    assert pivots == (0,)
    assert rows[0] == (Fraction(1), Fraction(2))
    assert not any(rows[1])


def test_inverse_round_trip_q():
    f = Q()
    a = (
        (Fraction(2), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(3)),
        (Fraction(1), Fraction(0), Fraction(1)),
    )
    ai = linalg.inverse(a, f)
    assert linalg.mat_mul(a, ai, f) == linalg.identity(3, f)


def test_inverse_singular_returns_none():
    f = Fp(7)
    a = ((1, 2), (2, 4))
    assert linalg.inverse(a, f) is None


def test_nullspace_dimension_theorem():
    rng = random.Random(3)
    f = Fp(11)
    for _ in range(12):
        a = _random_matrix(rng, 6, 9, 11)
        r = linalg.rank(a, f)
        ns = linalg.nullspace(a, f)
        assert r + len(ns) == 9
        for v in ns:
            assert not any(linalg.mat_vec(a, v, f))


def test_mod_backends_agree():
    """Active backend and the pure twin produce identical results."""
    rng = random.Random(0)
    p = 101
    for _ in range(10):
        a = _random_matrix(rng, 8, 8, p)
        b = _random_matrix(rng, 8, 8, p)
        assert kernels.mod_mat_mul(a, b, p) == _modkernel_py.mat_mul(a, b, p)
        assert kernels.mod_rref(a, p) == _modkernel_py.rref(a, p)
        v = tuple(rng.randrange(p) for _ in range(8))
        assert kernels.mod_mat_vec(a, v, p) == _modkernel_py.mat_vec(a, v, p)


def test_bilinear_apply_backends_agree():
    rng = random.Random(1)
    n, p = 9, 13
    entries = [
        (rng.randrange(n), rng.randrange(n), rng.randrange(n), rng.randrange(1, p))
        for _ in range(60)
    ]
    table = MulTable(n, entries)
    ti, tj, tk, tc = zip(*entries)
    for _ in range(10):
        x = tuple(rng.randrange(p) for _ in range(n))
        y = tuple(rng.randrange(p) for _ in range(n))
        got = table.apply(x, y, Fp(p))
        ref = _modkernel_py.bilinear_apply(ti, tj, tk, tc, x, y, n, p)
        assert got == ref


def test_multable_generic_matches_mod():
    """Same table evaluated over Q with integer inputs reduces to the F_p result."""
    rng = random.Random(2)
    n, p = 6, 7
    entries = [
        (rng.randrange(n), rng.randrange(n), rng.randrange(n), rng.randrange(1, p))
        for _ in range(25)
    ]
    tq = MulTable(n, [(i, j, k, Fraction(c)) for i, j, k, c in entries])
    tp = MulTable(n, entries)
    for _ in range(8):
        x = tuple(rng.randrange(p) for _ in range(n))
        y = tuple(rng.randrange(p) for _ in range(n))
        over_q = tq.apply(tuple(map(Fraction, x)), tuple(map(Fraction, y)), Q())
        assert tuple(int(v) % p for v in over_q) == tp.apply(x, y, Fp(p))


def test_left_matrix_consistent_with_apply():
    rng = random.Random(4)
    n, p = 8, 11
    entries = [
        (rng.randrange(n), rng.randrange(n), rng.randrange(n), rng.randrange(1, p))
        for _ in range(40)
    ]
    table = MulTable(n, entries)
    f = Fp(p)
    x = tuple(rng.randrange(p) for _ in range(n))
    m = table.left_matrix(x, f)
    for _ in range(5):
        y = tuple(rng.randrange(p) for _ in range(n))
        assert linalg.mat_vec(m, y, f) == table.apply(x, y, f)


def test_in_span_and_same_span():
    f = Fp(7)
    vecs = [(1, 2, 3, 0), (0, 1, 1, 1)]
    rows, pivots = linalg.row_space_rref(vecs, f)
    combo = tuple((3 * a + 2 * b) % 7 for a, b in zip(*vecs))
    assert linalg.in_span(rows, pivots, combo, f)
    assert not linalg.in_span(rows, pivots, (1, 0, 0, 0), f)
    assert linalg.same_span(vecs, [combo, vecs[0]], f)
