import random

import pytest

from brownalg import albert, linalg
from brownalg.albert import tits
from brownalg.cayley import CDAlgebra
from brownalg.errors import (
    ArityMismatch,
    CarrierMismatch,
    FormNotInvariant,
    NotOrderTwo,
    NotUnitNorm,
    ZeroParameter,
)
from brownalg.fields import Fp, Q
from brownalg.involutions import (
    Catalog,
    conjugate_involution,
    fixed_subalgebra,
    grade_decompose,
    isotope_automorphism_check,
    make_canonical_t,
    make_t,
    make_t_star,
    make_theta_tits,
    make_torus_element,
    make_uv_bridge,
    outer_fixed_condition,
    tits_phi_map,
    verify_conjugacy_transport,
)
from brownalg.linmaps import ALBERT, LinMap, dagger, identity_map, is_aut_member


def cat7():
    return Catalog(Fp(7))


# -- octonion level ------------------------------------------------------------

def test_f_minus_e_order_two_fixed_dim_4():
    c = CDAlgebra.split_octonions(Fp(7))
    t = make_canonical_t(c)
    assert t.compose(t).is_identity()
    fix = t.fixed_space()
    assert len(fix) == 4
    # fixed subspace is the quaternion base: closed under mul and conj
    f = c.field
    rows, piv = linalg.row_space_rref(fix, f)
    for u in fix:
        assert linalg.in_span(rows, piv, c.conj_raw(u), f)
        for v in fix:
            assert linalg.in_span(rows, piv, c.mul_raw(u, v), f)


def test_make_t_rejects_non_unit_norm():
    c = CDAlgebra.split_octonions(Q())
    with pytest.raises(NotUnitNorm):
        make_t(c, [2, 0, 0, 1])  # det 2
    with pytest.raises(NotUnitNorm):
        make_t(c, c.element([1, 0, 0, 1, 1, 0, 0, 0]))  # not in the base


def test_f_p_composition():
    c = CDAlgebra.split_octonions(Fp(7))
    base = c.base_algebra()
    p = base.element([2, 0, 0, 4])  # det 8 = 1 mod 7
    q = base.element([3, 0, 0, 5])  # det 15 = 1 mod 7
    fp, fq = make_t(c, p), make_t(c, q)
    pq = base.mul_raw(p.coords, q.coords)
    assert fp.compose(fq).matrix == make_t(c, base.element(pq)).matrix


def test_t_star_is_automorphism_with_default_ordering():
    c = CDAlgebra.split_octonions(Fp(7))
    t = make_t_star(c)
    assert t.basis_tag == c.descriptor  # identity ordering accepted
    assert t.compose(t).is_identity()
    fix = t.fixed_space()
    assert len(fix) == 4
    f = c.field
    rows, piv = linalg.row_space_rref(fix, f)
    for u in fix:
        assert linalg.in_span(rows, piv, c.conj_raw(u), f)
        for v in fix:
            assert linalg.in_span(rows, piv, c.mul_raw(u, v), f)


def test_g2_torus_matches_displayed_diagonal():
    c = CDAlgebra.split_octonions(Fp(11))
    f = c.field
    rng = random.Random(0)
    for _ in range(10):
        eta, nu = f.sample_nonzero(rng), f.sample_nonzero(rng)
        m = make_torus_element(c, (eta, nu), "G2")
        en = f.mul(eta, nu)
        expect = (
            f.one(), en, f.inv(en), f.one(),
            f.inv(nu), eta, f.inv(eta), nu,
        )
        for i in range(8):
            for j in range(8):
                want = expect[i] if i == j else f.zero()
                assert m.matrix[i][j] == want


def test_g2_torus_composition_and_order():
    c = CDAlgebra.split_octonions(Fp(7))
    t1 = make_torus_element(c, (2, 3), "G2")
    t2 = make_torus_element(c, (3, 2), "G2")
    t12 = make_torus_element(c, (6, 6), "G2")
    assert t1.compose(t2).matrix == t12.matrix
    assert make_torus_element(c, (1, -1), "G2").order_divides_two()
    assert make_torus_element(c, (-1, -1), "G2").order_divides_two()
    assert not make_torus_element(c, (2, 1), "G2").order_divides_two()


def test_torus_errors():
    c = CDAlgebra.split_octonions(Fp(7))
    with pytest.raises(ZeroParameter):
        make_torus_element(c, (0, 1), "G2")
    with pytest.raises(ArityMismatch):
        make_torus_element(c, (1, 1, 1), "G2")
    jt = tits(Fp(7))
    with pytest.raises(ArityMismatch):
        make_torus_element(jt, (1, 1), "F4")
    with pytest.raises(CarrierMismatch):
        make_torus_element(jt, (1, 1), "G2")


# -- albert level ----------------------------------------------------------------

def test_lifted_t_hat():
    cat = cat7()
    that = cat.t_on_j()
    assert is_aut_member(that, cat.J)
    assert that.compose(that).is_identity()
    assert len(that.fixed_space()) == 15


def test_make_s_action_and_fixed_dim():
    cat = cat7()
    s = cat.s_on_j()
    assert s.compose(s).is_identity()
    assert len(s.fixed_space()) == 11
    # coordinate action (xi; a, -b, -c)
    f = cat.field
    rng = random.Random(1)
    for _ in range(10):
        x = cat.J.sample(rng)
        img = s.apply(x.coords)
        expect = x.coords[:11] + tuple(f.neg(v) for v in x.coords[11:])
        assert img == expect


def test_s_fixed_space_is_beth():
    cat = cat7()
    s = cat.s_on_j()
    fix = s.fixed_space()
    beth = [b.coords for b in albert.beth_basis(cat.J)]
    assert linalg.same_span(fix, beth, cat.field)


def test_e6_torus_element_orders():
    jt = tits(Fp(7))
    t1 = make_torus_element(jt, (1, 1, 1, 1, 1, 1), "E6")
    assert t1.is_identity()
    t2 = make_torus_element(jt, (1, 1, 1, 1, -1, 1), "E6")
    assert not t2.is_identity() and t2.order_divides_two()
    # over Q: order divides 2 iff every parameter squares to 1
    jq = tits(Q())
    assert not make_torus_element(jq, (2, 1, 1, 1, 1, 1), "E6").order_divides_two()
    assert make_torus_element(jq, (-1, -1, 1, 1, 1, -1), "E6").order_divides_two()


def test_e6_torus_composition_coordinatewise():
    jt = tits(Fp(11))
    a = (2, 3, 4, 5, 6, 7)
    b = (3, 3, 2, 2, 5, 5)
    f = jt.field
    ab = tuple(f.mul(x, y) for x, y in zip(a, b))
    lhs = make_torus_element(jt, a, "E6").compose(make_torus_element(jt, b, "E6"))
    assert lhs.matrix == make_torus_element(jt, ab, "E6").matrix


def test_theta_tits_order_two_and_norm():
    jt = tits(Fp(7))
    th = make_theta_tits(jt)
    assert th.compose(th).is_identity()
    rng = random.Random(2)
    for _ in range(20):
        x = jt.sample(rng)
        assert jt.norm_raw(th.apply(x.coords)) == jt.norm_raw(x.coords)


def test_theta_dagger_inverts_torus():
    """theta . dagger(phi(u,v,w)) . theta = phi(u,v,w)^-1 on diagonal triples."""
    jt = tits(Fp(7))
    th = make_theta_tits(jt)
    f = jt.field
    rng = random.Random(3)
    for _ in range(12):
        params = tuple(f.sample_nonzero(rng) for _ in range(6))
        t = make_torus_element(jt, params, "E6")
        lhs = th.compose(dagger(t, jt)).compose(th)
        assert lhs.matrix == t.inverse_map().matrix


def test_dagger_of_tits_phi_is_swap():
    """Trace-form dagger of phi(u,v,w) equals phi(v,u,w) exactly."""
    jt = tits(Fp(7))
    f = jt.field
    rng = random.Random(4)
    ident = albert.mat3_identity(f)
    for _ in range(6):
        # unimodular diagonal triples
        d = [tuple(f.sample_nonzero(rng) for _ in range(2)) for _ in range(3)]
        mats = []
        for x1, x2 in d:
            x3 = f.inv(f.mul(x1, x2))
            zero = f.zero()
            mats.append(((x1, zero, zero), (zero, x2, zero), (zero, zero, x3)))
        u, v, w = mats
        phi = tits_phi_map(jt, u, v, w)
        assert dagger(phi, jt).matrix == tits_phi_map(jt, v, u, w).matrix


# -- fixed subalgebras on B ------------------------------------------------------

def test_fixed_dims_catalog_on_brown():
    cat = cat7()
    b = cat.B
    s_hat = b.lift_aut(cat.s_on_j())
    t_hat = b.lift_aut(cat.t_on_j())
    w = b.varpi()
    cases = {
        "s": (s_hat, 24),
        "t": (t_hat, 32),
        "varpi": (w, 28),
        "t.varpi": (t_hat.compose(w), 28),
        "s.varpi": (s_hat.compose(w), 28),
    }
    for name, (m, dim) in cases.items():
        rep = fixed_subalgebra(m, b)
        assert rep.dimension == dim, name
        assert rep.product_closed, name
        assert rep.involution_closed, name


def test_fixed_dims_on_albert():
    cat = cat7()
    assert fixed_subalgebra(cat.s_on_j(), cat.J).dimension == 11
    assert fixed_subalgebra(cat.t_on_j(), cat.J).dimension == 15


def test_fixed_subalgebra_requires_involutive():
    cat = cat7()
    f = cat.field
    cols = [cat.J.phi_lambda_raw(f.from_int(2), b.coords) for b in cat.J.basis()]
    phi2 = LinMap(tuple(tuple(cols[j][i] for j in range(27)) for i in range(27)),
                  f, ALBERT, cat.J.basis_tag)
    with pytest.raises(NotOrderTwo):
        fixed_subalgebra(phi2, cat.J)


# -- gradings ---------------------------------------------------------------------

def test_grade_decompose_identity():
    cat = cat7()
    ident = identity_map(cat.field, ALBERT, cat.J.basis_tag)
    plus, minus = grade_decompose(ident, cat.J)
    assert len(plus) == 27 and len(minus) == 0


def test_grade_decompose_s():
    cat = cat7()
    plus, minus = grade_decompose(cat.s_on_j(), cat.J)
    assert (len(plus), len(minus)) == (11, 16)


def test_grade_decompose_t_hat():
    cat = cat7()
    plus, minus = grade_decompose(cat.t_on_j(), cat.J)
    assert (len(plus), len(minus)) == (15, 12)


def test_grade_decompose_rejects_similarity_form():
    cat = cat7()
    f = cat.field
    cols = [cat.J.nu_g_raw(f.from_int(2), b.coords) for b in cat.J.basis()]
    nu = LinMap(tuple(tuple(cols[j][i] for j in range(27)) for i in range(27)),
                f, ALBERT, cat.J.basis_tag)
    with pytest.raises(NotOrderTwo):
        grade_decompose(nu, cat.J)
    s = cat.s_on_j()
    bad_form = tuple(
        tuple(f.one() if i == j and i == 0 else f.zero() for j in range(27))
        for i in range(27)
    )
    with pytest.raises(FormNotInvariant):
        grade_decompose(s, cat.J, form=bad_form)


# -- conjugacy transport ------------------------------------------------------------

def test_conjugacy_transport_on_j():
    cat = cat7()
    rng = random.Random(5)
    for t in (cat.s_on_j(), cat.t_on_j()):
        for _ in range(6):
            g = cat.random_j_automorphism(rng)
            t2 = conjugate_involution(g, t)
            assert len(t2.fixed_space()) == len(t.fixed_space())
            assert verify_conjugacy_transport(g, t, t2)


def test_transport_fails_for_unrelated_involutions():
    cat = cat7()
    ident = identity_map(cat.field, ALBERT, cat.J.basis_tag)
    assert not verify_conjugacy_transport(ident, cat.s_on_j(), cat.t_on_j())


def test_uv_bridge_is_a_conjugacy_transport_on_brown():
    """The Brown lift of U_V transports fix(varpi) onto fix(s.varpi)."""
    cat = cat7()
    b = cat.B
    g = b.lift_inv(make_uv_bridge(cat.J))
    w = b.varpi()
    sw = b.lift_aut(cat.s_on_j()).compose(w)
    assert verify_conjugacy_transport(g, w, sw)


# -- U_V bridge ----------------------------------------------------------------------

def test_uv_bridge_properties():
    for field in (Fp(7), Q()):
        cat = Catalog(field)
        uv = make_uv_bridge(cat.J)
        s = cat.s_on_j()
        assert uv.compose(uv).matrix == s.matrix
        dag = dagger(uv, cat.J)
        assert dag.matrix == uv.inverse_map().matrix
        b = cat.B
        lifted = b.lift_inv(uv)
        w = b.varpi()
        s_hat = b.lift_aut(s)
        fix_w = fixed_subalgebra(w, b).basis
        fix_sw = fixed_subalgebra(s_hat.compose(w), b).basis
        image = [lifted.apply(v) for v in fix_w]
        assert linalg.same_span(list(image), list(fix_sw), field)


# -- outer fixed condition -------------------------------------------------------------

def test_outer_fixed_condition():
    cat = cat7()
    s = cat.s_on_j()
    ident = identity_map(cat.field, ALBERT, cat.J.basis_tag)
    assert outer_fixed_condition(ident, s, cat.J)
    # an automorphism commuting with s passes (dagger = itself)
    that = cat.t_on_j()
    assert s.compose(that).matrix == that.compose(s).matrix
    assert outer_fixed_condition(that, s, cat.J)
    # a generic unit-norm U_x fails
    rng = random.Random(6)
    x = cat.J.sample_norm_one(rng)
    ux = LinMap(cat.J.uop_matrix(x.coords), cat.field, ALBERT, cat.J.basis_tag)
    assert not outer_fixed_condition(ux, s, cat.J)


# -- isotope automorphisms ---------------------------------------------------------------

def test_isotope_automorphism_trivial_and_s():
    cat = cat7()
    e = cat.J.unit()
    assert isotope_automorphism_check(e, e)
    sprime = cat.J.diag(1, -1, -1)
    assert isotope_automorphism_check(sprime, e)


def test_isotope_automorphism_searched_pair():
    """Deterministic small search over diagonal x and y != e with
    (U_x U_y)^2 = id; the found pair passes the isotope check."""
    cat = cat7()
    alg = cat.J
    f = cat.field
    found = None
    for dx in ((1, -1, -1), (1, 1, -1), (-1, -1, -1)):
        for dy in ((-1, -1, -1), (2, 4, 1), (-1, 1, 1)):
            x, y = alg.diag(*dx), alg.diag(*dy)
            if y.coords == alg.unit().coords:
                continue
            if not alg.norm_raw(x.coords) or not alg.norm_raw(y.coords):
                continue
            m = linalg.mat_mul(alg.uop_matrix(x.coords), alg.uop_matrix(y.coords), f)
            if linalg.mat_mul(m, m, f) == linalg.identity(27, f):
                found = (x, y)
                break
        if found:
            break
    assert found is not None
    assert isotope_automorphism_check(*found)


# -- descriptors ---------------------------------------------------------------------------

def test_descriptor_realization():
    cat = cat7()
    s_b = cat.realize_involution("s", "B")
    assert fixed_subalgebra(s_b, cat.B).dimension == 24
    t_b = cat.realize_involution("t", "B")
    assert fixed_subalgebra(t_b, cat.B).dimension == 32
    w = cat.realize_involution("varpi", "B")
    assert fixed_subalgebra(w, cat.B).dimension == 28
    tw = cat.realize_involution("t.varpi", "B")
    assert fixed_subalgebra(tw, cat.B).dimension == 28
    sj = cat.realize_involution("s", "J")
    assert sj.matrix == cat.s_on_j().matrix


def test_descriptor_torus():
    cat = cat7()
    m = cat.realize_involution("t:1,1,1,1,-1,1", "J")
    assert m.order_divides_two()
    mb = cat.realize_involution("t:1,1,1,1,-1,1.varpi", "B")
    assert mb.order_divides_two()
    with pytest.raises(NotOrderTwo):
        cat.realize_involution("t:1,1,1,1,1,1", "B")


def test_descriptor_errors():
    cat = cat7()
    with pytest.raises(ValueError):
        cat.realize("nonsense", "J")
    with pytest.raises(ValueError):
        cat.realize("varpi", "J")
    with pytest.raises(CarrierMismatch):
        cat.realize("s.t:1,1,1,1,-1,1", "J")
