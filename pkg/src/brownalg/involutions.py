"""Catalog of order-2 maps on the algebra tower, fixed-point subalgebras,
gradings, conjugacy transport, and the descriptor language.

Octonion-level generators: f_p (second doubling half multiplied by a
unit-norm base quaternion p), c_w (conjugation of both halves by an
invertible base quaternion), and the anti-diagonal pair-swap t*.
Albert-level: lifts of octonion automorphisms, the diagonal-sign map
s = U_{diag(1,-1,-1)}, the transpose-and-swap map on the Tits model, torus
elements, and the U_V bridge between the varpi and s.varpi fixed algebras.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .albert import AlbertAlgebra, AlbertElem, hermitian, tits
from .brown import BrownAlgebra
from .cayley import CDAlgebra, CompElem, find_skew_unit
from .errors import (
    ArityMismatch,
    CarrierMismatch,
    FormNotInvariant,
    ModelMismatch,
    NotAutomorphism,
    NotNormPreserving,
    NotOrderTwo,
    NotUnitNorm,
    NoValidOrdering,
    SingularElement,
    ZeroParameter,
)
from .fields import FieldSpec
from . import linalg
from .linmaps import (
    ALBERT,
    BROWN,
    OCT,
    LinMap,
    dagger,
    from_columns,
    identity_map,
    is_aut_member,
    norm_preserving_sampled,
)

import random


# -- octonion-level automorphisms -------------------------------------------

def is_oct_automorphism(m: LinMap, octonions: CDAlgebra) -> bool:
    if m.carrier != OCT:
        raise CarrierMismatch("octonion automorphism check needs an oct8 map")
    if m.apply(octonions.unit_coords) != octonions.unit_coords:
        return False
    f = octonions.field
    one, zero = f.one(), f.zero()
    basis = [tuple(one if k == i else zero for k in range(8)) for i in range(8)]
    images = [m.apply(b) for b in basis]
    for i in range(8):
        for j in range(8):
            if m.apply(octonions.mul_raw(basis[i], basis[j])) != octonions.mul_raw(
                images[i], images[j]
            ):
                return False
    return True


def _oct_tag(octonions: CDAlgebra) -> str:
    return octonions.descriptor


def _base_of(octonions: CDAlgebra) -> CDAlgebra:
    if octonions.dim != 8:
        raise ValueError("need a dimension-8 composition algebra")
    return octonions.base_algebra()


def _as_base_coords(octonions: CDAlgebra, p) -> tuple:
    base = _base_of(octonions)
    if isinstance(p, CompElem):
        if p.algebra == base:
            return p.coords
        if p.algebra == octonions:
            if any(p.coords[4:]):
                raise NotUnitNorm("element does not lie in the quaternion base")
            return p.coords[:4]
        raise CarrierMismatch("element of an unrelated algebra")
    return base.element(p).coords


def make_t(octonions: CDAlgebra, p) -> LinMap:
    """f_p(a1, a2) = (a1, p a2) for p in the quaternion base with q(p) = 1;
    an octonion automorphism, of order 2 iff p^2 = e."""
    base = _base_of(octonions)
    pc = _as_base_coords(octonions, p)
    if base.qnorm_raw(pc) != octonions.field.one():
        raise NotUnitNorm("f_p needs q(p) = 1")
    f = octonions.field
    zero = f.zero()
    lm = base.left_mul_matrix(pc)
    rows = []
    for i in range(8):
        row = [zero] * 8
        if i < 4:
            row[i] = f.one()
        else:
            for j in range(4):
                row[4 + j] = lm[i - 4][j]
        rows.append(tuple(row))
    m = LinMap(tuple(rows), f, OCT, _oct_tag(octonions))
    if not is_oct_automorphism(m, octonions):
        raise NotAutomorphism("f_p failed the automorphism check")
    return m


def conj_by(octonions: CDAlgebra, w) -> LinMap:
    """c_w(a1, a2) = (w a1 w^-1, w a2 w^-1) for invertible w in the base."""
    base = _base_of(octonions)
    wc = _as_base_coords(octonions, w)
    f = octonions.field
    qw = base.qnorm_raw(wc)
    if not qw:
        raise ZeroParameter("conjugation needs an invertible base element")
    qi = f.inv(qw)
    winv = tuple(f.mul(qi, v) for v in base.conj_raw(wc))
    cols = []
    for i in range(8):
        half, pos = divmod(i, 4)
        e = [f.zero()] * 4
        e[pos] = f.one()
        img = base.mul_raw(base.mul_raw(wc, tuple(e)), winv)
        col = [f.zero()] * 8
        for k in range(4):
            col[4 * half + k] = img[k]
        cols.append(tuple(col))
    m = from_columns(cols, f, OCT, _oct_tag(octonions))
    if not is_oct_automorphism(m, octonions):
        raise NotAutomorphism("c_w failed the automorphism check")
    return m


def make_t_star(octonions: CDAlgebra) -> LinMap:
    """The anti-diagonal pair swap on both doubling halves.  If the displayed
    matrix is not an automorphism in the default ordering, search within-block
    basis permutations (lexicographically first success)."""
    f = octonions.field
    one, zero = f.one(), f.zero()
    trial_orders = itertools.product(
        itertools.permutations(range(4)), itertools.permutations(range(4))
    )
    for s1, s2 in trial_orders:
        rows = [[zero] * 8 for _ in range(8)]
        for t in range(4):
            rows[s1[3 - t]][s1[t]] = one
            rows[4 + s2[3 - t]][4 + s2[t]] = one
        m = LinMap(tuple(tuple(r) for r in rows), f, OCT, _oct_tag(octonions))
        if is_oct_automorphism(m, octonions):
            if (s1, s2) != (tuple(range(4)), tuple(range(4))):
                m = LinMap(
                    m.matrix, f, OCT,
                    f"{_oct_tag(octonions)}:tstar-order={''.join(map(str, s1))}|{''.join(map(str, s2))}",
                )
            return m
    raise NoValidOrdering(
        "no within-block ordering makes the anti-diagonal map an automorphism; "
        "the composition algebra is probably not the default split model"
    )


def make_canonical_t(octonions: CDAlgebra) -> LinMap:
    """f_{-e}: negate the second doubling half; fixes the quaternion base."""
    return make_t(octonions, [-1, 0, 0, -1] if octonions.split_base else [-1, 0, 0, 0])


# -- albert-level maps --------------------------------------------------------

def lift_c_to_j(t: LinMap, albert: AlbertAlgebra) -> LinMap:
    """t-hat(xi; a, b, c) = (xi; t a, t b, t c)."""
    if albert.model != "her":
        raise ModelMismatch("octonion lifts live on the Hermitian model")
    if t.carrier != OCT:
        raise CarrierMismatch("lift_c_to_j needs an octonion-space map")
    if not is_oct_automorphism(t, albert.octonions):
        raise NotAutomorphism("lift_c_to_j needs an octonion automorphism")
    f = albert.field
    one, zero = f.one(), f.zero()
    rows = [[zero] * 27 for _ in range(27)]
    for i in range(3):
        rows[i][i] = one
    for blk in range(3):
        off = 3 + 8 * blk
        for i in range(8):
            for j in range(8):
                rows[off + i][off + j] = t.matrix[i][j]
    return LinMap(tuple(tuple(r) for r in rows), f, ALBERT, albert.basis_tag)


def make_s(albert: AlbertAlgebra) -> LinMap:
    """U_{diag(1,-1,-1)}: (xi; a, b, c) -> (xi; a, -b, -c); fixes beth."""
    if albert.model != "her":
        raise ModelMismatch("s lives on the Hermitian model")
    sprime = albert.diag(1, -1, -1)
    return LinMap(albert.uop_matrix(sprime.coords), albert.field, ALBERT, albert.basis_tag)


def make_theta_tits(albert: AlbertAlgebra) -> LinMap:
    """theta(a0, a1, a2) = (a0^T, a2^T, a1^T) on the first Tits construction."""
    if albert.model != "tits":
        raise ModelMismatch("theta lives on the first Tits construction")
    if albert.varsigma != albert.field.one():
        raise ModelMismatch("theta needs varsigma = 1")
    f = albert.field
    one, zero = f.one(), f.zero()
    part_image = {0: 0, 1: 2, 2: 1}
    rows = [[zero] * 27 for _ in range(27)]
    for r in range(3):
        for p in range(3):
            for q in range(3):
                src = 9 * r + 3 * p + q
                dst = 9 * part_image[r] + 3 * q + p
                rows[dst][src] = one
    return LinMap(tuple(tuple(r) for r in rows), f, ALBERT, albert.basis_tag)


def tits_phi_map(albert: AlbertAlgebra, u, v, w) -> LinMap:
    cols = []
    f = albert.field
    one, zero = f.one(), f.zero()
    for i in range(27):
        e = tuple(one if k == i else zero for k in range(27))
        cols.append(albert.tits_phi_raw(u, v, w, e))
    return from_columns(cols, f, ALBERT, albert.basis_tag)


def _diag3_det1(f, x1, x2):
    zero = f.zero()
    x3 = f.inv(f.mul(x1, x2))
    return ((x1, zero, zero), (zero, x2, zero), (zero, zero, x3))


def make_torus_element(algebra, params, level: str) -> LinMap:
    """Split-torus elements.  G2: c_{diag(eta nu, 1)} . f_{diag(nu^-1, nu)} on
    the octonions (matches the displayed diagonal).  F4: phi(U, U, V); E6:
    phi(U, V, W) with U, V, W = diag(x1, x2, (x1 x2)^-1)."""
    arity = {"G2": 2, "F4": 4, "E6": 6}.get(level)
    if arity is None:
        raise ValueError(f"unknown level {level!r}")
    f = algebra.field
    params = tuple(f.from_int(p) if isinstance(p, int) else p for p in params)
    if len(params) != arity:
        raise ArityMismatch(f"level {level} needs {arity} parameters, got {len(params)}")
    if any(not p for p in params):
        raise ZeroParameter("torus parameters must be nonzero")
    if level == "G2":
        if not isinstance(algebra, CDAlgebra) or algebra.dim != 8:
            raise CarrierMismatch("G2 torus lives on a dimension-8 composition algebra")
        eta, nu = params
        zero = f.zero()
        w = (f.mul(eta, nu), zero, zero, f.one())
        p = (f.inv(nu), zero, zero, nu)
        return conj_by(algebra, w).compose(make_t(algebra, _unitized(algebra, p)))
    if not isinstance(algebra, AlbertAlgebra) or algebra.model != "tits":
        raise CarrierMismatch("F4/E6 torus elements live on the first Tits construction")
    if level == "F4":
        u1, u2, v1, v2 = params
        u = _diag3_det1(f, u1, u2)
        v = _diag3_det1(f, v1, v2)
        return tits_phi_map(algebra, u, u, v)
    u1, u2, v1, v2, w1, w2 = params
    return tits_phi_map(
        algebra, _diag3_det1(f, u1, u2), _diag3_det1(f, v1, v2), _diag3_det1(f, w1, w2)
    )


def _unitized(octonions: CDAlgebra, p_coords):
    """Wrap base coordinates, verifying unit norm lazily in make_t."""
    return octonions.base_algebra().element(p_coords)


# -- fixed subalgebras and gradings -------------------------------------------

@dataclass(frozen=True)
class FixedSubalgebra:
    dimension: int
    basis: tuple
    product_closed: bool
    involution_closed: bool | None


def _context_product(phi: LinMap, context):
    if phi.carrier == ALBERT:
        if phi.basis_tag != context.basis_tag:
            raise CarrierMismatch("map and algebra bases differ")
        return context.jmul_raw, None
    if phi.carrier == BROWN:
        if phi.basis_tag != context.basis_tag:
            raise CarrierMismatch("map and algebra bases differ")
        return context.bmul_raw, context.binv_raw
    raise CarrierMismatch("fixed subalgebras live on Albert or Brown space")


def fixed_subalgebra(phi: LinMap, context) -> FixedSubalgebra:
    """Exact kernel of (phi - id) with closure verification under the carrier
    product (and the exchange involution on Brown space)."""
    if not phi.compose(phi).is_identity():
        raise NotOrderTwo("fixed subalgebras are computed for maps with phi^2 = id")
    product, involution = _context_product(phi, context)
    f = phi.field
    basis = phi.fixed_space()
    closed = True
    inv_closed = None
    if basis:
        rows, pivots = linalg.row_space_rref(basis, f)
        for i in range(len(basis)):
            for j in range(i, len(basis)):
                if not linalg.in_span(rows, pivots, product(basis[i], basis[j]), f):
                    closed = False
                    break
            if not closed:
                break
        if involution is not None:
            inv_closed = all(
                linalg.in_span(rows, pivots, involution(b), f) for b in basis
            )
    return FixedSubalgebra(len(basis), tuple(basis), closed, inv_closed)


def grade_decompose(phi: LinMap, context, form=None):
    """Eigenspace decomposition A = D + D-perp of an order <= 2 automorphism,
    with the form invariance and grading-law checks."""
    if not phi.compose(phi).is_identity():
        raise NotOrderTwo("grading needs phi^2 = id")
    product, _ = _context_product(phi, context)
    f = phi.field
    if form is None:
        if phi.carrier != ALBERT:
            raise ValueError("a bilinear Gram matrix is required on this carrier")
        form = context.gram
    n = phi.dim
    if linalg.rank(form, f) != n:
        raise FormNotInvariant("form is degenerate")
    m = phi.matrix
    if linalg.mat_mul(linalg.mat_mul(linalg.transpose(m), form, f), m, f) != form:
        raise FormNotInvariant("form is not invariant under the map")
    plus = phi.fixed_space()
    minus = phi.eigenspace(-1)
    if len(plus) + len(minus) != n:
        raise NotOrderTwo("eigenspaces do not fill the carrier (characteristic issue?)")
    spans = {}
    for name, part in (("+", plus), ("-", minus)):
        spans[name] = linalg.row_space_rref(part, f) if part else ((), ())
    law = {("+", "+"): "+", ("+", "-"): "-", ("-", "+"): "-", ("-", "-"): "+"}
    for (sa, sb), target in law.items():
        rows, pivots = spans[target]
        for va in {"+": plus, "-": minus}[sa]:
            for vb in {"+": plus, "-": minus}[sb]:
                prod = product(va, vb)
                if any(prod) and not linalg.in_span(rows, pivots, prod, f):
                    raise NotAutomorphism("grading law fails; map is not an algebra automorphism")
    return tuple(plus), tuple(minus)


def conjugate_involution(g: LinMap, t: LinMap) -> LinMap:
    if not t.compose(t).is_identity():
        raise NotOrderTwo("conjugation transport expects an order <= 2 map")
    return g.compose(t).compose(g.inverse_map())


def verify_conjugacy_transport(g: LinMap, t: LinMap, t2: LinMap) -> bool:
    """g maps fix(t) onto fix(t2), checked by containment both ways."""
    f = g.field
    fix_t = t.fixed_space()
    fix_t2 = t2.fixed_space()
    if len(fix_t) != len(fix_t2):
        return False
    rows2, piv2 = linalg.row_space_rref(fix_t2, f) if fix_t2 else ((), ())
    for v in fix_t:
        if not linalg.in_span(rows2, piv2, g.apply(v), f):
            return False
    gi = g.inverse_map()
    rows1, piv1 = linalg.row_space_rref(fix_t, f) if fix_t else ((), ())
    for v in fix_t2:
        if not linalg.in_span(rows1, piv1, gi.apply(v), f):
            return False
    return True


# -- the U_V bridge and outer fixed groups -------------------------------------

def make_uv_bridge(albert: AlbertAlgebra) -> LinMap:
    """U_V for V = h(1,0,0; v,0,0) with v found by exact lattice search:
    q(v) = -1, <v,e> = 0.  Then U_V^2 = s and the Brown lift carries the
    varpi-fixed algebra onto the (s.varpi)-fixed one."""
    if albert.model != "her":
        raise ModelMismatch("the U_V bridge lives on the Hermitian model")
    v = find_skew_unit(albert.octonions)
    z8 = [albert.field.zero()] * 8
    V = albert.her_element((1, 0, 0), v.coords, z8, z8)
    return LinMap(albert.uop_matrix(V.coords), albert.field, ALBERT, albert.basis_tag)


def outer_fixed_condition(delta: LinMap, phi: LinMap, albert: AlbertAlgebra) -> bool:
    """Membership test for the fixed group of (phi . varpi)-type involutions:
    phi delta phi = dagger(delta) as exact matrices."""
    if not phi.compose(phi).is_identity():
        raise NotOrderTwo("outer fixed condition needs phi^2 = id")
    if not norm_preserving_sampled(delta, albert, 30, seed=5):
        raise NotNormPreserving("delta must preserve the cubic norm")
    lhs = phi.compose(delta).compose(phi)
    return lhs.matrix == dagger(delta, albert).matrix


def isotope_automorphism_check(x: AlbertElem, y: AlbertElem) -> bool:
    """Whether U_x U_y (assumed order 2) is an automorphism of the y-isotope:
    multiplicative for {., y, .} and fixes the isotope unit y^-1."""
    alg = x.algebra
    if alg != y.algebra:
        raise ModelMismatch("x and y must live in the same view")
    f = alg.field
    nx, ny = alg.norm_raw(x.coords), alg.norm_raw(y.coords)
    if not nx or not ny:
        raise SingularElement("isotope check needs N(x) N(y) != 0")
    m = linalg.mat_mul(alg.uop_matrix(x.coords), alg.uop_matrix(y.coords), f)
    mm = LinMap(m, f, ALBERT, alg.basis_tag)
    if not mm.compose(mm).is_identity():
        raise NotOrderTwo("U_x U_y does not square to the identity")
    yinv = alg.jinv_raw(y.coords)
    if mm.apply(yinv) != yinv:
        return False
    one, zero = f.one(), f.zero()
    basis = [tuple(one if k == i else zero for k in range(27)) for i in range(27)]
    images = [mm.apply(b) for b in basis]
    for i in range(27):
        for j in range(i, 27):
            lhs = mm.apply(alg.triple_raw(basis[i], y.coords, basis[j]))
            if lhs != alg.triple_raw(images[i], y.coords, images[j]):
                return False
    return True


# -- catalog and descriptors ----------------------------------------------------

class Catalog:
    """Canonical algebras and named order-2 maps over one field.

    Hermitian-model atoms: "s", "t" (lift of f_{-e}), "t*", "varpi" (B only).
    Torus atoms: "t:eta,nu" (G2, lifted to J), "t:u1,u2,v1,v2" (F4) and
    "t:u1,...,w2" (E6) on the first Tits construction.  Composition with ".".
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self.octonions = CDAlgebra.split_octonions(field)
        self.J = hermitian(self.octonions)
        self.B = BrownAlgebra(self.J)
        self._Jt = None
        self._Bt = None
        self._cache = {}

    @property
    def Jt(self) -> AlbertAlgebra:
        if self._Jt is None:
            self._Jt = tits(self.field)
        return self._Jt

    @property
    def Bt(self) -> BrownAlgebra:
        if self._Bt is None:
            self._Bt = BrownAlgebra(self.Jt)
        return self._Bt

    def t_oct(self) -> LinMap:
        if "t_oct" not in self._cache:
            self._cache["t_oct"] = make_canonical_t(self.octonions)
        return self._cache["t_oct"]

    def t_star_oct(self) -> LinMap:
        if "t_star" not in self._cache:
            self._cache["t_star"] = make_t_star(self.octonions)
        return self._cache["t_star"]

    def s_on_j(self) -> LinMap:
        if "s" not in self._cache:
            self._cache["s"] = make_s(self.J)
        return self._cache["s"]

    def t_on_j(self) -> LinMap:
        if "t" not in self._cache:
            self._cache["t"] = lift_c_to_j(self.t_oct(), self.J)
        return self._cache["t"]

    def t_star_on_j(self) -> LinMap:
        if "t*j" not in self._cache:
            self._cache["t*j"] = lift_c_to_j(self.t_star_oct(), self.J)
        return self._cache["t*j"]

    def varpi(self, tits_model: bool = False) -> LinMap:
        return (self.Bt if tits_model else self.B).varpi()

    def _atom(self, text: str, space: str):
        text = text.strip()
        if ":" in text:
            name, _, arg = text.partition(":")
            if name != "t":
                raise ValueError(f"unknown parameterized descriptor {text!r}")
            params = [self.field.parse_scalar(tok) for tok in arg.split(",") if tok]
            if len(params) == 2:
                tor = make_torus_element(self.octonions, params, "G2")
                jmap = lift_c_to_j(tor, self.J)
                return ("her", jmap)
            level = {4: "F4", 6: "E6"}.get(len(params))
            if level is None:
                raise ArityMismatch("torus descriptors take 2, 4 or 6 parameters")
            return ("tits", make_torus_element(self.Jt, params, level))
        if text == "s":
            return ("her", self.s_on_j())
        if text == "t":
            return ("her", self.t_on_j())
        if text == "t*":
            return ("her", self.t_star_on_j())
        if text == "varpi":
            if space != "B":
                raise ValueError("varpi only acts on the Brown algebra")
            return ("varpi", None)
        raise ValueError(f"unknown descriptor atom {text!r}")

    def realize(self, descriptor: str, space: str) -> LinMap:
        """Realize a dotted descriptor on space "J" or "B"."""
        if space not in ("J", "B"):
            raise ValueError("space must be 'J' or 'B'")
        atoms = [self._atom(tok, space) for tok in descriptor.split(".") if tok]
        if not atoms:
            raise ValueError("empty descriptor")
        models = {m for m, _ in atoms if m != "varpi"}
        if len(models) > 1:
            raise CarrierMismatch("cannot mix Hermitian and Tits atoms in one descriptor")
        model = models.pop() if models else "her"
        jalg = self.J if model == "her" else self.Jt
        balg = self.B if model == "her" else self.Bt
        out = None
        for kind, jmap in atoms:
            if kind == "varpi":
                piece = balg.varpi()
            elif space == "J":
                piece = jmap
            else:
                piece = (
                    balg.lift_aut(jmap)
                    if is_aut_member(jmap, jalg)
                    else balg.lift_inv(jmap)
                )
            out = piece if out is None else out.compose(piece)
        return out

    def realize_involution(self, descriptor: str, space: str) -> LinMap:
        m = self.realize(descriptor, space)
        if m.is_identity() or not m.compose(m).is_identity():
            raise NotOrderTwo(f"descriptor {descriptor!r} does not have order 2")
        return m

    def random_j_automorphism(self, rng: random.Random) -> LinMap:
        """Random product of catalog automorphisms of J (for transport tests)."""
        f = self.field
        base = self.octonions.base_algebra()
        out = identity_map(f, ALBERT, self.J.basis_tag)
        for _ in range(3):
            kind = rng.randrange(3)
            if kind == 0:
                w = tuple(f.sample_raw(rng, 3) for _ in range(4))
                if not base.qnorm_raw(w):
                    continue
                out = out.compose(lift_c_to_j(conj_by(self.octonions, w), self.J))
            elif kind == 1:
                signs = [1 if rng.randrange(2) else -1 for _ in range(3)]
                d = self.J.diag(*signs)
                out = out.compose(
                    LinMap(self.J.uop_matrix(d.coords), f, ALBERT, self.J.basis_tag)
                )
            else:
                p23 = self.J.her_element((1, 0, 0), self.octonions.unit_coords,
                                         [f.zero()] * 8, [f.zero()] * 8)
                out = out.compose(
                    LinMap(self.J.uop_matrix(p23.coords), f, ALBERT, self.J.basis_tag)
                )
        return out
