"""Quaternion-algebra classification via Hilbert symbols, and the class-count
reports for the G2 / F4 / E6 involution catalogs over specific fields.

All local verdicts are computed on rational data with Legendre-symbol
formulas; no p-adic element arithmetic is ever performed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroArgument
from .fields import (
    ALG_CLOSED,
    INFINITE,
    PADIC,
    PRIME,
    REAL,
    FieldSpec,
    Infinite,
)


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _squarefree_int(a: Fraction) -> int:
    """Integer representative of the square class of a nonzero rational."""
    n = a.numerator * a.denominator
    out, d = 1, 2
    m = abs(n)
    while d * d <= m:
        while m % (d * d) == 0:
            m //= d * d
        if m % d == 0:
            out *= d
            m //= d
        d += 1
    out *= m
    return out if n > 0 else -out


def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def smallest_nonresidue(p: int) -> int:
    """Z_p: the smallest positive quadratic nonresidue mod p (odd p)."""
    for z in range(2, p):
        if _legendre(z, p) == -1:
            return z
    raise ValueError(f"no nonresidue mod {p}")


def _split_valuation(n: int, p: int):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def hilbert_symbol(a, b, place: FieldSpec) -> int:
    """(a, b)_v in {+1, -1}: local solubility of z^2 = a x^2 + b y^2."""
    a, b = _as_fraction(a), _as_fraction(b)
    if not a or not b:
        raise ZeroArgument("Hilbert symbol arguments must be nonzero")
    if place.kind == REAL:
        return -1 if (a < 0 and b < 0) else 1
    if place.kind != PADIC:
        raise ValueError("hilbert_symbol is defined at the real and p-adic places")
    p = place.p
    ai = _squarefree_int(a)
    bi = _squarefree_int(b)
    alpha, u = _split_valuation(ai, p)
    beta, v = _split_valuation(bi, p)
    if p != 2:
        sign = 1
        if alpha % 2 and beta % 2 and (p - 1) // 2 % 2:
            sign = -sign
        if beta % 2:
            sign *= _legendre(u, p)
        if alpha % 2:
            sign *= _legendre(v, p)
        return sign
    eps_u = (u - 1) // 2 % 2
    eps_v = (v - 1) // 2 % 2
    om_u = (u * u - 1) // 8 % 2
    om_v = (v * v - 1) // 8 % 2
    exp = eps_u * eps_v + alpha * om_v + beta * om_u
    return -1 if exp % 2 else 1


def hilbert_places(a, b):
    """Places where the symbol can be -1: the real place and primes dividing
    2ab (on square-free representatives)."""
    a, b = _as_fraction(a), _as_fraction(b)
    primes = {2}
    for x in (abs(_squarefree_int(a)), abs(_squarefree_int(b))):
        d = 2
        while d * d <= x:
            if x % d == 0:
                primes.add(d)
                while x % d == 0:
                    x //= d
            d += 1
        if x > 1:
            primes.add(x)
    return [FieldSpec(REAL)] + [FieldSpec(PADIC, p) for p in sorted(primes)]


@dataclass(frozen=True)
class QuatPresentation:
    """(a, b / k): i^2 = a, j^2 = b, ij = -ji; norm form <1, -a, -b, ab>."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))
        if not self.a or not self.b:
            raise ZeroArgument("structure constants must be nonzero")


def is_split(q: QuatPresentation, field: FieldSpec) -> bool:
    """Split over finite and algebraically closed fields; elsewhere decided by
    Hilbert symbols (over Q: +1 at every relevant place)."""
    if field.kind == ALG_CLOSED:
        return True
    if field.kind == PRIME:
        for x in (q.a, q.b):
            if not x.numerator % field.p or not x.denominator % field.p:
                raise ZeroArgument("structure constant vanishes (or blows up) mod p")
        return True
    if field.kind in (REAL, PADIC):
        return hilbert_symbol(q.a, q.b, field) == 1
    return all(hilbert_symbol(q.a, q.b, v) == 1 for v in hilbert_places(q.a, q.b))


def isotropic_ternary_search(a: int, b: int, height: int) -> bool:
    """Small-height search for a nontrivial solution of z^2 = a x^2 + b y^2
    over the integers (exhaustive oracle for is_split over Q)."""
    import math

    for x in range(height + 1):
        for y in range(height + 1):
            if x == 0 and y == 0:
                continue
            val = a * x * x + b * y * y
            if val < 0:
                continue
            r = math.isqrt(val)
            if r * r == val:
                return True
    return False


def quaternion_class_count(field: FieldSpec):
    if field.kind in (ALG_CLOSED, PRIME):
        return 1
    if field.kind in (REAL, PADIC):
        return 2
    return INFINITE


@dataclass(frozen=True)
class ClassReport:
    field: FieldSpec
    level: str
    kinds: tuple  # ordered (name, count) pairs
    total: object
    representatives: tuple

    def to_json(self) -> str:
        def enc(v):
            return str(v) if isinstance(v, Infinite) else v

        return json.dumps(
            {
                "field": str(self.field),
                "level": self.level,
                "classes": {k: enc(v) for k, v in self.kinds},
                "total": enc(self.total),
                "representatives": list(self.representatives),
            }
        )


def _total(counts):
    if any(isinstance(c, Infinite) for c in counts):
        return INFINITE
    return sum(counts)


def g2_class_report(field: FieldSpec) -> ClassReport:
    """Involution classes of the split octonion automorphism group: one per
    isomorphism class of quaternion subalgebra."""
    c = quaternion_class_count(field)
    if field.kind in (ALG_CLOSED, PRIME):
        reps = ("theta",)
    elif field.kind == REAL or (field.kind == PADIC and field.p == 2):
        reps = ("theta", "theta.I[t:1,-1]")
    elif field.kind == PADIC:
        z = smallest_nonresidue(field.p)
        reps = ("theta", f"theta.I[t:{-z},{Fraction(-field.p, z)}]")
    else:
        reps = ("theta", "theta.I[t:p,1] for primes p = 3 mod 4 (infinite family, D = (-1,p))")
    return ClassReport(field, "G2", (("theta", c),), _total([c]), reps)


def f4_class_report(field: FieldSpec) -> ClassReport:
    """Albert-algebra involution classes: type (I) counts follow the quaternion
    subalgebra classes (with the real gamma refinement), type (II) is unique."""
    if field.kind in (ALG_CLOSED, PRIME):
        type1 = 1
        reps = ("s", "theta.I[t:1,1,1,1]")
    elif field.kind == REAL:
        type1 = 3
        reps = (
            "s",
            "theta.I[t:1,1,-1,1] (D split)",
            "theta.I[t:1,1,1,1] (D division, gamma = id)",
            "theta.I[t:-1,1,1,1] (D division, gamma = (-1,1,1))",
        )
    elif field.kind == PADIC and field.p == 2:
        type1 = 2
        reps = ("s", "theta.I[t:1,1,-1,1] (D split)", "theta.I[t:1,1,1,1] (D division)")
    elif field.kind == PADIC:
        z = smallest_nonresidue(field.p)
        type1 = 2
        reps = (
            "s",
            "theta.I[t:1,1,-1,1] (D split)",
            f"theta.I[t:1,1,{-field.p},{-z}] (D division)",
        )
    else:
        type1 = INFINITE
        reps = (
            "s",
            "theta.I[t:1,1,-1,1] (D split)",
            "theta.I[t] for D = (-1,p), p = 3 mod 4 (infinite family)",
        )
    counts = (("type_I", type1), ("type_II", 1))
    return ClassReport(field, "F4", counts, _total([type1, 1]), reps)


def e6_class_report(field: FieldSpec) -> ClassReport:
    """Brown-algebra involution classes: (sigma, theta, dagger, theta-dagger)
    count (1, c, 1, c) with c the quaternion class count; total 2c + 2."""
    c = quaternion_class_count(field)
    kinds = (("sigma", 1), ("theta", c), ("dagger", 1), ("theta_dagger", c))
    if field.kind in (ALG_CLOSED, PRIME):
        theta_reps = [("t:1,1,1,1,1,1", "")]
    elif field.kind == REAL or (field.kind == PADIC and field.p == 2):
        theta_reps = [("t:1,1,1,1,-1,1", "D split"), ("t:1,1,1,1,1,1", "D division")]
    elif field.kind == PADIC:
        z = smallest_nonresidue(field.p)
        theta_reps = [
            ("t:1,1,1,1,-1,1", "D split"),
            (f"t:1,1,1,1,{-field.p},{-z}", "D division"),
        ]
    else:
        theta_reps = [
            ("t:1,1,1,1,-1,1", "D split"),
            (None, "D = (-1,p), p = 3 mod 4: infinite family of division classes"),
        ]
    reps = ["sigma: s", "dagger: varpi"]
    for desc, note in theta_reps:
        label = desc if desc else note
        reps.append(f"theta: {label}" + (f" ({note})" if desc and note else ""))
    for desc, note in theta_reps:
        label = f"{desc}.varpi" if desc else note
        reps.append(f"theta.dagger: {label}" + (f" ({note})" if desc and note else ""))
    total = INFINITE if isinstance(c, Infinite) else 2 * c + 2
    return ClassReport(field, "E6", kinds, total, tuple(reps))


def class_report(field: FieldSpec, level: str) -> ClassReport:
    table = {"G2": g2_class_report, "F4": f4_class_report, "E6": e6_class_report}
    if level not in table:
        raise ValueError(f"unknown level {level!r}")
    return table[level](field)
