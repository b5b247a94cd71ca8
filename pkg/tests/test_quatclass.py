import random
from fractions import Fraction

import pytest

from brownalg.errors import ZeroArgument
from brownalg.fields import INFINITE, Fp, Kbar, Q, Qp, Rplace
from brownalg.quatclass import (
    QuatPresentation,
    class_report,
    e6_class_report,
    f4_class_report,
    g2_class_report,
    hilbert_places,
    hilbert_symbol,
    is_split,
    isotropic_ternary_search,
    quaternion_class_count,
    smallest_nonresidue,
)


def test_hilbert_symbol_real():
    assert hilbert_symbol(-1, -1, Rplace()) == -1
    assert hilbert_symbol(1, -5, Rplace()) == 1
    assert hilbert_symbol(-3, 2, Rplace()) == 1


def test_hilbert_symbol_trivial_first_argument_square():
    for place in (Rplace(), Qp(2), Qp(3), Qp(5), Qp(7)):
        for b in (2, -3, 5, 50, Fraction(7, 3)):
            assert hilbert_symbol(1, b, place) == 1
            assert hilbert_symbol(4, b, place) == 1


def test_hilbert_symbol_2_5_at_5():
    assert hilbert_symbol(2, 5, Qp(5)) == -1


def test_hilbert_symbol_2_5_at_5_brute_force():
    """Oracle: z^2 = 2 x^2 + 5 y^2 has no primitive solution mod 5^3 (any
    5-adic zero would reduce to one), matching the symbol value -1."""
    mod = 5 ** 3
    squares = {}
    for z in range(mod):
        squares.setdefault(z * z % mod, []).append(z)
    for x in range(mod):
        for y in range(mod):
            val = (2 * x * x + 5 * y * y) % mod
            for z in squares.get(val, ()):
                assert not (x % 5 or y % 5 or z % 5)


def test_hilbert_symbol_zero_rejected():
    with pytest.raises(ZeroArgument):
        hilbert_symbol(0, 3, Rplace())


def test_hilbert_symmetry_and_bilinearity():
    rng = random.Random(0)
    places = [Rplace(), Qp(2), Qp(3), Qp(5), Qp(7), Qp(11)]
    vals = [-7, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10, 15]
    for _ in range(120):
        a, b, c = (rng.choice(vals) for _ in range(3))
        v = rng.choice(places)
        assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
        assert hilbert_symbol(a * 9, b, v) == hilbert_symbol(a, b, v)
        assert hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v)


def test_hilbert_product_formula():
    rng = random.Random(1)
    for _ in range(100):
        a = Fraction(rng.choice([x for x in range(-30, 31) if x]),
                     rng.randint(1, 12))
        b = Fraction(rng.choice([x for x in range(-30, 31) if x]),
                     rng.randint(1, 12))
        prod = 1
        for place in hilbert_places(a, b):
            prod *= hilbert_symbol(a, b, place)
        assert prod == 1


def test_is_split_basic():
    assert not is_split(QuatPresentation(-1, -1), Rplace())  # Hamilton quaternions
    assert is_split(QuatPresentation(1, -1), Rplace())
    assert is_split(QuatPresentation(-1, -1), Fp(7))
    assert is_split(QuatPresentation(-1, -1), Kbar())
    assert not is_split(QuatPresentation(-1, -1), Q())
    assert is_split(QuatPresentation(2, 3), Qp(7))


def test_is_split_minus1_p_three_mod_four():
    for p in (3, 7, 11, 19, 23):
        assert not is_split(QuatPresentation(-1, p), Q())
    for p in (5, 13, 17):
        assert is_split(QuatPresentation(-1, p), Q())


def test_is_split_fp_isotropy_oracle():
    """Over F_7 the ternary form <1,-a,-b> is always isotropic."""
    p = 7
    for a in range(1, p):
        for b in range(1, p):
            found = False
            for x in range(p):
                for y in range(p):
                    for z in range(p):
                        if (x, y, z) != (0, 0, 0) and (z * z - a * x * x - b * y * y) % p == 0:
                            found = True
                            break
                    if found:
                        break
                if found:
                    break
            assert found
            assert is_split(QuatPresentation(a, b), Fp(p))


def test_is_split_matches_small_height_search():
    for a in range(-20, 21):
        for b in range(-20, 21):
            if a == 0 or b == 0:
                continue
            got = is_split(QuatPresentation(a, b), Q())
            oracle = isotropic_ternary_search(a, b, 60)
            assert got == oracle, (a, b)


def test_quaternion_class_counts():
    assert quaternion_class_count(Kbar()) == 1
    assert quaternion_class_count(Fp(11)) == 1
    assert quaternion_class_count(Rplace()) == 2
    assert quaternion_class_count(Qp(5)) == 2
    assert quaternion_class_count(Q()) is INFINITE


def test_smallest_nonresidue():
    assert smallest_nonresidue(5) == 2
    assert smallest_nonresidue(7) == 3
    assert smallest_nonresidue(11) == 2
    assert smallest_nonresidue(13) == 2


def test_e6_report_totals():
    assert e6_class_report(Kbar()).total == 4
    assert e6_class_report(Fp(7)).total == 4
    assert e6_class_report(Rplace()).total == 6
    for p in (2, 3, 5, 7):
        assert e6_class_report(Qp(p)).total == 6
    assert e6_class_report(Q()).total is INFINITE


def test_e6_report_kind_structure():
    for f in (Kbar(), Fp(7), Rplace(), Qp(5)):
        rep = e6_class_report(f)
        kinds = dict(rep.kinds)
        assert kinds["sigma"] == 1 and kinds["dagger"] == 1
        assert kinds["theta"] == kinds["theta_dagger"] == quaternion_class_count(f)
        assert rep.total == 2 * kinds["theta"] + 2


def test_e6_padic_division_representative():
    rep = e6_class_report(Qp(5))
    assert any("t:1,1,1,1,-5,-2" in r for r in rep.representatives)
    rep7 = e6_class_report(Qp(7))
    assert any("t:1,1,1,1,-7,-3" in r for r in rep7.representatives)


def test_e6_q_report_lists_family():
    rep = e6_class_report(Q())
    assert dict(rep.kinds)["sigma"] == 1
    assert dict(rep.kinds)["dagger"] == 1
    assert dict(rep.kinds)["theta"] is INFINITE
    assert any("p = 3 mod 4" in r for r in rep.representatives)


def test_f4_report():
    assert dict(f4_class_report(Kbar()).kinds)["type_I"] == 1
    assert dict(f4_class_report(Fp(7)).kinds)["type_I"] == 1
    assert dict(f4_class_report(Rplace()).kinds)["type_I"] == 3
    assert dict(f4_class_report(Qp(5)).kinds)["type_I"] == 2
    assert dict(f4_class_report(Qp(2)).kinds)["type_I"] == 2
    assert dict(f4_class_report(Q()).kinds)["type_I"] is INFINITE
    for f in (Kbar(), Fp(7), Rplace(), Qp(5), Qp(2), Q()):
        assert dict(f4_class_report(f).kinds)["type_II"] == 1


def test_g2_report():
    assert g2_class_report(Kbar()).total == 1
    assert g2_class_report(Fp(7)).total == 1
    assert g2_class_report(Rplace()).total == 2
    assert g2_class_report(Qp(5)).total == 2
    assert g2_class_report(Q()).total is INFINITE


def test_report_json_round_trip():
    import json

    for f in (Fp(7), Rplace(), Q()):
        rep = class_report(f, "E6")
        d = json.loads(rep.to_json())
        assert d["field"] == str(f)
        assert d["classes"]["sigma"] == 1
        if f == Q():
            assert d["total"] == "infinite"
        else:
            assert d["total"] == rep.total
