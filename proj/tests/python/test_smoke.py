import math

import pytest

import plustrace as pt


def test_arith():
    assert pt.kronecker(2, 15) == 1
    assert pt.kronecker(-1, -1) == -1
    assert pt.tau(12) == 6
    assert pt.sigma1(6) == 12
    assert pt.is_discriminant(-3) and not pt.is_discriminant(-5)
    assert pt.is_fundamental(-4) and not pt.is_fundamental(-12)
    assert pt.factorizations(-12) == [(1, -12), (-3, 4)]
    assert pt.zeta_one_plus(1, 4) == pytest.approx(4.595117, abs=1e-5)
    assert pt.ell_constant(1, 4) == pytest.approx(8.447, abs=1e-3)


def test_qform():
    assert pt.class_number(-23) == 3
    assert pt.weighted_class_number_six(-3) == 2
    assert pt.weighted_class_number_six(-4) == 3
    forms = pt.reduced_forms(-23)
    assert [(q.a, q.b, q.c) for q in forms] == [(1, 1, 6), (2, -1, 3), (2, 1, 3)]
    q = pt.reduce(pt.QuadForm(6, 11, 6))
    assert q.disc() == -23 and q.is_reduced()
    assert pt.genus_char(-3, pt.QuadForm(1, 1, 1)) == 1
    z = pt.cm_point(pt.QuadForm(1, 0, 1))
    assert z == pytest.approx(1j)
    assert len(pt.forms_in_rectangle(-3, 0.5)) == 1


def test_kloosterman():
    assert pt.plus_admissible(1, 1) and not pt.plus_admissible(1, 2)
    v = pt.s_plus(1, 1, -3, 4)
    assert v["value"] == pytest.approx(-2 * math.sqrt(2))
    assert abs(v["value"]) <= pt.weil_rhs(1, -3, 4)
    val, err = pt.partial_sum(1, -3, 100)
    assert err < 1e-9
    with pytest.raises(ValueError):
        pt.s_plus(1, 2, -3, 4)


def test_weyl_kohnen_agreement():
    for c in (4, 8, 12, 16, 20):
        a, _ = pt.weyl_direct(1, -3, 1, c)
        b, _ = pt.weyl_kohnen(1, -3, 1, c)
        assert a == pytest.approx(b, abs=1e-10)


def test_modeval():
    assert pt.j_coefficients(2) == [1, 744, 196884, 21493760]
    assert pt.faber_poly(2) == [159768, -1488, 1]
    jv, err = pt.eval_j(1j)
    assert jv.real == pytest.approx(1728) and err < 1e-9
    t = pt.trace(1, -3)
    assert t["rounded"] == -248 and t["certified"]
    t = pt.trace(1, -15, -3)
    assert not t["certified"] and t["err_certified"]
    rect, err = pt.rectangle_sum(1, -3, 1, 0.5)
    assert rect == pytest.approx(-230.7602548, abs=1e-6)


def test_bounds():
    rep = pt.check_theorem2(1, -3, 1, 0.1, 1, 4)
    assert rep["pass"] and rep["certified"] and rep["lhs"] < rep["rhs"]
    rep = pt.check_theorem1(1, -3, 1, 1, 5)
    assert rep["pass"]
    rep = pt.check_theorem51(1, -3, 1000.0, 1, 4)
    assert rep["pass"]
    r = pt.nearest_integer_recovery(1, -4, 1, 0.05)
    assert r["matches"] and r["candidate"] == 492
    assert pt.corollary3_threshold(1, -3, 1) < 1e-100


def test_zeta_partial():
    v, tail = pt.zeta_partial(1, -3, 1.25 + 0j, 200)
    assert tail < math.inf and abs(v.imag) < 1e-9
