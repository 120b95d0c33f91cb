from fractions import Fraction

import pytest

from evensos.glossary import FormId, build
from evensos.polyring import (Form, FormError, PatternPoint, PointFamily, evaluate, halve_exponents,
                              monomials, orbit_points, poly_add, poly_mul, power_sum,
                              restrict_parametric)
from evensos.univariate import UnivariatePoly


def x(n, i):
    return Form.variable(n, i)


def test_add_inverse_gives_zero():
    f = x(1, 0) ** 2
    assert poly_add(f, -f).is_zero()


def test_doubling():
    m2 = power_sum(2, 2)
    assert poly_add(m2, m2) == Form(2, 2, {(2, 0): 2, (0, 2): 2})


def test_monomial_product():
    assert poly_mul(x(2, 0) ** 2, x(2, 1) ** 2) == Form.monomial((2, 2))


def test_inhomogeneous_rejected():
    with pytest.raises(FormError):
        Form(2, 2, {(2, 0): 1, (1, 0): 1})


def test_mismatched_variable_count():
    with pytest.raises(FormError):
        poly_add(power_sum(2, 2), power_sum(3, 2))


def test_degree_mismatch_on_add():
    with pytest.raises(FormError):
        power_sum(2, 2) + power_sum(2, 4)


def test_power_sum_at_v_t():
    assert evaluate(power_sum(5, 4), (1, 1, 1, 0, 0)) == 3


def test_d4_at_v1():
    assert build(FormId("D", m=2)).form.evaluate((1, 0, 0, 0)) == 8


def test_robinson_zero():
    assert build(FormId("Robinson")).form.evaluate((1, 1, 0)) == 0


def test_evaluate_wrong_length():
    with pytest.raises(FormError):
        power_sum(3, 2).evaluate((1, 2))


def test_monomial_count_and_order():
    ms = list(monomials(3, 2))
    assert ms[0] == (2, 0, 0) and ms[-1] == (0, 0, 2)
    assert len(ms) == 6


@pytest.mark.parametrize("n,values,count", [
    (3, (1, 1, 0), 3),
    (4, (1, 1, 0, 0), 6),
    (5, (1, 1, 1, 2, 2), 10),
])
def test_orbit_counts(n, values, count):
    pts = orbit_points(n, values)
    assert len(pts) == count == len(set(pts))


def test_sign_variants_skip_zero_slots():
    fam = PointFamily(PatternPoint((1, 1, 0)), signs=True)
    assert len(fam.points()) == 3 * 4


def test_restrict_dodecic_shaped_curve():
    for n in (3, 4, 5):
        f = build(FormId("Rdodecic", n=n)).form
        pat = PatternPoint(("T", 1, 1) + (0,) * (n - 3))
        t = UnivariatePoly([0, 1])
        assert restrict_parametric(f, pat) == t ** 4 * (t ** 2 - 1) ** 2


def test_restrict_dodecic_zero_curve():
    f = build(FormId("Rdodecic", n=4)).form
    assert restrict_parametric(f, PatternPoint(("T", "U", 0, 0))).is_zero()


def test_restrict_m2_single_term():
    assert restrict_parametric(power_sum(3, 2), PatternPoint(("T", 0, 0))) == UnivariatePoly([0, 0, 1])


def test_restrict_needs_parameter():
    with pytest.raises(FormError):
        restrict_parametric(power_sum(3, 2), PatternPoint((1, 0, 0)))


def test_halving():
    f = x(2, 0) ** 4 + x(2, 1) ** 4
    assert halve_exponents(f) == x(2, 0) ** 2 + x(2, 1) ** 2
    assert halve_exponents(build(FormId("G", m=2)).form) == build(FormId("L", m=2)).form


def test_halving_rejects_odd():
    with pytest.raises(FormError):
        halve_exponents(x(2, 0) ** 3 * x(2, 1))


def test_json_roundtrip_byte_identical():
    for fid in (FormId("D", m=2), FormId("Robinson"), FormId.msextic(1, Fraction(-7, 3), 2, 4)):
        text = build(fid).form.to_json()
        assert Form.from_json(text).to_json() == text


@pytest.mark.parametrize("bad", [
    {"n": 2, "degree": 2},
    {"n": 2, "degree": 2, "terms": [{"exp": [2, 0], "num": 1, "den": 0}]},
    {"n": 2, "degree": 2, "terms": [{"exp": [1, 0], "num": 1, "den": 1}]},
    {"n": 2, "degree": 2, "terms": [{"exp": [2, 0, 0], "num": 1, "den": 1}]},
])
def test_from_dict_rejects(bad):
    with pytest.raises(FormError):
        Form.from_dict(bad)


def test_symmetry_checks():
    assert power_sum(4, 2).is_even_symmetric()
    assert not (x(2, 0) ** 2 + 2 * x(2, 1) ** 2).is_symmetric()
    assert not (x(2, 0) * x(2, 1)).is_even()


def test_drop_variables():
    f = power_sum(3, 2)
    assert f.drop_variables([2]) == power_sum(2, 2)
