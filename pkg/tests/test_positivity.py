from fractions import Fraction

import pytest

from evensos.glossary import FormId, build
from evensos.polyring import Form, FormError, PatternPoint, PointFamily, power_sum
from evensos.positivity import (PROVED_NOT_PSD, PROVED_PSD, UNKNOWN, MSexticCoeffs, PsdVerdict,
                                decide_psd, m_sextic_status, psd_product, quartic_symmetric_psd,
                                search_counterexample, verify_zero_orbits)


@pytest.mark.parametrize("fid", [FormId("L", m=2), FormId("C", m=2)])
def test_quartic_psd(fid):
    assert quartic_symmetric_psd(build(fid).form).status == PROVED_PSD


def test_negated_power_sum():
    v = quartic_symmetric_psd(-power_sum(4, 4))
    assert v.status == PROVED_NOT_PSD and v.value < 0
    assert v.value == -1 or -power_sum(4, 4).evaluate(v.witness) == v.value


def test_quartic_rejects_nonsymmetric():
    x = Form.variable(3, 0)
    with pytest.raises(FormError):
        quartic_symmetric_psd(x ** 4)


def test_quartic_ternary_indefinite():
    # e2^2 - 3 e1 e3 style: a symmetric ternary quartic that dips negative
    f = power_sum(3, 2) ** 2 - 4 * power_sum(3, 4)
    v = quartic_symmetric_psd(f)
    assert v.status == PROVED_NOT_PSD and f.evaluate(v.witness) == v.value < 0


@pytest.mark.parametrize("coeffs,psd,sos", [
    ((1, -5, 6, 5), True, False),
    ((1, -3, 2, 4), True, True),
    ((1, -7, 12, 5), True, False),
    ((0, 0, 1, 3), True, True),
    ((1, -4, 3, 4), False, False),
])
def test_msextic_status(coeffs, psd, sos):
    st = m_sextic_status(MSexticCoeffs(*coeffs))
    assert (st.psd, st.sos) == (psd, sos)


def test_msextic_sos_witnesses():
    assert m_sextic_status(MSexticCoeffs(1, -5, 6, 5)).sos_witness_t == Fraction(5, 2)
    assert m_sextic_status(MSexticCoeffs(1, -7, 12, 5)).sos_witness_t == Fraction(7, 2)


def test_zero_orbits():
    assert verify_zero_orbits(build(FormId("T", n=4)).form,
                              [PointFamily(PatternPoint.v(4, range(2))), PointFamily(PatternPoint.v(4, range(3)))])
    assert verify_zero_orbits(build(FormId("P", n=4)).form, [PointFamily(PatternPoint((1, 1, 1, 1)))])
    assert verify_zero_orbits(build(FormId("G", m=2)).form, [PointFamily(PatternPoint((1, 1, 1, 2, 2)))])
    assert not verify_zero_orbits(power_sum(3, 2), [PointFamily(PatternPoint((1, 0, 0)))])


def test_product_rule():
    ok = PsdVerdict(PROVED_PSD, "a")
    assert psd_product([ok, ok]).is_psd
    assert psd_product([ok, PsdVerdict(UNKNOWN, "b")]).status == UNKNOWN


def test_search_finds_v2():
    f = build(FormId.msextic(1, -4, 3, 4)).form
    pt = search_counterexample(f, 200)
    assert pt is not None and f.evaluate(pt) == -2
    assert sorted(pt) == [0, 0, 1, 1]


@pytest.mark.parametrize("f", [power_sum(3, 4), build(FormId("Robinson")).form])
def test_search_finds_nothing_on_psd(f):
    assert search_counterexample(f, 1500) is None


def test_search_deterministic_under_seed(monkeypatch):
    f = build(FormId("L", m=2)).form - Form.monomial((4, 0, 0, 0, 0))
    monkeypatch.setenv("FORMS_SEED", "7")
    a = search_counterexample(f, 3000)
    b = search_counterexample(f, 3000)
    assert a == b


def test_not_psd_verdict_requires_negative_value():
    with pytest.raises(ValueError):
        PsdVerdict(PROVED_NOT_PSD, "x", (1,), Fraction(0))


def test_decide_psd_nonneg_coefficients():
    assert decide_psd(power_sum(3, 6) + Form.monomial((2, 2, 2))).is_psd
