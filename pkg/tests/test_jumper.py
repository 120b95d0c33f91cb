import pytest

from evensos.glossary import FormId, build
from evensos.jumper import (HARRIS_38, HARRIS_310, HILBERT, JumpError, NOT_SOS, UNKNOWN, chart,
                            chart_text, classify, decompose_r, jump_allvars, jump_pq, seed)
from evensos.polyring import Form, FormError


@pytest.mark.parametrize("r,ab", [(2, (1, 0)), (3, (0, 1)), (7, (2, 1)), (4, (2, 0))])
def test_decompose(r, ab):
    a, b = decompose_r(r)
    assert (a, b) == ab and 2 * a + 3 * b == r


def test_decompose_rejects_one():
    with pytest.raises(JumpError):
        decompose_r(1)


@pytest.fixture(scope="module")
def robinson():
    return seed(FormId("Robinson"))


@pytest.fixture(scope="module")
def d4():
    return seed(FormId("D", m=2))


def test_seed_status(robinson):
    assert robinson.not_sos and robinson.psd_status.is_psd


def test_jump_pq_robinson(robinson):
    j = jump_pq(robinson, 2)
    assert (j.form.n, j.form.degree) == (3, 14)
    assert j.not_sos and j.psd_status.is_psd
    assert j.form == build(FormId("p", n=3)).form ** 2 * robinson.form


def test_jump_allvars_robinson(robinson):
    j = jump_allvars(robinson)
    assert j.form == build(FormId("Rdodecic", n=3)).form and j.form.degree == 12


def test_jump_d4(d4):
    assert jump_pq(d4, 2).form.degree == 16
    j = jump_allvars(d4)
    assert (j.form.n, j.form.degree) == (4, 16)


def test_jump_requires_provenance():
    psd_only = seed(FormId("Q", n=4))
    assert psd_only.sos_status.kind == UNKNOWN
    with pytest.raises(JumpError):
        jump_pq(psd_only, 2)


def test_jump_r_one(robinson):
    with pytest.raises(JumpError):
        jump_pq(robinson, 1)


@pytest.mark.parametrize("n,deg,answer,cite", [
    (3, 4, "equal", HILBERT), (3, 8, "equal", HARRIS_38), (2, 20, "equal", HILBERT),
    (3, 10, "strict", HARRIS_310),
])
def test_classify_citations(n, deg, answer, cite):
    e = classify(n, deg)
    assert e.answer == answer and e.citation == cite


def test_classify_witnesses():
    assert classify(4, 8).witness.describe() == "D4"
    assert classify(4, 8).witness.direct
    assert classify(5, 20).witness.describe() == "jump_pq(Q5, r=2)"
    assert not classify(3, 10).witness.constructible
    assert classify(3, 14).witness.describe() == "jump_pq(Robinson, r=2)"


def test_classify_rejects_odd():
    with pytest.raises(FormError):
        classify(3, 7)


def test_recipe_materializes():
    pf = classify(4, 14).witness.materialize()
    assert pf.form.degree == 14 and pf.form.n == 4 and pf.not_sos


def test_chart_text_shape():
    text = chart_text(chart(5, 14))
    assert len(text.splitlines()) == 8
