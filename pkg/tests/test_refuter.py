import copy
import json
from fractions import Fraction
from itertools import product

import pytest
import sympy

from evensos.glossary import FormId, build
from evensos.polyring import PatternPoint, PointFamily, monomials
from evensos.refuter import (Inconclusive, RefutationCertificate, RefutationScript, ScriptError,
                             assemble_constraints, builtin_script, candidate_support, factor_pairs,
                             refute, verify_certificate)


def _refute(fid):
    f = build(fid).form
    return f, refute(f, builtin_script(fid))


def test_candidate_support_examples():
    assert candidate_support(3, 3, (1, 1, 1)).support == [(1, 1, 1)]
    assert set(candidate_support(3, 3, (1, 0, 0)).support) == {(3, 0, 0), (1, 2, 0), (1, 0, 2)}
    assert len(candidate_support(5, 6, (0,) * 5).support) == 35


def test_d4_system_kernel_trivial():
    f = build(FormId("D", m=2)).form
    sysm = assemble_constraints(f, builtin_script(FormId("D", m=2)), candidate_support(4, 4, (0,) * 4))
    assert sympy.Matrix(sysm.rows).rank() == len(sysm.columns)


def test_d4_certificate():
    f, cert = _refute(FormId("D", m=2))
    assert isinstance(cert, RefutationCertificate)
    assert cert.target == (4, 0, 0, 0)
    assert verify_certificate(f, cert)


def test_robinson_oracle():
    f, cert = _refute(FormId("Robinson"))
    assert cert.target == (3, 0, 0)
    # independent 3x3 check: coefficients (a, b, c) of x^3, xy^2, xz^2
    a, b, c = sympy.symbols("a b c")
    h = lambda x, y, z: a * x ** 3 + b * x * y ** 2 + c * x * z ** 2
    eqs = [h(*p) for p in [(1, 1, 0), (1, 0, 1), (1, 1, 1)]]
    assert sympy.solve(eqs, [a, b, c]) == {a: 0, b: 0, c: 0}
    assert verify_certificate(f, cert)


def test_q4_inconclusive():
    _, res = _refute(FormId("Q", n=4))
    assert isinstance(res, Inconclusive) and not res
    assert res.kernel_dimension > 0 and any(res.mu_coordinates)


def test_r4_pair_audit():
    f, cert = _refute(FormId("Rdodecic", n=4))
    assert cert.target == (1, 1, 4, 0)
    audit = {a.pair: a for a in cert.factor_pair_audit}
    for pair in [((2, 2, 2, 0), (0, 0, 6, 0)), ((2, 0, 4, 0), (0, 2, 4, 0))]:
        assert audit[pair].status == "eliminated"
    assert audit[((2, 0, 4, 0), (0, 2, 4, 0))].reason.startswith("supported on <= 2")


def _brute_pairs(mu):
    d = sum(mu)
    sq = tuple(2 * e for e in mu)
    out = set()
    for m1 in monomials(len(mu), d):
        for m2 in monomials(len(mu), d):
            if tuple(a + b for a, b in zip(m1, m2)) == sq:
                out.add(tuple(sorted((m1, m2), reverse=True)))
    return out


@pytest.mark.parametrize("mu", [(1, 1, 4, 0), (3, 0, 0), (1, 1, 1), (5, 0, 0, 0), (2, 1, 0, 1)])
def test_factor_pairs_against_brute_force(mu):
    assert set(factor_pairs(mu)) == _brute_pairs(mu)


def test_tampered_certificate_rejected():
    f, cert = _refute(FormId("D", m=2))
    bad = copy.deepcopy(cert)
    bad.diagonal_coefficient = -bad.diagonal_coefficient
    assert not verify_certificate(f, bad)
    bad = copy.deepcopy(cert)
    bad.forced_zero_proof[0] += 1
    assert not verify_certificate(f, bad)
    bad = copy.deepcopy(cert)
    bad.kernel_basis.append([Fraction(1)] * len(cert.support))
    assert not verify_certificate(f, bad)


def test_certificate_for_other_form_rejected():
    _, cert = _refute(FormId("D", m=2))
    assert not verify_certificate(build(FormId("D", m=3)).form, cert)


def test_certificate_json_roundtrip():
    for fid in (FormId("D", m=2), FormId("G", m=2), FormId("Rdodecic", n=3)):
        f, cert = _refute(fid)
        text = cert.to_json()
        back = RefutationCertificate.from_json(text)
        assert back.to_json() == text
        assert verify_certificate(f, back)
        json.loads(text)


def test_false_zero_claim_is_error():
    f = build(FormId("D", m=2)).form
    script = builtin_script(FormId("D", m=2)).with_extra_zeros([PointFamily(PatternPoint((1, 0, 0, 0)))])
    with pytest.raises(ScriptError):
        refute(f, script)


def test_script_json_roundtrip():
    s = builtin_script(FormId("Rdodecic", n=4))
    assert RefutationScript.from_dict(json.loads(json.dumps(s.to_dict()))).to_dict() == s.to_dict()
    with pytest.raises(ScriptError):
        RefutationScript.from_dict({"target": "xx"})


def test_nonpositive_diagonal_is_inconclusive():
    f = build(FormId("D", m=2)).form
    s = builtin_script(FormId("D", m=2))
    s.target = (3, 1, 0, 0)
    res = refute(f, s)
    assert isinstance(res, Inconclusive)


@pytest.mark.parametrize("fid", [FormId("P", n=3), FormId("T", n=3)]
                         + [FormId.msextic(1, -3, 2, n) for n in (3, 4, 5)])
def test_sos_forms_never_refuted(fid):
    _, res = _refute(fid)
    assert isinstance(res, Inconclusive)


def test_m2g_refuted():
    f, cert = _refute(FormId("M2G", m=2))
    assert isinstance(cert, RefutationCertificate) and verify_certificate(f, cert)


def test_q_script_range():
    with pytest.raises(ScriptError, match="n >= 4"):
        builtin_script(FormId("Q", n=3))
