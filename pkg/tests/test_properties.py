"""Property tests for the algebraic invariants."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from evensos import linalg
from evensos.glossary import FormId, build
from evensos.polyring import (Form, PatternPoint, PointFamily, halve_exponents, monomials,
                              restrict_parametric, symmetric_from_orbits)
from evensos.refuter import assemble_constraints, builtin_script, candidate_support

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=5)


@st.composite
def forms(draw, n=3, degree=None):
    d = draw(st.integers(0, 4)) if degree is None else degree
    monos = list(monomials(n, d))
    coeffs = draw(st.lists(st.integers(-4, 4), min_size=len(monos), max_size=len(monos)))
    return Form(n, d, dict(zip(monos, coeffs)))


points3 = st.tuples(rationals, rationals, rationals)


@settings(max_examples=80, deadline=None)
@given(forms(), forms(), points3)
def test_product_is_homomorphism(f, g, p):
    assert (f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p)


@settings(max_examples=80, deadline=None)
@given(forms(degree=3), forms(degree=3), points3)
def test_sum_is_homomorphism(f, g, p):
    assert (f + g).evaluate(p) == f.evaluate(p) + g.evaluate(p)


@settings(max_examples=80, deadline=None)
@given(forms(), rationals, rationals, rationals)
def test_restriction_matches_evaluation(f, t, u, c):
    pat = PatternPoint(("T", c, "U"))
    biv = restrict_parametric(f, pat)
    assert biv(t, u) == f.evaluate((t, c, u))
    one = PatternPoint((c, "T", 0))
    assert restrict_parametric(f, one)(t) == f.evaluate((c, t, 0))


@settings(max_examples=80, deadline=None)
@given(forms())
def test_halving_inverts_squaring(f):
    assert halve_exponents(f.substitute_squares()) == f


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.sampled_from([(4,), (2, 2), (3, 1), (2, 1, 1), (1, 1, 1, 1)]),
                       st.integers(-3, 3), min_size=1),
       st.tuples(rationals, rationals, rationals, rationals), st.permutations(range(4)))
def test_symmetric_forms_constant_on_orbits(orbit_coeffs, p, perm):
    f = symmetric_from_orbits(4, orbit_coeffs)
    assert f.is_symmetric()
    assert f.evaluate(p) == f.evaluate(tuple(p[i] for i in perm))


@settings(max_examples=60, deadline=None)
@given(forms())
def test_json_roundtrip(f):
    text = f.to_json()
    assert Form.from_json(text).to_json() == text


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from([0, 1]), min_size=4, max_size=4).filter(lambda v: sum(v) % 2 == 0),
       st.integers(0, 2))
def test_extra_zero_rows_shrink_kernel(par, k):
    # adding genuine zeros of D4 can only shrink the kernel
    fid = FormId("D", m=2)
    f = build(fid).form
    base = builtin_script(fid)
    extras = [PointFamily(PatternPoint((1, 1, 0, 0)), signs=True),
              PointFamily(PatternPoint((1, 1, 1, 0)), signs=True)][:k]
    cls = candidate_support(4, 4, tuple(par))
    small = assemble_constraints(f, base, cls)
    big = assemble_constraints(f, base.with_extra_zeros(extras), cls)
    n = len(cls.support)
    assert len(linalg.nullspace(big.rows, n)) <= len(linalg.nullspace(small.rows, n))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6))
def test_power_sum_counts_ones(n, r):
    from evensos.polyring import power_sum
    for t in range(n + 1):
        assert power_sum(n, r).evaluate((1,) * t + (0,) * (n - t)) == t


@settings(max_examples=80, deadline=None)
@given(forms(), points3)
def test_evaluate_matches_naive_sum(f, p):
    naive = Fraction(0)
    for exp, c in f.terms.items():
        term = c
        for x, e in zip(p, exp):
            term *= x ** e
        naive += term
    assert f.evaluate(p) == naive
