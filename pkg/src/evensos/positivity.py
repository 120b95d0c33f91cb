"""Exact psd decisions for symmetric quartics and power-sum sextics, plus
counterexample search and product propagation."""

from __future__ import annotations

import os
import random
from itertools import combinations
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .glossary import FormId, build, msextic_quadratic
from .polyring import Form, FormError, PatternPoint, PointFamily, restrict_parametric
from .univariate import UnivariatePoly, univariate_nonneg

PROVED_PSD = "proved-psd"
PROVED_NOT_PSD = "proved-not-psd"
UNKNOWN = "unknown"

DEFAULT_SEED = 0


def default_seed() -> int:
    return int(os.environ.get("FORMS_SEED", DEFAULT_SEED))


@dataclass
class PsdVerdict:
    status: str
    method: str
    witness: Optional[tuple] = None
    value: Optional[Fraction] = None
    detail: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status == PROVED_NOT_PSD and (self.witness is None or self.value is None or self.value >= 0):
            raise ValueError("a not-psd verdict needs a witness with negative value")

    @property
    def is_psd(self) -> bool:
        return self.status == PROVED_PSD

    def to_dict(self) -> dict:
        out = {"status": self.status, "method": self.method}
        if self.witness is not None:
            out["witness"] = [str(v) for v in self.witness]
            out["value"] = str(self.value)
        if self.detail:
            out["detail"] = self.detail
        return out


def _refuted(f: Form, point, method: str) -> PsdVerdict:
    point = tuple(Fraction(v) for v in point)
    return PsdVerdict(PROVED_NOT_PSD, method, point, f.evaluate(point))


# ---------------------------------------------------------------------------
# symmetric quartics

def two_value_pattern(n: int, k: int) -> PatternPoint:
    return PatternPoint(("T",) * k + ("U",) * (n - k))


def binary_form_nonneg(coeffs: Sequence[Fraction]):
    """Nonnegativity of ``sum c_j t^j u^(deg-j)`` on R^2, via both affine charts.

    Returns ``None`` when nonnegative, else a witness ``(t, u)``.
    """
    chart_u = UnivariatePoly(coeffs)                 # u = 1
    res = univariate_nonneg(chart_u)
    if not res:
        return (res.witness, Fraction(1))
    chart_t = UnivariatePoly(list(reversed(coeffs)))  # t = 1
    res = univariate_nonneg(chart_t)
    if not res:
        return (Fraction(1), res.witness)
    return None


def quartic_symmetric_psd(f: Form, budget: int = 2000) -> PsdVerdict:
    """Decide psd for a symmetric quartic from its values at two-valued points."""
    if f.degree != 4 and not f.is_zero():
        raise FormError(f"expected a quartic, got degree {f.degree}")
    if not f.is_symmetric():
        raise FormError("form is not symmetric")
    n = f.n
    # by symmetry only the number k of t-slots matters
    for k in range(n + 1):
        pat = two_value_pattern(n, k)
        if k in (0, n):
            val = f.evaluate((1,) * n)
            if val < 0:
                return _refuted(f, (1,) * n, "two-value quartic criterion")
            continue
        biv = restrict_parametric(f, pat)
        coeffs = [biv.coeffs.get((j, 4 - j), Fraction(0)) for j in range(5)]
        wit = binary_form_nonneg(coeffs)
        if wit is not None:
            t, u = wit
            return _refuted(f, pat.substitute(t, u), "two-value quartic criterion")
    if n >= 4 or n <= 2:
        return PsdVerdict(PROVED_PSD, "two-value quartic criterion", detail={"patterns_checked": n + 1})
    point = search_counterexample(f, budget)
    if point is not None:
        return _refuted(f, point, "counterexample search")
    return PsdVerdict(UNKNOWN, "two-value quartic criterion (needs n >= 4)")


# ---------------------------------------------------------------------------
# power-sum sextics

@dataclass(frozen=True)
class MSexticCoeffs:
    a: Fraction
    b: Fraction
    c: Fraction
    n: int

    def __post_init__(self):
        for k in ("a", "b", "c"):
            object.__setattr__(self, k, Fraction(getattr(self, k)))
        if self.n < 1:
            raise ValueError("n must be >= 1")

    def quadratic(self, t) -> Fraction:
        return msextic_quadratic(self.a, self.b, self.c, t)

    def form(self) -> Form:
        return build(FormId.msextic(self.a, self.b, self.c, self.n)).form


@dataclass
class MSexticStatus:
    psd: bool
    sos: bool
    psd_witness_t: Optional[int] = None
    sos_witness_t: Optional[Fraction] = None

    def to_dict(self) -> dict:
        out = {"psd": self.psd, "sos": self.sos}
        if self.psd_witness_t is not None:
            out["psd_witness_t"] = self.psd_witness_t
        if self.sos_witness_t is not None:
            out["sos_witness_t"] = str(self.sos_witness_t)
        return out


def m_sextic_status(coeffs: MSexticCoeffs) -> MSexticStatus:
    """psd iff the quadratic is >= 0 at t = 1..n; sos iff >= 0 at t = 1 and on [2, n]."""
    q, n = coeffs.quadratic, coeffs.n
    psd_wit = next((t for t in range(1, n + 1) if q(t) < 0), None)
    sos_wit: Optional[Fraction] = Fraction(1) if q(1) < 0 else None
    if sos_wit is None and n >= 2:
        for t in (Fraction(2), Fraction(n)):
            if q(t) < 0:
                sos_wit = t
                break
        if sos_wit is None and coeffs.a > 0:
            vertex = -coeffs.b / (2 * coeffs.a)
            if 2 < vertex < n and q(vertex) < 0:
                sos_wit = vertex
    return MSexticStatus(psd_wit is None, sos_wit is None, psd_wit, sos_wit)


def m_sextic_verdict(coeffs: MSexticCoeffs) -> PsdVerdict:
    st = m_sextic_status(coeffs)
    if st.psd:
        return PsdVerdict(PROVED_PSD, "power-sum sextic criterion", detail=st.to_dict())
    t = st.psd_witness_t
    point = (1,) * t + (0,) * (coeffs.n - t)
    return _refuted(coeffs.form(), point, "power-sum sextic criterion")


# ---------------------------------------------------------------------------
# zero sets, products, search

def verify_zero_orbits(f: Form, families: Sequence[PointFamily]) -> bool:
    for fam in families:
        if fam.pattern.n != f.n:
            raise FormError(f"pattern has {fam.pattern.n} slots, form has {f.n} variables")
        if not fam.pattern.is_concrete():
            raise FormError("verify_zero_orbits takes concrete patterns")
        for pt in fam.points():
            if f.evaluate(pt) != 0:
                return False
    return True


def psd_product(verdicts: Sequence[PsdVerdict]) -> PsdVerdict:
    if all(v.is_psd for v in verdicts):
        return PsdVerdict(PROVED_PSD, "product of psd factors",
                          detail={"factors": [v.method for v in verdicts]})
    return PsdVerdict(UNKNOWN, "product of factors (not all proved psd)")


def _candidate_points(n: int, seed: int):
    seen = set()

    def fresh(p):
        if p not in seen:
            seen.add(p)
            return True
        return False

    for t in range(1, n + 1):
        for p in PointFamily(PatternPoint.v(n, range(t)), signs=True).points():
            if fresh(p):
                yield p
    small = [Fraction(v) for v in (-3, -2, -1, 1, 2, 3)] + [Fraction(0)]
    for k in range(1, n):
        for a in small:
            for b in small:
                if a == b:
                    continue
                for p in PointFamily(PatternPoint((a,) * k + (b,) * (n - k))).points():
                    if fresh(p):
                        yield p
    rng = random.Random(seed)
    while True:
        p = tuple(Fraction(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(n))
        if any(p) and fresh(p):
            yield p


def search_counterexample(f: Form, budget: int, seed: Optional[int] = None) -> Optional[tuple]:
    """First point (in a fixed deterministic order) where ``f`` is strictly negative.

    Order: every signed ``v_t`` orbit, then small two-valued orbits, then a
    seeded random grid of rationals.  ``budget`` caps the number of evaluations.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if seed is None:
        seed = default_seed()
    for i, p in enumerate(_candidate_points(f.n, seed)):
        if i >= budget:
            return None
        if f.evaluate(p) < 0:
            return p
    return None


def decide_psd(f: Form, budget: int = 2000) -> PsdVerdict:
    """Best available decision: quartic criterion for symmetric quartics, search otherwise."""
    if f.degree == 4 and f.is_symmetric():
        return quartic_symmetric_psd(f, budget)
    if _nonneg_even_coefficients(f):
        return PsdVerdict(PROVED_PSD, "even monomials with nonnegative coefficients")
    point = search_counterexample(f, budget)
    if point is not None:
        return _refuted(f, point, "counterexample search")
    return PsdVerdict(UNKNOWN, "counterexample search exhausted")


def _nonneg_even_coefficients(f: Form) -> bool:
    return f.is_even() and all(c > 0 for c in f.terms.values())


# ---------------------------------------------------------------------------
# glossary psd derivations

def certify_glossary(fid: FormId) -> PsdVerdict:
    """Re-derive psd-ness of a glossary form from its recorded structure.

    Every structural claim (product, scaling, substitution, restriction) is
    checked against the built form before the verdict is propagated.
    """
    entry = build(fid)
    f = entry.form
    kind = entry.structure[0] if entry.structure else None
    if kind == "quartic":
        return quartic_symmetric_psd(f)
    if kind == "msextic":
        _, a, b, c, n = entry.structure
        return m_sextic_verdict(MSexticCoeffs(a, b, c, n))
    if kind == "nonneg_even":
        if _nonneg_even_coefficients(f):
            return PsdVerdict(PROVED_PSD, "even monomials with nonnegative coefficients")
        return PsdVerdict(UNKNOWN, "coefficient check failed")
    if kind == "sos_identity":
        sq = [Form.variable(f.n, i) ** 2 for i in range(f.n)]
        ok = f == sum(((a - b) ** 2 for a, b in combinations(sq, 2)), Form.zero(f.n, 4))
        return PsdVerdict(PROVED_PSD if ok else UNKNOWN, "explicit sum of squares identity")
    if kind == "product":
        _, factors, scale = entry.structure
        prod = Form.constant(f.n, scale)
        for sub in factors:
            prod = prod * build(sub).form
        if prod != f or scale <= 0:
            return PsdVerdict(UNKNOWN, "product structure did not verify")
        return psd_product([certify_glossary(sub) for sub in factors])
    if kind == "scaled":
        _, sub, scale = entry.structure
        if scale <= 0 or build(sub).form * scale != f:
            return PsdVerdict(UNKNOWN, "scaling structure did not verify")
        inner = certify_glossary(sub)
        return PsdVerdict(inner.status, f"positive multiple of: {inner.method}") if inner.is_psd else \
            PsdVerdict(UNKNOWN, "scaled factor not proved psd")
    if kind == "squares_of":
        _, sub = entry.structure
        inner = certify_glossary(sub)
        if build(sub).form.substitute_squares() == f and inner.is_psd:
            return PsdVerdict(PROVED_PSD, f"squared-variable substitution of: {inner.method}")
        return PsdVerdict(UNKNOWN, "substitution structure did not verify")
    if kind == "restriction":
        _, sub, zeroed = entry.structure
        inner = certify_glossary(sub)
        if build(sub).form.drop_variables(zeroed) == f and inner.is_psd:
            return PsdVerdict(PROVED_PSD, f"coordinate restriction of: {inner.method}")
        return PsdVerdict(UNKNOWN, "restriction structure did not verify")
    return decide_psd(f)
