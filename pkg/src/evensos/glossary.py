"""Constructors for the named even symmetric forms and their displayed identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .polyring import (Form, FormError, PatternPoint, PointFamily, power_sum,
                       symmetric_from_orbits)

TAGS = ("M", "L", "C", "G", "D", "T", "P", "Q", "Rdodecic", "Robinson", "p", "q",
        "MSextic", "PowerGap", "M2G")


@dataclass(frozen=True)
class FormId:
    """Names a glossary form: ``tag`` plus whichever of ``n, m, r, a, b, c`` it uses."""

    tag: str
    n: Optional[int] = None
    m: Optional[int] = None
    r: Optional[int] = None
    a: Optional[Fraction] = None
    b: Optional[Fraction] = None
    c: Optional[Fraction] = None

    def __post_init__(self):
        if self.tag not in TAGS:
            raise FormError(f"unknown form tag {self.tag!r}; expected one of {', '.join(TAGS)}")
        for k in ("a", "b", "c"):
            v = getattr(self, k)
            if v is not None and not isinstance(v, Fraction):
                object.__setattr__(self, k, Fraction(v))
        if self.tag in ("L", "G", "M2G") and self.n is None and self.m is not None:
            object.__setattr__(self, "n", 2 * self.m + 1)
        if self.tag in ("C", "D") and self.n is None and self.m is not None:
            object.__setattr__(self, "n", 2 * self.m)
        if self.tag in ("L", "G", "M2G", "C", "D") and self.m is None and self.n is not None:
            object.__setattr__(self, "m", self.n // 2)
        if self.tag == "Robinson" and self.n is None:
            object.__setattr__(self, "n", 3)

    @classmethod
    def msextic(cls, a, b, c, n) -> "FormId":
        return cls("MSextic", n=n, a=Fraction(a), b=Fraction(b), c=Fraction(c))

    def label(self) -> str:
        if self.tag == "MSextic":
            return f"MSextic({self.a},{self.b},{self.c};n={self.n})"
        if self.tag == "M":
            return f"M{self.r}(n={self.n})"
        if self.tag in ("L", "G", "M2G", "C", "D", "T", "P", "Q", "p", "q", "PowerGap"):
            return f"{self.tag}{self.n}"
        if self.tag == "Rdodecic":
            return f"R{self.n}"
        return self.tag

    def to_dict(self) -> dict:
        out = {"tag": self.tag}
        for k in ("n", "m", "r"):
            if getattr(self, k) is not None:
                out[k] = getattr(self, k)
        for k in ("a", "b", "c"):
            if getattr(self, k) is not None:
                out[k] = str(getattr(self, k))
        return out


@dataclass
class GlossaryEntry:
    id: FormId
    form: Form
    claimed_psd: bool
    claimed_sos: Optional[bool]
    source: str
    zero_patterns: list = field(default_factory=list)
    zero_curves: list = field(default_factory=list)
    structure: tuple = ()

    @property
    def claimed_status(self) -> dict:
        return {"psd": self.claimed_psd, "sos": self.claimed_sos, "source": self.source}


# ---------------------------------------------------------------------------
# building blocks

def msextic_form(a, b, c, n: int) -> Form:
    m2, m4, m6 = power_sum(n, 2), power_sum(n, 4), power_sum(n, 6)
    return Fraction(a) * m2 ** 3 + Fraction(b) * (m2 * m4) + Fraction(c) * m6


def msextic_quadratic(a, b, c, t) -> Fraction:
    t = Fraction(t)
    return Fraction(a) * t * t + Fraction(b) * t + Fraction(c)


def _l_quartic(values: list, m: int) -> Form:
    """``m(m+1) sum (v_i - v_j)^4 - (sum (v_i - v_j)^2)^2`` over the given linear/quadratic forms."""
    s2 = s4 = None
    for vi, vj in combinations(values, 2):
        diff = vi - vj
        sq = diff * diff
        s2 = sq if s2 is None else s2 + sq
        s4 = sq * sq if s4 is None else s4 + sq * sq
    return m * (m + 1) * s4 - s2 * s2


def _variables(n: int, square: bool = False) -> list:
    xs = [Form.variable(n, i) for i in range(n)]
    return [x * x for x in xs] if square else xs


def _v_family(n: int, t: int, signs: bool = True) -> PointFamily:
    return PointFamily(PatternPoint.v(n, range(t)), permute=True, signs=signs)


def _two_value_family(n: int, k: int, r, s, signs: bool = True) -> PointFamily:
    return PointFamily(PatternPoint((Fraction(r),) * k + (Fraction(s),) * (n - k)), True, signs)


def _curve(entries) -> PointFamily:
    return PointFamily(PatternPoint(tuple(entries)), permute=True)


def p_form(n: int) -> Form:
    if n < 3:
        raise FormError("p_n requires n >= 3")
    return symmetric_from_orbits(n, {(4,): 4, (2, 2): -17})


def q_form(n: int) -> Form:
    if n < 3:
        raise FormError("q_n requires n >= 3")
    return symmetric_from_orbits(n, {(6,): 1, (4, 2): 3, (2, 2, 2): -100})


def robinson() -> Form:
    return symmetric_from_orbits(3, {(6,): 1, (4, 2): -1, (2, 2, 2): 3})


def power_gap(n: int) -> Form:
    """``n M_4 - M_2^2``."""
    return n * power_sum(n, 4) - power_sum(n, 2) ** 2


def dodecic_product_form(n: int) -> Form:
    return Fraction(1, 12) * msextic_form(1, -3, 2, n) * msextic_form(1, -5, 6, n)


def dodecic_orbit_form(n: int) -> Form:
    e3 = symmetric_from_orbits(n, {(2, 2, 2): 1})
    second = symmetric_from_orbits(n, {(6,): 1, (4, 2): -1, (2, 2, 2): 3})
    return e3 * second


def _need(cond: bool, msg: str):
    if not cond:
        raise FormError(msg)


@lru_cache(maxsize=None)
def build(fid: FormId) -> GlossaryEntry:
    tag, n, m = fid.tag, fid.n, fid.m
    if tag == "M":
        _need(fid.r is not None and fid.r >= 1 and n is not None and n >= 1, "M needs r >= 1 and n >= 1")
        return GlossaryEntry(fid, power_sum(n, fid.r), fid.r % 2 == 0, fid.r % 2 == 0 or None,
                             "power sum", structure=("nonneg_even",) if fid.r % 2 == 0 else ())
    if tag == "MSextic":
        _need(n is not None and n >= 1 and None not in (fid.a, fid.b, fid.c), "MSextic needs a, b, c and n >= 1")
        a, b, c = fid.a, fid.b, fid.c
        roots = [t for t in range(1, n + 1) if msextic_quadratic(a, b, c, t) == 0]
        psd = all(msextic_quadratic(a, b, c, t) >= 0 for t in range(1, n + 1))
        return GlossaryEntry(fid, msextic_form(a, b, c, n), psd, None,
                             "sextic power-sum family: psd/sos decided by its quadratic",
                             zero_patterns=[_v_family(n, t) for t in roots],
                             structure=("msextic", a, b, c, n))
    if tag in ("L", "C", "G", "D", "M2G"):
        _need(m is not None and m >= 2, f"{tag} requires m >= 2 (2m+1 >= 5 variables for L/G, 2m >= 4 for C/D)")
    if tag == "L":
        form = _l_quartic(_variables(2 * m + 1), m)
        k = 2 * m + 1
        return GlossaryEntry(fid, form, True, False, "symmetric quartic L_{2m+1}: psd, not sos",
                             zero_patterns=[_two_value_family(k, m + 1, 1, 0, False),
                                            _two_value_family(k, m + 1, 0, 1, False),
                                            _two_value_family(k, m + 1, 1, 2, False),
                                            _two_value_family(k, m + 1, 2, 1, False)],
                             zero_curves=[_curve(("T",) * (m + 1) + ("U",) * m)],
                             structure=("quartic",))
    if tag == "C":
        n = 2 * m
        form = _l_quartic(_variables(n) + [Form.zero(n, 1)], m)
        return GlossaryEntry(fid, form, True, False, "symmetric quartic C_{2m}: psd, not sos",
                             zero_patterns=[_two_value_family(n, m, 1, 0, False),
                                            _two_value_family(n, m + 1, 1, 0, False)],
                             structure=("quartic",))
    if tag == "G":
        k = 2 * m + 1
        form = _l_quartic(_variables(k, square=True), m)
        return GlossaryEntry(fid, form, True, False, "even symmetric octic G_{2m+1}: psd, not sos",
                             zero_patterns=[_v_family(k, m), _v_family(k, m + 1),
                                            _two_value_family(k, m + 1, 1, 2),
                                            _two_value_family(k, m + 1, 2, 1)],
                             zero_curves=[_curve(("T",) * (m + 1) + ("U",) * m)],
                             structure=("squares_of", FormId("L", m=m)))
    if tag == "D":
        n = 2 * m
        form = _l_quartic(_variables(n, square=True) + [Form.zero(n, 2)], m)
        return GlossaryEntry(fid, form, True, False, "even symmetric octic D_{2m}: psd, not sos",
                             zero_patterns=[_v_family(n, m), _v_family(n, m + 1)],
                             structure=("restriction", FormId("G", m=m), (2 * m,)))
    if tag == "M2G":
        k = 2 * m + 1
        form = power_sum(k, 2) * build(FormId("G", m=m)).form
        return GlossaryEntry(fid, form, True, False, "M_2 G_{2m+1}: psd, not sos (proof not given)",
                             zero_patterns=[_v_family(k, m), _v_family(k, m + 1),
                                            _two_value_family(k, m + 1, 1, 2),
                                            _two_value_family(k, m + 1, 2, 1)],
                             zero_curves=[_curve(("T",) * (m + 1) + ("U",) * m)],
                             structure=("product", (FormId("M", n=k, r=2), FormId("G", m=m)), Fraction(1)))
    if tag == "Robinson":
        _need(n == 3, "Robinson's form is ternary")
        return GlossaryEntry(fid, robinson(), True, False, "Robinson's ternary sextic: psd, not sos",
                             zero_patterns=[_v_family(3, 2), _v_family(3, 3)],
                             structure=("scaled", FormId.msextic(1, -5, 6, 3), Fraction(1, 2)))
    if tag in ("p", "q"):
        _need(n is not None and n >= 3, f"{tag}_n requires n >= 3")
        form = p_form(n) if tag == "p" else q_form(n)
        return GlossaryEntry(fid, form, False, False, f"{tag}_n: irreducible indefinite (jump multiplier)")
    if tag == "PowerGap":
        _need(n is not None and n >= 1, "PowerGap needs n >= 1")
        return GlossaryEntry(fid, power_gap(n), True, True, "n M_4 - M_2^2 = sum (x_i^2 - x_j^2)^2",
                             zero_patterns=[_two_value_family(n, n, 1, 1)],
                             structure=("sos_identity",))
    _need(n is not None and n >= 3, f"{tag} requires n >= 3")
    sextic_a = FormId.msextic(1, -5, 6, n)
    if tag == "T":
        form = power_sum(n, 2) * msextic_form(1, -5, 6, n)
        status = (False, "T_n: psd, not sos for n >= 4") if n >= 4 else (True, "T_3 = 2 M_2 R is sos")
        return GlossaryEntry(fid, form, True, status[0], status[1],
                             zero_patterns=[_v_family(n, 2), _v_family(n, 3)],
                             structure=("product", (FormId("M", n=n, r=2), sextic_a), Fraction(1)))
    if tag == "P":
        form = power_gap(n) * msextic_form(1, -5, 6, n)
        status = (False, "P_n: psd, not sos for n >= 4") if n >= 4 else (True, "P_3 is a sum of three squares")
        return GlossaryEntry(fid, form, True, status[0], status[1],
                             zero_patterns=[_v_family(n, 2), _v_family(n, 3), _two_value_family(n, n, 1, 1)],
                             structure=("product", (FormId("PowerGap", n=n), sextic_a), Fraction(1)))
    if tag == "Q":
        form = msextic_form(1, -5, 6, n) * msextic_form(1, -7, 12, n)
        status = (False, "Q_n: psd, not sos for n >= 5") if n >= 5 else (None, "Q_3, Q_4: sos status open")
        return GlossaryEntry(fid, form, True, status[0], status[1],
                             zero_patterns=[_v_family(n, 2), _v_family(n, 3), _v_family(n, 4)] if n >= 4
                             else [_v_family(n, 2), _v_family(n, 3)],
                             structure=("product", (sextic_a, FormId.msextic(1, -7, 12, n)), Fraction(1)))
    if tag == "Rdodecic":
        return GlossaryEntry(fid, dodecic_product_form(n), True, False, "R_n dodecic: psd, not sos",
                             zero_patterns=[_v_family(n, 1), _v_family(n, 2), _v_family(n, 3)],
                             zero_curves=[_curve(("T", "U") + (0,) * (n - 2))],
                             structure=("product", (FormId.msextic(1, -3, 2, n), sextic_a), Fraction(1, 12)))
    raise FormError(f"no constructor for {tag}")


def dodecic_shaped_curve(n: int) -> tuple:
    """The curve ``(t, 1, 1, 0, ..., 0)`` and the restriction ``t^4 (t^2 - 1)^2`` of ``R_n`` on it."""
    from .univariate import UnivariatePoly
    g = UnivariatePoly([0, 0, 0, 0, 1, 0, -2, 0, 1])
    return _curve(("T", 1, 1) + (0,) * (n - 3)), g


# ---------------------------------------------------------------------------
# identity suite

def _sum(forms):
    out = None
    for f in forms:
        out = f if out is None else out + f
    return out


def _identities():
    x = _variables(3)
    yield "q3_cube_of_squares", {}, (q_form(3), power_sum(3, 2) ** 3 - 106 * Form.monomial((2, 2, 2)))
    for n in range(2, 7):
        xs2 = _variables(n, square=True)
        rhs = _sum((a - b) ** 2 for a, b in combinations(xs2, 2))
        yield "power_gap_sum_of_squares", {"n": n}, (power_gap(n), rhs)
    for n in range(3, 7):
        yield "dodecic_two_expressions", {"n": n}, (dodecic_product_form(n), dodecic_orbit_form(n))
    yield "dodecic_ternary_is_xyz_squared_robinson", {}, (
        dodecic_product_form(3), Form.monomial((2, 2, 2)) * robinson())
    sq = [v * v for v in x]
    three_squares = 4 * _sum(sq[i] * (sq[i] - sq[j]) ** 2 * (sq[i] - sq[k]) ** 2
                             for i, j, k in ((0, 1, 2), (1, 0, 2), (2, 0, 1)))
    yield "P3_sum_of_three_squares", {}, (build(FormId("P", n=3)).form, three_squares)
    quartic = _sum(v * v for v in sq) - sq[0] * sq[1] - sq[0] * sq[2] - sq[1] * sq[2]
    yield "P3_quartic_times_robinson", {}, (build(FormId("P", n=3)).form, 4 * quartic * robinson())
    m2 = power_sum(3, 2)
    yield "T3_is_2M2R", {}, (m2 * msextic_form(1, -5, 6, 3), 2 * m2 * robinson())
    for m in (2, 3):
        yield "C_is_L_at_zero", {"m": m}, (build(FormId("C", m=m)).form,
                                           build(FormId("L", m=m)).form.drop_variables([2 * m]))
        yield "D_is_G_at_zero", {"m": m}, (build(FormId("D", m=m)).form,
                                           build(FormId("G", m=m)).form.drop_variables([2 * m]))
        yield "G_is_L_of_squares", {"m": m}, (build(FormId("G", m=m)).form,
                                              build(FormId("L", m=m)).form.substitute_squares())
    y = _variables(2)
    factors = (y[0] + 2 * y[1]) * (y[0] - 2 * y[1]) * (2 * y[0] + y[1]) * (2 * y[0] - y[1])
    yield "binary_p_factorization", {}, (p_form(3).drop_variables([2]), factors)
    yield "binary_q_restriction", {}, (q_form(3).drop_variables([2]), (y[0] ** 2 + y[1] ** 2) ** 3)


def verify_identities() -> list:
    """Check every displayed identity by exact expansion; failures are reported, not raised."""
    report = []
    for name, params, (lhs, rhs) in _identities():
        report.append({"name": name, "params": params, "passed": lhs == rhs})
    return report
