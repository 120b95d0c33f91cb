"""Refutation of sum-of-squares representability by exact linear algebra.

If an even form ``f`` equals ``sum h_r^2``, the ``h_r`` may be taken inside a
single parity class of monomials.  Every real zero of ``f`` is a zero of each
``h_r``, every curve on which ``f`` vanishes identically is one for each
``h_r``, and on a curve where ``f`` restricts to ``g`` each restricted ``h_r``
has degree at most ``deg g / 2`` and vanishes to at least half the order of
``g`` at every real root.  These are linear conditions on the coefficients of
``h_r``.  When they force the coefficient of a monomial ``mu`` to zero, and
every other way of producing ``mu^2`` in ``sum h_r^2`` is likewise killed,
the coefficient of ``mu^2`` in ``f`` would have to be zero; a positive value
is a contradiction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Optional, Sequence

from . import linalg
from .glossary import FormId, build, dodecic_shaped_curve, msextic_quadratic
from .polyring import (Form, FormError, PatternPoint, PointFamily, monomials, parity,
                       restrict_parametric)
from .univariate import UnivariatePoly, rational_roots_with_multiplicity


class ScriptError(ValueError):
    """A script claim does not hold for the form, or the script is malformed."""


def _q(v) -> str:
    return str(Fraction(v))


def _vec(v) -> list:
    return [_q(x) for x in v]


def _unvec(v) -> list:
    return [Fraction(x) for x in v]


# ---------------------------------------------------------------------------
# scripts

@dataclass
class ShapedCurve:
    family: PointFamily
    restriction: UnivariatePoly

    def to_dict(self) -> dict:
        d = self.family.to_dict()
        d["restriction"] = _vec(self.restriction.coeffs)
        return d

    @classmethod
    def from_dict(cls, data) -> "ShapedCurve":
        return cls(PointFamily.from_dict(data), UnivariatePoly(_unvec(data["restriction"])))


@dataclass
class RefutationScript:
    """Proof plan: target monomial plus the zero structure of ``f`` to exploit.

    A script with ``zeroed`` set refutes ``f`` through the form obtained by
    setting those variables to zero, using ``inner`` on it.
    """

    target: Optional[tuple] = None
    zero_orbits: list = field(default_factory=list)
    zero_curves: list = field(default_factory=list)
    shaped_curves: list = field(default_factory=list)
    zeroed: tuple = ()
    inner: Optional["RefutationScript"] = None
    name: str = ""

    @property
    def diagonal_monomial(self) -> tuple:
        return tuple(2 * e for e in self.target)

    def to_dict(self) -> dict:
        out = {"name": self.name}
        if self.inner is not None:
            out["zeroed"] = list(self.zeroed)
            out["inner"] = self.inner.to_dict()
            return out
        out["target"] = list(self.target)
        out["zero_orbits"] = [f.to_dict() for f in self.zero_orbits]
        out["zero_curves"] = [f.to_dict() for f in self.zero_curves]
        out["shaped_curves"] = [s.to_dict() for s in self.shaped_curves]
        return out

    @classmethod
    def from_dict(cls, data) -> "RefutationScript":
        try:
            if "inner" in data:
                return cls(zeroed=tuple(int(i) for i in data["zeroed"]),
                           inner=cls.from_dict(data["inner"]), name=data.get("name", ""))
            return cls(
                target=tuple(int(e) for e in data["target"]),
                zero_orbits=[PointFamily.from_dict(d) for d in data.get("zero_orbits", [])],
                zero_curves=[PointFamily.from_dict(d) for d in data.get("zero_curves", [])],
                shaped_curves=[ShapedCurve.from_dict(d) for d in data.get("shaped_curves", [])],
                name=data.get("name", ""),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ScriptError(f"malformed script: {exc}") from exc

    def with_extra_zeros(self, families: Sequence[PointFamily]) -> "RefutationScript":
        return RefutationScript(self.target, list(self.zero_orbits) + list(families),
                                list(self.zero_curves), list(self.shaped_curves), name=self.name)


def check_script_claims(f: Form, script: RefutationScript) -> list:
    """Problems with the script's zero claims against ``f`` (empty list when all hold)."""
    problems = []
    for fam in script.zero_orbits:
        if fam.pattern.n != f.n:
            return [f"pattern {fam.pattern.to_list()} has wrong length for n={f.n}"]
        if not fam.pattern.is_concrete():
            problems.append(f"zero orbit {fam.pattern.to_list()} has parameters")
            continue
        for pt in fam.points():
            if f.evaluate(pt) != 0:
                problems.append(f"f does not vanish at {[str(v) for v in pt]}")
                break
    for fam in script.zero_curves:
        if fam.pattern.n != f.n:
            return [f"curve {fam.pattern.to_list()} has wrong length for n={f.n}"]
        if not 1 <= len(fam.pattern.params) <= 2:
            problems.append(f"zero curve {fam.pattern.to_list()} needs one or two parameters")
            continue
        for member in fam.members():
            if not restrict_parametric(f, member).is_zero():
                problems.append(f"f is not identically zero on {member.to_list()}")
                break
    for sc in script.shaped_curves:
        if sc.family.pattern.n != f.n:
            return [f"curve {sc.family.pattern.to_list()} has wrong length for n={f.n}"]
        if len(sc.family.pattern.params) != 1:
            problems.append(f"shaped curve {sc.family.pattern.to_list()} needs exactly one parameter")
            continue
        for member in sc.family.members():
            if restrict_parametric(f, member) != sc.restriction:
                problems.append(f"f does not restrict to the stated polynomial on {member.to_list()}")
                break
    return problems


# ---------------------------------------------------------------------------
# parity classes and constraint assembly

@dataclass
class ParityClass:
    parity: tuple
    support: list

    def index(self, mono: tuple) -> int:
        return self.support.index(tuple(mono))


def candidate_support(n: int, d: int, par: Sequence[int]) -> ParityClass:
    """All degree-``d`` monomials in ``n`` variables congruent to ``par`` mod 2."""
    par = tuple(int(p) & 1 for p in par)
    if len(par) != n:
        raise FormError(f"parity vector has length {len(par)}, expected {n}")
    if sum(par) % 2 != d % 2 or sum(par) > d:
        raise FormError(f"parity {par} is inconsistent with degree {d}")
    half = (d - sum(par)) // 2
    support = [tuple(p + 2 * e for p, e in zip(par, exp)) for exp in monomials(n, half)]
    return ParityClass(par, support)


@dataclass
class ConstraintSystem:
    columns: list
    rows: list
    provenance: list
    warnings: list = field(default_factory=list)

    def render(self) -> str:
        head = "columns: " + ", ".join("x^" + "".join(map(str, c)) for c in self.columns)
        lines = [head]
        for prov, row in zip(self.provenance, self.rows):
            lines.append(f"{prov:>40} | " + " ".join(f"{str(v):>5}" for v in row))
        return "\n".join(lines)


def vanishing_space(g: UnivariatePoly, max_degree: int):
    """Basis (coefficient vectors of length ``max_degree + 1``) of the polynomials
    that can appear as ``phi`` in ``sum phi^2 = g``, or ``None`` if ``g`` is not
    of the supported shape (rational real roots times a positive residual)."""
    if g.is_zero() or g.degree % 2 or g.lead < 0:
        return None
    rf = rational_roots_with_multiplicity(g)
    if not rf.residual_positive:
        return None
    w = UnivariatePoly([1])
    for r, mult in rf.roots.items():
        w = w * UnivariatePoly([-r, 1]) ** ceil(mult / 2)
    half = g.degree // 2
    basis = []
    for j in range(half - w.degree + 1):
        v = w * UnivariatePoly([0] * j + [1])
        basis.append(list(v.coeffs) + [Fraction(0)] * (max_degree + 1 - len(v.coeffs)))
    return basis


def assemble_constraints(f: Form, script: RefutationScript, cls: ParityClass,
                         check: bool = True) -> ConstraintSystem:
    """Linear conditions that every square-root candidate ``h`` in ``cls`` must satisfy."""
    if check:
        problems = check_script_claims(f, script)
        if problems:
            raise ScriptError("; ".join(problems))
    cols = cls.support
    d = sum(cols[0]) if cols else 0
    rows, prov, warnings = [], [], []

    def add(row, tag):
        if any(row):
            rows.append(row)
            prov.append(tag)

    for fam in script.zero_orbits:
        for pt in fam.points():
            row = [_mono_value(m, pt) for m in cols]
            add(row, "point(" + ",".join(str(v) for v in pt) + ")")
    for fam in script.zero_curves:
        for member in fam.members():
            grouped: dict = {}
            for j, m in enumerate(cols):
                c, tp, up = member.restrict_monomial(m)
                if c:
                    grouped.setdefault((tp, up), [Fraction(0)] * len(cols))[j] += c
            for (tp, up), row in sorted(grouped.items()):
                add(row, f"curve({','.join(member.to_list())})[t^{tp}u^{up}]")
    for sc in script.shaped_curves:
        basis = vanishing_space(sc.restriction, d)
        if basis is None:
            warnings.append(f"shape rule skipped for {sc.family.pattern.to_list()}: "
                            "restriction is not rational-rooted times a positive residual")
            continue
        annihilator = linalg.nullspace(basis, d + 1) if basis else \
            [[Fraction(int(i == j)) for j in range(d + 1)] for i in range(d + 1)]
        for member in sc.family.members():
            coeff_rows = [[Fraction(0)] * len(cols) for _ in range(d + 1)]
            for j, m in enumerate(cols):
                c, tp, up = member.restrict_monomial(m)
                if c:
                    coeff_rows[tp + up][j] += c
            for k, y in enumerate(annihilator):
                add(linalg.vec_mat(y, coeff_rows, len(cols)),
                    f"shape({','.join(member.to_list())})[{k}]")
    return ConstraintSystem(list(cols), rows, prov, warnings)


def _mono_value(m: tuple, pt: tuple) -> Fraction:
    v = Fraction(1)
    for x, e in zip(pt, m):
        if e:
            v *= x ** e
            if not v:
                break
    return v


# ---------------------------------------------------------------------------
# certificates

@dataclass
class PairAudit:
    pair: tuple
    status: str                 # "diagonal" or "eliminated"
    member: Optional[tuple] = None
    reason: str = ""
    proof: Optional[list] = None

    def to_dict(self) -> dict:
        out = {"pair": [list(self.pair[0]), list(self.pair[1])], "status": self.status}
        if self.status == "eliminated":
            out.update(member=list(self.member), reason=self.reason, proof=_vec(self.proof))
        return out

    @classmethod
    def from_dict(cls, data) -> "PairAudit":
        pair = (tuple(data["pair"][0]), tuple(data["pair"][1]))
        if data["status"] == "eliminated":
            return cls(pair, "eliminated", tuple(data["member"]), data.get("reason", ""), _unvec(data["proof"]))
        return cls(pair, data["status"])


@dataclass
class RefutationCertificate:
    script: RefutationScript
    parity: tuple = ()
    support: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    provenance: list = field(default_factory=list)
    kernel_basis: list = field(default_factory=list)
    forced_zero_proof: list = field(default_factory=list)
    factor_pair_audit: list = field(default_factory=list)
    diagonal_coefficient: Fraction = Fraction(0)
    inner_form: Optional[Form] = None
    inner: Optional["RefutationCertificate"] = None

    @property
    def target(self) -> tuple:
        return self.inner.target if self.inner is not None else self.script.target

    def to_dict(self) -> dict:
        if self.inner is not None:
            return {"kind": "restriction", "script": self.script.to_dict(),
                    "zeroed": list(self.script.zeroed), "inner_form": self.inner_form.to_dict(),
                    "inner": self.inner.to_dict()}
        return {
            "kind": "direct",
            "script": self.script.to_dict(),
            "class": {"parity": list(self.parity), "support": [list(m) for m in self.support]},
            "rows": [{"from": p, "row": _vec(r)} for p, r in zip(self.provenance, self.rows)],
            "kernel_basis": [_vec(v) for v in self.kernel_basis],
            "forced_zero_proof": _vec(self.forced_zero_proof),
            "factor_pair_audit": [a.to_dict() for a in self.factor_pair_audit],
            "diagonal_coefficient": _q(self.diagonal_coefficient),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1) + "\n"

    @classmethod
    def from_dict(cls, data) -> "RefutationCertificate":
        script = RefutationScript.from_dict(data["script"])
        if data.get("kind") == "restriction":
            return cls(script, inner_form=Form.from_dict(data["inner_form"]),
                       inner=cls.from_dict(data["inner"]))
        return cls(
            script=script,
            parity=tuple(data["class"]["parity"]),
            support=[tuple(m) for m in data["class"]["support"]],
            rows=[_unvec(r["row"]) for r in data["rows"]],
            provenance=[r["from"] for r in data["rows"]],
            kernel_basis=[_unvec(v) for v in data["kernel_basis"]],
            forced_zero_proof=_unvec(data["forced_zero_proof"]),
            factor_pair_audit=[PairAudit.from_dict(a) for a in data["factor_pair_audit"]],
            diagonal_coefficient=Fraction(data["diagonal_coefficient"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "RefutationCertificate":
        return cls.from_dict(json.loads(text))


@dataclass
class Inconclusive:
    reason: str
    kernel_dimension: Optional[int] = None
    mu_coordinates: list = field(default_factory=list)
    system: Optional[ConstraintSystem] = None
    unresolved_pairs: list = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {"inconclusive": True, "reason": self.reason}
        if self.kernel_dimension is not None:
            out["kernel_dimension"] = self.kernel_dimension
            out["mu_coordinates"] = _vec(self.mu_coordinates)
        if self.unresolved_pairs:
            out["unresolved_pairs"] = [[list(a), list(b)] for a, b in self.unresolved_pairs]
        if self.system is not None:
            out["warnings"] = self.system.warnings
        return out

    def __bool__(self):
        return False


def factor_pairs(mu: Sequence[int]) -> list:
    """Unordered pairs ``(m1, m2)`` of monomials with ``m1 * m2 == mu^2``, ``m1 >= m2``."""
    from itertools import product
    out = []
    for m1 in product(*(range(2 * e + 1) for e in mu)):
        if sum(m1) != sum(mu):
            continue
        m2 = tuple(2 * e - a for e, a in zip(mu, m1))
        if m1 >= m2:
            out.append((tuple(m1), m2))
    return sorted(out, reverse=True)


def _check_even(f: Form):
    if f.degree % 2:
        raise FormError("refutation needs an even-degree form")
    if not f.is_even():
        raise FormError("refutation needs an even form (every exponent even)")


class _ClassCache:
    def __init__(self, f: Form, script: RefutationScript):
        self.f, self.script = f, script
        self.d = f.degree // 2
        self._systems: dict = {}

    def system(self, par: tuple):
        if par not in self._systems:
            cls = candidate_support(self.f.n, self.d, par)
            self._systems[par] = (cls, assemble_constraints(self.f, self.script, cls, check=False))
        return self._systems[par]

    def forced_zero(self, mono: tuple):
        cls, sysm = self.system(parity(mono))
        target = [Fraction(int(m == mono)) for m in cls.support]
        return linalg.solve_left(sysm.rows, target, len(cls.support))


def refute(f: Form, script: RefutationScript):
    """Try to prove ``f`` is not a sum of squares; returns a certificate or :class:`Inconclusive`.

    Never concludes that ``f`` is sos.
    """
    if script.inner is not None:
        inner_form = f.drop_variables(script.zeroed)
        res = refute(inner_form, script.inner)
        if isinstance(res, Inconclusive):
            return res
        return RefutationCertificate(script, inner_form=inner_form, inner=res)

    _check_even(f)
    mu = tuple(script.target or ())
    if len(mu) != f.n or 2 * sum(mu) != f.degree:
        raise ScriptError(f"target {mu} is not a degree-{f.degree // 2} monomial in {f.n} variables")
    problems = check_script_claims(f, script)
    if problems:
        raise ScriptError("; ".join(problems))
    diag = f.coefficient(script.diagonal_monomial)
    if diag <= 0:
        return Inconclusive(f"coefficient of the squared target in f is {diag}, not positive")

    cache = _ClassCache(f, script)
    cls, sysm = cache.system(parity(mu))
    ncols = len(cls.support)
    kernel = linalg.nullspace(sysm.rows, ncols)
    col = cls.index(mu)
    mu_coords = [v[col] for v in kernel]
    if any(mu_coords):
        return Inconclusive("target coefficient is not forced to zero", len(kernel), mu_coords, sysm)
    proof = cache.forced_zero(mu)

    audit, unresolved = [], []
    for m1, m2 in factor_pairs(mu):
        if m1 == m2 == mu:
            audit.append(PairAudit((m1, m2), "diagonal"))
            continue
        for member in (m1, m2):
            y = cache.forced_zero(member)
            if y is not None:
                reason = "forced to zero in its parity class"
                if sum(1 for e in member if e) <= 2 and script.zero_curves:
                    reason = "supported on <= 2 variables; killed by zero-curve rows"
                audit.append(PairAudit((m1, m2), "eliminated", member, reason, y))
                break
        else:
            unresolved.append((m1, m2))
    if unresolved:
        return Inconclusive("cross pairs producing the squared target survive", len(kernel),
                            mu_coords, sysm, unresolved)
    return RefutationCertificate(
        script=script, parity=cls.parity, support=list(cls.support), rows=sysm.rows,
        provenance=sysm.provenance, kernel_basis=kernel, forced_zero_proof=proof,
        factor_pair_audit=audit, diagonal_coefficient=diag)


def verify_certificate(f: Form, cert: RefutationCertificate) -> bool:
    """Re-derive every part of ``cert`` from ``f`` and its script alone."""
    try:
        return _verify(f, cert)
    except (ValueError, TypeError, KeyError, IndexError, ZeroDivisionError, AttributeError):
        return False


def _verify(f: Form, cert: RefutationCertificate) -> bool:
    script = cert.script
    if cert.inner is not None:
        if script.inner is None:
            return False
        inner_form = f.drop_variables(script.zeroed)
        if inner_form != cert.inner_form:
            return False
        if cert.inner.script.to_dict() != script.inner.to_dict():
            return False
        return _verify(inner_form, cert.inner)
    _check_even(f)
    mu = tuple(script.target)
    if len(mu) != f.n or 2 * sum(mu) != f.degree:
        return False
    diag = f.coefficient(script.diagonal_monomial)
    if diag <= 0 or diag != cert.diagonal_coefficient:
        return False
    if check_script_claims(f, script):
        return False
    cache = _ClassCache(f, script)
    cls, sysm = cache.system(parity(mu))
    if tuple(cls.parity) != tuple(cert.parity) or list(cls.support) != list(cert.support):
        return False
    if sysm.rows != cert.rows or sysm.provenance != cert.provenance:
        return False
    ncols = len(cls.support)
    col = cls.index(mu)
    for v in cert.kernel_basis:
        if len(v) != ncols or any(linalg.mat_vec(sysm.rows, v)) or v[col] != 0:
            return False
    if linalg.rank(cert.kernel_basis, ncols) != len(cert.kernel_basis):
        return False
    if len(cert.kernel_basis) != ncols - linalg.rank(sysm.rows, ncols):
        return False
    target = [Fraction(int(i == col)) for i in range(ncols)]
    if len(cert.forced_zero_proof) != len(sysm.rows):
        return False
    if linalg.vec_mat(cert.forced_zero_proof, sysm.rows, ncols) != target:
        return False
    expected = factor_pairs(mu)
    if [a.pair for a in cert.factor_pair_audit] != expected:
        return False
    for a in cert.factor_pair_audit:
        if a.status == "diagonal":
            if not (a.pair[0] == a.pair[1] == mu):
                return False
            continue
        if a.status != "eliminated" or a.member not in a.pair:
            return False
        mcls, msys = cache.system(parity(a.member))
        mtarget = [Fraction(int(m == a.member)) for m in mcls.support]
        if len(a.proof) != len(msys.rows):
            return False
        if linalg.vec_mat(a.proof, msys.rows, len(mcls.support)) != mtarget:
            return False
    return True


# ---------------------------------------------------------------------------
# scripts for the glossary forms

def _unit(n: int, exps: dict) -> tuple:
    return tuple(exps.get(i, 0) for i in range(n))


def _v(n: int, t: int, signs: bool = False) -> PointFamily:
    return PointFamily(PatternPoint.v(n, range(t)), permute=True, signs=signs)


def builtin_script(fid: FormId) -> RefutationScript:
    tag, n, m = fid.tag, fid.n, fid.m
    if tag == "D":
        _require(m is not None and m >= 2, "D requires m >= 2")
        return RefutationScript(_unit(2 * m, {0: 4}), [_v(2 * m, m), _v(2 * m, m + 1)], name=f"D{2 * m}")
    if tag == "G":
        _require(m is not None and m >= 2, "G requires m >= 2")
        return RefutationScript(zeroed=(2 * m,), inner=builtin_script(FormId("D", m=m)), name=f"G{2 * m + 1}")
    if tag == "T":
        _require(n is not None and n >= 3, "T script requires n >= 3")
        return RefutationScript(_unit(n, {0: 4}), [_v(n, 2), _v(n, 3)], name=f"T{n}")
    if tag == "P":
        _require(n is not None and n >= 3, "P script requires n >= 3")
        ones = PointFamily(PatternPoint((1,) * n), permute=False)
        return RefutationScript(_unit(n, {0: 5}), [_v(n, 2), _v(n, 3), ones], name=f"P{n}")
    if tag == "Q":
        _require(n is not None and n >= 4, "Q script requires n >= 4 (zeros at v_4)")
        return RefutationScript(_unit(n, {0: 6}), [_v(n, 2), _v(n, 3), _v(n, 4)], name=f"Q{n}")
    if tag == "Rdodecic":
        _require(n is not None and n >= 3, "R_n script requires n >= 3")
        fam, g = dodecic_shaped_curve(n)
        return RefutationScript(_unit(n, {0: 1, 1: 1, 2: 4}),
                                zero_curves=[PointFamily(PatternPoint(("T", "U") + (0,) * (n - 2)))],
                                shaped_curves=[ShapedCurve(fam, g)], name=f"R{n}")
    if tag == "Robinson":
        return RefutationScript((3, 0, 0), [_v(3, 2, True), _v(3, 3, True)], name="Robinson")
    if tag == "MSextic":
        _require(n is not None and None not in (fid.a, fid.b, fid.c), "MSextic script needs a, b, c, n")
        f = build(fid).form
        zeros = [_v(n, t, True) for t in range(1, n + 1) if msextic_quadratic(fid.a, fid.b, fid.c, t) == 0]
        target = _unit(n, {0: 3})
        for cand in ({0: 3}, {0: 2, 1: 1}, {0: 1, 1: 1, 2: 1}):
            if max(cand) < n:
                mono = _unit(n, cand)
                if f.coefficient(tuple(2 * e for e in mono)) > 0:
                    target = mono
                    break
        return RefutationScript(target, zeros, name=fid.label())
    if tag == "M2G":
        _require(m is not None and m >= 2, "M2G requires m >= 2")
        k = 2 * m + 1
        two = [PointFamily(PatternPoint((a,) * (m + 1) + (b,) * m), True, True) for a, b in ((1, 2), (2, 1))]
        return RefutationScript(_unit(k, {0: 5}), [_v(k, m, True), _v(k, m + 1, True)] + two,
                                zero_curves=[PointFamily(PatternPoint(("T",) * (m + 1) + ("U",) * m))],
                                name=f"M2G{k}")
    raise ScriptError(f"no built-in script for {tag}")


def _require(cond: bool, msg: str):
    if not cond:
        raise ScriptError(msg)
