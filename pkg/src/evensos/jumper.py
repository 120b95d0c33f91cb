"""Degree jumping with status provenance, and the (n, 2d) classification chart."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .glossary import FormId, build, p_form, q_form
from .polyring import Form, FormError
from .positivity import PROVED_PSD, PsdVerdict, certify_glossary, psd_product
from .refuter import Inconclusive, RefutationCertificate, builtin_script, refute, verify_certificate

NOT_SOS = "proved-not-sos"
SOS = "proved-sos"
LITERATURE = "literature"
UNKNOWN = "unknown"

HILBERT = "Hilbert (1888): binary forms, quadratic forms and ternary quartics"
QUARTIC_EVEN = "classical: even symmetric psd quartics are sos"
HARRIS_38 = "Harris: even symmetric psd ternary octics are sos"
HARRIS_310 = "Harris: examples of even symmetric psd not sos ternary decics (no formula given here)"
UNIVARIATE = "univariate even forms are nonnegative multiples of x^(2d)"


class JumpError(ValueError):
    pass


@dataclass
class SosStatus:
    kind: str
    certificate: Optional[RefutationCertificate] = None
    citation: str = ""

    def to_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.citation:
            out["citation"] = self.citation
        if self.certificate is not None:
            out["certificate"] = "attached"
        return out


@dataclass
class ProvenancedForm:
    form: Form
    psd_status: PsdVerdict
    sos_status: SosStatus
    lineage: dict = field(default_factory=dict)

    @property
    def not_sos(self) -> bool:
        return self.sos_status.kind == NOT_SOS

    def to_dict(self) -> dict:
        return {"psd": self.psd_status.to_dict(), "sos": self.sos_status.to_dict(),
                "lineage": self.lineage, "form": self.form.to_dict()}


def seed(fid: FormId) -> ProvenancedForm:
    """A glossary form with psd re-derived and not-sos proved by a verified certificate."""
    f = build(fid).form
    psd = certify_glossary(fid)
    res = refute(f, builtin_script(fid))
    if isinstance(res, Inconclusive) or not verify_certificate(f, res):
        sos = SosStatus(UNKNOWN, citation=getattr(res, "reason", ""))
    else:
        sos = SosStatus(NOT_SOS, certificate=res, citation="direct refutation certificate")
    return ProvenancedForm(f, psd, sos, {"seed": fid.label()})


def decompose_r(r: int) -> tuple:
    """Nonnegative ``(a, b)`` with ``2a + 3b = r``; ``b = r mod 2``."""
    if r < 2:
        raise JumpError(f"r must be >= 2, got {r}")
    b = r % 2
    return ((r - 3 * b) // 2, b)


def _square_verdict(label: str) -> PsdVerdict:
    return PsdVerdict(PROVED_PSD, f"square of {label}")


def _check_seed(f: ProvenancedForm):
    if not f.not_sos:
        raise JumpError("seed carries no not-sos provenance (certificate or lineage)")
    if not f.form.is_even_symmetric():
        raise JumpError("seed must be even symmetric")


def jump_pq(f: ProvenancedForm, r: int) -> ProvenancedForm:
    """Multiply by ``p_n^(2a) q_n^(2b)``; degree grows by ``4r``."""
    n = f.form.n
    if n < 3:
        raise JumpError("jump_pq requires n >= 3")
    a, b = decompose_r(r)
    _check_seed(f)
    mult = p_form(n) ** (2 * a) * q_form(n) ** (2 * b)
    verdicts = [f.psd_status] + [_square_verdict("p_n")] * a + [_square_verdict("q_n")] * b
    return ProvenancedForm(
        f.form * mult, psd_product(verdicts),
        SosStatus(NOT_SOS, citation="square of an irreducible indefinite factor preserves psd-not-sos "
                                    "(p_n, q_n irreducible and indefinite)"),
        {"op": "jump_pq", "r": r, "a": a, "b": b, "seed": f.lineage})


def jump_allvars(f: ProvenancedForm) -> ProvenancedForm:
    """Multiply by ``(x_1 ... x_n)^2``; degree grows by ``2n``."""
    _check_seed(f)
    n = f.form.n
    mult = Form.monomial((2,) * n)
    return ProvenancedForm(
        f.form * mult, psd_product([f.psd_status] + [_square_verdict("x_i")] * n),
        SosStatus(NOT_SOS, citation="square of an irreducible indefinite factor preserves psd-not-sos "
                                    "(each x_i)"),
        {"op": "jump_allvars", "seed": f.lineage})


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class WitnessRecipe:
    """Base form (glossary id or literature citation) followed by jump operations."""

    base: Optional[FormId]
    ops: tuple = ()
    literature: str = ""

    @property
    def constructible(self) -> bool:
        return self.base is not None

    @property
    def direct(self) -> bool:
        return self.constructible and not self.ops

    def describe(self) -> str:
        s = self.base.label() if self.base is not None else f"[{self.literature}]"
        for op in self.ops:
            s = f"jump_pq({s}, r={op[1]})" if op[0] == "pq" else f"jump_allvars({s})"
        return s

    def degree(self, base_degree: int, n: int) -> int:
        d = base_degree
        for op in self.ops:
            d += 4 * op[1] if op[0] == "pq" else 2 * n
        return d

    def materialize(self) -> ProvenancedForm:
        if self.base is None:
            raise JumpError(f"no explicit form for {self.literature}")
        pf = seed(self.base)
        for op in self.ops:
            pf = jump_pq(pf, op[1]) if op[0] == "pq" else jump_allvars(pf)
        return pf

    def to_dict(self) -> dict:
        return {"recipe": self.describe(), "constructible": self.constructible,
                "direct_certificate": self.direct}


@dataclass
class ClassificationEntry:
    n: int
    two_d: int
    answer: str                    # "equal" or "strict"
    witness: Optional[WitnessRecipe] = None
    citation: str = ""

    def to_dict(self) -> dict:
        out = {"n": self.n, "deg": self.two_d, "answer": self.answer, "citation": self.citation}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


def _check_degree(two_d: int):
    if two_d < 2 or two_d % 2:
        raise FormError(f"degree must be a positive even integer, got {two_d}")


def sos_equals_psd(n: int, two_d: int) -> bool:
    _check_degree(two_d)
    return n <= 2 or two_d <= 4 or (n, two_d) == (3, 8)


def _base_ids(n: int) -> dict:
    eight = FormId("D", m=n // 2) if n % 2 == 0 else FormId("T", n=n)
    twelve = FormId("Q", n=n) if n >= 5 else FormId("Rdodecic", n=n)
    return {6: FormId.msextic(1, -5, 6, n), 8: eight, 10: FormId("P", n=n), 12: twelve}


def reduction_split(n: int, two_d: int) -> Optional[WitnessRecipe]:
    """Witness recipe from the reduction to basic cases, or ``None`` where no
    psd-not-sos form exists.

    ``n = 3``: bases in degree 6, 10, 14 plus multiples of ``(xyz)^2``.
    ``n >= 4``: bases in degree 6, 8, 10, 12 plus a single ``p_n`` jump.
    """
    _check_degree(two_d)
    if n <= 2 or two_d <= 4:
        return None
    if n == 3:
        if two_d == 8:
            return None
        for base in (6, 10, 14):
            if two_d >= base and (two_d - base) % 6 == 0:
                k = (two_d - base) // 6
                allvars = (("allvars",),) * k
                if base == 6:
                    return WitnessRecipe(FormId("Robinson"), allvars)
                if base == 10:
                    return WitnessRecipe(None, allvars, HARRIS_310)
                return WitnessRecipe(FormId("Robinson"), (("pq", 2),) + allvars)
        raise AssertionError("unreachable: every even degree >= 6 except 8 is covered")
    bases = _base_ids(n)
    for base in (6, 8, 10, 12):
        if two_d >= base and (two_d - base) % 8 == 0:
            k = (two_d - base) // 8
            return WitnessRecipe(bases[base], (("pq", 2 * k),) if k else ())
    raise AssertionError("unreachable: every even degree >= 6 is covered")


def _ternary_chain(two_d: int) -> Optional[WitnessRecipe]:
    # 2d = 6 + 4r + 6k with r = 0 or r >= 2; fewest operations first
    best = None
    for k in range((two_d - 6) // 6 + 1):
        rest = two_d - 6 - 6 * k
        if rest % 4:
            continue
        r = rest // 4
        if r == 1:
            continue
        ops = ((("pq", r),) if r else ()) + (("allvars",),) * k
        if best is None or len(ops) < len(best.ops):
            best = WitnessRecipe(FormId("Robinson"), ops)
    return best


def classify(n: int, two_d: int) -> ClassificationEntry:
    if n < 1:
        raise FormError("n must be >= 1")
    _check_degree(two_d)
    if sos_equals_psd(n, two_d):
        if n == 1:
            cite = UNIVARIATE
        elif n == 2 or two_d == 2 or (n == 3 and two_d == 4):
            cite = HILBERT
        elif two_d == 4:
            cite = QUARTIC_EVEN
        else:
            cite = HARRIS_38
        return ClassificationEntry(n, two_d, "equal", None, cite)
    recipe = reduction_split(n, two_d)
    if n == 3 and not recipe.constructible:
        recipe = _ternary_chain(two_d) or recipe
    if recipe.constructible:
        cite = "explicit psd-not-sos form" if recipe.direct else "degree jumping from an explicit form"
    else:
        cite = recipe.literature
    return ClassificationEntry(n, two_d, "strict", recipe, cite)


def chart(n_max: int, deg_max: int, n_min: int = 2) -> list:
    """Rows of classification entries, one row per even degree ``2..deg_max``."""
    if n_max < 2 or deg_max < 2:
        raise FormError("chart bounds must be >= 2")
    return [[classify(n, deg) for n in range(n_min, n_max + 1)] for deg in range(2, deg_max + 1, 2)]


def chart_text(rows: list) -> str:
    ns = [e.n for e in rows[0]]
    out = ["deg \\ var | " + " ".join(f"{n:>2}" for n in ns)]
    for row in rows:
        marks = " ".join(" ✓" if e.answer == "equal" else " ×" for e in row)
        out.append(f"{row[0].two_d:>9} | {marks}")
    return "\n".join(out) + "\n"
