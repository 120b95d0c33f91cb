"""Exact sparse homogeneous forms over Q, evaluation patterns and orbit utilities.

Monomials are plain exponent tuples.  A :class:`Form` maps monomials to
``Fraction`` coefficients and is never mutated after construction.
"""

from __future__ import annotations

import json
from math import lcm
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .univariate import UnivariatePoly

Monomial = tuple
Scalar = Union[int, Fraction]

T = "T"
U = "U"
PARAMS = (T, U)


class FormError(ValueError):
    """Raised on dimension, degree or parity violations."""


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def parity(exp: Monomial) -> tuple:
    return tuple(e & 1 for e in exp)


def monomials(n: int, d: int) -> Iterator[Monomial]:
    """All exponent vectors of length ``n`` and total degree ``d``, grlex-descending."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials(n - 1, d - first):
            yield (first,) + rest


def distinct_permutations(items: Sequence) -> Iterator[tuple]:
    """Distinct permutations of a multiset in lexicographic order of the sort keys."""
    keyed = sorted(items, key=_slot_key)
    seq = list(keyed)
    keys = [_slot_key(s) for s in seq]
    n = len(seq)
    while True:
        yield tuple(seq)
        i = n - 2
        while i >= 0 and keys[i] >= keys[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while keys[j] <= keys[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        keys[i], keys[j] = keys[j], keys[i]
        seq[i + 1:] = reversed(seq[i + 1:])
        keys[i + 1:] = reversed(keys[i + 1:])


def _slot_key(slot):
    if isinstance(slot, str):
        return (1, Fraction(PARAMS.index(slot)))
    return (0, as_fraction(slot))


def orbit_points(n: int, values: Sequence) -> list:
    """Every distinct permutation of the multiset ``values`` (which must have ``n`` entries)."""
    if len(values) != n:
        raise FormError(f"multiset has {len(values)} entries, expected {n}")
    return list(distinct_permutations([as_fraction(v) for v in values]))


class Form:
    """Homogeneous polynomial in ``n`` variables with rational coefficients."""

    __slots__ = ("n", "degree", "_terms", "_hash", "_scaled")

    def __init__(self, n: int, degree: int, terms: Mapping[Monomial, Scalar] | None = None):
        if n < 1:
            raise FormError("a form needs at least one variable")
        if degree < 0:
            raise FormError("negative degree")
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise FormError(f"monomial {exp} has length {len(exp)}, expected {n}")
            if any(e < 0 for e in exp):
                raise FormError(f"negative exponent in {exp}")
            if sum(exp) != degree:
                raise FormError(f"monomial {exp} is not of degree {degree}")
            c = as_fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.n = n
        self.degree = degree
        self._terms = dict(sorted(clean.items(), reverse=True))
        self._hash = None
        self._scaled = None

    # construction helpers
    @classmethod
    def zero(cls, n: int, degree: int = 0) -> "Form":
        return cls(n, degree)

    @classmethod
    def constant(cls, n: int, c: Scalar) -> "Form":
        return cls(n, 0, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "Form":
        exp = [0] * n
        exp[i] = 1
        return cls(n, 1, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], c: Scalar = 1) -> "Form":
        exp = tuple(exp)
        return cls(len(exp), sum(exp), {exp: c})

    @classmethod
    def linear(cls, coeffs: Sequence[Scalar]) -> "Form":
        n = len(coeffs)
        return cls(n, 1, {tuple(int(j == i) for j in range(n)): c for i, c in enumerate(coeffs)})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    # arithmetic
    def _check_compatible(self, other: "Form", op: str):
        if not isinstance(other, Form):
            raise TypeError(f"cannot {op} Form and {type(other).__name__}")
        if self.n != other.n:
            raise FormError(f"cannot {op} forms in {self.n} and {other.n} variables")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Form.constant(self.n, other)
        self._check_compatible(other, "add")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise FormError(f"cannot add forms of degree {self.degree} and {other.degree}")
        terms = dict(self._terms)
        for exp, c in other._terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return Form(self.n, self.degree, terms)

    __radd__ = __add__

    def __neg__(self):
        return Form(self.n, self.degree, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Form(self.n, self.degree, {e: c * other for e, c in self._terms.items()})
        self._check_compatible(other, "multiply")
        terms: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Form(self.n, self.degree + other.degree, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / other)

    def __pow__(self, k: int):
        if k < 0:
            raise FormError("negative power")
        result = Form.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        if self.n != other.n or self._terms != other._terms:
            return False
        return self.degree == other.degree or self.is_zero()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, tuple(self._terms.items())))
        return self._hash

    # evaluation and substitution
    def _integer_terms(self):
        # coefficients over one common denominator, for integer-only evaluation
        if self._scaled is None:
            den = lcm(*(c.denominator for c in self._terms.values())) if self._terms else 1
            self._scaled = (den, [(exp, c.numerator * (den // c.denominator))
                                  for exp, c in self._terms.items()])
        return self._scaled

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.n:
            raise FormError(f"point has {len(point)} coordinates, form has {self.n} variables")
        x = [as_fraction(v) for v in point]
        scale = lcm(*(v.denominator for v in x))
        nums = [v.numerator * (scale // v.denominator) for v in x]
        den, terms = self._integer_terms()
        powers: dict = {}
        total = 0
        for exp, c in terms:
            term = c
            for i, e in enumerate(exp):
                if e:
                    xi = nums[i]
                    if not xi:
                        term = 0
                        break
                    key = (i, e)
                    if key not in powers:
                        powers[key] = xi ** e
                    term *= powers[key]
            total += term
        return Fraction(total, den * scale ** self.degree)

    __call__ = evaluate

    def permute(self, perm: Sequence[int]) -> "Form":
        """Substitute ``x_i -> x_{perm[i]}``."""
        terms = {}
        for exp, c in self._terms.items():
            new = [0] * self.n
            for i, e in enumerate(exp):
                new[perm[i]] += e
            terms[tuple(new)] = c
        return Form(self.n, self.degree, terms)

    def is_even(self) -> bool:
        return all(e % 2 == 0 for exp in self._terms for e in exp)

    def is_symmetric(self) -> bool:
        # adjacent transpositions generate S_n
        for i in range(self.n - 1):
            perm = list(range(self.n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permute(perm) != self:
                return False
        return True

    def is_even_symmetric(self) -> bool:
        return self.is_even() and self.is_symmetric()

    def substitute_squares(self) -> "Form":
        """Return ``f(x_1^2, ..., x_n^2)``."""
        return Form(self.n, 2 * self.degree,
                    {tuple(2 * e for e in exp): c for exp, c in self._terms.items()})

    def drop_variables(self, indices: Iterable[int]) -> "Form":
        """Set the listed variables to zero and remove them from the variable list."""
        idx = set(indices)
        if any(i < 0 or i >= self.n for i in idx):
            raise FormError(f"variable index out of range for n={self.n}")
        keep = [i for i in range(self.n) if i not in idx]
        if not keep:
            raise FormError("cannot drop every variable")
        terms = {}
        for exp, c in self._terms.items():
            if any(exp[i] for i in idx):
                continue
            terms[tuple(exp[i] for i in keep)] = c
        return Form(len(keep), self.degree, terms)

    # serialization
    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "terms": [
                {"exp": list(exp), "num": str(c.numerator), "den": str(c.denominator)}
                for exp, c in self._terms.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1) + "\n"

    @classmethod
    def from_dict(cls, data: Mapping) -> "Form":
        try:
            n = int(data["n"])
            degree = int(data["degree"])
            terms = {}
            for t in data["terms"]:
                den = int(t.get("den", "1"))
                if den <= 0:
                    raise FormError("denominators must be positive")
                exp = tuple(int(e) for e in t["exp"])
                if exp in terms:
                    raise FormError(f"duplicate monomial {exp}")
                terms[exp] = Fraction(int(t["num"]), den)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, FormError):
                raise
            raise FormError(f"malformed form JSON: {exc}") from exc
        return cls(n, degree, terms)

    @classmethod
    def from_json(cls, text: str) -> "Form":
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        if self.is_zero():
            return f"Form(n={self.n}, 0)"
        return f"Form(n={self.n}, deg={self.degree}, {self.pretty()})"

    def pretty(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = ["xyz"[i] for i in range(self.n)] if self.n <= 3 else [f"x{i + 1}" for i in range(self.n)]
        parts = []
        for exp, c in self._terms.items():
            mono = "*".join(names[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def halve_exponents(f: Form) -> Form:
    """The unique ``g`` with ``g(x_1^2, ..., x_n^2) == f``."""
    if f.degree % 2:
        raise FormError("odd degree form cannot be even")
    terms = {}
    for exp, c in f.terms.items():
        if any(e % 2 for e in exp):
            raise FormError(f"odd exponent in monomial {exp}")
        terms[tuple(e // 2 for e in exp)] = c
    return Form(f.n, f.degree // 2, terms)


def poly_add(f: Form, g: Form) -> Form:
    return f + g


def poly_mul(f: Form, g: Form) -> Form:
    return f * g


def evaluate(f: Form, point: Sequence) -> Fraction:
    return f.evaluate(point)


def power_sum(n: int, r: int) -> Form:
    return Form(n, r, {tuple(r if j == i else 0 for j in range(n)): 1 for i in range(n)})


def symmetric_from_orbits(n: int, orbit_coeffs: Mapping[tuple, Scalar]) -> Form:
    """Symmetric form from one coefficient per exponent multiset.

    ``orbit_coeffs`` maps a partition (nonzero parts, any order) to the coefficient
    shared by every monomial in its orbit.
    """
    terms = {}
    degree = None
    for parts, c in orbit_coeffs.items():
        parts = tuple(p for p in parts if p)
        if len(parts) > n:
            continue
        d = sum(parts)
        if degree is None:
            degree = d
        elif d != degree:
            raise FormError("orbit partitions of different degrees")
        for exp in distinct_permutations(list(parts) + [0] * (n - len(parts))):
            terms[tuple(int(e) for e in exp)] = c
    return Form(n, degree or 0, terms)


# ---------------------------------------------------------------------------
# evaluation patterns

@dataclass(frozen=True)
class PatternPoint:
    """A point whose slots are rational constants or the parameters ``T``/``U``."""

    entries: tuple

    def __post_init__(self):
        if not self.entries:
            raise FormError("a pattern needs at least one slot")
        norm = []
        for s in self.entries:
            if isinstance(s, str) and s.strip().upper() in PARAMS:
                norm.append(s.strip().upper())
            else:
                norm.append(as_fraction(s))
        object.__setattr__(self, "entries", tuple(norm))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def params(self) -> tuple:
        return tuple(p for p in PARAMS if p in self.entries)

    def is_concrete(self) -> bool:
        return not self.params

    def point(self) -> tuple:
        if not self.is_concrete():
            raise FormError("pattern still has parameter slots")
        return self.entries

    @classmethod
    def v(cls, n: int, positions: Iterable[int]) -> "PatternPoint":
        """The point with ones at the given (0-based) positions and zeros elsewhere."""
        pos = set(positions)
        return cls(tuple(Fraction(int(i in pos)) for i in range(n)))

    @classmethod
    def parse(cls, items: Sequence) -> "PatternPoint":
        return cls(tuple(items))

    def to_list(self) -> list:
        return [s if isinstance(s, str) else str(s) for s in self.entries]

    def permutations(self) -> list:
        return [PatternPoint(p) for p in distinct_permutations(self.entries)]

    def sign_variants(self) -> list:
        """All sign choices on the nonzero constant slots."""
        out = [()]
        for s in self.entries:
            if isinstance(s, str) or s == 0:
                out = [o + (s,) for o in out]
            else:
                out = [o + (s,) for o in out] + [o + (-s,) for o in out]
        return [PatternPoint(o) for o in out]

    def substitute(self, t=None, u=None) -> tuple:
        vals = {T: t, U: u}
        return tuple(as_fraction(vals[s]) if isinstance(s, str) else s for s in self.entries)

    def restrict_monomial(self, exp: Sequence[int]) -> tuple:
        """Image of ``x^exp`` on the pattern as ``(coefficient, t_power, u_power)``."""
        c = Fraction(1)
        tp = up = 0
        for s, e in zip(self.entries, exp):
            if not e:
                continue
            if s == T:
                tp += e
            elif s == U:
                up += e
            else:
                c *= s ** e
                if not c:
                    return (c, 0, 0)
        return (c, tp, up)


@dataclass(frozen=True)
class PointFamily:
    """A pattern together with the symmetry orbit it stands for."""

    pattern: PatternPoint
    permute: bool = True
    signs: bool = False

    def members(self) -> list:
        base = self.pattern.permutations() if self.permute else [self.pattern]
        if not self.signs:
            return base
        seen = {}
        for p in base:
            for q in p.sign_variants():
                seen.setdefault(q.entries, q)
        return list(seen.values())

    def points(self) -> list:
        return [m.point() for m in self.members()]

    def to_dict(self) -> dict:
        return {"pattern": self.pattern.to_list(), "permute": self.permute, "signs": self.signs}

    @classmethod
    def from_dict(cls, data: Mapping) -> "PointFamily":
        return cls(PatternPoint.parse(data["pattern"]), bool(data.get("permute", True)),
                   bool(data.get("signs", False)))


class BivariatePoly:
    """Polynomial in ``t, u`` stored as ``{(i, j): coeff}`` for ``t^i u^j``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple, Scalar]):
        self.coeffs = {k: as_fraction(c) for k, c in sorted(coeffs.items()) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, BivariatePoly) and self.coeffs == other.coeffs

    def __call__(self, t, u) -> Fraction:
        t, u = as_fraction(t), as_fraction(u)
        return sum((c * t ** i * u ** j for (i, j), c in self.coeffs.items()), Fraction(0))

    def __repr__(self):
        return f"BivariatePoly({self.coeffs})"


def restrict_parametric(f: Form, pattern: PatternPoint):
    """Substitute a pattern into ``f``.

    One parameter gives a :class:`UnivariatePoly` in that parameter; two give a
    :class:`BivariatePoly` in ``(t, u)``.
    """
    if pattern.n != f.n:
        raise FormError(f"pattern has {pattern.n} slots, form has {f.n} variables")
    params = pattern.params
    if not params:
        raise FormError("pattern has no parameter slots; use evaluate")
    if len(params) == 1:
        out: dict = {}
        for exp, c in f.terms.items():
            k, tp, up = pattern.restrict_monomial(exp)
            if k:
                p = tp + up
                out[p] = out.get(p, 0) + c * k
        deg = max(out, default=0)
        return UnivariatePoly([out.get(i, 0) for i in range(deg + 1)])
    out = {}
    for exp, c in f.terms.items():
        k, tp, up = pattern.restrict_monomial(exp)
        if k:
            out[(tp, up)] = out.get((tp, up), 0) + c * k
    return BivariatePoly(out)
