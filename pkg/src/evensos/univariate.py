"""Univariate polynomials over Q: Sturm sequences, rational roots, nonnegativity."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c)
    return Fraction(c)


class UnivariatePoly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of ``t**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_roots(cls, roots, lead=1) -> "UnivariatePoly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UnivariatePoly([other])
        return isinstance(other, UnivariatePoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UnivariatePoly({[str(c) for c in self.coeffs]})"

    def __call__(self, x) -> Fraction:
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if not isinstance(other, UnivariatePoly):
            other = UnivariatePoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UnivariatePoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, UnivariatePoly) else -_frac(other))

    def __mul__(self, other):
        if not isinstance(other, UnivariatePoly):
            return UnivariatePoly([c * _frac(other) for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UnivariatePoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UnivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UnivariatePoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: "UnivariatePoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        dl, lc = other.degree, other.lead
        while len(rem) - 1 >= dl and any(rem):
            shift = len(rem) - 1 - dl
            k = rem[-1] / lc
            q[shift] = k
            for i, c in enumerate(other.coeffs):
                rem[i + shift] -= k * c
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return UnivariatePoly(q), UnivariatePoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "UnivariatePoly":
        return UnivariatePoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UnivariatePoly":
        return self * (1 / self.lead) if self.coeffs else self

    def primitive_integer(self) -> list:
        """Integer coefficient list proportional to ``self`` with positive content 1."""
        den = lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return [v // g for v in ints] if g else ints

    def trailing_zeros(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0


def poly_gcd(a: UnivariatePoly, b: UnivariatePoly) -> UnivariatePoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(p: UnivariatePoly) -> list:
    """Yun's algorithm: monic squarefree ``s_1, s_2, ...`` with ``p = lead * prod s_i**i``."""
    if p.degree < 1:
        return []
    out = []
    a = p.monic()
    b = a.derivative()
    c = poly_gcd(a, b)
    w = a // c
    y = b // c
    z = y - w.derivative()
    while w.degree > 0:
        g = poly_gcd(w, z)
        out.append(g)
        w = w // g
        y = z // g
        z = y - w.derivative()
    while out and out[-1].degree == 0:
        out.pop()
    return out


def squarefree_part(p: UnivariatePoly) -> UnivariatePoly:
    if p.degree < 1:
        return UnivariatePoly([1])
    return (p // poly_gcd(p, p.derivative())).monic()


def sturm_sequence(p: UnivariatePoly) -> list:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def _sign_changes(seq, x) -> int:
    signs = [v for v in (s(x) for s in seq) if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a < 0) != (b < 0))


def count_roots(p: UnivariatePoly, a, b) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval ``(a, b]``."""
    s = squarefree_part(p)
    if s.degree < 1:
        return 0
    seq = sturm_sequence(s)
    return _sign_changes(seq, _frac(a)) - _sign_changes(seq, _frac(b))


def count_roots_open(p: UnivariatePoly, a, b) -> int:
    b = _frac(b)
    return count_roots(p, a, b) - (1 if p(b) == 0 else 0)


def root_bound(p: UnivariatePoly) -> Fraction:
    """Cauchy bound: every real root lies strictly inside ``(-B, B)``."""
    if p.degree < 1:
        return Fraction(1)
    return 1 + max(abs(c / p.lead) for c in p.coeffs[:-1])


def real_root_count(p: UnivariatePoly) -> int:
    b = root_bound(p)
    return count_roots(p, -b, b)


@dataclass
class NonnegResult:
    nonneg: bool
    witness: Optional[Fraction] = None
    value: Optional[Fraction] = None

    def __bool__(self):
        return self.nonneg


def _nonzero_point(p: UnivariatePoly, a: Fraction, b: Fraction) -> Fraction:
    """A rational in the open interval ``(a, b)`` that is not a root of ``p``."""
    m = (a + b) / 2
    while p(m) == 0:
        m = (a + m) / 2
    return m


def univariate_nonneg(p: UnivariatePoly, interval: Optional[tuple] = None) -> NonnegResult:
    """Decide ``p >= 0`` on the real line (``interval=None``) or on a closed interval.

    A negative verdict always comes with a rational witness where ``p`` is
    strictly negative.
    """
    if interval is not None:
        lo, hi = _frac(interval[0]), _frac(interval[1])
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
    if p.is_zero():
        return NonnegResult(True)
    if interval is None:
        bound = root_bound(p)
        if p.degree % 2 or p.lead < 0:
            for x in (bound + 1, -bound - 1):
                if p(x) < 0:
                    return NonnegResult(False, x, p(x))
        lo, hi = -bound, bound
    if lo == hi:
        v = p(lo)
        return NonnegResult(v >= 0, None if v >= 0 else lo, None if v >= 0 else v)
    for x in (lo, hi):
        if p(x) < 0:
            return NonnegResult(False, x, p(x))

    odd = UnivariatePoly([1])
    for mult, s in enumerate(squarefree_decomposition(p), start=1):
        if mult % 2:
            odd = odd * s
    if odd.degree < 1 or count_roots_open(odd, lo, hi) == 0:
        # constant sign on the open interval
        x = _nonzero_point(p, lo, hi)
        v = p(x)
        return NonnegResult(v > 0, None if v > 0 else x, None if v > 0 else v)

    # isolate one odd-multiplicity root between two non-roots of p
    sqf = squarefree_part(p)
    a, b = lo, hi
    while True:
        if count_roots_open(odd, a, b) == 0:
            raise AssertionError("lost the odd root during bisection")
        if count_roots_open(sqf, a, b) == 1 and p(a) != 0 and p(b) != 0:
            break
        m = _nonzero_point(p, a, b)
        if count_roots_open(odd, a, m) > 0:
            b = m
        else:
            a = m
    x = a if p(a) < 0 else b
    return NonnegResult(False, x, p(x))


@dataclass
class RootFactorization:
    """``p = constant * prod (t - r)**m * residual`` with ``residual`` monic and free of rational roots."""

    constant: Fraction
    roots: dict = field(default_factory=dict)
    residual: UnivariatePoly = field(default_factory=lambda: UnivariatePoly([1]))
    residual_real_roots: int = 0

    @property
    def residual_positive(self) -> bool:
        return self.residual_real_roots == 0

    def expand(self) -> UnivariatePoly:
        out = self.residual * self.constant
        for r, m in self.roots.items():
            out = out * UnivariatePoly([-r, 1]) ** m
        return out


def _divisors(n: int) -> list:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def rational_roots_with_multiplicity(p: UnivariatePoly) -> RootFactorization:
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root structure")
    constant = p.lead
    rest = p.monic()
    roots: dict = {}
    z = rest.trailing_zeros()
    if z:
        roots[Fraction(0)] = z
        rest = UnivariatePoly(rest.coeffs[z:])
    if rest.degree >= 1:
        ints = rest.primitive_integer()
        cands = set()
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                cands.add(Fraction(num, den))
                cands.add(Fraction(-num, den))
        for r in sorted(cands):
            lin = UnivariatePoly([-r, 1])
            while rest.degree >= 1:
                q, rem = divmod(rest, lin)
                if not rem.is_zero():
                    break
                roots[r] = roots.get(r, 0) + 1
                rest = q
    residual = rest.monic()
    return RootFactorization(constant, dict(sorted(roots.items())), residual,
                             real_root_count(residual))
