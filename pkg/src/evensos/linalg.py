"""Exact kernels and left solves by fraction-free integer row reduction.

Rows are first scaled to primitive integer vectors; elimination keeps every row
integral and divides out the row content after each step, so entries stay small
and the pivot order (first nonzero row, top to bottom) is fully deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence


def _primitive(row: list) -> list:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
    if g > 1:
        row = [v // g for v in row]
    return row


def _integer_row(row: Sequence) -> list:
    fr = [Fraction(v) for v in row]
    den = lcm(*(v.denominator for v in fr)) if fr else 1
    return _primitive([int(v * den) for v in fr])


def rref(rows: Sequence[Sequence], ncols: Optional[int] = None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` is a list of Fraction rows (one per
    pivot, pivot entry 1) and ``pivots`` the pivot column indices.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    work = [_integer_row(r) for r in rows]
    for r in work:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    pivots: list = []
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        prow = work[top]
        p = prow[col]
        for i in range(len(work)):
            if i == top or not work[i][col]:
                continue
            a = work[i][col]
            g = gcd(p, a)
            mp, ma = p // g, a // g
            work[i] = _primitive([mp * x - ma * y for x, y in zip(work[i], prow)])
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    out = []
    for i, col in enumerate(pivots):
        p = work[i][col]
        out.append([Fraction(v, p) for v in work[i]])
    return out, pivots


def rank(rows: Sequence[Sequence], ncols: Optional[int] = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list:
    """Basis of ``{x : A x = 0}``; one vector per free column, with a 1 in that column."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    R, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, pc in zip(R, pivots):
            v[pc] = -r[free]
        basis.append(v)
    return basis


def mat_vec(rows: Sequence[Sequence], vec: Sequence) -> list:
    return [sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in rows]


def vec_mat(vec: Sequence, rows: Sequence[Sequence], ncols: int) -> list:
    """``y^T A``."""
    out = [Fraction(0)] * ncols
    for y, r in zip(vec, rows):
        if y:
            for j, a in enumerate(r):
                if a:
                    out[j] += y * a
    return out


def solve_left(rows: Sequence[Sequence], target: Sequence, ncols: int) -> Optional[list]:
    """Some ``y`` with ``y^T A = target``, or ``None`` if ``target`` is not in the row space."""
    m = len(rows)
    if m == 0:
        return [] if not any(target) else None
    # columns of A become equations in the unknowns y_1..y_m
    aug = [[rows[i][j] for i in range(m)] + [target[j]] for j in range(ncols)]
    R, pivots = rref(aug, m + 1)
    if m in pivots:
        return None
    y = [Fraction(0)] * m
    for r, pc in zip(R, pivots):
        y[pc] = r[m]
    return y
