"""Exact linear programming over the rationals.

The systems met here have a handful of free variables and many inequality
rows, so everything is routed through the dual, which is a standard-form
program with only as many equality rows as there are variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


class UnboundedRelaxation(ArithmeticError):
    """The LP relaxation of an integer system does not bound some variable."""


@dataclass
class LPResult:
    status: str
    value: Fraction | None = None
    x: list[Fraction] | None = None


# Tableau rows are kept fraction-free: a row is [den, n_0, n_1, ...] meaning
# (n_0/den, n_1/den, ...) with den > 0.  Pivots stay in Python ints.

def _int_row(values: Sequence) -> list[int]:
    fr = [Fraction(v) for v in values]
    den = 1
    for v in fr:
        den = den * v.denominator // gcd(den, v.denominator)
    return _normalize([den] + [int(v * den) for v in fr])


def _normalize(row: list[int]) -> list[int]:
    g = gcd(*row)
    if g > 1:
        row = [v // g for v in row]
    return row


def _pivot(tab: list[list[int]], basis: list[int], row: int, col: int) -> None:
    prow = tab[row]
    piv = prow[col + 1]
    if piv < 0:
        prow = [-v for v in prow]
        piv = -piv
    # v_r / v_r[col]: numerators unchanged, denominator becomes the pivot entry
    prow = _normalize([piv] + prow[1:])
    tab[row] = prow
    piv = prow[col + 1]
    for r in range(len(tab)):
        if r == row:
            continue
        cur = tab[r]
        c = cur[col + 1]
        if c:
            # v_i - v_i[col] * v_r' with common denominator den_i * piv
            tab[r] = _normalize([cur[0] * prow[0]] + [a * piv - c * b for a, b in zip(cur[1:], prow[1:])])
    basis[row] = col


def _simplex(tab, basis, allowed: int) -> str:
    """Minimize the objective in the last row over columns < allowed (Bland's rule)."""
    m = len(tab) - 1
    while True:
        obj = tab[m]
        col = next((j for j in range(allowed) if obj[j + 1] < 0), None)
        if col is None:
            return OPTIMAL
        best = None
        for r in range(m):
            a = tab[r][col + 1]
            if a > 0:
                ratio = Fraction(tab[r][-1], a)
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            return UNBOUNDED
        _pivot(tab, basis, best[1], col)


def minimize_standard(c: Sequence, a_eq: Sequence[Sequence], b_eq: Sequence) -> LPResult:
    """Minimize c.y subject to a_eq y = b_eq, y >= 0 (two-phase simplex)."""
    m = len(a_eq)
    n = len(c)
    rows = []
    for i in range(m):
        row = [Fraction(v) for v in a_eq[i]]
        rhs = Fraction(b_eq[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        rows.append(row + [int(i == k) for k in range(m)] + [rhs])
    basis = [n + i for i in range(m)]
    # phase one: drive the artificials out
    obj = [Fraction(0)] * (n + m + 1)
    for row in rows:
        for j in range(n):
            obj[j] -= row[j]
        obj[-1] -= row[-1]
    tab = [_int_row(r) for r in rows] + [_int_row(obj)]
    _simplex(tab, basis, n)
    if tab[m][-1] != 0:
        return LPResult(INFEASIBLE)
    # pivot remaining zero-level artificials out of the basis where possible
    for r in range(m):
        if basis[r] >= n:
            col = next((j for j in range(n) if tab[r][j + 1] != 0), None)
            if col is not None:
                _pivot(tab, basis, r, col)
    keep = [r for r in range(m) if basis[r] < n]
    tab = [_normalize(tab[r][: n + 1] + [tab[r][-1]]) for r in keep]
    basis = [basis[r] for r in keep]
    obj = [Fraction(v) for v in c] + [Fraction(0)]
    for r, b in enumerate(basis):
        cb = obj[b]
        if cb:
            den = tab[r][0]
            obj = [o - cb * Fraction(t, den) for o, t in zip(obj, tab[r][1:])]
    tab.append(_int_row(obj))
    status = _simplex(tab, basis, n)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    y = [Fraction(0)] * n
    for r, b in enumerate(basis):
        y[b] = Fraction(tab[r][-1], tab[r][0])
    return LPResult(OPTIMAL, -Fraction(tab[-1][-1], tab[-1][0]), y)


def is_feasible(a_ub: Sequence[Sequence], b_ub: Sequence) -> bool:
    """Whether {x free : a_ub x <= b_ub} is nonempty.

    By Farkas' lemma the system is empty exactly when some y >= 0 has
    y.a_ub = 0 and y.b_ub < 0; search for one with sum(y) <= 1.
    """
    m = len(a_ub)
    if m == 0:
        return True
    k = len(a_ub[0])
    cols_eq = [[a_ub[i][j] for i in range(m)] + [0] for j in range(k)]
    cols_eq.append([1] * m + [1])
    res = minimize_standard(list(b_ub) + [0], cols_eq, [0] * k + [1])
    return res.value >= 0


def maximize_free(obj: Sequence, a_ub: Sequence[Sequence], b_ub: Sequence) -> LPResult:
    """max obj.x over {x free : a_ub x <= b_ub}, via the dual min b.y, a_ub^T y = obj, y >= 0."""
    if not is_feasible(a_ub, b_ub):
        return LPResult(INFEASIBLE)
    return _maximize_feasible(obj, a_ub, b_ub)


def _maximize_feasible(obj, a_ub, b_ub) -> LPResult:
    m = len(a_ub)
    k = len(obj)
    if m == 0:
        return LPResult(UNBOUNDED) if any(obj) else LPResult(OPTIMAL, Fraction(0))
    a_t = [[a_ub[i][j] for i in range(m)] for j in range(k)]
    dual = minimize_standard(list(b_ub), a_t, list(obj))
    if dual.status == INFEASIBLE:
        return LPResult(UNBOUNDED)
    return LPResult(OPTIMAL, dual.value)


def variable_bounds(a_ub: Sequence[Sequence], b_ub: Sequence) -> list[tuple[Fraction, Fraction]] | None:
    """Exact [min, max] of every coordinate over the polyhedron, or None if it is empty."""
    if not is_feasible(a_ub, b_ub):
        return None
    k = len(a_ub[0]) if a_ub else 0
    out = []
    for j in range(k):
        e = [0] * k
        e[j] = 1
        hi = _maximize_feasible(e, a_ub, b_ub)
        e[j] = -1
        lo = _maximize_feasible(e, a_ub, b_ub)
        if hi.status != OPTIMAL or lo.status != OPTIMAL:
            raise UnboundedRelaxation(f"variable {j} is unbounded in the relaxation")
        out.append((-lo.value, hi.value))
    return out
