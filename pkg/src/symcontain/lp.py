"""Exact rational linear programming via the simplex method.

Solves small dense problems in standard form

    maximize c.x  subject to  A x <= b,  x >= 0,

with every coefficient a ``fractions.Fraction``.  Bland's rule is used for
both the entering and leaving variable, so the method terminates without
cycling.  Problem sizes here are tiny (at most a few hundred variables), so
a plain dense tableau is adequate.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple


class UnboundedError(RuntimeError):
    """The linear program has unbounded objective value."""


def simplex_max(
    c: Sequence[Fraction],
    a_rows: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
) -> Tuple[Fraction, List[Fraction]]:
    """Maximize ``c.x`` subject to ``A x <= b`` and ``x >= 0``.

    Requires ``b >= 0`` componentwise, so the all-slack basis is feasible.
    Returns the optimal value and an optimal ``x``.
    """
    m = len(a_rows)
    n = len(c)
    if any(bi < 0 for bi in b):
        raise ValueError("simplex_max needs b >= 0 (all-slack start)")
    # Tableau rows: [a | I | b]; objective row holds reduced costs for max.
    rows = [
        [Fraction(a_rows[i][j]) for j in range(n)]
        + [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        + [Fraction(b[i])]
        for i in range(m)
    ]
    obj = [Fraction(cj) for cj in c] + [Fraction(0)] * (m + 1)
    basis = [n + i for i in range(m)]

    while True:
        enter = next((j for j in range(n + m) if obj[j] > 0), None)
        if enter is None:
            break
        # Ratio test; Bland tie-break on the basis variable index.
        leave = None
        best = None
        for i in range(m):
            if rows[i][enter] > 0:
                ratio = rows[i][-1] / rows[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise UnboundedError("objective is unbounded above")
        pivot = rows[leave][enter]
        rows[leave] = [x / pivot for x in rows[leave]]
        for i in range(m):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, rows[leave])]
        basis[leave] = enter

    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = rows[i][-1]
    value = -obj[-1]
    return value, x
