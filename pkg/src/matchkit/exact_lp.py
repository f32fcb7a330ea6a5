"""Exact rational feasibility for ``A x = b, x >= 0`` by phase-one simplex.

Bland's rule guarantees termination; all arithmetic uses ``Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible_point(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction] | None:
    """Return some ``x >= 0`` with ``A x = b``, or ``None`` if none exists."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if rows == 0:
        return [Fraction(0)] * cols
    # tableau: original columns, one artificial per row, right-hand side
    T: list[list[Fraction]] = []
    for i in range(rows):
        sign = -1 if b[i] < 0 else 1
        row = [Fraction(sign * a) for a in A[i]]
        row += [Fraction(1 if j == i else 0) for j in range(rows)]
        row.append(Fraction(sign * b[i]))
        T.append(row)
    width = cols + rows
    basis = [cols + i for i in range(rows)]
    # phase-one objective: minimise the sum of artificials, kept as reduced costs
    cost = [Fraction(0)] * (width + 1)
    for i in range(rows):
        for j in range(width + 1):
            cost[j] -= T[i][j]
    for j in range(cols, width):
        cost[j] += 1

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(rows):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded phase-one objective cannot happen
            raise ArithmeticError("phase-one simplex became unbounded")
        r = best[1]
        piv = T[r][enter]
        T[r] = [x / piv for x in T[r]]
        for i in range(rows):
            if i != r and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[r])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, T[r])]
        basis[r] = enter

    if -cost[-1] != 0:
        return None
    x = [Fraction(0)] * cols
    for i, j in enumerate(basis):
        if j < cols:
            x[j] = T[i][-1]
    return x
