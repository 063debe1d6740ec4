"""Slow, independent reference computations used to cross-check the kernels."""

from __future__ import annotations

import itertools
from fractions import Fraction

from .fppoly import FpPoly
from .intpoly import IntPoly


def sylvester_matrix(f: IntPoly, g: IntPoly) -> list[list[int]]:
    m, n = f.degree, g.degree
    size = m + n
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (size - n - 1 - i))
    return rows


def det(matrix: list[list[int]]) -> int:
    """Determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    sign = 1
    acc = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        acc *= a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                factor = a[r][col] / a[col][col]
                for c in range(col, n):
                    a[r][c] -= factor * a[col][c]
    out = sign * acc
    assert out.denominator == 1
    return int(out)


def sylvester_resultant(f: IntPoly, g: IntPoly) -> int:
    if f.degree == 0 and g.degree == 0:
        return 1
    return det(sylvester_matrix(f, g))


def trial_division_factor(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """Factor monic f over F_p by dividing out every monic polynomial of
    increasing degree. Only practical for small p and degree."""
    p = f.p
    rest = f.monic()
    out: dict[FpPoly, int] = {}
    d = 1
    while rest.degree >= 2 * d:
        for tail in itertools.product(range(p), repeat=d):
            cand = FpPoly(p, list(reversed(tail)) + [1])
            while True:
                q, r = divmod(rest, cand)
                if not r.is_zero():
                    break
                out[cand] = out.get(cand, 0) + 1
                rest = q
            if rest.degree < 2 * d:
                break
        d += 1
    if rest.degree >= 1:
        out[rest] = out.get(rest, 0) + 1
    return sorted(out.items(), key=lambda item: item[0].sort_key())
