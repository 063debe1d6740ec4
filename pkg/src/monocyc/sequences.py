"""Polynomial recurrence sequences: w_n, W_n = w_n(x^2), Vieta-Lucas v_n,
Fibonacci and Lucas polynomials."""

from __future__ import annotations

import enum
import threading
from math import comb

from .intpoly import ONE, X, IntPoly, compose_square
from .numtheory import OutOfRange

TERM_BOUND = 10**4


class SeqKind(enum.Enum):
    W_SMALL = "w"
    W_BIG = "W"
    VIETA_LUCAS = "v"
    FIBONACCI = "F"
    LUCAS = "L"


class IndexOutOfRange(ValueError):
    pass


# (initial pair, multiplier, sign of the n-2 term)
_RECURRENCES = {
    SeqKind.W_SMALL: ((ONE, ONE), X - 2, -1),
    SeqKind.VIETA_LUCAS: ((IntPoly.const(2), X), X, -1),
    SeqKind.FIBONACCI: ((IntPoly(), ONE), X, 1),
    SeqKind.LUCAS: ((IntPoly.const(2), X), X, 1),
}

_memo: dict[SeqKind, list[IntPoly]] = {}
_lock = threading.Lock()


def term(kind: SeqKind, n: int, bound: int = TERM_BOUND) -> IntPoly:
    """The n-th term, built by iterating the recurrence (memoized)."""
    if n < 0 or n > bound:
        raise OutOfRange(f"index {n} outside [0, {bound}]")
    if kind is SeqKind.W_BIG:
        return compose_square(term(SeqKind.W_SMALL, n, bound))
    (a0, a1), mult, sign = _RECURRENCES[kind]
    with _lock:
        seq = _memo.setdefault(kind, [a0, a1])
        while len(seq) <= n:
            nxt = mult * seq[-1]
            nxt = nxt - seq[-2] if sign < 0 else nxt + seq[-2]
            seq.append(nxt)
        return seq[n]


def w(n: int) -> IntPoly:
    return term(SeqKind.W_SMALL, n)


def big_w(n: int) -> IntPoly:
    return term(SeqKind.W_BIG, n)


def vieta_lucas(n: int) -> IntPoly:
    return term(SeqKind.VIETA_LUCAS, n)


def vieta_coefficient(n: int, j: int) -> int:
    """B(n, j) = n/(n-j) * C(n-j, j), as an exact integer."""
    if n < 1 or j < 0 or j > n // 2:
        raise IndexOutOfRange(f"B({n}, {j}) needs n >= 1 and 0 <= j <= n//2")
    if j == 0:
        return 1
    num = n * comb(n - j - 1, j - 1)
    if num % j:
        raise ArithmeticError(f"B({n}, {j}) is not integral")
    return num // j


def vieta_closed_form(n: int) -> IntPoly:
    coeffs = [0] * (n + 1)
    for j in range(n // 2 + 1):
        coeffs[n - 2 * j] = (-1) ** j * vieta_coefficient(n, j)
    return IntPoly(coeffs)


def eisenstein_check(f: IntPoly, p: int) -> bool:
    """True iff p divides every non-leading coefficient and p^2 does not
    divide the constant term (f assumed monic)."""
    if f.degree < 1:
        return False
    lower = f.coeffs[:-1]
    return all(c % p == 0 for c in lower) and f.coeffs[0] % (p * p) != 0
