"""Polynomials over a prime field F_p and their complete factorization.

The pipeline is the textbook one: squarefree decomposition, distinct-degree
factorization, then equal-degree splitting (Cantor-Zassenhaus for odd p, the
trace map for p = 2). Randomness comes from an explicit ``random.Random``.
"""

from __future__ import annotations

import random
from typing import Iterable

MAX_MODULUS = 2**63


class ModulusMismatch(ValueError):
    pass


class ModulusTooLarge(ValueError):
    pass


class FpPoly:
    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        if p >= MAX_MODULUS:
            raise ModulusTooLarge(f"modulus {p} exceeds 2^63")
        c = [int(a) % p for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("FpPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("FpPoly", self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"FpPoly({self.p}, {list(self.coeffs)!r})"

    def __str__(self) -> str:
        from .intpoly import IntPoly, pretty

        return pretty(IntPoly(self.coeffs))

    def sort_key(self) -> tuple:
        return (self.degree, self.coeffs)

    def _check(self, other: FpPoly) -> None:
        if self.p != other.p:
            raise ModulusMismatch(f"moduli differ: {self.p} vs {other.p}")

    def __add__(self, other: FpPoly) -> FpPoly:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return FpPoly(self.p, out)

    def __neg__(self) -> FpPoly:
        return FpPoly(self.p, [-c for c in self.coeffs])

    def __sub__(self, other: FpPoly) -> FpPoly:
        return self + (-other)

    def __mul__(self, other: FpPoly) -> FpPoly:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FpPoly(self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return FpPoly(self.p, out)

    def __pow__(self, k: int) -> FpPoly:
        result, base = FpPoly(self.p, [1]), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other: FpPoly) -> tuple[FpPoly, FpPoly]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial over F_p")
        p = self.p
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return FpPoly(p), self
        inv = pow(other.lc, -1, p)
        bc = other.coeffs
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            top = rem[k + db] % p
            if top == 0:
                continue
            q = top * inv % p
            quot[k] = q
            for i, c in enumerate(bc):
                rem[k + i] = (rem[k + i] - q * c) % p
        return FpPoly(p, quot), FpPoly(p, rem[:db])

    def __floordiv__(self, other: FpPoly) -> FpPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: FpPoly) -> FpPoly:
        return divmod(self, other)[1]

    def monic(self) -> FpPoly:
        if self.is_zero() or self.lc == 1:
            return self
        inv = pow(self.lc, -1, self.p)
        return FpPoly(self.p, [c * inv for c in self.coeffs])

    def derivative(self) -> FpPoly:
        return FpPoly(self.p, [i * c for i, c in enumerate(self.coeffs)][1:])

    def powmod(self, k: int, mod: FpPoly) -> FpPoly:
        result = FpPoly(self.p, [1]) % mod
        base = self % mod
        while k:
            if k & 1:
                result = result * base % mod
            k >>= 1
            if k:
                base = base * base % mod
        return result


def x_poly(p: int) -> FpPoly:
    return FpPoly(p, [0, 1])


def gcd_mod_p(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _pth_root(f: FpPoly) -> FpPoly:
    # f has only exponents divisible by p; a^(1/p) = a over F_p
    p = f.p
    return FpPoly(p, f.coeffs[::p])


def squarefree_decomposition(f: FpPoly) -> list[tuple[FpPoly, int]]:
    if f.is_zero():
        raise ValueError("squarefree decomposition of zero")
    f = f.monic()
    acc: dict[FpPoly, int] = {}
    _sqf(f, 1, acc)
    return sorted(acc.items(), key=lambda item: (item[1], item[0].sort_key()))


def _sqf(f: FpPoly, scale: int, acc: dict[FpPoly, int]) -> None:
    if f.degree < 1:
        return
    p = f.p
    df = f.derivative()
    if df.is_zero():
        _sqf(_pth_root(f), scale * p, acc)
        return
    c = gcd_mod_p(f, df)
    w = f // c
    i = 1
    while w.degree > 0:
        y = gcd_mod_p(w, c)
        fac = w // y
        if fac.degree > 0:
            fac = fac.monic()
            acc[fac] = acc.get(fac, 0) + i * scale
        w = y
        c = c // y
        i += 1
    if c.degree > 0:
        _sqf(_pth_root(c.monic()), scale * p, acc)


def distinct_degree(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """Split a squarefree monic f into products of irreducibles of equal degree."""
    p = f.p
    out = []
    x = x_poly(p)
    h = x % f
    d = 0
    rest = f
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(p, rest)
        g = gcd_mod_p(rest, h - x)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest.monic(), rest.degree))
    return out


def equal_degree(f: FpPoly, d: int, rng: random.Random) -> list[FpPoly]:
    """Split f, a product of distinct monic irreducibles of degree d."""
    if f.degree == d:
        return [f.monic()]
    p = f.p
    n = f.degree
    while True:
        a = FpPoly(p, [rng.randrange(p) for _ in range(n)])
        if a.degree < 1:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1)) into F_2
            t = a
            s = a
            for _ in range(d - 1):
                t = t * t % f
                s = s + t
            cand = s
        else:
            cand = a.powmod((p**d - 1) // 2, f) - FpPoly(p, [1])
        g = gcd_mod_p(f, cand)
        if 0 < g.degree < n:
            return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def factor_mod_p(f: FpPoly, seed: int = 0, rng: random.Random | None = None) -> list[tuple[FpPoly, int]]:
    """Complete factorization of monic f into monic irreducibles over F_p.

    Output is sorted by degree, then by ascending coefficient tuple.
    """
    if f.degree < 1:
        raise ValueError("factor_mod_p needs degree >= 1")
    if rng is None:
        rng = random.Random(seed)
    out: dict[FpPoly, int] = {}
    for part, mult in squarefree_decomposition(f):
        for block, d in distinct_degree(part):
            for g in equal_degree(block, d, rng):
                out[g] = out.get(g, 0) + mult
    return sorted(out.items(), key=lambda item: item[0].sort_key())


def product(factors: list[tuple[FpPoly, int]], p: int) -> FpPoly:
    acc = FpPoly(p, [1])
    for g, e in factors:
        acc = acc * g**e
    return acc
