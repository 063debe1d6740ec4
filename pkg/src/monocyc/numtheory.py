"""Integer utilities: primality, factorization, phi, divisors, Moebius, and a
brute-force scan of the group (Z/NZ)* / {+1, -1}."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

LIMIT_64 = 2**64
UNIT_GROUP_BOUND = 10**6

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % q for q in range(2, int(p**0.5) + 1))]


class OutOfRange(ValueError):
    pass


class FactorizationTooHard(ArithmeticError):
    """A composite cofactor beyond 2^64 could not be split."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, correct for every n < 2^64."""
    if n < 0:
        raise OutOfRange("is_prime expects n >= 0")
    if n >= LIMIT_64:
        raise OutOfRange("is_prime is only certified below 2^64")
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, rng: random.Random, max_iter: int | None = None) -> int | None:
    """Pollard-Brent rho. Returns a nontrivial factor or None on give-up."""
    if n % 2 == 0:
        return 2
    spent = 0
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
            spent += r
            if max_iter is not None and spent > max_iter:
                return None
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _perfect_power_root(n: int) -> tuple[int, int]:
    for k in range(int(math.log2(n)), 1, -1):
        r = round(n ** (1.0 / k)) if n < 2**1000 else _iroot(n, k)
        for cand in (r - 1, r, r + 1):
            if cand > 1 and cand**k == n:
                return cand, k
    return n, 1


def _iroot(n: int, k: int) -> int:
    lo, hi = 1, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


@dataclass(frozen=True)
class IntFactorization:
    pairs: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.pairs]

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def to_json(self) -> list[list[int]]:
        return [[p, e] for p, e in self.pairs]


def factor_int(n: int, seed: int = 1) -> IntFactorization:
    if n < 1:
        raise ValueError("factor_int expects n >= 1")
    counts: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            n //= p
            counts[p] = counts.get(p, 0) + 1
    rng = random.Random(seed)
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m < _SMALL_PRIMES[-1] ** 2 or (m < LIMIT_64 and is_prime(m)):
            counts[m] = counts.get(m, 0) + 1
            continue
        root, k = _perfect_power_root(m)
        if k > 1:
            stack.extend([root] * k)
            continue
        f = _brent(m, rng, max_iter=None if m < LIMIT_64 else 2_000_000)
        if f is None:
            raise FactorizationTooHard(f"could not split {m}")
        stack.extend([f, m // f])
    return IntFactorization(tuple(sorted(counts.items())))


@lru_cache(maxsize=65536)
def _factor_cached(n: int) -> IntFactorization:
    return factor_int(n)


def euler_phi(n: int) -> int:
    out = n
    for p, _ in _factor_cached(n).pairs:
        out = out // p * (p - 1)
    return out


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in _factor_cached(n).pairs:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    pairs = _factor_cached(n).pairs
    if any(e > 1 for _, e in pairs):
        return 0
    return -1 if len(pairs) % 2 else 1


def phi_divisors_mobius(n: int) -> tuple[int, list[int], int]:
    if n < 1:
        raise ValueError("n must be positive")
    return euler_phi(n), divisors(n), mobius(n)


@dataclass(frozen=True)
class UnitGroupReport:
    modulus: int
    group_order: int
    max_order: int
    is_cyclic: bool
    witness: int


def _powmod_vec(base: np.ndarray, exponent: int, n: int) -> np.ndarray:
    result = np.ones_like(base)
    b = base.copy()
    while exponent:
        if exponent & 1:
            result = result * b % n
        exponent >>= 1
        if exponent:
            b = b * b % n
    return result


def unit_group_mod_pm1(N: int, bound: int = UNIT_GROUP_BOUND) -> UnitGroupReport:
    """Scan every unit u mod N and compute the order of its class in
    (Z/NZ)*/{+-1}: the least k with u^k = +-1 (mod N).

    Orders are found per element; the group structure is never consulted.
    """
    if N < 3:
        raise OutOfRange("unit group oracle needs N >= 3")
    if N > bound:
        raise OutOfRange(f"N={N} exceeds the sweep bound {bound}")
    # products of two residues must fit the dtype
    dtype = np.int32 if N < 46341 else np.int64
    # one representative u < N/2 per class {u, -u}
    residues = np.arange(1, (N + 1) // 2, dtype=dtype)
    units = residues[np.gcd(residues, N) == 1]
    order = len(units)
    if order == 1:
        return UnitGroupReport(N, 1, 1, True, 1)

    def is_pm1(v: np.ndarray) -> np.ndarray:
        return (v == 1) | (v == N - 1)

    # Every class order divides |G|; the q-primary part of ord(u) is the
    # least q^j with (u^(|G|/q^e))^(q^j) = +-1.
    elem_order = np.ones(len(units), dtype=np.int64)
    for q, e in factor_int(order).pairs:
        v = _powmod_vec(units, order // q**e, N)
        part = np.ones(len(units), dtype=np.int64)
        done = is_pm1(v)
        for _ in range(e):
            pending = ~done
            if not pending.any():
                break
            part[pending] *= q
            v = _powmod_vec(v, q, N)
            done = done | is_pm1(v)
        elem_order *= part
    best = int(np.argmax(elem_order))
    max_order = int(elem_order[best])
    witness = int(units[best])
    # confirm the witness by direct exponentiation
    pm1 = (1, N - 1)
    ok = pow(witness, max_order, N) in pm1 and all(
        pow(witness, max_order // q, N) not in pm1 for q in factor_int(max_order).primes
    )
    if not ok:
        raise AssertionError(f"witness {witness} mod {N} does not have class order {max_order}")
    return UnitGroupReport(N, order, max_order, max_order == order, witness)
