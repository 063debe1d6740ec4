"""Cyclotomic polynomials, their real counterparts, and the factors Omega_d
of w_n.

Omega_d is the minimal polynomial of rho + 1/rho + 2 for rho a primitive
2d-th root of unity, i.e. psi_{2d}(x - 2) where psi_N is the minimal
polynomial of zeta_N + 1/zeta_N.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .intpoly import ONE, IntPoly, divide_exact, taylor_shift
from .numtheory import OutOfRange, divisors, euler_phi, is_prime, mobius
from .sequences import eisenstein_check, vieta_lucas, w

CYCLOTOMIC_BOUND = 10**5


class EvenIndex(ValueError):
    pass


class ProductMismatch(AssertionError):
    pass


def _times_xd_minus_1(a: list[int], d: int) -> list[int]:
    out = [0] * d + a
    for i, c in enumerate(a):
        out[i] -= c
    return out


def _div_xd_minus_1(a: list[int], d: int) -> list[int]:
    # a = q * (x^d - 1): q[i] = a[i + d] + q[i + d], from the top down
    n = len(a) - d
    q = [0] * n
    for i in range(n - 1, -1, -1):
        q[i] = a[i + d] + (q[i + d] if i + d < n else 0)
    for i in range(d):
        if a[i] != -(q[i] if i < n else 0):
            raise ArithmeticError(f"x^{d} - 1 does not divide")
    return q


@lru_cache(maxsize=4096)
def cyclotomic_poly(N: int, bound: int = CYCLOTOMIC_BOUND) -> IntPoly:
    """Phi_N as prod_{d | N} (x^d - 1)^mu(N/d)."""
    if N < 1 or N > bound:
        raise OutOfRange(f"N={N} outside [1, {bound}]")
    num, den = [], []
    for d in divisors(N):
        mu = mobius(N // d)
        if mu == 1:
            num.append(d)
        elif mu == -1:
            den.append(d)
    acc = [1]
    for d in num:
        acc = _times_xd_minus_1(acc, d)
    for d in den:
        acc = _div_xd_minus_1(acc, d)
    return IntPoly(acc)


@lru_cache(maxsize=4096)
def real_cyclotomic_poly(N: int) -> IntPoly:
    """psi_N, the minimal polynomial of zeta_N + zeta_N^-1.

    Phi_N is palindromic of degree 2m, so Phi_N(x) / x^m collapses to
    a_m + sum_k a_{m+k} (x^k + x^-k), and x^k + x^-k = v_k(x + 1/x).
    """
    if N < 3:
        raise OutOfRange("psi_N needs N >= 3")
    phi_n = cyclotomic_poly(N)
    m = phi_n.degree // 2
    a = phi_n.coeffs
    acc = IntPoly.const(a[m])
    for k in range(1, m + 1):
        if a[m + k]:
            acc = acc + vieta_lucas(k).scale(a[m + k])
    return acc


@dataclass(frozen=True)
class OmegaFactor:
    d: int
    poly: IntPoly

    @property
    def degree(self) -> int:
        return self.poly.degree

    def to_json(self) -> dict:
        return {"d": self.d, "degree": self.degree, "coeffs": self.poly.to_json()}


@lru_cache(maxsize=4096)
def omega(d: int) -> OmegaFactor:
    if d % 2 == 0:
        raise EvenIndex(f"Omega_d needs odd d, got {d}")
    if d < 3:
        raise OutOfRange(f"Omega_d needs d >= 3, got {d}")
    poly = taylor_shift(real_cyclotomic_poly(2 * d), -2)
    if poly.degree != euler_phi(d) // 2 or not poly.is_monic():
        raise AssertionError(f"Omega_{d} has the wrong shape: {poly}")
    if is_prime(d) and not eisenstein_check(poly, d):
        raise AssertionError(f"Omega_{d} is not {d}-Eisenstein")
    return OmegaFactor(d, poly)


@dataclass(frozen=True)
class WFactorization:
    n: int
    factors: dict[int, OmegaFactor] = field(default_factory=dict)

    @property
    def modulus(self) -> int:
        return 2 * self.n - 1

    def product(self) -> IntPoly:
        acc = ONE
        for f in self.factors.values():
            acc = acc * f.poly
        return acc

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "modulus": self.modulus,
            "factors": [self.factors[d].to_json() for d in sorted(self.factors)],
        }


def factor_w(n: int) -> WFactorization:
    """Build Omega_d for every d > 1 dividing 2n - 1 and check the product
    against w_n from the recurrence."""
    if n < 2:
        raise ValueError("factor_w needs n >= 2")
    factors = {d: omega(d) for d in divisors(2 * n - 1) if d > 1}
    result = WFactorization(n, factors)
    if result.product() != w(n):
        raise ProductMismatch(f"prod Omega_d != w_{n}")
    return result


def primitive_divisor(n: int) -> OmegaFactor:
    if n < 2:
        raise ValueError("primitive_divisor needs n >= 2")
    return omega(2 * n - 1)


def quotient_by_primitive(n: int) -> IntPoly:
    """w_n / Omega_{2n-1}; raises NotDivisible if the division is not exact."""
    return divide_exact(w(n), primitive_divisor(n).poly)
