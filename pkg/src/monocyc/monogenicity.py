"""Monogenicity checks.

Two routes are provided: comparing the polynomial discriminant against the
field discriminant, and Dedekind's criterion at each prime whose square
divides the discriminant.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import isqrt

from .cyclotomic import omega
from .fppoly import MAX_MODULUS, FpPoly, ModulusTooLarge, factor_mod_p, gcd_mod_p
from .intpoly import IntPoly, discriminant
from .numtheory import FactorizationTooHard, IntFactorization, OutOfRange, euler_phi, factor_int


class NotASquareQuotient(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


class Verdict(str, enum.Enum):
    MONOGENIC = "Monogenic"
    NOT_MONOGENIC = "NotMonogenic"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class DedekindOutcome:
    p: int
    passed: bool
    g: FpPoly
    h: FpPoly
    F: FpPoly
    gcd_degree: int

    def to_json(self) -> dict:
        return {"p": self.p, "passed": self.passed}


def dedekind_at_prime(f: IntPoly, p: int, seed: int = 0) -> DedekindOutcome:
    """Dedekind's test: does p divide the index [Z_K : Z[theta]]?

    With f = prod g_i^e_i mod p, put g = prod g_i and h = f / g (lifted with
    coefficients in [0, p)), and F = (g*h - f) / p. Then p does not divide
    the index iff gcd(F, g, h) = 1 mod p.
    """
    if p >= MAX_MODULUS:
        raise ModulusTooLarge(f"prime {p} is beyond the F_p modulus bound")
    fbar = FpPoly(p, f.coeffs)
    factors = factor_mod_p(fbar, seed=seed)
    gbar = FpPoly(p, [1])
    hbar = FpPoly(p, [1])
    for gi, e in factors:
        gbar = gbar * gi
        if e > 1:
            hbar = hbar * gi ** (e - 1)
    lift = IntPoly(gbar.coeffs) * IntPoly(hbar.coeffs) - f
    if any(c % p for c in lift.coeffs):
        raise AssertionError("g*h does not reduce to f mod p")
    Fbar = FpPoly(p, [c // p for c in lift.coeffs])
    common = gcd_mod_p(gcd_mod_p(gbar, hbar), Fbar)
    return DedekindOutcome(p, common.degree == 0, gbar, hbar, Fbar, common.degree)


@dataclass(frozen=True)
class MonogenicReport:
    poly: IntPoly
    disc: int
    disc_factorization: IntFactorization | None
    per_prime: tuple[DedekindOutcome, ...] = field(default_factory=tuple)
    verdict: Verdict = Verdict.UNKNOWN

    def to_json(self) -> dict:
        return {
            "poly": self.poly.to_json(),
            "disc": str(self.disc),
            "disc_factorization": (
                self.disc_factorization.to_json() if self.disc_factorization else None
            ),
            "per_prime": [o.to_json() for o in self.per_prime],
            "verdict": self.verdict.value,
        }


def monogenic_verdict(f: IntPoly, seed: int = 0) -> MonogenicReport:
    if f.degree < 2:
        raise ValueError("monogenic_verdict needs degree >= 2")
    disc = discriminant(f)
    try:
        fac = factor_int(abs(disc))
    except FactorizationTooHard:
        return MonogenicReport(f, disc, None, (), Verdict.UNKNOWN)
    outcomes = tuple(dedekind_at_prime(f, p, seed) for p, e in fac.pairs if e >= 2)
    verdict = Verdict.MONOGENIC if all(o.passed for o in outcomes) else Verdict.NOT_MONOGENIC
    return MonogenicReport(f, disc, fac, outcomes, verdict)


def field_disc_real_cyclotomic(N: int) -> int:
    """Discriminant of Q(zeta_N + zeta_N^-1).

    Prime-power conductors p^k and 2p^k give p^((p^(k-1)(pk-k-1)-1)/2),
    N = 2^k gives 2^(2^(k-2)(k-1)-1), and every other N gives
    N^(phi/2) / prod_{p | N} p^(phi / (2(p-1))).
    """
    if N < 3:
        raise OutOfRange("field discriminant needs N >= 3")
    if N in (3, 4, 6):
        return 1
    pairs = factor_int(N).pairs
    odd = [(p, e) for p, e in pairs if p != 2]
    two = dict(pairs).get(2, 0)
    if len(odd) == 1 and two <= 1:
        p, k = odd[0]
        num = p ** (k - 1) * (p * k - k - 1) - 1
        return p ** (num // 2)
    if not odd:
        k = two
        return 2 ** (2 ** (k - 2) * (k - 1) - 1)
    phi = euler_phi(N)
    num = N ** (phi // 2)
    den = 1
    for p, _ in pairs:
        den *= p ** (phi // (2 * (p - 1)))
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"field discriminant formula not integral at N={N}")
    return q


def monogenic_by_disc_match(d: int) -> bool:
    return discriminant(omega(d).poly) == field_disc_real_cyclotomic(2 * d)


def index_square(f: IntPoly, field_disc: int) -> int:
    """Delta(f) / Delta(K), which must be a perfect square (the squared index)."""
    if field_disc == 0:
        raise NotASquareQuotient("field discriminant is zero")
    disc = abs(discriminant(f))
    q, r = divmod(disc, abs(field_disc))
    if r or isqrt(q) ** 2 != q:
        raise NotASquareQuotient(f"{disc} / {abs(field_disc)} is not a perfect square")
    return q


def equivalent(f: IntPoly, g: IntPoly) -> bool:
    """For monogenic cyclic f, g of equal degree: same field iff same discriminant."""
    if f.degree != g.degree:
        raise DegreeMismatch(f"degrees {f.degree} and {g.degree} differ")
    return discriminant(f) == discriminant(g)
