"""Cyclicity of Galois groups of real cyclotomic fields and of the Omega_d.

``condition_c`` decides the arithmetic condition on N; the brute-force
scan in ``numtheory.unit_group_mod_pm1`` is the independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .numtheory import OutOfRange, euler_phi, factor_int, unit_group_mod_pm1

PRIME_POWER = "PrimePower"
TWO_PRIME_POWER = "TwoPrimePower"
PRIME_POWER_PAIR = "PrimePowerPair"
TWO_PRIME_POWER_PAIR = "TwoPrimePowerPair"
FAILS = "Fails"


class UnsupportedModulus(ValueError):
    pass


class InternalInconsistency(AssertionError):
    pass


@dataclass(frozen=True)
class ConditionCVerdict:
    N: int
    satisfied: bool
    branch: str
    params: tuple[int, ...] = ()
    gamma: int | None = None
    reason: str = ""

    def to_json(self) -> dict:
        out = {"N": self.N, "satisfied": self.satisfied, "branch": self.branch}
        if self.branch in (PRIME_POWER, TWO_PRIME_POWER):
            out.update(p=self.params[0], a=self.params[1])
        elif self.params:
            p, a, q, b = self.params
            out.update(p=p, a=a, q=q, b=b)
        if self.gamma is not None:
            out["gamma"] = self.gamma
        if self.reason:
            out["reason"] = self.reason
        return out


def condition_c(N: int) -> ConditionCVerdict:
    if N < 2:
        raise OutOfRange("Condition C is defined for N >= 2")
    pairs = factor_int(N).pairs
    twos = dict(pairs).get(2, 0)
    odd = [(p, e) for p, e in pairs if p != 2]
    if twos > 1:
        return ConditionCVerdict(N, False, FAILS, reason="4 divides N")
    doubled = twos == 1
    if not odd:
        return ConditionCVerdict(N, False, FAILS, reason="no odd prime factor")
    if len(odd) == 1:
        p, a = odd[0]
        return ConditionCVerdict(N, True, TWO_PRIME_POWER if doubled else PRIME_POWER, (p, a))
    if len(odd) > 2:
        return ConditionCVerdict(N, False, FAILS, reason=f"{len(odd)} distinct odd prime factors")
    (p, a), (q, b) = odd
    gamma = gcd(euler_phi(p**a), euler_phi(q**b))
    if gamma != 2:
        return ConditionCVerdict(
            N, False, FAILS, (p, a, q, b), gamma, f"gcd(phi({p}^{a}), phi({q}^{b})) = {gamma} != 2"
        )
    branch = TWO_PRIME_POWER_PAIR if doubled else PRIME_POWER_PAIR
    return ConditionCVerdict(N, True, branch, (p, a, q, b), gamma)


def in_lemma_domain(N: int) -> bool:
    return N >= 3 and (N % 2 == 1 or N % 4 == 2)


def real_cyclotomic_gal_cyclic(N: int) -> bool:
    if N < 3:
        raise OutOfRange("N must be >= 3")
    if not in_lemma_domain(N):
        raise UnsupportedModulus(f"N={N} is divisible by 4")
    return condition_c(N).satisfied


@dataclass(frozen=True)
class OmegaGaloisReport:
    d: int
    group_order: int
    cyclic: bool
    oracle_cyclic: bool

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "group_order": self.group_order,
            "cyclic": self.cyclic,
            "oracle_cyclic": self.oracle_cyclic,
        }


def omega_galois_report(d: int) -> OmegaGaloisReport:
    if d < 3 or d % 2 == 0:
        raise ValueError("d must be odd and >= 3")
    cyclic = condition_c(d).satisfied
    oracle = unit_group_mod_pm1(2 * d).is_cyclic
    if cyclic != oracle:
        raise InternalInconsistency(f"d={d}: Condition C says {cyclic}, oracle says {oracle}")
    return OmegaGaloisReport(d, euler_phi(d) // 2, cyclic, oracle)


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def even_quartic_class(p: int, q: int) -> str:
    """Galois group of an irreducible x^4 + p x^2 + q: 'V4', 'C4' or 'D4'."""
    if _is_square(q):
        return "V4"
    if _is_square(q * (p * p - 4 * q)):
        return "C4"
    return "D4"
