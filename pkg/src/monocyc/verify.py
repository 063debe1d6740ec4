"""Verification sweeps.

Each suite enumerates a parameter range, checks one family of identities
exactly, and returns a :class:`SweepReport`. ``run_all`` is the integration
gate behind ``monocyc verify --suite all``.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from . import galois, monogenicity, numtheory, sequences
from .cyclotomic import factor_w, omega, real_cyclotomic_poly
from .fppoly import FpPoly, factor_mod_p, product
from .intpoly import IntPoly, discriminant, divides, parse_poly, resultant
from .oracles import sylvester_resultant, trial_division_factor

SUITES = (
    "products",
    "discs",
    "condition-c",
    "dedekind",
    "field-disc",
    "primitive",
    "eisenstein",
    "distinctness",
    "corpus",
    "kernel",
)


@dataclass
class Failure:
    case: str
    expected: str
    actual: str


@dataclass
class SweepReport:
    suite: str
    params: dict
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, case: str, expected, actual) -> None:
        self.cases += 1
        if expected != actual:
            self.failures.append(Failure(case, str(expected), str(actual)))

    def to_json(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        return out

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (
            f"[{status}] {self.suite}: {self.cases} cases, "
            f"{len(self.failures)} failures ({self.wall_time:.2f}s)"
        )


def _pmap(fn: Callable, items: Iterable, threads: int) -> list:
    items = list(items)
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def suite_products(max_n: int | None = None, threads: int = 1, **_) -> SweepReport:
    max_n = max_n or 200
    rep = SweepReport("products", {"n": [2, max_n]})

    def case(n):
        try:
            fw = factor_w(n)
        except AssertionError as exc:
            return n, False, str(exc), None
        return n, True, "", sum(f.degree for f in fw.factors.values())

    for n, ok, err, deg_sum in _pmap(case, range(2, max_n + 1), threads):
        rep.check(f"w_{n} product", True, ok or err)
        if ok:
            rep.check(f"w_{n} degree ledger", n - 1, deg_sum)
    return rep


def suite_discs(max_n: int | None = None, threads: int = 1, **_) -> SweepReport:
    w_max, big_max, v_max = (max_n, max_n, max_n) if max_n else (60, 40, 60)
    rep = SweepReport("discs", {"w": [2, w_max], "W": [2, big_max], "v": [1, v_max]})
    jobs = [("w", n) for n in range(2, w_max + 1)]
    jobs += [("W", n) for n in range(2, big_max + 1)]
    jobs += [("v", n) for n in range(1, v_max + 1)]

    def case(job):
        kind, n = job
        if kind == "w":
            return discriminant(sequences.w(n)), (2 * n - 1) ** (n - 2)
        if kind == "W":
            return discriminant(sequences.big_w(n)), 2 ** (2 * n - 2) * (2 * n - 1) ** (2 * n - 3)
        return discriminant(sequences.vieta_lucas(n)), 2 ** (n - 1) * n**n

    for (kind, n), (actual, expected) in zip(jobs, _pmap(case, jobs, threads)):
        rep.check(f"disc({kind}_{n})", expected, actual)
    return rep


def suite_condition_c(max_n: int | None = None, threads: int = 1, **_) -> SweepReport:
    max_n = max_n or 20000
    rep = SweepReport("condition-c", {"N": [3, max_n]})
    Ns = range(3, max_n + 1)

    def case(N):
        return galois.condition_c(N).satisfied, numtheory.unit_group_mod_pm1(N).is_cyclic

    unasserted = []
    for N, (pred, oracle) in zip(Ns, _pmap(case, Ns, threads)):
        if galois.in_lemma_domain(N):
            rep.check(f"N={N}", oracle, pred)
        elif pred != oracle:
            unasserted.append(N)
    if unasserted:
        head = ", ".join(map(str, unasserted[:12]))
        rep.notes.append(
            f"4 | N (not asserted): {len(unasserted)} moduli where Condition C and the "
            f"oracle differ, e.g. {head}"
        )
    return rep


def suite_field_disc(max_n: int | None = None, threads: int = 1, **_) -> SweepReport:
    max_n = max_n or 200
    rep = SweepReport("field-disc", {"N": [3, max_n]})
    Ns = range(3, max_n + 1)

    def case(N):
        return monogenicity.field_disc_real_cyclotomic(N), discriminant(real_cyclotomic_poly(N))

    for N, (formula, direct) in zip(Ns, _pmap(case, Ns, threads)):
        rep.check(f"N={N}", direct, formula)
    return rep


def suite_dedekind(max_n: int | None = None, threads: int = 1, seed: int = 0, **_) -> SweepReport:
    max_n = max_n or 105
    rep = SweepReport("dedekind", {"d": [3, max_n], "odd": True})
    ds = range(3, max_n + 1, 2)

    def case(d):
        poly = omega(d).poly
        by_disc = monogenicity.monogenic_by_disc_match(d)
        if poly.degree < 2:
            # degree-1 fields: Z[theta] = Z trivially
            return by_disc, monogenicity.Verdict.MONOGENIC
        return by_disc, monogenicity.monogenic_verdict(poly, seed=seed).verdict

    for d, (by_disc, verdict) in zip(ds, _pmap(case, ds, threads)):
        rep.check(f"Omega_{d} disc = field disc", True, by_disc)
        rep.check(f"Omega_{d} Dedekind", monogenicity.Verdict.MONOGENIC, verdict)
    return rep


def suite_eisenstein(max_n: int | None = None, **_) -> SweepReport:
    max_p = max_n or 500
    rep = SweepReport("eisenstein", {"p": [3, max_p]})
    for p in range(3, max_p + 1, 2):
        if not numtheory.is_prime(p):
            continue
        n = (p + 1) // 2
        rep.check(f"w_{n} {p}-Eisenstein", True, sequences.eisenstein_check(sequences.w(n), p))
        rep.check(f"W_{n} {p}-Eisenstein", True, sequences.eisenstein_check(sequences.big_w(n), p))
    return rep


def suite_primitive(max_n: int | None = None, threads: int = 1, **_) -> SweepReport:
    max_n = max_n or 100
    rep = SweepReport("primitive", {"n": [2, max_n]})

    def case(n):
        results = []
        prim = omega(2 * n - 1).poly
        results.append((f"Omega_{2 * n - 1} | w_{n}", True, divides(prim, sequences.w(n))))
        early = [m for m in range(2, n) if divides(prim, sequences.w(m))]
        results.append((f"Omega_{2 * n - 1} divides no earlier w_m", [], early))
        for d in numtheory.divisors(2 * n - 1):
            if 1 < d < 2 * n - 1:
                k = (d + 1) // 2
                results.append(
                    (f"Omega_{d} | w_{k}", True, divides(omega(d).poly, sequences.w(k)))
                )
        return results

    for results in _pmap(case, range(2, max_n + 1), threads):
        for name, expected, actual in results:
            rep.check(name, expected, actual)
    return rep


def suite_distinctness(max_n: int | None = None, **_) -> SweepReport:
    max_n = max_n or 200
    rep = SweepReport("distinctness", {"n": [2, max_n]})
    seen: dict[int, int] = {}
    for n in range(2, max_n + 1):
        if not galois.condition_c(2 * n - 1).satisfied:
            continue
        disc = monogenicity.field_disc_real_cyclotomic(2 * (2 * n - 1))
        rep.check(f"n={n} field disc is new", None, seen.get(disc))
        seen.setdefault(disc, n)
    rep.notes.append(f"{len(seen)} distinct field discriminants")
    return rep


F5 = "x^4 + 3x^2 + 1"
F14_FACTOR = "x^6 + 7x^4 + 14x^2 + 7"
L15_FACTOR = "x^8 + 7x^6 + 14x^4 + 8x^2 + 1"
GRAS_QUINTIC = "x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1"


def suite_corpus(seed: int = 0, **_) -> SweepReport:
    rep = SweepReport("corpus", {})
    M = monogenicity.Verdict
    fib, luc = sequences.SeqKind.FIBONACCI, sequences.SeqKind.LUCAS

    f5 = parse_poly(F5)
    rep.check("F_5 term", f5, sequences.term(fib, 5))
    rep.check("F_5 monogenic", M.MONOGENIC, monogenicity.monogenic_verdict(f5, seed).verdict)
    rep.check("F_5 quartic class", "V4", galois.even_quartic_class(3, 1))

    f14 = parse_poly(F14_FACTOR)
    rep.check("F14 factor divides F_14", True, divides(f14, sequences.term(fib, 14)))
    rep.check("F14 factor monogenic", M.NOT_MONOGENIC, monogenicity.monogenic_verdict(f14, seed).verdict)

    l15 = parse_poly(L15_FACTOR)
    rep.check("L15 factor divides L_15", True, divides(l15, sequences.term(luc, 15)))
    rep.check("L15 factor monogenic", M.NOT_MONOGENIC, monogenicity.monogenic_verdict(l15, seed).verdict)

    for k in range(1, 6):
        lk = sequences.term(luc, 2**k)
        rep.check(f"L_{2 ** k} 2-Eisenstein", True, sequences.eisenstein_check(lk, 2))
        rep.check(f"L_{2 ** k} monogenic", M.MONOGENIC, monogenicity.monogenic_verdict(lk, seed).verdict)
    rep.check("L_4 quartic class", "C4", galois.even_quartic_class(4, 2))

    gras = parse_poly(GRAS_QUINTIC)
    rep.check("psi_11", gras, real_cyclotomic_poly(11))
    rep.check("psi_11 monogenic", M.MONOGENIC, monogenicity.monogenic_verdict(gras, seed).verdict)
    rep.check("Condition C at 11", True, galois.condition_c(11).satisfied)
    rep.check("Condition C at 15", True, galois.condition_c(15).satisfied)
    rep.check("15 is prime", False, numtheory.is_prime(15))
    return rep


def _random_poly(rng: random.Random, max_deg: int, bound: int) -> IntPoly:
    deg = rng.randint(0, max_deg)
    lead = rng.choice([-1, 1]) * rng.randint(1, bound)
    return IntPoly([rng.randint(-bound, bound) for _ in range(deg)] + [lead])


def suite_kernel(seed: int = 0, max_n: int | None = None, **_) -> SweepReport:
    cases = max_n or 1000
    rep = SweepReport("kernel", {"resultant_pairs": cases, "seed": seed})
    rng = random.Random(seed)
    for i in range(cases):
        f = _random_poly(rng, 6, 100)
        g = _random_poly(rng, 6, 100)
        rep.check(f"resultant #{i} {f.coeffs} {g.coeffs}", sylvester_resultant(f, g), resultant(f, g))

    # finite-field factorization: deg <= 8, p <= 13
    for p in (2, 3, 5, 7, 11, 13):
        trials = 40 if p <= 5 else 12
        for i in range(trials):
            deg = rng.randint(1, 8 if p <= 7 else 6)
            f = FpPoly(p, [rng.randrange(p) for _ in range(deg)] + [1])
            facs = factor_mod_p(f, rng=random.Random(seed + i))
            rep.check(f"F_{p} #{i} product", f, product(facs, p))
            rep.check(f"F_{p} #{i} trial division", trial_division_factor(f), facs)
        # structured cases with repeated factors
        for i in range(6):
            a = FpPoly(p, [rng.randrange(p), 1])
            b = FpPoly(p, [rng.randrange(p), rng.randrange(p), 1])
            for f in (a**p * b, a**2 * b**2, a**3 * b):
                if f.degree > 8:
                    continue
                facs = factor_mod_p(f, seed=seed)
                rep.check(f"F_{p} repeated #{i} product", f, product(facs, p))
                rep.check(f"F_{p} repeated #{i} trial division", trial_division_factor(f), facs)
    return rep


_RUNNERS: dict[str, Callable[..., SweepReport]] = {
    "products": suite_products,
    "discs": suite_discs,
    "condition-c": suite_condition_c,
    "dedekind": suite_dedekind,
    "field-disc": suite_field_disc,
    "primitive": suite_primitive,
    "eisenstein": suite_eisenstein,
    "distinctness": suite_distinctness,
    "corpus": suite_corpus,
    "kernel": suite_kernel,
}


def run_suite(name: str, max_n: int | None = None, threads: int = 1, seed: int = 0) -> SweepReport:
    if name not in _RUNNERS:
        raise KeyError(f"unknown suite {name!r}")
    start = time.perf_counter()
    rep = _RUNNERS[name](max_n=max_n, threads=threads, seed=seed)
    rep.wall_time = time.perf_counter() - start
    return rep


def run_all(max_n: int | None = None, threads: int = 1, seed: int = 0) -> list[SweepReport]:
    return [run_suite(name, max_n, threads, seed) for name in SUITES]
