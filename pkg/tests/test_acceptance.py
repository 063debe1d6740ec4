"""Exit criteria. Each criterion runs its sweep at the full stated range and
time budget, and prints one PASS/FAIL line (use ``pytest -s`` to see them)."""

import pytest

from monocyc.verify import run_suite

# (criterion, suite, stated range -> max, time budget in seconds)
CRITERIA = [
    ("1 product identity, n in [2, 200]", "products", 200, 30),
    ("2 discriminant formulas for w, W, v", "discs", None, 60),
    ("3 Condition C vs unit-group oracle, N in [3, 20000]", "condition-c", 20000, 60),
    ("4 real cyclotomic field discriminants, N in [3, 200]", "field-disc", 200, 30),
    ("5 monogenicity of Omega_d by two routes, odd d in [3, 105]", "dedekind", 105, 30),
    ("6 motivating corpus", "corpus", None, 5),
    ("7 Eisenstein at p = 2n - 1 <= 500", "eisenstein", 500, 10),
    ("8 primitive divisors, n in [2, 100]", "primitive", 100, 60),
    ("9 distinct field discriminants, n <= 200", "distinctness", 200, 10),
    ("10 resultant and F_p factorization kernels", "kernel", 1000, 30),
]


@pytest.mark.parametrize("label,suite,max_n,budget", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(label, suite, max_n, budget):
    rep = run_suite(suite, max_n=max_n)
    within = rep.wall_time < budget
    status = "PASS" if rep.ok and within else "FAIL"
    print(f"\n[{status}] criterion {label}: {rep.cases} cases, "
          f"{len(rep.failures)} failures, {rep.wall_time:.2f}s (budget {budget}s)")
    for note in rep.notes:
        print(f"    note: {note}")
    assert rep.failures == []
    assert rep.cases > 0
    assert within, f"{suite} took {rep.wall_time:.1f}s, budget {budget}s"

