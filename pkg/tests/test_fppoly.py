import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monocyc.fppoly import (
    FpPoly,
    ModulusMismatch,
    ModulusTooLarge,
    factor_mod_p,
    gcd_mod_p,
    product,
    squarefree_decomposition,
    x_poly,
)
from monocyc.oracles import trial_division_factor


def F(p, *coeffs):
    return FpPoly(p, coeffs)


def test_gcd_examples():
    assert gcd_mod_p(F(2, 1, 1, 1), F(2, 1, 1)).coeffs == (1,)
    f = F(7, 3, 0, 2)
    assert gcd_mod_p(f, F(7)) == f.monic()
    assert gcd_mod_p(F(5, -1, 0, 1), F(5, -1, 1)) == F(5, 4, 1)
    assert gcd_mod_p(F(5), F(5)).is_zero()
    with pytest.raises(ModulusMismatch):
        gcd_mod_p(F(3, 1), F(5, 1))


def test_squarefree_examples():
    assert squarefree_decomposition(F(7, 0, 0, 0, 1)) == [(F(7, 0, 1), 3)]
    assert squarefree_decomposition(F(5, -1, 0, 1)) == [(F(5, 4, 0, 1), 1)]
    assert squarefree_decomposition(F(2, 0, 0, 1)) == [(F(2, 0, 1), 2)]


def test_squarefree_high_multiplicity():
    # multiplicity p + 1 mixes the derivative and p-th-power branches
    p = 3
    f = (x_poly(p) + F(p, 1)) ** (p + 1) * F(p, 2, 0, 1)
    sqf = squarefree_decomposition(f)
    assert product(sqf, p) == f


def test_factor_examples():
    assert factor_mod_p(F(7, -7, 14, -7, 1)) == [(F(7, 0, 1), 3)]
    assert factor_mod_p(F(5, 1, 0, 1)) == [(F(5, 2, 1), 1), (F(5, 3, 1), 1)]
    assert factor_mod_p(F(3, 1, 0, 1)) == [(F(3, 1, 0, 1), 1)]


def test_modulus_bound():
    with pytest.raises(ModulusTooLarge):
        FpPoly(2**63 + 1, [1])


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_factor_matches_trial_division(p):
    rng = random.Random(p)
    max_deg = 8 if p <= 7 else 6
    for i in range(25 if p <= 5 else 8):
        deg = rng.randint(1, max_deg)
        f = FpPoly(p, [rng.randrange(p) for _ in range(deg)] + [1])
        facs = factor_mod_p(f, seed=i)
        assert product(facs, p) == f
        assert facs == trial_division_factor(f)


def _is_irreducible_ddf(g: FpPoly) -> bool:
    # degree-d irreducible g: g | x^(p^d) - x, and gcd(g, x^(p^k) - x) = 1 for k < d
    p, d = g.p, g.degree
    x = x_poly(p)
    h = x
    for k in range(1, d + 1):
        h = h.powmod(p, g)
        common = gcd_mod_p(g, h - x)
        if k < d and common.degree > 0:
            return False
    return (h - x) % g == FpPoly(p)


@settings(max_examples=80, deadline=None)
@given(
    st.sampled_from([2, 3, 5, 7, 11, 13, 101]),
    st.lists(st.integers(0, 10**6), min_size=1, max_size=10),
    st.integers(0, 1000),
)
def test_factor_properties(p, tail, seed):
    f = FpPoly(p, tail + [1])
    facs = factor_mod_p(f, seed=seed)
    assert product(facs, p) == f
    for g, e in facs:
        assert g.lc == 1 and e >= 1
        assert _is_irreducible_ddf(g)
    keys = [g.sort_key() for g, _ in facs]
    assert keys == sorted(keys)
    assert factor_mod_p(f, seed=seed + 1) == facs
