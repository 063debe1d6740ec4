from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monocyc.numtheory import (
    FactorizationTooHard,
    OutOfRange,
    divisors,
    euler_phi,
    factor_int,
    is_prime,
    phi_divisors_mobius,
    unit_group_mod_pm1,
)


def test_is_prime_examples():
    assert is_prime(11)
    assert not is_prime(15)
    assert not is_prime(1)
    assert not is_prime(0)
    assert is_prime(2**61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    with pytest.raises(OutOfRange):
        is_prime(2**64)


def test_is_prime_vs_sieve():
    limit = 20000
    sieve = [True] * limit
    sieve[0] = sieve[1] = False
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = [False] * len(sieve[i * i :: i])
    assert [n for n in range(limit) if is_prime(n)] == [n for n in range(limit) if sieve[n]]


def test_factor_examples():
    assert factor_int(105).pairs == ((3, 1), (5, 1), (7, 1))
    assert factor_int(9).pairs == ((3, 2),)
    assert factor_int(2012).pairs == ((2, 2), (503, 1))
    assert factor_int(1).pairs == ()


def test_factor_large():
    n = (2**31 - 1) * (2**61 - 1) * 1000003**2
    fac = factor_int(n)
    assert fac.value() == n
    assert fac.pairs == ((1000003, 2), (2**31 - 1, 1), (2**61 - 1, 1))


def test_factor_too_hard():
    # product of two primes above 2^64: beyond what rho is allowed to try
    with pytest.raises(FactorizationTooHard):
        factor_int((2**89 - 1) * (2**107 - 1))


@given(st.integers(1, 10**15))
def test_factor_roundtrip(n):
    fac = factor_int(n)
    assert fac.value() == n
    assert all(is_prime(p) for p in fac.primes)
    assert fac.primes == sorted(set(fac.primes))


def test_phi_divisors_mobius_examples():
    assert phi_divisors_mobius(9) == (6, [1, 3, 9], 0)
    assert phi_divisors_mobius(15) == (8, [1, 3, 5, 15], 1)
    assert phi_divisors_mobius(1) == (1, [1], 1)


def test_phi_vs_count():
    for n in range(1, 10001):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1), n


def test_divisors_vs_scan():
    for n in range(1, 600):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def _class_order(u, N):
    k, x = 1, u % N
    while x not in (1, N - 1):
        x = x * u % N
        k += 1
    return k


def test_unit_group_examples():
    r = unit_group_mod_pm1(15)
    assert (r.group_order, r.witness, r.is_cyclic) == (4, 2, True)
    assert pow(2, 3, 15) == 8 == 15 - 7 and pow(2, 4, 15) == 1
    r = unit_group_mod_pm1(63)
    assert (r.group_order, r.is_cyclic) == (18, False)
    r = unit_group_mod_pm1(16)
    assert (r.group_order, r.witness, r.is_cyclic) == (4, 3, True)
    with pytest.raises(OutOfRange):
        unit_group_mod_pm1(2)
    with pytest.raises(OutOfRange):
        unit_group_mod_pm1(10**6 + 1)


def test_unit_group_vs_scalar_scan():
    for N in range(3, 400):
        rep = unit_group_mod_pm1(N)
        units = [u for u in range(1, N) if gcd(u, N) == 1]
        orders = [_class_order(u, N) for u in units]
        assert rep.group_order == euler_phi(N) // 2 == len(units) // 2
        assert rep.max_order == max(orders)
        assert rep.is_cyclic == (max(orders) == rep.group_order)
        assert _class_order(rep.witness, N) == rep.max_order


def test_unit_group_int64_path():
    rep = unit_group_mod_pm1(50021)  # prime above the int32 cutoff
    assert rep.group_order == 25010 and rep.is_cyclic
