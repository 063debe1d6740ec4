import pytest

from monocyc.cyclotomic import (
    EvenIndex,
    cyclotomic_poly,
    factor_w,
    omega,
    primitive_divisor,
    real_cyclotomic_poly,
)
from monocyc.intpoly import IntPoly, NotDivisible, divide_exact, divides
from monocyc.numtheory import divisors, euler_phi
from monocyc.sequences import w

X = IntPoly.x()


def P(*c):
    return IntPoly(c)


def test_cyclotomic_examples():
    assert cyclotomic_poly(1) == X - 1
    assert cyclotomic_poly(3) == P(1, 1, 1)
    assert cyclotomic_poly(12) == P(1, 0, -1, 0, 1)


def test_cyclotomic_product_identity():
    for N in range(1, 501):
        acc = IntPoly.const(1)
        for d in divisors(N):
            acc = acc * cyclotomic_poly(d)
        assert acc == IntPoly.monomial(1, N) - 1, N


def test_real_cyclotomic_examples():
    assert real_cyclotomic_poly(11) == P(1, 3, -3, -4, 1, 1)
    assert real_cyclotomic_poly(5) == P(-1, 1, 1)
    assert real_cyclotomic_poly(14) == P(1, -2, -1, 1)


def test_real_cyclotomic_identity():
    # Phi_N(x) = x^m psi_N(x + 1/x)
    for N in range(3, 301):
        psi = real_cyclotomic_poly(N)
        m = euler_phi(N) // 2
        assert psi.degree == m and psi.is_monic()
        lhs = IntPoly()
        for k, c in enumerate(psi.coeffs):
            lhs = lhs + (X * X + 1) ** k * IntPoly.monomial(c, m - k)
        assert lhs == cyclotomic_poly(N), N


def test_omega_examples():
    assert omega(3).poly == X - 3
    assert omega(7).poly == P(-7, 14, -7, 1) == w(4)
    assert omega(9).poly == P(-3, 9, -6, 1) == divide_exact(w(5), X - 3)
    with pytest.raises(EvenIndex):
        omega(8)


def test_factor_w_examples():
    fw = factor_w(5)
    assert {d: f.poly for d, f in fw.factors.items()} == {3: X - 3, 9: P(-3, 9, -6, 1)}
    assert fw.product() == P(9, -30, 27, -9, 1)
    assert {d: f.poly for d, f in factor_w(4).factors.items()} == {7: P(-7, 14, -7, 1)}
    assert {d: f.poly for d, f in factor_w(2).factors.items()} == {3: X - 3}
    assert fw.to_json() == {
        "n": 5,
        "modulus": 9,
        "factors": [
            {"d": 3, "degree": 1, "coeffs": ["-3", "1"]},
            {"d": 9, "degree": 3, "coeffs": ["-3", "9", "-6", "1"]},
        ],
    }


def test_product_identity_and_degree_ledger():
    for n in range(2, 201):
        fw = factor_w(n)
        assert set(fw.factors) == {d for d in divisors(2 * n - 1) if d > 1}
        assert sum(euler_phi(d) // 2 for d in fw.factors) == n - 1
        for d, f in fw.factors.items():
            assert f.degree == euler_phi(d) // 2


def test_primitive_divisor_examples():
    prim = primitive_divisor(5).poly
    assert prim == P(-3, 9, -6, 1)
    for m in (2, 3, 4):
        with pytest.raises(NotDivisible):
            divide_exact(w(m), prim)
    assert primitive_divisor(2).poly == X - 3
    assert primitive_divisor(4).poly == w(4)


def test_primitive_divisors():
    for n in range(2, 101):
        prim = primitive_divisor(n).poly
        assert divides(prim, w(n))
        for m in range(2, n):
            with pytest.raises(NotDivisible):
                divide_exact(w(m), prim)
        for d in divisors(2 * n - 1):
            if 1 < d < 2 * n - 1:
                assert divides(omega(d).poly, w((d + 1) // 2))
