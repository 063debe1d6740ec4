import pytest

from monocyc.intpoly import IntPoly, divide_exact
from monocyc.numtheory import OutOfRange, is_prime
from monocyc.sequences import (
    IndexOutOfRange,
    SeqKind,
    big_w,
    eisenstein_check,
    term,
    vieta_closed_form,
    vieta_coefficient,
    vieta_lucas,
    w,
)

X = IntPoly.x()


def laurent_numerator(f: IntPoly, n: int) -> IntPoly:
    """x^n * f(x + 1/x) with denominators cleared, for deg f <= n."""
    acc = IntPoly()
    for k, c in enumerate(f.coeffs):
        acc = acc + (X * X + 1) ** k * IntPoly.monomial(c, n - k)
    return acc


def test_term_examples():
    assert term(SeqKind.W_SMALL, 3) == IntPoly([5, -5, 1])
    assert term(SeqKind.W_SMALL, 3) == (X - 2) * (X - 3) - 1
    assert term(SeqKind.VIETA_LUCAS, 3) == IntPoly([0, -3, 0, 1])
    assert term(SeqKind.W_SMALL, 0) == IntPoly([1])
    assert term(SeqKind.W_SMALL, 1) == IntPoly([1])
    assert term(SeqKind.FIBONACCI, 5) == IntPoly([1, 0, 3, 0, 1])
    assert term(SeqKind.LUCAS, 2) == IntPoly([2, 0, 1])
    assert term(SeqKind.W_BIG, 3) == IntPoly([5, 0, -5, 0, 1])


def test_term_bounds():
    with pytest.raises(OutOfRange):
        term(SeqKind.W_SMALL, -1)
    with pytest.raises(OutOfRange):
        term(SeqKind.W_SMALL, 10**4 + 1)


def test_vieta_coefficient_examples():
    assert vieta_coefficient(9, 0) == 1
    assert vieta_coefficient(7, 2) == 14
    assert vieta_lucas(7)[3] == 14
    assert vieta_coefficient(5, 2) == 5
    assert vieta_lucas(5) == IntPoly([0, 5, 0, -5, 0, 1])
    with pytest.raises(IndexOutOfRange):
        vieta_coefficient(5, 3)


def test_eisenstein_examples():
    assert eisenstein_check(IntPoly([-7, 14, -7, 1]), 7)
    assert eisenstein_check(IntPoly([5, -5, 1]), 5)
    assert not eisenstein_check(IntPoly([1, 1, 1]), 3)
    assert not eisenstein_check(IntPoly([9, 3, 1]), 3)


def test_big_w_is_vieta_over_x():
    for n in range(2, 501):
        assert X * big_w(n) == vieta_lucas(2 * n - 1), n


def test_vieta_closed_form():
    for n in range(1, 201):
        assert vieta_lucas(n) == vieta_closed_form(n), n


def test_vieta_laurent_identity():
    # v_n(x + 1/x) = x^n + x^-n, i.e. the roots are zeta + 1/zeta
    for n in range(1, 101):
        assert laurent_numerator(vieta_lucas(n), n) == IntPoly.monomial(1, 2 * n) + 1, n


def test_eisenstein_at_prime_index():
    for p in range(3, 501, 2):
        if is_prime(p):
            n = (p + 1) // 2
            assert eisenstein_check(w(n), p) and eisenstein_check(big_w(n), p), p


def test_degrees():
    for n in range(2, 200):
        assert w(n).degree == n - 1
        assert vieta_lucas(n).degree == n
        assert big_w(n).degree == 2 * n - 2


def test_fibonacci_lucas_corpus_divisibility():
    divide_exact(term(SeqKind.FIBONACCI, 14), IntPoly([7, 0, 14, 0, 7, 0, 1]))
    divide_exact(term(SeqKind.LUCAS, 15), IntPoly([1, 0, 8, 0, 14, 0, 7, 0, 1]))
