from fractions import Fraction

import pytest
from hypothesis import given

from qlorentz.errors import NonInvertibleScalarError
from qlorentz.scalar import C, HBAR, I, M, ONE, ZERO, Gauss, Scalar, scalar_arith

from conftest import scalars


def test_i_squared():
    assert scalar_arith(I, I, "mul") == Scalar.number(-1)


def test_monomial_exponents_cancel():
    assert scalar_arith(HBAR * C**2, HBAR.inverse(), "mul") == C**2


def test_conjugate_sum_is_one():
    half = Fraction(1, 2)
    a = Scalar.number(half, half)
    b = Scalar.number(half, -half)
    assert scalar_arith(a, b, "add") == ONE


def test_neg_and_zero_terms_dropped():
    s = HBAR + C
    assert scalar_arith(s, None, "neg") + s == ZERO
    assert (s - s).terms == {}
    assert Scalar({(0, 0, 0): Gauss(0, 0)}).is_zero()


def test_inverse_of_monomial():
    s = Scalar({(1, -2, 3): Gauss(2, 2)})
    assert s * s.inverse() == ONE
    assert (2 * M * C**2).inverse() == Scalar({(0, -2, -1): Gauss(Fraction(1, 2))})


@pytest.mark.parametrize("bad", [ZERO, HBAR + C, ONE + I * M])
def test_inverse_rejects_non_monomials(bad):
    with pytest.raises(NonInvertibleScalarError):
        scalar_arith(bad, None, "inv")


def test_evaluate_binds_units():
    s = Scalar.number(0, 3) * HBAR**2 / M
    assert s.evaluate(hbar=2.0, c=5.0, m=4.0) == pytest.approx(3j)


@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == ZERO
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
