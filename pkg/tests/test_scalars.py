from hypothesis import given

from c21models.errors import DivisionByZeroError, InputError
from c21models.scalars import (S_I, S_ONE, S_ZERO, Scalar, as_scalar,
                               complex_param, param, parse_scalar, qi,
                               rational)

import pytest

from conftest import gauss_rationals, nonzero_scalars, scalars


def test_ring_identity():
    assert rational(1, 2) + rational(1, 2) == as_scalar(1)


def test_theta_square():
    theta = param("theta")
    lhs = (rational(2, 5) * theta) * (rational(6, 5) * theta)
    assert lhs == rational(12, 25) * theta * theta
    assert lhs.text() == "12/25*theta^2"


def test_conjugate_product():
    a, b = param("p1"), param("p2")
    z = a + S_I * b
    assert z * z.conj() == a * a + b * b


def test_conjugation_examples():
    e = param("p1")
    assert (S_I * e).conj() == -(S_I * e)
    a, b = param("p1"), param("p2")
    v = as_scalar(2) * a - as_scalar(2) * S_I * b
    assert v.conj() == as_scalar(2) * a + as_scalar(2) * S_I * b
    theta = param("theta")
    assert theta.conj() == theta


def test_substitute_params():
    theta = param("theta")
    s = rational(2, 5) * theta
    assert s.substitute({"theta": as_scalar(5)}) == as_scalar(2)
    s2 = rational(-6, 25) * theta * theta
    assert s2.substitute({"theta": as_scalar(5)}) == as_scalar(-6)
    a, b = param("p1"), param("p2")
    v = a + S_I * b
    assert v.substitute({"p1": as_scalar(1)}) == as_scalar(1) + S_I * b


def test_substitute_zero_denominator():
    theta = param("theta")
    s = S_ONE / theta
    with pytest.raises(DivisionByZeroError):
        s.substitute({"theta": as_scalar(0)})


def test_division_by_zero():
    with pytest.raises(DivisionByZeroError):
        S_ONE / S_ZERO


def test_fraction_reduction_by_cross_multiplication():
    theta = param("theta")
    lhs = (theta * theta - S_ONE) / (theta - S_ONE)
    assert lhs == theta + S_ONE  # exact division folds the denominator


def test_parse_round_trip_examples():
    for text in ("-6/25*theta^2", "1/2", "i", "-i", "(1+2*i)",
                 "2*theta-3*i*theta^2", "(theta+1)/(theta-1)"):
        s = parse_scalar(text)
        assert parse_scalar(s.text()) == s


def test_parse_rejects_unknown_names():
    with pytest.raises(InputError):
        parse_scalar("listed_nowhere_123", register_names=False)


def test_parse_rejects_garbage():
    for bad in ("1+", "(1", "theta^", "2**3", "@"):
        with pytest.raises(InputError):
            parse_scalar(bad)


@given(scalars(), scalars(), scalars())
def test_field_axioms_add_mul(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(scalars())
def test_additive_inverse(a):
    assert a + (-a) == S_ZERO
    assert a - a == S_ZERO


@given(nonzero_scalars())
def test_multiplicative_inverse(a):
    assert a * a.inv() == S_ONE
    assert a / a == S_ONE


@given(scalars(), scalars())
def test_conjugation_is_ring_involution(a, b):
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()


@given(scalars(), gauss_rationals())
def test_substitute_commutes_with_arith(a, v):
    theta = param("theta")
    bind = {"theta": as_scalar(v)}
    lhs = (a * theta).substitute(bind)
    rhs = a.substitute(bind) * as_scalar(v)
    assert lhs == rhs


def test_complex_param_split():
    lam = complex_param("lam")
    assert lam.conj() != lam or lam.re_im()[1].is_zero()
    re, im = lam.re_im()
    assert re == param("lam_re")
    assert im == param("lam_im")


def test_re_im_with_real_denominator():
    theta = param("theta")
    s = (S_ONE + S_I * theta) / (theta + as_scalar(2))
    re, im = s.re_im()
    assert re + S_I * im == s
