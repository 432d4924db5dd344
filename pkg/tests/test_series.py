import pytest
from hypothesis import given

from c21models.errors import (ChartMismatchError, DivisionByZeroError,
                              InputError, OrderError)
from c21models.scalars import S_HALF, S_I, S_ONE, as_scalar, rational
from c21models.series import (Series, affine_chart, cr_chart, holo_chart,
                              min_order)

from conftest import cr_series, holo_series


def v(chart, name, order=8):
    return Series.var(chart, name, order)


def test_mul_schoolbook():
    H = holo_chart()
    z, ze = v(H, "z"), v(H, "zeta")
    sq = (z + ze) ** 2
    assert sq.coeff((2, 0, 0)) == as_scalar(1)
    assert sq.coeff((1, 1, 0)) == as_scalar(2)
    assert sq.coeff((0, 2, 0)) == as_scalar(1)


def test_mul_by_one_and_truncation_order():
    C = cr_chart()
    s = v(C, "z", 5) * v(C, "zbar", 5)
    assert (s * Series.one(C, 5)).same_terms(s)
    t = v(C, "zeta", 3)
    assert (s * t).order == 3 + s.valuation()


def test_gm_numerator_times_unit_tail():
    # (z zbar + zbar^2 zeta/2 + z^2 zetabar/2)(1 + zeta zetabar) has the
    # z zbar zeta zetabar term with coefficient 1
    C = cr_chart()
    z, zb, ze, zeb = (v(C, n, 6) for n in ("z", "zbar", "zeta", "zetabar"))
    num = z * zb + (zb * zb * ze).scale(S_HALF) + (z * z * zeb).scale(S_HALF)
    out = num * (Series.one(C, 6) + ze * zeb)
    assert out.coeff((1, 1, 1, 1, 0)) == as_scalar(1)


def test_chart_mismatch():
    with pytest.raises(ChartMismatchError):
        v(holo_chart(), "z") * v(cr_chart(), "z")


def test_weighted_component():
    C = cr_chart()
    m = (v(C, "z", 6) * v(C, "zbar", 6) * v(C, "zeta", 6)
         * v(C, "zetabar", 6)).truncate(6)
    comp = m.weighted_component(4)
    assert comp.same_terms(m)
    assert m.weighted_component(3).is_zero()
    with pytest.raises(OrderError):
        m.weighted_component(7)


def test_partial_derivatives():
    A = affine_chart()
    x = v(A, "x", 6)
    half_x2 = (x * x).scale(S_HALF)
    assert half_x2.partial("x").same_terms(x.truncate(5))
    C = cr_chart()
    z, zeb = v(C, "z", 6), v(C, "zetabar", 6)
    s = (z * z * zeb).scale(S_HALF)
    ds = s.partial("z")
    assert ds.coeff((1, 0, 0, 1, 0)) == as_scalar(1)
    assert s.partial("v").is_zero()


def test_conjugate_series():
    C = cr_chart()
    z, zeb = v(C, "z", 6), v(C, "zetabar", 6)
    s = z ** 3 * zeb ** 2
    cs = s.conj()
    assert cs.coeff((0, 2, 3, 0, 0)) == as_scalar(1)
    assert cs.conj() == s
    with pytest.raises(ChartMismatchError):
        v(holo_chart(), "z").conj()


def test_conjugate_fixes_real_chart():
    A = affine_chart()
    s = v(A, "x", 4) * v(A, "y", 4)
    assert s.conj() == s


def test_substitute_identity_and_zero():
    C = cr_chart()
    z, zb, ze, zeb = (v(C, n, 6) for n in ("z", "zbar", "zeta", "zetabar"))
    num = z * zb + (zb * zb * ze).scale(S_HALF) + (z * z * zeb).scale(S_HALF)
    m = num * (Series.one(C, 6) - ze * zeb).invert_unit()
    assert m.substitute({}).same_terms(m)
    out = m.substitute({"zeta": Series.zero(C, 6),
                        "zetabar": Series.zero(C, 6)})
    assert out.same_terms(z * zb)


def test_substitute_scaling_coefficient():
    from c21models.scalars import complex_param
    C = cr_chart()
    lam = complex_param("lam")
    s = v(C, "z", 4) * v(C, "zbar", 4)
    out = s.substitute({"z": v(C, "z", 4).scale(lam)})
    assert out.coeff((1, 0, 1, 0, 0)) == lam


def test_substitute_rejects_constant_terms():
    C = cr_chart()
    bad = Series.one(C, 4) + v(C, "z", 4)
    with pytest.raises(InputError):
        v(C, "z", 4).substitute({"z": bad})


def test_invert_unit_geometric_series():
    A = affine_chart()
    one = Series.one(A, 5)
    y = v(A, "y", 5)
    inv = (one - y).invert_unit()
    for k in range(6):
        assert inv.coeff((0, k)) == as_scalar(1)
    C = cr_chart()
    ze, zeb = v(C, "zeta", 6), v(C, "zetabar", 6)
    inv2 = (Series.one(C, 6) - ze * zeb).invert_unit()
    assert inv2.coeff((0, 1, 0, 1, 0)) == as_scalar(1)
    assert inv2.coeff((0, 2, 0, 2, 0)) == as_scalar(1)


def test_invert_unit_errors():
    A = affine_chart()
    with pytest.raises(DivisionByZeroError):
        v(A, "x", 4).invert_unit()
    from c21models.scalars import param
    bad = Series.const(A, param("theta"), 4)
    with pytest.raises(DivisionByZeroError):
        bad.invert_unit()


@given(cr_series(), cr_series(), cr_series())
def test_mul_commutative_associative(a, b, c):
    assert (a * b).same_terms(b * a)
    lhs = (a * b) * c
    rhs = a * (b * c)
    o = min_order(lhs.order, rhs.order)
    assert lhs.truncate(o).same_terms(rhs.truncate(o))


@given(cr_series(allow_params=True), cr_series(allow_params=True))
def test_conj_is_ring_involution(a, b):
    assert a.conj().conj() == a
    assert (a * b).conj().same_terms(a.conj() * b.conj())
    assert (a + b).conj().same_terms(a.conj() + b.conj())


@given(cr_series())
def test_weighted_component_reassembly(s):
    acc = Series.zero(s.chart, s.order)
    for k, comp in s.weighted_components().items():
        acc = acc + comp
    assert acc.same_terms(s)


@given(cr_series())
def test_invert_unit_round_trip(s):
    u = Series.one(s.chart, s.order) + _killed_constant(s)
    prod = u * u.invert_unit()
    assert prod.same_terms(Series.one(s.chart, prod.order))


def _killed_constant(s):
    zero = (0,) * s.chart.nvars
    terms = dict(s.terms)
    terms.pop(zero, None)
    return Series(s.chart, s.order, terms)


@given(holo_series(), holo_series())
def test_substitute_multiplicative(a, b):
    # composition with a fixed germ is a ring morphism
    H = holo_chart()
    w = Series.var(H, "w", 4)
    z = Series.var(H, "z", 4)
    sigma = {"w": w + z * z, "z": z + (z * z).scale(as_scalar(3))}
    lhs = (a * b).substitute(sigma)
    rhs = a.substitute(sigma) * b.substitute(sigma)
    o = min_order(lhs.order, rhs.order)
    assert lhs.truncate(o).same_terms(rhs.truncate(o))
