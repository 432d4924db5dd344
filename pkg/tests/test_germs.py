import pytest
from hypothesis import given, settings
import sympy as sp

from c21models.errors import SingularGermError
from c21models.germs import MapGerm
from c21models.scalars import as_scalar, complex_param, qi
from c21models.series import Series, cr_chart, holo_chart, min_order

from conftest import holo_series


def identity_like(chart, order):
    return {n: Series.var(chart, n, order) for n in chart.names}


def test_identity_inverts_to_identity():
    H = holo_chart()
    g = MapGerm.identity(H, 6)
    assert g.invert() == MapGerm.identity(H, 6)


def test_lagrange_reversion_against_sympy():
    # inverse of z' = z + z^2, checked against the Lagrange inversion
    # formula evaluated with sympy (independent oracle)
    H = holo_chart()
    N = 7
    comps = identity_like(H, N)
    z = comps["z"]
    g = MapGerm(H, H, {**comps, "z": z + z * z})
    inv = g.invert()
    zs = sp.symbols("z")
    f = zs + zs ** 2
    for n in range(1, N + 1):
        series = sp.series((zs / f) ** n, zs, 0, N + 1).removeO()
        want = sp.Rational(1, n) * series.coeff(zs, n - 1)
        got = inv.components["z"].coeff(tuple([n, 0, 0]))
        num, den = sp.fraction(sp.nsimplify(want))
        assert got == as_scalar(f"{num}/{den}")


def test_diagonal_scaling_inverse():
    H = holo_chart()
    lam = complex_param("lam")
    comps = identity_like(H, 5)
    g = MapGerm(H, H, {
        "z": comps["z"].scale(lam),
        "zeta": comps["zeta"].scale(lam / lam.conj()),
        "w": comps["w"].scale(lam * lam.conj()),
    })
    inv = g.invert()
    assert inv.components["z"].coeff((1, 0, 0)) == lam.inv()
    assert inv.components["w"].coeff((0, 0, 1)) == (lam * lam.conj()).inv()
    assert g.compose(inv) == MapGerm.identity(H, 5)


def test_weighted_linear_part_with_quadratic_v_row():
    C = cr_chart()
    comps = identity_like(C, 5)
    comps["v"] = comps["v"] + comps["z"] * comps["zbar"]
    g = MapGerm(C, C, comps)
    inv = g.invert()
    assert inv.components["v"].coeff((1, 0, 1, 0, 0)) == as_scalar(-1)
    assert g.compose(inv) == MapGerm.identity(C, 5)
    assert inv.compose(g) == MapGerm.identity(C, 5)


def test_singular_linear_part_rejected():
    H = holo_chart()
    comps = identity_like(H, 4)
    comps["z"] = comps["zeta"]  # z and zeta both map to zeta
    with pytest.raises(SingularGermError):
        MapGerm(H, H, comps).invert()


@given(holo_series(order=4), holo_series(order=4))
@settings(max_examples=40)
def test_random_germ_round_trip(s1, s2):
    H = holo_chart()
    comps = identity_like(H, 4)
    comps["z"] = comps["z"] + _higher(s1)
    comps["zeta"] = comps["zeta"] + _higher(s2)
    g = MapGerm(H, H, comps)
    inv = g.invert()
    ident = MapGerm.identity(H, inv.order())
    got = g.compose(inv)
    assert got.truncate(got.order()) == ident.truncate(got.order())
    got2 = inv.compose(g)
    assert got2.truncate(got2.order()) == ident.truncate(got2.order())


def _higher(s):
    # strip terms of weighted degree < 2 so the germ stays invertible
    keep = {e: c for e, c in s.terms.items() if s.chart.wdeg(e) >= 2}
    return Series(s.chart, s.order, keep)
