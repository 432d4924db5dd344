import pytest
from hypothesis import given, settings, strategies as st

from c21models.hypersurfaces import gm_flat_model, thm31_model, thm33_model
from c21models.scalars import S_I, S_ONE, S_ZERO, as_scalar, param, rational
from c21models.series import Series, holo_chart
from c21models.symmetries import (HoloVectorField, LieBasis,
                                  abelian_ideal_check,
                                  derived_algebra_candidate,
                                  derived_series_dims, expand_in_basis,
                                  lie_bracket, maximally_real_check,
                                  model_basis, model_symmetry_family,
                                  structure_constants, tangency_residual,
                                  tube_criterion)

EXPECT_31 = {
    (0, 1): [0, 0, 0, -4, -4],
    (0, 2): [-2, 0, 0, 0, 0],
    (0, 3): [0, 2, 0, 4, 0],
    (0, 4): [0, 2, 0, 0, -4],
    (1, 2): [0, -4, 0, -4, 0],
    (2, 3): [0, 0, 0, 2, 0],
    (2, 4): [0, -2, 0, 0, 6],
}


def const_field(a=0, b=0, c=0):
    H = holo_chart()
    return HoloVectorField(Series.const(H, as_scalar(a), None),
                           Series.const(H, as_scalar(b), None),
                           Series.const(H, as_scalar(c), None))


def test_family_assembly_examples():
    f = model_symmetry_family("thm31", a=0, b=0, c=0, d=0, e=1)
    assert f.C.coeff((0, 0, 0)) == S_I
    assert f.A.is_zero()
    f2 = model_symmetry_family("thm31", a=1, b=0, c=0, d=0, e=0)
    assert f2.A.coeff((0, 0, 0)) == S_ONE
    assert f2.A.coeff((1, 0, 0)) == as_scalar(2)
    f3 = model_symmetry_family("thm33", a=1, b=0, c=0, d=0, e=0)
    assert f3.A.coeff((2, 0, 0)) == rational(2, 5) * param("theta")


def test_tangency_iw_on_flat():
    L = const_field(c="i")
    res = tangency_residual(L, gm_flat_model(6))
    assert res.is_zero()


def test_tangency_nonexample():
    L = const_field(a=1)  # d/dz alone is not tangent to the flat model
    res = tangency_residual(L, gm_flat_model(6))
    assert not res.is_zero()
    assert (0, 0, 1, 0, 0) in res.terms  # contains zbar


def test_thm31_family_tangent_through_order_6():
    res = tangency_residual(model_symmetry_family("thm31"), thm31_model(8))
    assert res.order == 6
    assert res.is_zero()


def test_thm33_family_tangent_through_order_8():
    res = tangency_residual(model_symmetry_family("thm33"), thm33_model(10))
    assert res.order == 8
    assert res.is_zero()


def test_bracket_with_self_vanishes():
    f = model_symmetry_family("thm31", a=1, b=2, c=3, d=4, e=5)
    br = lie_bracket(f, f)
    assert br.is_zero()


def test_bracket_tables():
    sc = structure_constants(model_basis("thm31"))
    for (i, j), want in EXPECT_31.items():
        assert sc.c[i][j] == [as_scalar(x) for x in want], (i, j)
    assert sc.c[1][3] == [S_ZERO] * 5
    assert sc.antisymmetric()
    assert sc.jacobi_ok()

    sc3 = structure_constants(model_basis("thm33"))
    theta = param("theta")
    assert sc3.c[0][1] == [S_ZERO, S_ZERO, S_ZERO,
                           rational(-4, 5) * theta, as_scalar(-4)]
    assert sc3.c[0][4] == [S_ZERO, rational(2, 5) * theta, S_ZERO,
                           as_scalar(-20), S_ZERO]
    assert sc3.c[0][2] == [S_ZERO] * 5
    assert sc3.jacobi_ok()


def test_derived_series():
    sc = structure_constants(model_basis("thm31"))
    assert derived_series_dims(sc) == [5, 4, 2, 0]
    sc3 = structure_constants(model_basis("thm33"))
    assert derived_series_dims(sc3) == [5, 3, 0]


def test_abelian_ideal_checks():
    sc = structure_constants(model_basis("thm31"))
    good = derived_algebra_candidate("thm31", sc)
    rep = abelian_ideal_check(good, sc)
    assert rep["abelian_and_ideal"] and rep["dimension"] == 3
    # the full algebra is not abelian
    units = [[as_scalar(1 if i == j else 0) for j in range(5)]
             for i in range(5)]
    rep2 = abelian_ideal_check(units, sc)
    assert not rep2["abelian_and_ideal"]
    # a candidate containing e1 is not abelian either
    bad = [good[0], [as_scalar(-2), as_scalar(0), as_scalar(0),
                     as_scalar(0), as_scalar(0)], good[1]]
    rep3 = abelian_ideal_check(bad, sc)
    assert not rep3["abelian_and_ideal"]


def test_maximally_real_check():
    iz = const_field(a="i")
    ize = const_field(b="i")
    iw = const_field(c="i")
    assert maximally_real_check([iz, ize, iw])["maximally_real"]
    z = const_field(a=1)
    assert not maximally_real_check([z, iz, ize])["maximally_real"]
    with pytest.raises(Exception):
        maximally_real_check([iz, ize])


def test_tube_criterion_models():
    for model in ("thm31", "thm33"):
        basis = model_basis(model)
        sc = structure_constants(basis)
        cand = derived_algebra_candidate(model, sc)
        out = tube_criterion(basis, cand, sc)
        assert out["tube_criterion"], model
    # a pair alone fails (dimension < 3)
    basis = model_basis("thm31")
    sc = structure_constants(basis)
    out = tube_criterion(basis, [[as_scalar(int(i == 1)) for i in range(5)],
                                 [as_scalar(int(i == 3)) for i in range(5)],
                                 [as_scalar(int(i == 3)) for i in range(5)]],
                         sc)
    assert not out["tube_criterion"]


@given(st.tuples(*(st.integers(-3, 3) for _ in range(5))),
       st.tuples(*(st.integers(-3, 3) for _ in range(5))))
@settings(max_examples=20)
def test_bracket_of_tangent_fields_is_tangent(u, v):
    g = thm31_model(8)
    basis = model_basis("thm31")
    X = _combo(basis, u)
    Y = _combo(basis, v)
    br = lie_bracket(X, Y)
    res = tangency_residual(br, g)
    assert res.is_zero()


def _combo(basis, coeffs):
    acc = None
    for c, f in zip(coeffs, basis.fields):
        term = f.scale(as_scalar(c))
        acc = term if acc is None else acc + term
    return acc


def test_expand_in_basis_abelian_pair():
    iw = const_field(c="i")
    iw2 = const_field(c="2*i")
    basis = LieBasis([iw, iw2])
    br = lie_bracket(iw, iw2)
    assert br.is_zero()
    sc = structure_constants(basis)
    # expansion of the zero bracket is all-zero without residue
    assert sc.c[0][1] == [S_ZERO, S_ZERO]
    assert not sc.residuals
