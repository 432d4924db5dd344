import pytest

from c21models.affine import (AffineField, AffineGraph, AffineMap, BRANCH3,
                              FLAT, THETA, affine_bracket, affine_classify,
                              affine_model, affine_prenormalize,
                              affine_pushforward, affine_structure,
                              affine_tangency_residual, model_fields,
                              parabolic_noncylindrical_check,
                              parametrized_to_graph)
from c21models.errors import ComputationError, InputError
from c21models.scalars import S_ZERO, as_scalar, param, parse_scalar, rational
from c21models.series import Series, affine_chart, Chart


def graph_from(coeffs, order=8):
    C = affine_chart()
    return AffineGraph(Series.from_terms(
        C, order, [(e, as_scalar(c)) for e, c in coeffs.items()]))


def test_parabolic_checks_on_models():
    for name, order in (("branch3", 8), ("flat", 10), ("theta", 7)):
        chk = parabolic_noncylindrical_check(affine_model(name, order))
        assert chk["parabolic_noncylindrical"], name


def test_parabolicity_fails_for_elliptic_paraboloid():
    g = graph_from({(2, 0): "1/2", (0, 2): "1/2"}, order=6)
    chk = parabolic_noncylindrical_check(g)
    assert chk["fxx_nonzero"]
    assert not chk["hessian_det_vanishes"]


def test_noncylindricality_fails_for_cylinder():
    g = graph_from({(2, 0): "1/2"}, order=6)
    chk = parabolic_noncylindrical_check(g)
    assert chk["hessian_det_vanishes"]
    assert not chk["noncylindrical"]


def test_branch3_table_coefficients():
    g = affine_model("branch3", 8)
    assert g.coeff(5, 0) == rational(1, 54)
    assert g.coeff(8, 0) == rational(5, 5832)
    assert g.coeff(5, 3) == rational(47, 216)


def test_theta_table_coefficients():
    g = affine_model("theta", 7)
    assert g.coeff(5, 1) == rational(1, 30)
    assert g.coeff(7, 0) == rational(1, 5040) * param("theta")


def test_flat_model_expansion():
    g = affine_model("flat", 9)
    for k in range(8):
        assert g.coeff(2, k) == rational(1, 2)


def test_field_tangency():
    for name, order in (("branch3", 8), ("flat", 10), ("theta", 7)):
        g = affine_model(name, order)
        for i, f in enumerate(model_fields(name)):
            assert affine_tangency_residual(f, g).is_zero(), (name, i)


def test_nontangent_field():
    C = Chart(("x", "y", "u"), (1, 1, 2), pairing=(0, 1, 2))
    ddx = AffineField(Series.one(C, None), Series.zero(C, None),
                      Series.zero(C, None))
    g = graph_from({(2, 0): "1/2"}, order=6)
    res = affine_tangency_residual(ddx, g)
    assert res.coeff((1, 0)) == as_scalar(-1)


def test_structure_tables():
    sc = affine_structure(model_fields("branch3"))
    assert sc.c[0][1] == [as_scalar(-1), rational(-1, 3)]
    scf = affine_structure(model_fields("flat"))
    want = {
        (0, 1): [1, 0, 0, 0],
        (0, 2): [1, 0, 0, 0],
        (0, 3): [0, 1, 0, 0],
        (1, 3): [0, 0, 0, 1],
        (2, 3): [0, 0, 0, 1],
        (1, 2): [0, 0, 0, 0],
    }
    for (i, j), vals in want.items():
        assert scf.c[i][j] == [as_scalar(x) for x in vals], (i, j)
    assert scf.jacobi_ok()
    sct = affine_structure(model_fields("theta"))
    assert sct.c[0][1] == [S_ZERO, S_ZERO]


def test_pushforward_identity_and_scaling():
    g = graph_from({(2, 0): "1/2"}, order=6)
    assert affine_pushforward(g, AffineMap.identity()).F.same_terms(g.F)
    scale = AffineMap([[2, 0, 0], [0, 1, 0], [0, 0, 4]])
    gp = affine_pushforward(g, scale)
    assert gp.F.same_terms(g.F.truncate(gp.F.order))


def test_pushforward_round_trip_shear():
    g = affine_model("flat", 8)
    m = AffineMap([[1, 0, 0], [0, 1, "1/2"], [0, 0, 1]])  # y <- y + u/2
    minv = AffineMap([[1, 0, 0], [0, 1, "-1/2"], [0, 0, 1]])
    gp = affine_pushforward(g, m)
    back = affine_pushforward(gp, minv)
    o = back.F.order
    assert back.F.same_terms(g.F.truncate(o))


def test_pushforward_requires_origin_fixed():
    g = graph_from({(2, 0): "1/2"}, order=6)
    m = AffineMap.identity()
    m.translation = [as_scalar(1), S_ZERO, S_ZERO]
    with pytest.raises(InputError):
        affine_pushforward(g, m)


def test_prenormalize_models_are_fixed_points():
    for name, order in (("branch3", 8), ("flat", 10), ("theta", 7)):
        g = affine_model(name, order)
        _, gn = affine_prenormalize(g)
        assert gn.F.same_terms(g.F.truncate(gn.F.order)), name


def test_prenormalize_after_affine_map():
    g = affine_model("flat", 8)
    m = AffineMap([[1, "1/3", 0], [0, 1, 0], ["1/4", 0, 2]])
    gp = affine_pushforward(g, m)
    _, gn = affine_prenormalize(gp)
    o = gn.F.order
    assert gn.F.same_terms(g.F.truncate(o))


def test_prenormalize_obstruction_for_nonparabolic():
    g = graph_from({(2, 0): "1/2", (0, 2): "1/2"}, order=6)
    with pytest.raises(ComputationError):
        affine_prenormalize(g)


def test_classification_of_models():
    assert affine_classify(affine_model("branch3", 8)) == BRANCH3
    assert affine_classify(affine_model("flat", 10)) == FLAT
    b = affine_classify(affine_model("theta", 7))
    assert b.kind == THETA
    assert b.theta == param("theta")


def test_theta_value_invariance_under_affine_maps():
    g = affine_model("theta", 7)
    g5 = AffineGraph(g.F.substitute_params({"theta": as_scalar(5)}))
    maps = [
        AffineMap([[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        AffineMap([[2, 0, 0], [0, 1, 0], [0, 0, 4]]),
        AffineMap([[1, 0, 0], [0, 1, "1/2"], [0, 0, 1]]),
        AffineMap([[1, "1/3", 0], [0, 1, 0], [0, 0, 1]]),
        AffineMap([["1/2", 0, "1/5"], ["1/7", 1, 0], [0, 0, "1/4"]]),
    ]
    for m in maps:
        gp = affine_pushforward(g5, m)
        b = affine_classify(gp)
        assert b.kind == THETA
        assert b.theta == as_scalar(5), m.linear


def test_branch_stability_branch3_and_flat():
    maps = [
        AffineMap([[2, 0, 0], [0, 1, 0], [0, 0, 4]]),
        AffineMap([[1, 0, "1/3"], [0, 1, 0], [0, 0, 1]]),
        AffineMap([[1, 0, 0], ["1/2", 1, 0], [0, 0, 1]]),
    ]
    g3 = affine_model("branch3", 8)
    gf = affine_model("flat", 10)
    for m in maps:
        assert affine_classify(affine_pushforward(g3, m)) == BRANCH3
        assert affine_classify(affine_pushforward(gf, m)) == FLAT


def param_chart():
    return Chart(("r", "t"), (1, 1), pairing=(0, 1))


def test_parametrized_cone():
    # cone x1^2 + x2^2 = x3^2 near (1, 0, 1): r(cos t, sin t, 1)
    P = param_chart()
    N = 9
    r1 = Series.var(P, "r", None) + Series.one(P, None)
    cos_t = _cos_series(P, N)
    sin_t = _sin_series(P, N)
    comps = [(r1 * cos_t).truncate(N), (r1 * sin_t).truncate(N),
             r1.truncate(N)]
    g = parametrized_to_graph(comps, 6)
    chk = parabolic_noncylindrical_check(g)
    assert chk["fxx_nonzero"]
    assert chk["hessian_det_vanishes"]
    assert affine_classify(g) == FLAT


def test_parametrized_tangent_developable():
    # c(t) + r c'(t) with c(t) = (t, t^2, t^3), at (r, t) = (1, 0)
    P = param_chart()
    r = Series.var(P, "r", None) + Series.one(P, None)
    t = Series.var(P, "t", None)
    one = Series.one(P, None)
    comps = [t + r, t * t + r * t.scale(as_scalar(2)),
             t ** 3 + (r * t * t).scale(as_scalar(3))]
    g = parametrized_to_graph(comps, 7)
    chk = parabolic_noncylindrical_check(g)
    assert chk["parabolic_noncylindrical"]
    assert affine_classify(g) == BRANCH3


def test_parametrized_degenerate_plane():
    P = param_chart()
    r = Series.var(P, "r", None)
    t = Series.var(P, "t", None)
    g = parametrized_to_graph([r, t, Series.zero(P, None)], 5)
    chk = parabolic_noncylindrical_check(g)
    assert not chk["parabolic_noncylindrical"]


def _cos_series(P, order):
    t = Series.var(P, "t", order)
    acc = Series.one(P, order)
    term = Series.one(P, order)
    import math
    for k in range(1, order // 2 + 1):
        term = (term * t * t).scale(rational(-1, (2 * k - 1) * (2 * k)))
        acc = acc + term
    return acc


def _sin_series(P, order):
    t = Series.var(P, "t", order)
    acc = t
    term = t
    for k in range(1, order // 2 + 1):
        term = (term * t * t).scale(rational(-1, (2 * k) * (2 * k + 1)))
        acc = acc + term
    return acc
