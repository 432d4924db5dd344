import pytest

from c21models.hypersurfaces import (classify_branch, gm_flat_model,
                                     normal_form_check, thm31_model,
                                     thm33_model)
from c21models.scalars import S_I, S_ONE, as_scalar, parse_scalar, qi
from c21models.series import Series, holo_chart
from c21models.transformations import (ResidualParams, diagonal_exponents,
                                       flat_automorphism, formal_params,
                                       invariant_rescaling,
                                       normalize_residuals, pushforward_graph)


def rp(lam, alpha="0", rho="0"):
    return ResidualParams(parse_scalar(str(lam)), parse_scalar(str(alpha)),
                          parse_scalar(str(rho)))


def test_scaling_automorphism_components():
    g = flat_automorphism(rp(2), 4)
    H = holo_chart()
    assert g.components["z"].same_terms(Series.var(H, "z", 4).scale(
        as_scalar(2)))
    assert g.components["w"].same_terms(Series.var(H, "w", 4).scale(
        as_scalar(4)))
    lam = parse_scalar("i")
    gi = flat_automorphism(rp("i"), 4)
    assert gi.components["zeta"].coeff((0, 1, 0)) == lam / lam.conj()


def test_identity_automorphism():
    g = flat_automorphism(rp(1), 5)
    from c21models.germs import MapGerm
    assert g == MapGerm.identity(holo_chart(), 5)


def test_alpha_expansion_low_order():
    # z' = z - i alpha z^2 + (i alpha zeta - i conj(alpha)) w + O(3)
    alpha = parse_scalar("1")
    g = flat_automorphism(rp(1, "1"), 6)
    zc = g.components["z"]
    assert zc.coeff((1, 0, 0)) == S_ONE
    assert zc.coeff((2, 0, 0)) == -(S_I * alpha)
    assert zc.coeff((0, 1, 1)) == S_I * alpha
    assert zc.coeff((0, 0, 1)) == -(S_I * alpha.conj())


def test_lambda_zero_rejected():
    with pytest.raises(Exception):
        rp(0)


def test_pushforward_identity_map():
    g = thm31_model(6)
    gp = pushforward_graph(g, flat_automorphism(rp(1), 6))
    assert gp.F.same_terms(g.F.truncate(gp.F.order))


def test_flat_invariance_scaling_and_rho():
    g = gm_flat_model(6)
    for p in (rp(2), rp("i"), rp(1, "0", "1")):
        gp = pushforward_graph(g, flat_automorphism(p, 6))
        ref = gm_flat_model(6).F.truncate(gp.F.order)
        assert gp.F.same_terms(ref)


def test_flat_invariance_alpha():
    g = gm_flat_model(6)
    gp = pushforward_graph(g, flat_automorphism(rp(1, "i"), 6))
    assert gp.F.same_terms(gm_flat_model(6).F.truncate(gp.F.order))


def test_pushforward_functoriality():
    g = gm_flat_model(6)
    p1, p2 = rp(2), rp(1, "1")
    m1 = flat_automorphism(p1, 6)
    m2 = flat_automorphism(p2, 6)
    once = pushforward_graph(pushforward_graph(g, m1), m2)
    composed = pushforward_graph(g, m1.compose(m2))
    o = min(once.F.order, composed.F.order)
    assert once.F.truncate(o).same_terms(composed.F.truncate(o))


def test_diagonal_transformation_law():
    # under lam-scaling the slot coefficients scale by lam^-p lamb^-q
    lam = parse_scalar("2")
    g = thm31_model(7)
    gp = pushforward_graph(g, flat_automorphism(rp(2), 7))
    for slot in ((3, 0, 0, 2, 0), (3, 0, 2, 1, 0)):
        p, q = diagonal_exponents(slot)
        want = g.F.coeff(slot) * lam ** (-p) * lam.conj() ** (-q)
        assert gp.F.coeff(slot) == want


def test_invariant_rescaling_formal_lambda():
    p = formal_params()
    lam = p.lam
    scaled = ResidualParams(lam, 0, 0)
    r1, _ = invariant_rescaling(thm31_model(7), scaled)
    assert r1 == lam.conj().inv()
    _, r2 = invariant_rescaling(thm33_model(7), scaled)
    assert r2 == (lam ** 3).inv()


def test_invariant_rescaling_identity():
    r1, r2 = invariant_rescaling(thm31_model(7), rp(1))
    assert r1 == as_scalar(1)
    assert r2 is None  # F[5,0,0,1,0] vanishes on the thm31 model


def test_normalize_residuals_flat_is_noop():
    g = gm_flat_model(6)
    res = normalize_residuals(g)
    assert res.branch == "FLAT"
    assert res.params.is_identity()
    assert res.graph.F.same_terms(g.F)


def test_normalize_residuals_round_trip_thm31():
    g = thm31_model(7)
    gp = pushforward_graph(g, flat_automorphism(rp(2), 7))
    assert gp.F.coeff((3, 0, 0, 2, 0)) == parse_scalar("1/2")
    res = normalize_residuals(gp)
    assert res.params.lam == parse_scalar("1/2")
    assert res.params.alpha.is_zero()
    assert res.params.rho.is_zero()
    assert res.graph.F.same_terms(g.F.truncate(res.graph.F.order))


def test_normalize_residuals_cube_root_thm33():
    g = thm33_model(7)
    gp = pushforward_graph(g, flat_automorphism(rp(2), 7))
    assert gp.F.coeff((5, 0, 0, 1, 0)) == parse_scalar("1/8")
    res = normalize_residuals(gp)
    assert res.params.lam == parse_scalar("1/2")
    assert res.graph.F.coeff((5, 0, 0, 1, 0)) == as_scalar(1)
    assert res.graph.F.same_terms(g.F.truncate(res.graph.F.order))
