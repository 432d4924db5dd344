import pytest

from c21models.errors import NotNormalFormError, OrderError
from c21models.hypersurfaces import (BRANCH_F30020, BRANCH_THETA, FLAT,
                                     HypersurfaceGraph, classify_branch,
                                     extract_invariants, gm_flat_model,
                                     normal_form_check, perturbation,
                                     reality_check, thm31_model, thm33_model)
from c21models.scalars import S_ZERO, as_scalar, param, rational
from c21models.series import Series, cr_chart


def test_gm_flat_model_order5_display():
    g = gm_flat_model(5)
    want = {
        (1, 0, 1, 0, 0): "1",
        (0, 1, 2, 0, 0): "1/2",
        (2, 0, 0, 1, 0): "1/2",
        (1, 1, 1, 1, 0): "1",
        (0, 2, 2, 1, 0): "1/2",
        (2, 1, 0, 2, 0): "1/2",
    }
    assert {e: c.text() for e, c in g.F.sorted_terms()} == want


def test_gm_flat_exceptional_coefficients():
    g = gm_flat_model(6)
    assert g.coeff(1, 0, 1, 0, 0) == as_scalar(1)
    assert g.coeff(2, 0, 0, 1, 0) == rational(1, 2)


def test_thm31_f5_block():
    g = thm31_model(8)
    f5 = g.F.weighted_component(5)
    assert f5.coeff((3, 0, 0, 2, 0)) == as_scalar(1)
    assert f5.coeff((0, 2, 3, 0, 0)) == as_scalar(1)
    assert f5.coeff((2, 1, 0, 2, 0)) == rational(1, 2)
    assert f5.coeff((0, 2, 2, 1, 0)) == rational(1, 2)
    assert len(f5.terms) == 4


def test_thm31_f6_coefficient():
    g = thm31_model(8)
    assert g.coeff(0, 3, 3, 0, 0) == rational(1, 3)


def test_thm33_printed_coefficients():
    g = thm33_model(10)
    assert g.coeff(3, 0, 2, 1, 0) == as_scalar(-15)
    assert g.coeff(4, 1, 3, 0, 0) == as_scalar(2) * param("theta")
    assert g.coeff(7, 0, 0, 1, 0) == rational(-1, 35) * param("theta")
    # theta^2 slots of the degree-9 block
    assert g.coeff(5, 0, 4, 0, 0) == rational(-6, 25) * param("theta") ** 2


def test_thm33_theta_binding():
    g = thm33_model(8, theta=rational(5))
    assert g.coeff(4, 0, 3, 0, 0) == as_scalar(5)
    assert g.coeff(5, 0, 2, 1, 0) == as_scalar(12)


def test_thm33_model_components_respect_blocks():
    g = thm33_model(10)
    for k, comp in g.F.weighted_components().items():
        for e in comp.terms:
            assert g.F.chart.wdeg(e) == k


def test_reality_check_artificial_violation():
    C = cr_chart()
    F = Series.from_terms(C, 4, [((2, 0, 0, 0, 0), as_scalar(1))])
    g = HypersurfaceGraph(F)
    viol = reality_check(g)
    assert len(viol) == 1
    exp, c, cexp, cc = viol[0]
    assert {exp, cexp} == {(2, 0, 0, 0, 0), (0, 0, 2, 0, 0)}


def test_normal_form_check_flags_added_term():
    g = gm_flat_model(6)
    terms = dict(g.F.terms)
    terms[(3, 0, 0, 1, 1)] = as_scalar(1)  # z^3 zetabar v
    bad = HypersurfaceGraph(Series(cr_chart(), 6, terms))
    failures = normal_form_check(bad)
    assert any(e == (3, 0, 0, 1, 1) for e, _, _ in failures)


def test_normal_form_check_flags_wrong_exceptional_value():
    g = gm_flat_model(6)
    terms = dict(g.F.terms)
    terms[(1, 0, 1, 0, 0)] = as_scalar(2)
    bad = HypersurfaceGraph(Series(cr_chart(), 6, terms))
    failures = normal_form_check(bad)
    assert any(e == (1, 0, 1, 0, 0) for e, _, _ in failures)


def test_models_pass_normal_form():
    assert normal_form_check(gm_flat_model(8)) == []
    assert normal_form_check(thm31_model(8)) == []
    assert normal_form_check(thm33_model(10)) == []


def test_extract_invariants_profiles():
    p1 = extract_invariants(thm31_model(8))
    assert p1[(3, 0, 0, 2, 0)] == as_scalar(1)
    assert p1[(4, 0, 0, 2, 0)] == S_ZERO
    im = p1[(3, 0, 2, 1, 0)].re_im()[1]
    assert im.is_zero()

    p3 = extract_invariants(thm33_model(10))
    assert p3[(3, 0, 0, 2, 0)] == S_ZERO
    assert p3[(5, 0, 0, 1, 0)] == as_scalar(1)
    assert p3[(3, 0, 2, 1, 0)] == as_scalar(-15)
    assert p3[(6, 0, 0, 1, 0)] == S_ZERO
    assert p3[(4, 0, 3, 0, 0)].re_im()[1].is_zero()

    pf = extract_invariants(gm_flat_model(8))
    for slot in ((3, 0, 0, 2, 0), (5, 0, 0, 1, 0), (3, 0, 2, 1, 0)):
        assert pf[slot] == S_ZERO


def test_thm33_differential_consequences():
    g = thm33_model(10)
    for slot in ((4, 0, 0, 2, 0), (3, 0, 1, 2, 0), (3, 0, 0, 3, 0)):
        assert g.F.terms.get(slot, S_ZERO).is_zero()


def test_classification_tree():
    assert classify_branch(gm_flat_model(8)) == FLAT
    assert classify_branch(thm31_model(8)) == BRANCH_F30020
    assert classify_branch(thm33_model(10)) == BRANCH_THETA


def test_classification_requires_normal_form_by_default():
    C = cr_chart()
    terms = dict(gm_flat_model(6).F.terms)
    terms[(3, 0, 0, 0, 0)] = as_scalar(1)
    bad = HypersurfaceGraph(Series(C, 6, terms))
    with pytest.raises(NotNormalFormError):
        classify_branch(bad)


def test_classification_unknown_with_formal_parameter():
    C = cr_chart()
    terms = dict(gm_flat_model(6).F.terms)
    terms[(3, 0, 0, 2, 0)] = param("theta")
    terms[(0, 2, 3, 0, 0)] = param("theta")
    g = HypersurfaceGraph(Series(C, 6, terms))
    b = classify_branch(g)
    assert b.kind == "UNKNOWN"


def test_classification_order_gate():
    with pytest.raises(OrderError):
        classify_branch(gm_flat_model(5))


def test_flat_perturbation_is_zero():
    assert perturbation(gm_flat_model(8)).is_zero()
    g = thm31_model(8)
    assert not perturbation(g).is_zero()
