import pytest
from gmpy2 import mpq

from c21models import linalg
from c21models.errors import RootExtractionError
from c21models.scalars import S_ONE, S_ZERO, Scalar, as_scalar, param, qi


def test_matrix_inverse_exact():
    m = [[as_scalar(2), as_scalar(1)], [as_scalar(1), as_scalar(1)]]
    inv = linalg.matrix_inverse(m)
    assert inv[0][0] == as_scalar(1)
    assert inv[0][1] == as_scalar(-1)
    with pytest.raises(linalg.SingularMatrixError):
        linalg.matrix_inverse([[as_scalar(1), as_scalar(2)],
                               [as_scalar(2), as_scalar(4)]])


def test_rank_with_formal_parameter():
    theta = param("theta")
    rows = [
        [S_ONE, theta],
        [theta, theta * theta],
        [S_ZERO, S_ONE],
    ]
    assert linalg.rank(rows) == 2  # second row is theta * first


def test_linear_reduction_solves_and_detects_inconsistency():
    red = linalg.LinearReduction()
    red.add_row({0: as_scalar(2)}, as_scalar(6))
    red.add_row({0: as_scalar(1), 1: as_scalar(1)}, as_scalar(5))
    assert red.solved[0] == as_scalar(3)
    assert red.solved[1] == as_scalar(2)
    red.add_row({0: as_scalar(1)}, as_scalar(4))
    assert red.inconsistent


def test_linear_reduction_pending_then_resolved():
    red = linalg.LinearReduction()
    red.add_row({0: as_scalar(1), 1: as_scalar(1)}, as_scalar(3))
    assert not red.solved and red.pending()
    red.add_row({0: as_scalar(1), 1: as_scalar(-1)}, as_scalar(1))
    assert red.solved[0] == as_scalar(2)
    assert red.solved[1] == as_scalar(1)
    assert not red.pending()


def test_rational_roots():
    # (2x - 1)(x + 3)(x - 5) = 2x^3 - 5x^2 - 28x + 15
    coeffs = [mpq(15), mpq(-28), mpq(-5), mpq(2)]
    roots = linalg.rational_roots(coeffs)
    for r in roots:
        acc = mpq(0)
        for c in reversed(coeffs):
            acc = acc * r + c
        assert acc == 0
    assert mpq(1, 2) in roots and mpq(-3) in roots and mpq(5) in roots


def test_rational_nth_root():
    assert linalg.rational_nth_root(as_scalar("8/27"), 3) == as_scalar("2/3")
    assert linalg.rational_nth_root(as_scalar(-8), 3) == as_scalar(-2)
    with pytest.raises(RootExtractionError):
        linalg.rational_nth_root(as_scalar(2), 2)


def test_gauss_roots_square():
    roots = linalg.gauss_nth_roots(qi(0, 2), 2)  # sqrt(2i) = 1 + i
    assert qi(1, 1) in roots and qi(-1, -1) in roots
    assert roots[0] == qi(1, 1)  # canonical branch first


def test_gauss_roots_cube():
    c = qi(2, 11)  # (2 + i)^3 = 2 + 11i
    roots = linalg.gauss_nth_roots(c, 3)
    assert roots == [qi(2, 1)]


def test_gauss_roots_quartic_all_branches():
    roots = linalg.gauss_nth_roots(qi(16), 4)
    assert set((r.re, r.im) for r in roots) == {
        (mpq(2), mpq(0)), (mpq(-2), mpq(0)),
        (mpq(0), mpq(2)), (mpq(0), mpq(-2))}
    assert roots[0] == qi(2)


def test_gauss_roots_none_when_irrational():
    assert linalg.gauss_nth_roots(qi(2), 2) == []
