import pytest
from hypothesis import HealthCheck, settings, strategies as st

from c21models.scalars import (GaussRational, ParamPoly, Scalar, as_scalar,
                               qi, register_param)
from c21models.series import Series, affine_chart, cr_chart, holo_chart

settings.register_profile(
    "kernel",
    deadline=None,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("kernel")

# parameters shared by the random-value strategies
for _name in ("theta", "p1", "p2"):
    register_param(_name)


@st.composite
def gauss_rationals(draw):
    num = st.integers(min_value=-6, max_value=6)
    den = st.integers(min_value=1, max_value=4)
    return qi(f"{draw(num)}/{draw(den)}", f"{draw(num)}/{draw(den)}")


@st.composite
def param_polys(draw, names=("theta", "p1")):
    terms = draw(st.lists(
        st.tuples(
            st.tuples(*(st.integers(min_value=0, max_value=2)
                        for _ in names)),
            gauss_rationals()),
        max_size=3))
    acc = ParamPoly({})
    for exps, c in terms:
        mono = Scalar.from_gauss(c)
        for name, e in zip(names, exps):
            mono = mono * Scalar.param(name) ** e
        acc = acc + mono.num
    return acc


@st.composite
def scalars(draw, allow_fraction=True):
    num = draw(param_polys())
    if allow_fraction and draw(st.booleans()):
        den = draw(param_polys())
        if den.is_zero():
            den = ParamPoly.const(qi(1))
        return Scalar(num, den)
    return Scalar(num)


@st.composite
def nonzero_scalars(draw):
    s = draw(scalars())
    if s.is_zero():
        return as_scalar(1) + Scalar.param("theta")
    return s


@st.composite
def cr_series(draw, order=4, allow_params=False):
    chart = cr_chart()
    n = draw(st.integers(min_value=0, max_value=4))
    terms = []
    for _ in range(n):
        exp = draw(st.tuples(*(st.integers(min_value=0, max_value=2)
                               for _ in range(5))))
        if chart.wdeg(exp) > order:
            continue
        c = draw(scalars() if allow_params else
                 gauss_rationals().map(Scalar.from_gauss))
        terms.append((exp, c))
    return Series.from_terms(chart, order, terms)


@st.composite
def holo_series(draw, order=4):
    chart = holo_chart()
    n = draw(st.integers(min_value=0, max_value=4))
    terms = []
    for _ in range(n):
        exp = draw(st.tuples(*(st.integers(min_value=0, max_value=2)
                               for _ in range(3))))
        if chart.wdeg(exp) > order:
            continue
        terms.append((exp, draw(gauss_rationals().map(Scalar.from_gauss))))
    return Series.from_terms(chart, order, terms)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: full acceptance gate")
