"""Weighted truncated multivariate formal power series.

A Series is a sparse table of exponent-vector -> Scalar over a Chart, plus
the truncation order through which its terms are guaranteed exact.  An
order of None means the value is an exact polynomial (used for affine
vector fields and other closed-form data); finite orders propagate
conservatively through every operation, so an equality asserted through a
series' order is a genuine identity.

Weighted degree of a term is the weight-dot-exponent sum; the three charts
of interest are built by cr_chart() (z, zeta, zbar, zetabar, v with weights
1,1,1,1,2), holo_chart() (z, zeta, w with weights 1,1,2) and affine charts
with unit weights.
"""

from __future__ import annotations

from operator import add as _add

from gmpy2 import mpq

from .errors import (ChartMismatchError, DivisionByZeroError, InputError,
                     OrderError)
from .scalars import (PP_ONE, ParamPoly, S_ONE, S_ZERO, Scalar, as_scalar,
                      mono_mul)

# --------------------------------------------------------------------------
# charts


class Chart:
    """Ordered variables with weights and an optional conjugation pairing."""

    __slots__ = ("names", "weights", "pairing", "index")

    def __init__(self, names, weights, pairing=None):
        self.names = tuple(names)
        self.weights = tuple(int(w) for w in weights)
        if len(self.names) != len(self.weights):
            raise InputError("chart names/weights length mismatch")
        if any(w <= 0 for w in self.weights):
            raise InputError("chart weights must be positive")
        if pairing is not None:
            pairing = tuple(pairing)
            n = len(self.names)
            if sorted(pairing) != list(range(n)):
                raise InputError("chart pairing must be a permutation")
            for i, j in enumerate(pairing):
                if pairing[j] != i:
                    raise InputError("chart pairing must be an involution")
                if self.weights[i] != self.weights[j]:
                    raise InputError("paired variables must share a weight")
        self.pairing = pairing
        self.index = {n: i for i, n in enumerate(self.names)}

    def __eq__(self, other):
        return (isinstance(other, Chart) and self.names == other.names
                and self.weights == other.weights
                and self.pairing == other.pairing)

    def __hash__(self):
        return hash((self.names, self.weights, self.pairing))

    def __repr__(self):
        return f"Chart({self.names}, weights={self.weights})"

    @property
    def nvars(self) -> int:
        return len(self.names)

    def wdeg(self, exp: tuple) -> int:
        return sum(e * w for e, w in zip(exp, self.weights))

    def var_index(self, var) -> int:
        if isinstance(var, int):
            return var
        i = self.index.get(var)
        if i is None:
            raise InputError(f"no variable {var!r} in chart {self.names}")
        return i

    def unit_exp(self, i: int) -> tuple:
        return tuple(1 if j == i else 0 for j in range(self.nvars))


def cr_chart() -> Chart:
    return Chart(("z", "zeta", "zbar", "zetabar", "v"),
                 (1, 1, 1, 1, 2), pairing=(2, 3, 0, 1, 4))


def holo_chart() -> Chart:
    return Chart(("z", "zeta", "w"), (1, 1, 2))


def affine_chart() -> Chart:
    return Chart(("x", "y"), (1, 1), pairing=(0, 1))


def affine_space_chart() -> Chart:
    return Chart(("x", "y", "u"), (1, 1, 2), pairing=(0, 1, 2))


# --------------------------------------------------------------------------
# order bookkeeping helpers (None = exact polynomial)


def min_order(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def order_leq(k, order) -> bool:
    return order is None or k <= order


def order_str(order) -> str:
    return "exact" if order is None else str(order)


# --------------------------------------------------------------------------
# series


class Series:
    """Truncated weighted power series over a chart. Immutable."""

    __slots__ = ("chart", "order", "terms", "_sorted")

    def __init__(self, chart: Chart, order, terms: dict):
        if order is not None and order < 0:
            raise OrderError("series order underflow")
        self.chart = chart
        self.order = order
        clean = {}
        for exp, c in terms.items():
            if not order_leq(chart.wdeg(exp), order):
                continue
            if not isinstance(c, Scalar):
                c = as_scalar(c)
            if not c.is_zero():
                clean[exp] = c
        self.terms = clean
        self._sorted = None

    # construction -----------------------------------------------------------

    @staticmethod
    def zero(chart: Chart, order) -> "Series":
        return Series(chart, order, {})

    @staticmethod
    def const(chart: Chart, value, order) -> "Series":
        zero = (0,) * chart.nvars
        return Series(chart, order, {zero: as_scalar(value)})

    @staticmethod
    def one(chart: Chart, order) -> "Series":
        return Series.const(chart, S_ONE, order)

    @staticmethod
    def var(chart: Chart, name, order) -> "Series":
        i = chart.var_index(name)
        return Series(chart, order, {chart.unit_exp(i): S_ONE})

    @staticmethod
    def _raw(chart: Chart, order, terms: dict) -> "Series":
        # trusted constructor: terms already clean Scalars within order
        s = Series.__new__(Series)
        s.chart = chart
        s.order = order
        s.terms = terms
        s._sorted = None
        return s

    @staticmethod
    def from_terms(chart: Chart, order, pairs) -> "Series":
        """pairs: iterable of (exponent tuple, scalar-like); duplicates add."""
        acc: dict = {}
        for exp, c in pairs:
            exp = tuple(int(e) for e in exp)
            if len(exp) != chart.nvars:
                raise InputError(f"exponent {exp} has wrong length")
            if any(e < 0 for e in exp):
                raise InputError(f"negative exponent in {exp}")
            c = as_scalar(c)
            acc[exp] = acc[exp] + c if exp in acc else c
        return Series(chart, order, acc)

    # inspection ---------------------------------------------------------------

    def coeff(self, exp: tuple) -> Scalar:
        exp = tuple(exp)
        if not order_leq(self.chart.wdeg(exp), self.order):
            raise OrderError(
                f"coefficient {exp} beyond exact order {order_str(self.order)}")
        return self.terms.get(exp, S_ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self):
        """Minimal weighted degree of a stored term, or None when zero."""
        if not self.terms:
            return None
        return min(self.chart.wdeg(e) for e in self.terms)

    def sorted_weighted_terms(self):
        """Sorted list of (wdeg, exp, coeff); cached (Series is immutable)."""
        if self._sorted is None:
            wd = self.chart.wdeg
            self._sorted = sorted(
                ((wd(e), e, c) for e, c in self.terms.items()))
        return self._sorted

    def sorted_terms(self):
        return [(e, c) for _, e, c in self.sorted_weighted_terms()]

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.chart.nvars, S_ZERO)

    def __eq__(self, other):
        return (isinstance(other, Series) and self.chart == other.chart
                and self.order == other.order and self.terms == other.terms)

    __hash__ = None

    def same_terms(self, other: "Series") -> bool:
        """Term-table equality ignoring the recorded orders."""
        return self.chart == other.chart and self.terms == other.terms

    def __repr__(self):
        n = len(self.terms)
        return (f"Series({'+'.join(self.chart.names)}, "
                f"order={order_str(self.order)}, {n} terms)")

    # arithmetic ----------------------------------------------------------------

    def _check_chart(self, other: "Series"):
        if self.chart != other.chart:
            raise ChartMismatchError(
                f"chart mismatch: {self.chart.names} vs {other.chart.names}")

    def __add__(self, other: "Series") -> "Series":
        self._check_chart(other)
        order = min_order(self.order, other.order)
        out = dict(self.terms)
        for e, c in other.terms.items():
            acc = out.get(e)
            out[e] = c if acc is None else acc + c
        return Series(self.chart, order, out)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __neg__(self) -> "Series":
        s = Series.__new__(Series)
        s.chart = self.chart
        s.order = self.order
        s.terms = {e: -c for e, c in self.terms.items()}
        s._sorted = None
        return s

    def scale(self, c) -> "Series":
        c = as_scalar(c)
        if c.is_zero():
            return Series.zero(self.chart, self.order)
        return Series(self.chart, self.order,
                      {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other: "Series") -> "Series":
        self._check_chart(other)
        # exactness: error(a)*val(b) and error(b)*val(a)
        va, vb = self.valuation(), other.valuation()
        order = None
        if self.order is not None:
            order = None if vb is None else self.order + vb
        if other.order is not None:
            o2 = None if va is None else other.order + va
            order = min_order(order, o2)
        a = self.sorted_weighted_terms()
        b = other.sorted_weighted_terms()
        if len(a) > len(b):
            a, b = b, a
        # flattened accumulation: exp -> {param mono -> GaussRational} for
        # polynomial coefficients, Scalar fallback for fractions
        out_poly: dict = {}
        out_frac: dict = {}
        for w1, e1, c1 in a:
            p1 = c1.num.terms if c1.den is PP_ONE else None
            for w2, e2, c2 in b:
                if order is not None and w1 + w2 > order:
                    break  # b is sorted by weighted degree
                e = tuple(map(_add, e1, e2))
                if p1 is not None and c2.den is PP_ONE:
                    d = out_poly.get(e)
                    if d is None:
                        d = out_poly[e] = {}
                    for m1, g1 in p1.items():
                        for m2, g2 in c2.num.terms.items():
                            m = mono_mul(m1, m2)
                            g = g1 * g2
                            acc = d.get(m)
                            d[m] = g if acc is None else acc + g
                else:
                    c = c1 * c2
                    acc = out_frac.get(e)
                    out_frac[e] = c if acc is None else acc + c
        terms: dict = {}
        for e, d in out_poly.items():
            clean = {m: g for m, g in d.items() if g.re or g.im}
            if clean:
                terms[e] = Scalar._poly(ParamPoly(clean))
        for e, c in out_frac.items():
            t = terms.get(e)
            c = c if t is None else t + c
            if c.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = c
        return Series._raw(self.chart, order, terms)

    def __pow__(self, n: int) -> "Series":
        if n < 0:
            raise InputError("negative series power; use invert_unit")
        out = Series.one(self.chart, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def truncate(self, order) -> "Series":
        if self.order is not None and order is not None and order > self.order:
            raise OrderError(
                f"cannot raise exact order from {self.order} to {order}")
        return Series(self.chart, order, self.terms)

    # calculus -------------------------------------------------------------------

    def weighted_component(self, k: int) -> "Series":
        if not order_leq(k, self.order):
            raise OrderError(
                f"component {k} beyond exact order {order_str(self.order)}")
        wd = self.chart.wdeg
        return Series(self.chart, self.order,
                      {e: c for e, c in self.terms.items() if wd(e) == k})

    def weighted_components(self) -> dict:
        out: dict = {}
        wd = self.chart.wdeg
        for e, c in self.terms.items():
            out.setdefault(wd(e), {})[e] = c
        return {k: Series(self.chart, self.order, t)
                for k, t in sorted(out.items())}

    def partial(self, var) -> "Series":
        i = self.chart.var_index(var)
        w = self.chart.weights[i]
        order = None if self.order is None else self.order - w
        if order is not None and order < 0:
            raise OrderError("derivative order underflow")
        out: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                continue
            de = list(e)
            de[i] = k - 1
            out[tuple(de)] = c * as_scalar(k)
        return Series(self.chart, order, out)

    def substitute_params(self, bindings: dict) -> "Series":
        """Apply Scalar.substitute to every coefficient."""
        out: dict = {}
        for e, c in self.terms.items():
            out[e] = c.substitute(bindings)
        return Series(self.chart, self.order, out)

    def conj(self) -> "Series":
        if self.chart.pairing is None:
            raise ChartMismatchError(
                f"chart {self.chart.names} has no conjugation pairing")
        pairing = self.chart.pairing
        out: dict = {}
        for e, c in self.terms.items():
            pe = [0] * len(e)
            for i, k in enumerate(e):
                pe[pairing[i]] = k
            out[tuple(pe)] = c.conj()
        return Series(self.chart, self.order, out)

    # composition -----------------------------------------------------------------

    def substitute(self, assignment: dict, target_chart: Chart = None,
                   cap=None) -> "Series":
        """Compose with variable -> Series assignments.

        Unassigned variables map to themselves (requires target chart to
        contain a variable of the same name and weight).  Each assigned
        series must have zero constant term.  The result's exact order is
        computed conservatively from the assignment orders and valuations;
        `cap` truncates it further.
        """
        chart = self.chart
        images: list[Series] = []
        tchart = target_chart
        for i, name in enumerate(chart.names):
            s = assignment.get(name)
            if s is None and i in assignment:
                s = assignment[i]
            if s is not None:
                if tchart is None:
                    tchart = s.chart
                elif s.chart != tchart:
                    raise ChartMismatchError(
                        "substitute: assigned series on different charts")
        if tchart is None:
            tchart = chart
        for i, name in enumerate(chart.names):
            s = assignment.get(name)
            if s is None and i in assignment:
                s = assignment[i]
            if s is None:
                j = tchart.var_index(name)
                if tchart.weights[j] != chart.weights[i]:
                    raise ChartMismatchError(
                        f"substitute: weight of {name} differs across charts")
                s = Series.var(tchart, name, None)
            if not s.constant_term().is_zero():
                raise InputError(
                    f"substitute: image of {name} has a constant term")
            images.append(s)

        # conservative exactness order
        ratio_min = None  # min over vars of val_i / weight_i as mpq
        order = None
        for i, s in enumerate(images):
            val = s.valuation()
            if s.order is not None:
                # error of the i-th image inside a term of minimal shape:
                # bounded below by its own order + 1; combined per-term below
                pass
            if val is not None:
                r = mpq(val, chart.weights[i])
                ratio_min = r if ratio_min is None else min(ratio_min, r)
        if self.order is not None:
            if ratio_min is None:
                order = None  # all images zero: composition is the constant term
            else:
                bound = (self.order + 1) * ratio_min
                order = int(-((-bound.numerator) // bound.denominator)) - 1
        # per-term degradation from the finite orders of the images
        vals = [s.valuation() for s in images]
        for e in self.terms:
            m = 0
            ok = True
            for i, k in enumerate(e):
                if k:
                    if vals[i] is None:
                        ok = False
                        break
                    m += k * vals[i]
            if not ok:
                continue  # term maps to zero
            for i, k in enumerate(e):
                if k and images[i].order is not None:
                    cand = images[i].order + m - vals[i]
                    order = min_order(order, cand)
        order = min_order(order, cap)
        if order is not None and order < 0:
            raise OrderError("substitute: result order underflow")

        # monomial image cache keyed by exponent
        imgs_t = [s.truncate(min_order(s.order, order)) for s in images]
        cache: dict = {(0,) * chart.nvars: Series.one(tchart, order)}

        def image(exp: tuple) -> Series:
            hit = cache.get(exp)
            if hit is not None:
                return hit
            out = None
            for i in range(chart.nvars - 1, -1, -1):
                if exp[i]:
                    prev = list(exp)
                    prev[i] -= 1
                    out = image(tuple(prev)) * imgs_t[i]
                    break
            cache[exp] = out
            return out

        out: dict = {}
        for e, c in self.sorted_terms():
            img = image(e)
            if img is None or img.is_zero():
                continue
            for e2, c2 in img.terms.items():
                prod = c2 * c
                acc = out.get(e2)
                prod = prod if acc is None else acc + prod
                if prod.is_zero():
                    out.pop(e2, None)
                else:
                    out[e2] = prod
        return Series(tchart, order, out)

    def invert_unit(self) -> "Series":
        """1/self for series with a nonzero pure-number constant term."""
        c = self.constant_term()
        if c.is_zero():
            raise DivisionByZeroError("invert_unit: zero constant term")
        if not c.is_number():
            raise DivisionByZeroError(
                "invert_unit: constant term must be a pure number, got "
                f"{c.text()}")
        n = Series.one(self.chart, self.order) - self.scale(c.inv())
        if self.order is None and not n.is_zero():
            raise OrderError(
                "invert_unit of a non-constant exact polynomial is not "
                "polynomial; truncate first")
        out = Series.one(self.chart, self.order)
        if n.is_zero():
            return out.scale(c.inv())
        power = n
        val = n.valuation()
        k = val
        while k <= self.order:
            out = out + power
            k += val
            if k <= self.order:
                power = power * n
                if power.is_zero():
                    break
        return out.scale(c.inv())
