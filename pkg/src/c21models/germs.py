"""Map germs between weighted charts: composition and exact inversion.

A MapGerm holds one component Series per target variable, all over the same
source chart, each with zero constant term.  Inversion factors the germ as
L o (id + R) with L the weighted-linear part (terms of weighted degree equal
to the target variable's weight); L is inverted by block triangular solves
in increasing weight, and (id + R)^-1 comes from the Neumann iteration
S <- id - R o S, which gains at least one weighted order per step.
"""

from __future__ import annotations

from .errors import InputError, SingularGermError
from .scalars import S_ONE, S_ZERO, Scalar
from .series import Chart, Series, min_order
from . import linalg


class MapGerm:
    """Components: target variable name -> Series over the source chart."""

    __slots__ = ("source", "target", "components")

    def __init__(self, source: Chart, target: Chart, components: dict):
        self.source = source
        self.target = target
        comps = {}
        for name in target.names:
            s = components.get(name)
            if s is None:
                raise InputError(f"germ missing component for {name!r}")
            if s.chart != source:
                raise InputError(f"component {name!r} on wrong chart")
            if not s.constant_term().is_zero():
                raise InputError(f"component {name!r} does not fix the origin")
            comps[name] = s
        self.components = comps

    @staticmethod
    def identity(chart: Chart, order=None) -> "MapGerm":
        return MapGerm(chart, chart, {
            n: Series.var(chart, n, order) for n in chart.names})

    def order(self):
        out = None
        for s in self.components.values():
            out = min_order(out, s.order)
        return out

    def truncate(self, order) -> "MapGerm":
        return MapGerm(self.source, self.target, {
            n: s.truncate(min_order(s.order, order))
            for n, s in self.components.items()})

    def __eq__(self, other):
        return (isinstance(other, MapGerm) and self.source == other.source
                and self.target == other.target
                and self.components == other.components)

    __hash__ = None

    def __repr__(self):
        return (f"MapGerm({'+'.join(self.source.names)} -> "
                f"{'+'.join(self.target.names)})")

    def compose(self, inner: "MapGerm", cap=None) -> "MapGerm":
        """self o inner: first apply inner, then self."""
        if inner.target != self.source:
            raise InputError("germ composition chart mismatch")
        assignment = dict(inner.components)
        comps = {n: s.substitute(assignment, target_chart=inner.source,
                                 cap=cap)
                 for n, s in self.components.items()}
        return MapGerm(inner.source, self.target, comps)

    def apply(self, s: Series) -> Series:
        """Compose a series over the target chart with this germ."""
        if s.chart != self.target:
            raise InputError("germ apply chart mismatch")
        return s.substitute(dict(self.components), target_chart=self.source)

    # -- inversion ----------------------------------------------------------

    def weighted_linear_part(self) -> "MapGerm":
        chart = self.target
        comps = {}
        for i, name in enumerate(chart.names):
            w = chart.weights[i]
            s = self.components[name]
            comps[name] = Series(self.source, s.order, {
                e: c for e, c in s.terms.items()
                if self.source.wdeg(e) == w})
        return MapGerm(self.source, self.target, comps)

    def invert(self, order=None) -> "MapGerm":
        """Two-sided inverse through the germ's exact order.

        Requires source chart == target chart (same names and weights).
        """
        if self.source != self.target:
            raise InputError("can only invert germs of a chart into itself")
        chart = self.source
        order = min_order(order, self.order())
        phi = self.truncate(order)
        linv = _invert_weighted_linear(phi.weighted_linear_part(), order)
        # R = L^-1 o phi - id
        r = linv.compose(phi)
        ident = MapGerm.identity(chart, order)
        r = MapGerm(chart, chart, {
            n: r.components[n] - ident.components[n] for n in chart.names})
        # S = id - R o S, iterated; R gains at least one weighted order per
        # pass, and seeding S at truncation 1 keeps early passes cheap (the
        # order bookkeeping of compose() raises the truncation by itself).
        if order is None:
            s = ident
            for _ in range(64):
                rs = r.compose(s)
                new = MapGerm(chart, chart, {
                    n: ident.components[n] - rs.components[n]
                    for n in chart.names})
                if new == s:
                    break
                s = new
            else:
                raise InputError(
                    "exact-polynomial germ has no polynomial inverse; "
                    "truncate first")
        else:
            s = ident.truncate(max(chart.weights))
            for _ in range(order + 3):
                rs = r.compose(s, cap=order)
                new = MapGerm(chart, chart, {
                    n: ident.components[n] - rs.components[n]
                    for n in chart.names})
                if new == s:
                    break
                s = new
        return s.compose(linv)


def _invert_weighted_linear(lin: MapGerm, order) -> MapGerm:
    """Invert a weighted-homogeneous germ by increasing weight level."""
    chart = lin.source
    by_weight: dict = {}
    for i, n in enumerate(chart.names):
        by_weight.setdefault(chart.weights[i], []).append((i, n))
    inv_comps: dict = {}
    for w in sorted(by_weight):
        block = by_weight[w]
        k = len(block)
        # matrix of the weight-w variables among themselves
        mat = []
        for i, n in block:
            s = lin.components[n]
            row = []
            for j, m in block:
                row.append(s.terms.get(chart.unit_exp(j), S_ZERO))
            mat.append(row)
        try:
            minv = linalg.matrix_inverse(mat)
        except linalg.SingularMatrixError:
            raise SingularGermError(
                f"weighted-linear part singular at weight {w}")
        # lower-weight tail P_i of each component, mapped through the
        # already-inverted lower-weight variables
        tails = []
        for i, n in block:
            s = lin.components[n]
            tail = Series(chart, s.order, {
                e: c for e, c in s.terms.items()
                if e != chart.unit_exp(i)
                and all(e[j] == 0 for j, _ in block)})
            if not tail.is_zero():
                tail = tail.substitute(inv_comps, target_chart=chart)
            else:
                tail = Series.zero(chart, order)
            tails.append(tail)
        for row, (i, n) in zip(minv, block):
            acc = Series.zero(chart, order)
            for c, ((j, m), tail) in zip(row, zip(block, tails)):
                if c.is_zero():
                    continue
                term = Series.var(chart, m, order) - tail.truncate(
                    min_order(tail.order, order))
                acc = acc + term.scale(c)
            inv_comps[n] = acc
    return MapGerm(chart, chart, inv_comps)
