"""Affinely homogeneous parabolic surfaces u = F(x, y): the full branch tree.

Graphs live on the real chart (x, y); vector fields P d/dx + Q d/dy + R d/du
on (x, y, u) are exact polynomials, so brackets and tangency need no
truncation bookkeeping.  Prenormalisation pins the shape

    u = x^2/2 + x^2 y / 2 + (F31/6) x^3 y + x^2 y^2 / 2 + O(5)

by staged affine maps (kill linear part, diagonalise the degenerate
Hessian, two scalings, one coupled shear solve); the branch invariants are
then read off:  F31 != 0 is one branch, else F50 separates the flat model
from the one-parameter family whose absolute invariant is F70 after the
normalisations F50 := 1, F60 := 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from gmpy2 import mpq

from .errors import (ComputationError, InputError, RootExtractionError,
                     SingularGermError)
from .germs import MapGerm
from .linalg import _mpq_nth_root, rational_roots
from .scalars import (PP_ONE, ParamPoly, S_ONE, S_ZERO, Scalar, as_scalar,
                      register_param)
from .series import Series, affine_chart, affine_space_chart, min_order
from . import tables

BRANCH3 = "BRANCH3"
FLAT = "FLAT"
THETA = "THETA"


@dataclass
class AffineGraph:
    F: Series
    label: str = ""

    def __post_init__(self):
        if self.F.chart != affine_chart():
            raise InputError("affine graph must live on the (x, y) chart")
        if not self.F.constant_term().is_zero():
            raise InputError("affine graph must pass through the origin")

    @property
    def order(self):
        return self.F.order

    def coeff(self, j, k) -> Scalar:
        return self.F.coeff((j, k))


@dataclass
class AffineField:
    P: Series
    Q: Series
    R: Series

    def components(self):
        return (self.P, self.Q, self.R)

    def scale(self, c) -> "AffineField":
        c = as_scalar(c)
        return AffineField(self.P.scale(c), self.Q.scale(c), self.R.scale(c))

    def __add__(self, other):
        return AffineField(self.P + other.P, self.Q + other.Q,
                           self.R + other.R)


@dataclass
class AffineMap:
    """x' = linear . (x, y, u) + translation."""

    linear: list
    translation: list = field(default_factory=lambda: [S_ZERO] * 3)

    def __post_init__(self):
        self.linear = [[as_scalar(c) for c in row] for row in self.linear]
        self.translation = [as_scalar(c) for c in self.translation]

    @staticmethod
    def identity() -> "AffineMap":
        return AffineMap([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def compose(self, inner: "AffineMap") -> "AffineMap":
        lin = [[sum((self.linear[i][k] * inner.linear[k][j]
                     for k in range(3)), S_ZERO) for j in range(3)]
               for i in range(3)]
        tr = [sum((self.linear[i][k] * inner.translation[k]
                   for k in range(3)), S_ZERO) + self.translation[i]
              for i in range(3)]
        return AffineMap(lin, tr)


@dataclass
class AffineBranch:
    kind: str
    theta: Scalar = None
    reason: str = ""

    def __eq__(self, other):
        if isinstance(other, str):
            return self.kind == other
        return (isinstance(other, AffineBranch) and self.kind == other.kind
                and (self.theta == other.theta
                     if self.kind == THETA else True))


# ---------------------------------------------------------------------------
# models


def affine_model(label: str, order: int) -> AffineGraph:
    C = affine_chart()
    if label == "flat":
        x = Series.var(C, "x", order)
        y = Series.var(C, "y", order)
        inv = (Series.one(C, order) - y).invert_unit()
        F = (x * x).scale(as_scalar("1/2")) * inv
        return AffineGraph(F, label="affine_flat")
    pairs = tables.affine_graph_terms(label, order)
    return AffineGraph(Series.from_terms(C, order, pairs),
                       label=f"affine_{label}")


def model_fields(which: str):
    raw = tables.affine_fields_raw(which)
    C = affine_space_chart()
    out = []
    for f in raw:
        comps = {}
        for name in "PQR":
            pairs = [(tuple(r["exp"]), r["coeff"]) for r in f[name]]
            comps[name] = Series.from_terms(C, None, pairs)
        out.append(AffineField(comps["P"], comps["Q"], comps["R"]))
    return out


# ---------------------------------------------------------------------------
# checks


def parabolic_noncylindrical_check(g: AffineGraph) -> dict:
    F = g.F
    if F.order is not None and F.order < 3:
        return {"order_sufficient": False}
    Fx = F.partial("x")
    Fy = F.partial("y")
    Fxx = Fx.partial("x")
    Fxy = Fx.partial("y")
    Fyy = Fy.partial("y")
    fxx0 = Fxx.constant_term()
    det = Fxx * Fyy - Fxy * Fxy
    noncyl = (Fxx.partial("y") * Fxx - Fxx.partial("x") * Fxy)
    return {
        "order_sufficient": True,
        "fxx_nonzero": not fxx0.is_zero(),
        "hessian_det_vanishes": det.is_zero(),
        "hessian_det_order": det.order,
        "hessian_witness": None if det.is_zero() else det.sorted_terms()[0],
        "noncylindrical": not noncyl.constant_term().is_zero(),
        "parabolic_noncylindrical": (not fxx0.is_zero()) and det.is_zero()
        and not noncyl.constant_term().is_zero(),
    }


def affine_tangency_residual(X: AffineField, g: AffineGraph) -> Series:
    from .solver import affine_tangency_series

    return affine_tangency_series(X.P, X.Q, X.R, g.F)


def affine_structure(basis: list):
    """StructureConstants for polynomial affine fields (exact)."""
    from .symmetries import LieBasis, StructureConstants, expand_in_basis

    class _Wrap:
        def __init__(self, f):
            self.A, self.B, self.C = f.components()

        def components(self):
            return (self.A, self.B, self.C)

    wrapped = LieBasis([_Wrap(f) for f in basis])
    n = len(basis)
    c = [[None] * n for _ in range(n)]
    residuals = []
    for i in range(n):
        c[i][i] = [S_ZERO] * n
    for i in range(n):
        for j in range(i + 1, n):
            br = _Wrap(affine_bracket(basis[i], basis[j]))
            coeffs, leftover = expand_in_basis(br, wrapped)
            c[i][j] = coeffs
            c[j][i] = [-x for x in coeffs]
            for item in leftover:
                residuals.append((i, j) + item)
    return StructureConstants(c, n, residuals)


def affine_bracket(X: AffineField, Y: AffineField) -> AffineField:
    def apply(f: AffineField, s: Series) -> Series:
        return (f.P * s.partial("x") + f.Q * s.partial("y")
                + f.R * s.partial("u"))

    comps = []
    for sx, sy in zip(X.components(), Y.components()):
        comps.append(apply(X, sy) - apply(Y, sx))
    return AffineField(*comps)


# ---------------------------------------------------------------------------
# pushforward and prenormalisation


def affine_pushforward(g: AffineGraph, m: AffineMap) -> AffineGraph:
    """Regraph the image of the surface under the affine map."""
    if any(not t.is_zero() for t in m.translation):
        raise InputError("affine pushforward requires a map fixing the "
                         "origin (translation must vanish)")
    C = affine_chart()
    F = g.F
    coords = [Series.var(C, "x", F.order), Series.var(C, "y", F.order), F]
    images = []
    for i in range(3):
        acc = Series.zero(C, F.order)
        for k in range(3):
            cf = m.linear[i][k]
            if not cf.is_zero():
                acc = acc + coords[k].scale(cf)
        images.append(acc)
    germ = MapGerm(C, C, {"x": images[0], "y": images[1]})
    try:
        inv = germ.invert()
    except SingularGermError:
        raise ComputationError(
            "image surface is not graphable over (x, y): tangent plane not "
            "transverse to the u axis")
    Fp = images[2].substitute(inv.components, target_chart=C)
    return AffineGraph(Fp, label=g.label + "|aff")


SHAPE_PINS = {
    (1, 0): S_ZERO, (0, 1): S_ZERO, (1, 1): S_ZERO, (0, 2): S_ZERO,
    (2, 0): as_scalar("1/2"),
    (3, 0): S_ZERO, (2, 1): as_scalar("1/2"), (1, 2): S_ZERO,
    (0, 3): S_ZERO,
    (4, 0): S_ZERO, (2, 2): as_scalar("1/2"), (1, 3): S_ZERO,
    (0, 4): S_ZERO,
}


def _shape_failures(F: Series):
    out = []
    for exp, want in SHAPE_PINS.items():
        if F.order is not None and sum(exp) > F.order:
            continue
        got = F.terms.get(exp, S_ZERO)
        if got != want:
            out.append((exp, got, want))
    return out


def affine_prenormalize(g: AffineGraph):
    """(composite AffineMap, normalised graph); raises on obstruction."""
    total = AffineMap.identity()
    cur = g

    def apply(m: AffineMap, graph):
        return m, affine_pushforward(graph, m)

    # stage 1: tangent plane to u = 0
    fx = cur.F.terms.get((1, 0), S_ZERO)
    fy = cur.F.terms.get((0, 1), S_ZERO)
    if not (fx.is_zero() and fy.is_zero()):
        m = AffineMap([[1, 0, 0], [0, 1, 0], [-fx, -fy, 1]])
        m, cur = apply(m, cur)
        total = m.compose(total)

    # stage 2: diagonalise the degenerate quadratic part
    a2 = cur.F.terms.get((2, 0), S_ZERO)
    b2 = cur.F.terms.get((1, 1), S_ZERO)
    c2 = cur.F.terms.get((0, 2), S_ZERO)
    if a2.is_zero() and not c2.is_zero():
        m = AffineMap([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
        m, cur = apply(m, cur)
        total = m.compose(total)
        a2, c2 = c2, a2
        b2 = cur.F.terms.get((1, 1), S_ZERO)
    if a2.is_zero():
        raise ComputationError(
            "prenormalisation obstruction: vanishing F_xx with "
            + ("nonzero cross term (not parabolic)" if not b2.is_zero()
               else "zero quadratic part"))
    if not b2.is_zero():
        m = AffineMap([[1, b2 / (a2 + a2), 0], [0, 1, 0], [0, 0, 1]])
        m, cur = apply(m, cur)
        total = m.compose(total)

    # stage 3: F20 := 1/2 by scaling u
    a2 = cur.F.terms.get((2, 0), S_ZERO)
    m = AffineMap([[1, 0, 0], [0, 1, 0], [0, 0, (as_scalar("1/2") / a2)]])
    m, cur = apply(m, cur)
    total = m.compose(total)

    # stage 4: F21 := 1/2 by scaling y (noncylindricality)
    c21 = cur.F.terms.get((2, 1), S_ZERO)
    if c21.is_zero():
        raise ComputationError(
            "prenormalisation obstruction: F_xxy vanishes at the origin "
            "(cylindrical surface)")
    m = AffineMap([[1, 0, 0], [0, (c21 + c21), 0], [0, 0, 1]])
    m, cur = apply(m, cur)
    total = m.compose(total)

    # stage 5: kill (3,0) and (4,0) with the shears y -> y + t x + r u
    if not (cur.F.terms.get((3, 0), S_ZERO).is_zero()
            and cur.F.terms.get((4, 0), S_ZERO).is_zero()):
        tval, rval = _solve_shear_stage(cur)
        m = AffineMap([[1, 0, 0], [tval, 1, rval], [0, 0, 1]])
        m, cur = apply(m, cur)
        total = m.compose(total)

    failures = _shape_failures(cur.F)
    if failures:
        raise ComputationError(
            f"prenormalisation failed to reach the target shape: {failures}"
            " (input not parabolic noncylindrical?)")
    return total, AffineGraph(cur.F, label=g.label + "|prenorm")


def _coeff_in(s: Scalar, name: str) -> dict:
    """{power of name: Scalar} decomposition of a polynomial Scalar."""
    if not s.is_poly():
        raise ComputationError("expected polynomial dependence on the "
                               "shear parameters")
    idx = register_param(name)
    buckets: dict = {}
    for mono, g in s.num.terms.items():
        md = dict(mono)
        e = md.pop(idx, 0)
        rest = tuple(sorted(md.items()))
        b = buckets.setdefault(e, {})
        b[rest] = b[rest] + g if rest in b else g
    return {e: Scalar._poly(ParamPoly(
        {m: c for m, c in d.items() if not c.is_zero()}))
        for e, d in buckets.items()}


def _solve_linear_in(eq: Scalar, name: str):
    """Expression for `name` from an equation linear in it, or None.

    Requires a numeric pivot, so the result stays polynomial in any other
    parameters of the equation.
    """
    parts = _coeff_in(eq, name)
    deg = max((e for e, c in parts.items() if not c.is_zero()), default=0)
    if deg != 1:
        return None
    piv = parts.get(1, S_ZERO)
    if not piv.is_number() or piv.is_zero():
        return None
    return -(parts.get(0, S_ZERO) / piv)


def _univariate(s: Scalar, name: str):
    """Coefficient list of a polynomial Scalar over a single parameter."""
    idx = register_param(name)
    out = [mpq(0)]
    for mono, g in s.num.terms.items():
        md = dict(mono)
        e = md.pop(idx, 0)
        if md:
            raise ComputationError(
                "shear solve: equation is not univariate after elimination")
        if not g.is_real():
            raise ComputationError("complex coefficient in shear solve")
        while len(out) <= e:
            out.append(mpq(0))
        out[e] += g.re
    return out


def _solve_shear_stage(cur: AffineGraph):
    """(t, r) with y -> y + t x + r u killing (3,0) and (4,0).

    Both equations are linear with numeric pivots (3 F21 x^3 from the
    x-shear of the x^2 y term, and F20^2-type contributions from the
    u-shear), so the solution is always rational.
    """
    register_param("shear_t")
    register_param("shear_r")
    tform = Scalar.param("shear_t")
    rform = Scalar.param("shear_r")
    m = AffineMap([[1, 0, 0], [tform, 1, rform], [0, 0, 1]])
    pushed = affine_pushforward(cur, m)
    eq30 = pushed.F.terms.get((3, 0), S_ZERO)
    eq40 = pushed.F.terms.get((4, 0), S_ZERO)
    t_expr = _solve_linear_in(eq30, "shear_t")
    if t_expr is None:
        raise ComputationError("shear solve: (3,0) is not linear in the "
                               "y-shear (input not in shape)")
    eq40t = eq40.substitute({"shear_t": t_expr})
    r_expr = _solve_linear_in(eq40t, "shear_r")
    if r_expr is None:
        raise ComputationError("shear solve: (4,0) is not linear in the "
                               "u-shear after eliminating the y-shear")
    rval = r_expr
    tval = t_expr.substitute({"shear_r": rval})
    mm = AffineMap([[1, 0, 0], [tval, 1, rval], [0, 0, 1]])
    test = affine_pushforward(cur, mm)
    if not (test.F.terms.get((3, 0), S_ZERO).is_zero()
            and test.F.terms.get((4, 0), S_ZERO).is_zero()):
        raise ComputationError("shear solve: staged solution failed to "
                               "verify")
    return (tval, rval)


# ---------------------------------------------------------------------------
# classification


def _zero_status(c: Scalar):
    if c.is_zero():
        return True
    if c.is_number():
        return False
    return None


def affine_classify(g: AffineGraph, prenormalized: bool = False):
    """Branch of the affine tree; returns AffineBranch (THETA carries theta)."""
    if prenormalized:
        cur = g
    else:
        _, cur = affine_prenormalize(g)
    c31 = cur.F.terms.get((3, 1), S_ZERO)
    status = _zero_status(c31)
    if status is None:
        return AffineBranch("UNKNOWN",
                            reason=f"F[3,1] = {c31.text()} undecidable")
    if status is False:
        return AffineBranch(BRANCH3)
    if cur.F.order is not None and cur.F.order < 5:
        return AffineBranch("UNKNOWN", reason="order too low for F[5,0]")
    c50 = cur.F.terms.get((5, 0), S_ZERO)
    status = _zero_status(c50)
    if status is None:
        return AffineBranch("UNKNOWN",
                            reason=f"F[5,0] = {c50.text()} undecidable")
    if status is True:
        return AffineBranch(FLAT)
    if cur.F.order is not None and cur.F.order < 7:
        return AffineBranch("UNKNOWN", reason="order too low for theta")
    cur = _kill_60(cur)
    theta = _theta_from_normalized(cur)
    return AffineBranch(THETA, theta=theta)


def _kill_60(cur: AffineGraph) -> AffineGraph:
    """Zero the (6,0) slot with the residual shear family, refixing the
    shape: x -> x + s u, y -> y + t x + r u, solved triangularly
    (t linear from (3,0), r linear from (4,0), s by rational roots
    from (6,0))."""
    if cur.F.terms.get((6, 0), S_ZERO).is_zero():
        return cur
    for name in ("sh_s", "sh_t", "sh_r"):
        register_param(name)
    sform, tform, rform = (Scalar.param(n) for n in ("sh_s", "sh_t", "sh_r"))
    m = AffineMap([[1, 0, sform], [tform, 1, rform], [0, 0, 1]])
    pushed = affine_pushforward(cur, m)
    eq30 = pushed.F.terms.get((3, 0), S_ZERO)
    eq40 = pushed.F.terms.get((4, 0), S_ZERO)
    eq60 = pushed.F.terms.get((6, 0), S_ZERO)
    t_expr = _solve_linear_in(eq30, "sh_t")
    if t_expr is None:
        raise ComputationError("(6,0) stage: (3,0) not linear in the y-shear")
    eq40 = eq40.substitute({"sh_t": t_expr})
    r_expr = _solve_linear_in(eq40, "sh_r")
    if r_expr is None:
        raise ComputationError("(6,0) stage: (4,0) not linear in the u-shear")
    eq60 = eq60.substitute({"sh_t": t_expr}).substitute({"sh_r": r_expr})
    lin = _solve_linear_in(eq60, "sh_s")
    if lin is not None and lin.is_number():
        s_candidates = [lin.as_gauss().re]
    else:
        s_candidates = rational_roots(_univariate(eq60, "sh_s"))
    for s_root in s_candidates:
        sval = as_scalar(s_root)
        rval = r_expr.substitute({"sh_s": sval})
        tval = t_expr.substitute({"sh_s": sval, "sh_r": rval})
        mm = AffineMap([[1, 0, sval], [tval, 1, rval], [0, 0, 1]])
        test = affine_pushforward(cur, mm)
        if all(test.F.terms.get(t, S_ZERO).is_zero()
               for t in ((3, 0), (4, 0), (6, 0))) \
                and not _shape_failures(test.F):
            return AffineGraph(test.F, label=cur.label + "|60")
    raise ComputationError("could not zero the (6,0) slot exactly")


def _theta_from_normalized(cur: AffineGraph) -> Scalar:
    """theta = F70 after the scaling that makes F50 = 1.

    The remaining scaling acts by F[j,k] -> s^(j-2) F[j,k] on the shaped
    graph, so s^3 * 120 c50 = 1 and theta = 5040 * c70 * s^5; when 120 c50
    is not an exact cube the invariant cube theta^3 is still rational and
    its exact cube root is extracted from the ratio.
    """
    c50 = cur.F.terms.get((5, 0), S_ZERO) * as_scalar(120)
    c70 = cur.F.terms.get((7, 0), S_ZERO) * as_scalar(5040)
    if c50.is_one():
        return c70
    if not c50.is_number():
        # parameter-dependent: only the cube-free normalised case is exact
        raise ComputationError(
            f"cannot extract theta from parameter-dependent F50 "
            f"{c50.text()}")
    val = c50.as_gauss()
    root = _mpq_nth_root(val.re, 3)
    if root is not None:
        s3 = as_scalar(mpq(1) / root)  # s = cbrt(1/F50)
        return c70 * s3 ** 5
    ratio = (c70 ** 3) / (c50 ** 5)
    r = _mpq_nth_root(ratio.as_gauss().re, 3)
    if r is None:
        raise RootExtractionError(
            f"theta^3 = {ratio.text()} has no exact rational cube root")
    return as_scalar(r)


# ---------------------------------------------------------------------------
# parametrised surfaces


def parametrized_to_graph(components, order: int) -> AffineGraph:
    """Regraph a locally parametrised surface at its base point.

    components: three Series over a two-variable parameter chart, already
    expanded around the base point (their constant terms are the base
    point's coordinates).
    """
    if len(components) != 3:
        raise InputError("a parametrised surface needs three components")
    pchart = components[0].chart
    if pchart.nvars != 2:
        raise InputError("parameter chart must have two variables")
    shifted = []
    for comp in components:
        c0 = comp.constant_term()
        shifted.append(comp - Series.const(pchart, c0, comp.order))
    # linear part rows: d components / d params
    lin = []
    for comp in shifted:
        row = [comp.terms.get(pchart.unit_exp(i), S_ZERO) for i in range(2)]
        lin.append(row)
    # choose the graph axis: complementary 2x2 minor with largest |det|,
    # ties broken by the lower axis index
    candidates = []
    for axis in range(3):
        rows = [lin[i] for i in range(3) if i != axis]
        det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
        if det.is_zero():
            continue
        size = abs(det.as_gauss().re) if det.is_number() else mpq(0)
        candidates.append((size, -axis, axis))
    if not candidates:
        raise ComputationError(
            "parametrised surface is not immersed or has no transverse "
            "axis at the base point")
    candidates.sort(reverse=True)
    axis = candidates[0][2]
    plane = [shifted[i] for i in range(3) if i != axis]
    C = affine_chart()
    germ = MapGerm(pchart, pchart, {
        pchart.names[0]: plane[0], pchart.names[1]: plane[1]})
    inv = germ.invert()
    height = shifted[axis].substitute(inv.components, target_chart=pchart)
    # rename parameters chart to (x, y) and remove the tangent tilt
    F = Series(C, height.order, dict(height.terms))
    fx = F.terms.get((1, 0), S_ZERO)
    fy = F.terms.get((0, 1), S_ZERO)
    x = Series.var(C, "x", F.order)
    y = Series.var(C, "y", F.order)
    F = F - x.scale(fx) - y.scale(fy)
    return AffineGraph(F, label=f"lifted(axis={axis})")
