"""Graphed CR hypersurfaces u = F(z, zeta, zbar, zetabar, v): models and checks.

The flat model graph is the rational expression
(z zbar + zbar^2 zeta / 2 + z^2 zetabar / 2) / (1 - zeta zetabar) expanded
through the requested weighted order; the two branch models come from the
stored tables (curated by default, verbatim on request).  Reality and
normal-form condition checks return witness lists instead of raising, so a
violating table surfaces as report data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError, NotNormalFormError, OrderError
from .scalars import S_HALF, S_ZERO, Scalar, param
from .series import Series, cr_chart, order_leq
from . import tables


@dataclass
class HypersurfaceGraph:
    """A truncated graph u = F with provenance label."""

    F: Series
    label: str = ""

    def __post_init__(self):
        if self.F.chart != cr_chart():
            raise InputError("hypersurface graph must live on the CR chart")
        if not self.F.constant_term().is_zero():
            raise InputError("hypersurface graph must pass through the origin")

    @property
    def order(self):
        return self.F.order

    def coeff(self, h, i, j, k, l) -> Scalar:
        return self.F.coeff((h, i, j, k, l))

    def __eq__(self, other):
        return isinstance(other, HypersurfaceGraph) and self.F == other.F


# invariant coefficient slots, by (h,i,j,k,l)
INVARIANT_SLOTS = (
    (3, 0, 0, 2, 0),
    (5, 0, 0, 1, 0),
    (3, 0, 2, 1, 0),
    (4, 0, 3, 0, 0),
    (4, 0, 0, 2, 0),
    (6, 0, 0, 1, 0),
)


@dataclass
class InvariantProfile:
    values: dict            # slot tuple -> Scalar
    missing: tuple = ()     # slots beyond the graph's exact order

    def __getitem__(self, slot):
        if slot in self.missing:
            raise OrderError(f"invariant {slot} not determined at this order")
        return self.values[slot]


FLAT = "FLAT"
BRANCH_F30020 = "BRANCH_F30020"
BRANCH_THETA = "BRANCH_THETA"


@dataclass
class BranchLabel:
    kind: str
    reason: str = ""

    def __eq__(self, other):
        if isinstance(other, str):
            return self.kind == other
        return isinstance(other, BranchLabel) and self.kind == other.kind


def unknown_branch(reason: str) -> BranchLabel:
    return BranchLabel("UNKNOWN", reason)


# ---------------------------------------------------------------------------
# models


def gm_flat_model(order: int) -> HypersurfaceGraph:
    """The flat homogeneous model, expanded through `order`."""
    if order < 2:
        raise InputError("flat model needs order >= 2")
    C = cr_chart()
    z = Series.var(C, "z", order)
    zb = Series.var(C, "zbar", order)
    ze = Series.var(C, "zeta", order)
    zeb = Series.var(C, "zetabar", order)
    num = z * zb + (zb * zb * ze).scale(S_HALF) + (z * z * zeb).scale(S_HALF)
    den = Series.one(C, order) - ze * zeb
    F = (num * den.invert_unit()).truncate(order)
    return HypersurfaceGraph(F, label="gm_flat")


def thm31_model(order: int) -> HypersurfaceGraph:
    """Branch model with F[3,0,0,2,0] normalised to 1; table data to order 8."""
    F = tables.graph_series("thm31", order)
    return HypersurfaceGraph(F, label="thm31")


def thm33_model(order: int, theta=None, curated: bool = True) -> HypersurfaceGraph:
    """Theta-family branch model; table data to order 10.

    theta stays formal by default; pass a rational/Scalar value to bind it.
    curated=False loads the table exactly as printed (reality-violating
    monomials included) for audit purposes.
    """
    F = tables.graph_series("thm33", order, curated=curated)
    if theta is not None:
        F = F.substitute_params({"theta": theta})
    label = "thm33" if curated else "thm33_verbatim"
    return HypersurfaceGraph(F, label=label)


# ---------------------------------------------------------------------------
# checks


def reality_check(g: HypersurfaceGraph) -> list:
    """Monomials violating conj(F[h,i,j,k,l]) = F[j,k,h,i,l].

    Each violation is (exp, coeff, conj_exp, conj_coeff); empty list = real.
    """
    violations = []
    F = g.F
    seen = set()
    for exp, c in F.sorted_terms():
        if exp in seen:
            continue
        h, i, j, k, l = exp
        cexp = (j, k, h, i, l)
        seen.add(exp)
        seen.add(cexp)
        cc = F.terms.get(cexp, S_ZERO)
        if cc != c.conj():
            violations.append((exp, c, cexp, cc))
    return violations


def _vanishing_families(order):
    """Multi-index predicate sets for the normal-form conditions."""
    # families (j,k) in {(0,0),(1,0),(2,0)} and their conjugate families,
    # with the two stated exceptional values
    def in_families(exp):
        h, i, j, k, l = exp
        if (j, k) in ((0, 0), (1, 0), (2, 0)):
            return True
        if (h, i) in ((0, 0), (1, 0), (2, 0)):
            return True
        return False

    sporadic = {(3, 0, 0, 1), (4, 0, 0, 1), (3, 0, 1, 1), (4, 0, 1, 1),
                (3, 0, 3, 0)}
    sporadic |= {(j, k, h, i) for (h, i, j, k) in sporadic}
    return in_families, sporadic


EXCEPTIONAL = {
    (1, 0, 1, 0, 0): "1",        # coefficient of z zbar
    (0, 1, 2, 0, 0): "1/2",      # coefficient of zeta zbar^2
    (2, 0, 0, 1, 0): "1/2",      # conjugate exceptional slot
}


def normal_form_check(g: HypersurfaceGraph) -> list:
    """Violations of the normal-form conditions through the graph's order.

    Returns a list of (exp, found, expected) triples.
    """
    from .scalars import as_scalar

    F = g.F
    in_families, sporadic = _vanishing_families(F.order)
    failures = []
    # exceptional slots must carry their stated constant values
    for exp, want in EXCEPTIONAL.items():
        if order_leq(F.chart.wdeg(exp), F.order):
            got = F.terms.get(exp, S_ZERO)
            if got != as_scalar(want):
                failures.append((exp, got, as_scalar(want)))
    # vanishing families, including all v powers
    for exp, c in F.sorted_terms():
        if exp in EXCEPTIONAL:
            continue
        h, i, j, k, l = exp
        bad = False
        if in_families(exp):
            bad = True
        elif (h, i, j, k) in sporadic:
            bad = True
        if bad and not c.is_zero():
            failures.append((exp, c, S_ZERO))
    # exceptional slots must also not have v-dependence
    for (h, i, j, k, l0) in EXCEPTIONAL:
        for exp, c in F.terms.items():
            if exp[:4] == (h, i, j, k) and exp[4] > 0 and not c.is_zero():
                failures.append((exp, c, S_ZERO))
    return failures


def extract_invariants(g: HypersurfaceGraph) -> InvariantProfile:
    values = {}
    missing = []
    for slot in INVARIANT_SLOTS:
        w = g.F.chart.wdeg(slot)
        if order_leq(w, g.F.order):
            values[slot] = g.F.terms.get(slot, S_ZERO)
        else:
            missing.append(slot)
    return InvariantProfile(values, tuple(missing))


def _decide_zero(c: Scalar):
    """(True, None)=zero, (False, None)=provably nonzero, (None, c)=unknown."""
    if c.is_zero():
        return True, None
    if c.is_number():
        return False, None
    # a polynomial with a nonzero constant term and no other terms is a unit;
    # anything parameter-dependent is neither identically zero nor provably
    # nonzero for all parameter values
    return None, c


def classify_branch(g: HypersurfaceGraph, *, check_normal_form: bool = True) -> BranchLabel:
    """Branch of the invariant tree for a graph in normal form."""
    if g.F.order is not None and g.F.order < 6:
        raise OrderError("classification needs order >= 6")
    if check_normal_form:
        failures = normal_form_check(g)
        if failures:
            raise NotNormalFormError(
                f"graph is not in normal form; first failure at "
                f"{failures[0][0]}")
    prof = extract_invariants(g)
    f30020 = prof[(3, 0, 0, 2, 0)]
    zero, witness = _decide_zero(f30020)
    if zero is None:
        return unknown_branch(
            f"F[3,0,0,2,0] = {witness.text()} is parameter-dependent")
    if zero is False:
        return BranchLabel(BRANCH_F30020)
    slot = (5, 0, 0, 1, 0)
    if slot in prof.missing:
        return unknown_branch("order too low to read F[5,0,0,1,0]")
    f50010 = prof[slot]
    zero, witness = _decide_zero(f50010)
    if zero is None:
        return unknown_branch(
            f"F[5,0,0,1,0] = {witness.text()} is parameter-dependent")
    if zero is False:
        return BranchLabel(BRANCH_THETA)
    return BranchLabel(FLAT)


def perturbation(g: HypersurfaceGraph) -> Series:
    """G = F - m, the deviation from the flat model at the graph's order."""
    m = gm_flat_model(g.F.order if g.F.order is not None else 16).F
    return g.F - m
