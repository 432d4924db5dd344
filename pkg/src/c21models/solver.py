"""Re-derivation of the model tables from their symmetry families.

Unknown graph coefficients are interned as formal real parameters (one or
two per multi-index after the reality identification), the normal-form
conditions and branch pins are built into the template, and the tangency
residual is demanded to vanish identically in the five family constants
(and in the undetermined block forms A004, B103).  Collecting the residual
coefficients by series monomial and family-parameter factor produces real
linear systems over Q[theta, F50500] that are reduced incrementally.

Quadratic unknown-by-unknown products coming from powers of w = F + i v
are avoided by solving in weighted batches with eager substitution: inside
a batch every still-unknown coefficient has weight high enough that two of
them cannot meet below the batch's top extraction order (checked at
runtime).

Equation validity bookkeeping: the stored field blocks end at some weight,
and the first unknown block of each component only contributes strictly
above the top extraction order, except through C^0 * dF/dv, which only
pollutes rows proportional to the constant e; those rows are therefore
dropped above e_max.  The declared component orders are lifted by one to
let the series layer carry the top-order rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ComputationError
from .linalg import LinearReduction
from .scalars import (MONO_ONE, PP_ONE, ParamPoly, S_I, S_ONE, S_ZERO,
                      Scalar, as_scalar, param_name, register_param)
from .series import Series, cr_chart, affine_chart, min_order
from .symmetries import HoloVectorField, tangency_residual
from .hypersurfaces import HypersurfaceGraph, EXCEPTIONAL, _vanishing_families
from . import tables

# parameters that stay in the coefficient ring of the linear systems
RING_PARAMS = ("theta", "F50500")
# parameters the residual must vanish identically in
CONTEXT_PARAMS = ("a", "b", "c", "d", "e",
                  "A004_re", "A004_im", "B103_re", "B103_im")


def _lift(series: Series, order) -> Series:
    return Series._raw(series.chart, order, series.terms)


# ---------------------------------------------------------------------------
# template construction


@dataclass
class Template:
    series: Series                    # F with unknown-parameter coefficients
    unknowns: dict                    # param index -> (slot, part)
    slots: dict                       # slot -> Scalar (current value)

    def substitute(self, solutions: dict):
        if not solutions:
            return
        bindings = dict(solutions)
        self.series = self.series.substitute_params(bindings)
        for slot, val in list(self.slots.items()):
            self.slots[slot] = val.substitute(bindings)


def conj_slot(slot: tuple) -> tuple:
    h, i, j, k, l = slot
    return (j, k, h, i, l)


def build_cr_template(order: int, value_pins: dict, im_zero_pins: set,
                      seeds: dict) -> Template:
    """Normal-form template m + G through weighted order `order`.

    value_pins: slot -> scalar-like pinned value of F (not of G).
    im_zero_pins: slots whose coefficient is pinned real.
    seeds: slot -> Scalar expression for F[slot] (e.g. the free invariant).
    """
    from .hypersurfaces import gm_flat_model

    C = cr_chart()
    in_families, sporadic = _vanishing_families(order)
    m = gm_flat_model(order).F
    terms = dict(m.terms)
    unknowns: dict = {}
    slots: dict = {}

    def set_slot(slot, value):
        slots[slot] = value
        mval = m.terms.get(slot, S_ZERO)
        g = value - mval
        if g.is_zero():
            terms.pop(slot, None)
        else:
            terms[slot] = value

    exps = _all_exps(C, order)
    for exp in exps:
        w = C.wdeg(exp)
        if w < 2:
            # weight-0/1 coefficients all vanish in normal form
            continue
        h, i, j, k, l = exp
        if exp in EXCEPTIONAL:
            continue  # pinned by the normal form itself (kept from m)
        if in_families(exp) or (h, i, j, k) in sporadic or \
                conj_slot(exp)[:4] in sporadic:
            continue  # normal-form zero; m has nothing here either
        cexp = conj_slot(exp)
        if cexp < exp:
            continue  # handled with its conjugate partner
        pin = value_pins.get(exp)
        if pin is None and cexp in value_pins:
            pin = as_scalar(value_pins[cexp]).conj()
        if pin is not None:
            pin = as_scalar(pin)
            set_slot(exp, pin)
            if cexp != exp:
                set_slot(cexp, pin.conj())
            continue
        seed = seeds.get(exp)
        if seed is None and cexp in seeds:
            seed = as_scalar(seeds[cexp]).conj()
        if seed is not None:
            val = as_scalar(seed)
            set_slot(exp, val)
            if cexp != exp:
                set_slot(cexp, val.conj())
            continue
        tag = "_".join(str(x) for x in exp)
        if cexp == exp:
            idx = register_param(f"u_{tag}_re")
            unknowns[idx] = (exp, "re")
            set_slot(exp, Scalar.param(f"u_{tag}_re"))
        else:
            re = Scalar.param(f"u_{tag}_re")
            idx_re = register_param(f"u_{tag}_re")
            unknowns[idx_re] = (exp, "re")
            if exp in im_zero_pins or cexp in im_zero_pins:
                val = re
            else:
                idx_im = register_param(f"u_{tag}_im")
                unknowns[idx_im] = (exp, "im")
                val = re + S_I * Scalar.param(f"u_{tag}_im")
            set_slot(exp, val)
            set_slot(cexp, val.conj())
    return Template(Series(C, order, terms), unknowns, slots)


def _all_exps(chart, order):
    out = []

    def rec(prefix, remaining_vars, budget):
        if not remaining_vars:
            out.append(tuple(prefix))
            return
        w = chart.weights[len(prefix)]
        for e in range(budget // w + 1):
            rec(prefix + [e], remaining_vars - 1, budget - e * w)

    rec([], chart.nvars, order)
    return out


# ---------------------------------------------------------------------------
# equation extraction


class TangencySolver:
    """Shared incremental reduction over batches of extraction orders."""

    def __init__(self, unknowns: dict, ring_names=RING_PARAMS,
                 context_names=CONTEXT_PARAMS):
        self.unknowns = unknowns
        self.red = LinearReduction()
        self.ring = {register_param(n) for n in ring_names}
        self.context = {register_param(n) for n in context_names}
        self.e_idx = register_param("e")
        self.inconsistent_rows = []
        self.solutions: dict = {}

    def extract(self, residual: Series, orders, e_max):
        """Collect equations order by order, substituting fresh solutions.

        Unknowns solved at earlier orders are substituted into later
        coefficients before bucketing, which keeps the quadratic products
        coming from powers of w = F + i v linear in the still-unknown
        coefficients.
        """
        for n in orders:
            comp = residual.weighted_component(n)
            for exp, coeff in comp.sorted_terms():
                if not coeff.is_poly():
                    raise ComputationError(
                        f"residual coefficient at {exp} is a fraction")
                self._extract_poly(exp, coeff.num, n, e_max)
            self.harvest()

    def _extract_poly(self, exp, poly: ParamPoly, n: int, e_max):
        solved = poly.params_used() & set(self.red.solved)
        if solved:
            val = Scalar._poly(poly).substitute(
                {i: self.red.solved[i] for i in solved})
            if not val.is_poly():
                raise ComputationError(
                    f"substituted residual coefficient at {exp} is a "
                    "fraction")
            poly = val.num
        buckets: dict = {}
        for mono, g in poly.terms.items():
            ctx = []
            ring = []
            unk = []
            for idx, e in mono:
                if idx in self.context:
                    ctx.append((idx, e))
                elif idx in self.ring:
                    ring.append((idx, e))
                elif idx in self.unknowns:
                    unk.append((idx, e))
                else:
                    raise ComputationError(
                        f"unclassified parameter {param_name(idx)} in "
                        f"residual at {exp}")
            if len(unk) > 1 or (unk and unk[0][1] > 1):
                raise ComputationError(
                    f"nonlinear unknown product at {exp} (order {n}): "
                    f"{[param_name(i) for i, _ in unk]} (batching too wide)")
            ukey = unk[0][0] if unk else None
            b = buckets.setdefault(tuple(ctx), {})
            prev = b.get(ukey)
            add = ParamPoly({tuple(ring): g})
            b[ukey] = add if prev is None else prev + add
        for ctx, row in buckets.items():
            if n > e_max and any(i == self.e_idx for i, _ in ctx):
                continue  # polluted by the first unknown block via C^0 dF/dv
            self._add_equation(exp, ctx, row)

    def _add_equation(self, exp, ctx, row: dict):
        const = row.pop(None, ParamPoly({}))
        # split into real and imaginary parts (unknowns are real)
        for part in (0, 1):
            coeffs = {}
            for u, poly in row.items():
                p = poly.re_im()[part]
                if not p.is_zero():
                    coeffs[u] = Scalar._poly(p)
            rhs = const.re_im()[part]
            if not coeffs:
                if not rhs.is_zero():
                    self.inconsistent_rows.append(
                        (exp, ctx, Scalar._poly(rhs)))
                continue
            self.red.add_row(coeffs, Scalar._poly(-rhs))

    def harvest(self) -> dict:
        new = {}
        for u, val in self.red.solved.items():
            if u in self.unknowns and u not in self.solutions:
                self.solutions[u] = val
                new[u] = val
        return new


@dataclass
class SolveResult:
    graph: HypersurfaceGraph
    solutions: dict              # slot -> Scalar value of F[slot]
    free: list                   # graph unknowns never determined
    inconsistent: list
    pending: list
    block_solved: dict = field(default_factory=dict)
    block_free: list = field(default_factory=list)


def solve_cr_model(model: str, order: int = None) -> SolveResult:
    """Re-derive a CR model table from its symmetry family and pins."""
    if model == "thm31":
        order = 8 if order is None else order
        value_pins = {(3, 0, 0, 2, 0): 1, (4, 0, 0, 2, 0): 0}
        im_zero = {(3, 0, 2, 1, 0)}
        seeds = {}
        e_max = 6
        max_res = min(order - 1, 7)
        lifts = {"A": 7, "B": 6, "C": 8}
    elif model == "thm33":
        order = 10 if order is None else order
        value_pins = {(3, 0, 0, 2, 0): 0, (5, 0, 0, 1, 0): 1,
                      (6, 0, 0, 1, 0): 0}
        im_zero = {(4, 0, 3, 0, 0)}
        seeds = {(4, 0, 3, 0, 0): Scalar.param("theta"),
                 (5, 0, 5, 0, 0): Scalar.param("F50500")}
        e_max = 8
        max_res = min(order - 1, 9)
        lifts = {"A": 9, "B": 8, "C": 10}
    else:
        raise ComputationError(f"no solver configuration for {model!r}")

    template = build_cr_template(order, value_pins, im_zero, seeds)
    template.series = _lift(template.series, order + 1)

    comps = tables.field_components(model)
    A = _lift(comps["A"][0], min(lifts["A"], comps["A"][1] + 1))
    B = _lift(comps["B"][0], min(lifts["B"], comps["B"][1] + 1))
    C = _lift(comps["C"][0], min(lifts["C"], comps["C"][1] + 1))

    unknowns = dict(template.unknowns)
    if model == "thm33":
        # the undetermined block coefficients are unknown linear forms in
        # the five family constants: expand them into per-direction unknowns
        expand = {}
        for base in tables.UNDETERMINED_PARAMS:
            acc = None
            for p in ("a", "b", "c", "d", "e"):
                nm = f"{base}_{p}"
                idx = register_param(nm)
                unknowns[idx] = ((base, p), "lin")
                term = Scalar.param(nm) * Scalar.param(p)
                acc = term if acc is None else acc + term
            expand[base] = acc
        A = A.substitute_params(expand)
        B = B.substitute_params(expand)
        C = C.substitute_params(expand)

    solver = TangencySolver(unknowns)
    batches = _batches(max_res)
    for lo, hi in batches:
        trunc = min(order + 1, hi + 2)
        F = template.series.truncate(trunc)
        g = HypersurfaceGraph(F, label=f"solve/{model}")
        L = HoloVectorField(A.truncate(min_order(A.order, trunc)),
                            B.truncate(min_order(B.order, trunc)),
                            C.truncate(min_order(C.order, trunc)))
        res = tangency_residual(L, g)
        top = res.order if res.order is not None else hi
        solver.extract(res, range(lo, min(hi, top) + 1), e_max)
        solver.harvest()
        template.substitute(dict(solver.solutions))

    free = [param_name(u) for u in template.unknowns
            if u not in solver.solutions]
    block_solved = {param_name(u): solver.solutions[u] for u in unknowns
                    if u not in template.unknowns and u in solver.solutions}
    block_free = [param_name(u) for u in unknowns
                  if u not in template.unknowns and u not in solver.solutions]
    pending = solver.red.pending()
    solved_slots = {slot: val for slot, val in template.slots.items()}
    graph = HypersurfaceGraph(template.series.truncate(order),
                              label=f"resolved/{model}")
    return SolveResult(graph, solved_slots, free,
                       solver.inconsistent_rows, pending,
                       block_solved, block_free)


def _batches(max_res: int):
    # [0..3], then pairs; keeps unknown pairs above the extraction orders
    out = [(0, min(3, max_res))]
    n = 4
    while n <= max_res:
        out.append((n, min(n + 1, max_res)))
        n += 2
    return out


def diff_against_table(result: SolveResult, model: str, order: int,
                       curated: bool = True) -> list:
    """Structured diff solved-vs-stored: list of (exp, solved, stored)."""
    pairs, _ = tables.graph_terms(model, order, curated=curated)
    stored: dict = {}
    for exp, c in pairs:
        stored[exp] = stored[exp] + c if exp in stored else c
    solved = result.graph.F
    diffs = []
    exps = set(stored) | set(solved.terms)
    for exp in sorted(exps):
        w = solved.chart.wdeg(exp)
        if w > order:
            continue
        a = solved.terms.get(exp, S_ZERO)
        b = stored.get(exp, S_ZERO)
        if a != b:
            diffs.append((exp, a, b))
    return diffs


# ---------------------------------------------------------------------------
# affine variant


@dataclass
class AffineTemplate:
    series: Series
    unknowns: dict

    def substitute(self, solutions: dict):
        if solutions:
            self.series = self.series.substitute_params(solutions)


# preliminary normal shape of the affine graphs: monomial coeff of x^j y^k
AFFINE_SHAPE_PINS = {
    (1, 0): 0, (0, 1): 0,
    (2, 0): "1/2", (1, 1): 0, (0, 2): 0,
    (3, 0): 0, (2, 1): "1/2", (1, 2): 0, (0, 3): 0,
    (4, 0): 0, (2, 2): "1/2", (1, 3): 0, (0, 4): 0,
}


def build_affine_template(order: int, pins: dict) -> AffineTemplate:
    """Graph template over (x, y) with pinned low-order shape."""
    C = affine_chart()
    terms: dict = {}
    unknowns: dict = {}
    allpins = dict(AFFINE_SHAPE_PINS)
    allpins.update(pins)
    for j in range(order + 1):
        for k in range(order + 1 - j):
            if j + k == 0 or j + k > order:
                continue
            exp = (j, k)
            if exp in allpins:
                val = as_scalar(allpins[exp])
                if not val.is_zero():
                    terms[exp] = val
                continue
            name = f"af_{j}_{k}"
            idx = register_param(name)
            unknowns[idx] = (exp, "re")
            terms[exp] = Scalar.param(name)
    return AffineTemplate(Series(C, order, terms), unknowns)


def affine_tangency_series(P: Series, Q: Series, R: Series,
                           F: Series) -> Series:
    """Residual (R - P F_x - Q F_y)|_{u=F} over (x, y)."""
    C = affine_chart()
    assign = {"x": Series.var(C, "x", None), "y": Series.var(C, "y", None),
              "u": F}
    Pm = P.substitute(assign, target_chart=C)
    Qm = Q.substitute(assign, target_chart=C)
    Rm = R.substitute(assign, target_chart=C)
    return Rm - Pm * F.partial("x") - Qm * F.partial("y")


@dataclass
class AffineSolveResult:
    series: Series
    free: list
    inconsistent: list
    pending: list


def solve_affine_model(which: str, order: int = None) -> AffineSolveResult:
    """Re-derive an affine model table from its symmetry fields and pins."""
    from .affine import model_fields

    if which == "branch3":
        order = 8 if order is None else order
        pins = {(3, 1): "1/6", (4, 1): 0}
    elif which == "theta":
        order = 7 if order is None else order
        pins = {(3, 1): 0, (5, 0): "1/120", (6, 0): 0}
    elif which == "flat":
        order = 8 if order is None else order
        pins = {(3, 1): 0, (5, 0): 0}
    else:
        raise ComputationError(f"no affine solver configuration {which!r}")

    template = build_affine_template(order, pins)
    template.series = _lift(template.series, order + 1)
    fields = model_fields(which)
    solver = TangencySolver(template.unknowns, ring_names=("theta",),
                            context_names=())
    for lo, hi in ((0, order - 1),):
        F = template.series
        for f in fields:
            res = affine_tangency_series(f.P, f.Q, f.R, F)
            top = res.order if res.order is not None else hi
            solver.extract(res, range(lo, min(hi, top) + 1), e_max=10**6)
        solver.harvest()
        template.substitute(dict(solver.solutions))
    free = [param_name(u) for u in template.unknowns
            if u not in solver.solutions]
    return AffineSolveResult(template.series.truncate(order), free,
                             solver.inconsistent_rows, solver.red.pending())
