"""Infinitesimal symmetries: tangency residuals, brackets, algebra checks.

A holomorphic field A d/dz + B d/dzeta + C d/dw is tangent to the graph
u = F exactly when the realified residual

    2 Re{ -A F_z - B F_zeta + C (1/2 - F_v / (2i)) } |_{w = F + iv}

vanishes; the residual is computed as a series on the CR chart with its
guaranteed-exact order, so "tangent through order n" is a checkable exact
statement.  Structure constants are obtained by expanding brackets of the
five family fields in the basis and verifying the expansion on every
computable weighted block.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ComputationError, InputError
from .linalg import LinearReduction, rank, rank_with_pivots
from .scalars import (S_HALF, S_I, S_ONE, S_ZERO, Scalar, as_scalar)
from .series import Series, cr_chart, holo_chart, min_order
from .hypersurfaces import HypersurfaceGraph
from . import tables

FAMILY_PARAMS = ("a", "b", "c", "d", "e")


@dataclass
class HoloVectorField:
    A: Series
    B: Series
    C: Series

    def __post_init__(self):
        H = holo_chart()
        for comp in (self.A, self.B, self.C):
            if comp.chart != H:
                raise InputError("holomorphic field components must live on "
                                 "the (z, zeta, w) chart")

    def components(self):
        return (self.A, self.B, self.C)

    def order(self):
        return min_order(min_order(self.A.order, self.B.order), self.C.order)

    def substitute_params(self, bindings: dict) -> "HoloVectorField":
        return HoloVectorField(self.A.substitute_params(bindings),
                               self.B.substitute_params(bindings),
                               self.C.substitute_params(bindings))

    def scale(self, c) -> "HoloVectorField":
        return HoloVectorField(self.A.scale(c), self.B.scale(c),
                               self.C.scale(c))

    def __add__(self, other: "HoloVectorField") -> "HoloVectorField":
        return HoloVectorField(self.A + other.A, self.B + other.B,
                               self.C + other.C)

    def __sub__(self, other: "HoloVectorField") -> "HoloVectorField":
        return self + other.scale(as_scalar(-1))

    def is_zero(self) -> bool:
        return self.A.is_zero() and self.B.is_zero() and self.C.is_zero()

    def value_at_origin(self):
        return (self.A.constant_term(), self.B.constant_term(),
                self.C.constant_term())


@dataclass
class LieBasis:
    fields: list            # e_1 ... e_n
    provenance: tuple = ()  # parameter name pinned to 1 for each element


def model_symmetry_family(model: str, a=None, b=None, c=None, d=None, e=None,
                          order=None, determined_only: bool = False
                          ) -> HoloVectorField:
    """The five-constant family of the model, constants formal by default.

    determined_only drops the blocks carrying the undetermined linear
    forms A004, B103 (needed for numeric bracket tables; tangency keeps
    them formal).
    """
    comps = tables.field_components(model, determined_only=determined_only)
    bindings = {}
    for name, val in zip(FAMILY_PARAMS, (a, b, c, d, e)):
        if val is not None:
            bindings[name] = as_scalar(val)
    A, _ = comps["A"]
    B, _ = comps["B"]
    C, _ = comps["C"]
    if bindings:
        A = A.substitute_params(bindings)
        B = B.substitute_params(bindings)
        C = C.substitute_params(bindings)
    if order is not None:
        A = A.truncate(min_order(A.order, order))
        B = B.truncate(min_order(B.order, order))
        C = C.truncate(min_order(C.order, order))
    return HoloVectorField(A, B, C)


def model_basis(model: str, determined_only: bool = True) -> LieBasis:
    fields = []
    for i, name in enumerate(FAMILY_PARAMS):
        vals = {p: as_scalar(1 if p == name else 0) for p in FAMILY_PARAMS}
        fields.append(model_symmetry_family(
            model, **vals, determined_only=determined_only))
    return LieBasis(fields, FAMILY_PARAMS)


# ---------------------------------------------------------------------------
# tangency


def tangency_residual(L: HoloVectorField, g: HypersurfaceGraph) -> Series:
    """Residual series of (L + conj L) against the graph; zero = tangent."""
    C5 = cr_chart()
    F = g.F
    order = F.order
    v = Series.var(C5, "v", order)
    w_on_m = F + v.scale(S_I)
    assign = {
        "z": Series.var(C5, "z", None),
        "zeta": Series.var(C5, "zeta", None),
        "w": w_on_m,
    }
    A5 = L.A.substitute(assign, target_chart=C5)
    B5 = L.B.substitute(assign, target_chart=C5)
    C5s = L.C.substitute(assign, target_chart=C5)
    Fz = F.partial("z")
    Fze = F.partial("zeta")
    Fv = F.partial("v")
    half = Series.const(C5, S_HALF, C5s.order)
    inner = (-(A5 * Fz) - B5 * Fze
             + C5s * (half - Fv.scale(S_HALF * (-S_I) * S_ONE)))
    res = inner + inner.conj()
    return res


def tangency_report(L: HoloVectorField, g: HypersurfaceGraph) -> dict:
    res = tangency_residual(L, g)
    return {
        "order": res.order,
        "tangent": res.is_zero(),
        "violations": [(e, c) for e, c in res.sorted_terms()],
    }


# ---------------------------------------------------------------------------
# brackets


def apply_field(L: HoloVectorField, f: Series) -> Series:
    return (L.A * f.partial("z") + L.B * f.partial("zeta")
            + L.C * f.partial("w"))


def lie_bracket(X: HoloVectorField, Y: HoloVectorField) -> HoloVectorField:
    comps = []
    for gx, gy in zip(X.components(), Y.components()):
        comps.append(apply_field(X, gy) - apply_field(Y, gx))
    return HoloVectorField(*comps)


@dataclass
class StructureConstants:
    c: list                 # c[i][j] = list of Scalars over the basis
    n: int
    residuals: list         # (i, j, component, exp, leftover) witnesses

    def bracket_vector(self, u, v):
        """coefficients of [sum u_i e_i, sum v_j e_j] in the basis."""
        out = [S_ZERO for _ in range(self.n)]
        for i in range(self.n):
            if u[i].is_zero():
                continue
            for j in range(self.n):
                if v[j].is_zero():
                    continue
                f = u[i] * v[j]
                for k in range(self.n):
                    out[k] = out[k] + f * self.c[i][j][k]
        return out

    def antisymmetric(self) -> bool:
        for i in range(self.n):
            for j in range(self.n):
                for k in range(self.n):
                    if self.c[i][j][k] != -self.c[j][i][k]:
                        return False
        return True

    def jacobi_ok(self) -> bool:
        units = [[S_ONE if t == s else S_ZERO for t in range(self.n)]
                 for s in range(self.n)]
        for i in range(self.n):
            for j in range(i + 1, self.n):
                for k in range(j + 1, self.n):
                    acc = [S_ZERO] * self.n
                    for (x, y, z) in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = self.bracket_vector(units[x], units[y])
                        term = self.bracket_vector(inner, units[z])
                        acc = [p + q for p, q in zip(acc, term)]
                    if any(not t.is_zero() for t in acc):
                        return False
        return True


def structure_constants(basis: LieBasis) -> StructureConstants:
    """Expand all brackets in the basis; verify on every computable block."""
    n = len(basis.fields)
    c = [[None] * n for _ in range(n)]
    residuals = []
    for i in range(n):
        c[i][i] = [S_ZERO] * n
    for i in range(n):
        for j in range(i + 1, n):
            br = lie_bracket(basis.fields[i], basis.fields[j])
            coeffs, leftover = expand_in_basis(br, basis)
            c[i][j] = coeffs
            c[j][i] = [-x for x in coeffs]
            for item in leftover:
                residuals.append((i, j) + item)
    return StructureConstants(c, n, residuals)


def expand_in_basis(X: HoloVectorField, basis: LieBasis):
    """Solve X = sum c_k e_k; returns (coeffs, unexplained witnesses)."""
    n = len(basis.fields)
    red = LinearReduction()
    rows = []
    comps = "ABC"
    for ci, name in enumerate(comps):
        xc = getattr(X, name)
        orders = [getattr(f, name).order for f in basis.fields]
        usable = xc.order
        for o in orders:
            usable = min_order(usable, o)
        exps = set(xc.terms)
        for f in basis.fields:
            exps.update(getattr(f, name).terms)
        for e in sorted(exps):
            w = xc.chart.wdeg(e)
            if not (usable is None or w <= usable):
                continue
            row = {}
            for k, f in enumerate(basis.fields):
                coeff = getattr(f, name).terms.get(e, S_ZERO)
                if not coeff.is_zero():
                    row[k] = coeff
            rhs = xc.terms.get(e, S_ZERO)
            if not row:
                if not rhs.is_zero():
                    rows.append((name, e, rhs))
                continue
            red.add_row(row, rhs)
    coeffs = []
    for k in range(n):
        coeffs.append(red.solved.get(k, S_ZERO))
    leftover = list(rows)
    for bad in red.inconsistent:
        leftover.append(("?", None, bad))
    for pend, rhs in red.pending():
        # zero-rhs pendings just witness a dependent basis
        if not rhs.is_zero():
            leftover.append(("underdetermined", tuple(pend), rhs))
    return coeffs, leftover


def derived_series_dims(sc: StructureConstants) -> list:
    """Dimensions of g, [g,g], [[g,g],[g,g]], ... over the scalar field."""
    n = sc.n
    units = [[S_ONE if t == s else S_ZERO for t in range(n)] for s in range(n)]
    current = units
    dims = [rank(current)]
    while dims[-1] > 0:
        gens = []
        for i in range(len(current)):
            for j in range(i + 1, len(current)):
                gens.append(sc.bracket_vector(current[i], current[j]))
        d = rank(gens)
        dims.append(d)
        if d == dims[-2] and d > 0:
            raise ComputationError(
                "derived series stabilises at a nonzero ideal; not solvable")
        current = gens
    return dims


def derived_series_pivots(sc: StructureConstants):
    """Pivot scalars whose vanishing could drop the generic ranks."""
    n = sc.n
    units = [[S_ONE if t == s else S_ZERO for t in range(n)] for s in range(n)]
    current = units
    out = []
    while True:
        gens = []
        for i in range(len(current)):
            for j in range(i + 1, len(current)):
                gens.append(sc.bracket_vector(current[i], current[j]))
        d, pivots = rank_with_pivots(gens)
        out.extend(p for p in pivots if not p.is_number())
        if d == 0:
            return out
        current = gens


# ---------------------------------------------------------------------------
# ideal and reality checks


def abelian_ideal_check(candidate: list, sc: StructureConstants) -> dict:
    """candidate: coefficient vectors in the basis.

    Checks brackets inside the candidate vanish, brackets of basis elements
    with the candidate stay in its span, and reports the dimension.
    """
    n = sc.n
    cand = [[as_scalar(x) for x in vec] for vec in candidate]
    dim = rank(cand)
    failures = []
    for i in range(len(cand)):
        for j in range(i + 1, len(cand)):
            br = sc.bracket_vector(cand[i], cand[j])
            if any(not x.is_zero() for x in br):
                failures.append(("not_abelian", i, j,
                                 [x.text() for x in br]))
    units = [[S_ONE if t == s else S_ZERO for t in range(n)]
             for s in range(n)]
    for i in range(n):
        for j, vec in enumerate(cand):
            br = sc.bracket_vector(units[i], vec)
            if rank(cand + [br]) > dim:
                failures.append(("not_ideal", i, j, [x.text() for x in br]))
    return {"dimension": dim, "abelian_and_ideal": not failures,
            "failures": failures}


def maximally_real_check(fields: list) -> dict:
    """fields: exactly three holomorphic fields; checks the origin values
    span a maximally real 3-plane in C^3."""
    if len(fields) != 3:
        raise InputError("maximally real check needs exactly 3 fields")
    vecs = []
    ivecs = []
    for f in fields:
        a, b, c = f.value_at_origin()
        comps = []
        icomps = []
        for x in (a, b, c):
            re, im = x.re_im()
            comps.extend((re, im))
            icomps.extend((-im, re))
        vecs.append(comps)
        ivecs.append(icomps)
    dim = rank(vecs)
    total = rank(vecs + ivecs)
    ok = dim == 3 and total == 6
    return {"dimension": dim, "totally_real": total == 2 * dim,
            "maximally_real": ok}


def tube_criterion(basis: LieBasis, candidate: list,
                   sc: StructureConstants = None) -> dict:
    """Abelian-ideal and maximally-real checks for a candidate triple."""
    if sc is None:
        sc = structure_constants(basis)
    ideal = abelian_ideal_check(candidate, sc)
    fields = []
    n = len(basis.fields)
    for vec in candidate:
        acc = None
        for coeff, f in zip(vec, basis.fields):
            term = f.scale(as_scalar(coeff))
            acc = term if acc is None else acc + term
        fields.append(acc)
    if len(fields) != 3:
        return {"ideal": ideal, "maximally_real": None,
                "tube_criterion": False,
                "reason": "candidate is not a triple"}
    real = maximally_real_check(fields)
    ok = ideal["abelian_and_ideal"] and ideal["dimension"] == 3 \
        and real["maximally_real"]
    return {"ideal": ideal, "maximally_real": real, "tube_criterion": ok}


def derived_algebra_candidate(model: str, sc: StructureConstants) -> list:
    """The bracket-span triple of the model's derived algebra."""
    if model == "thm31":
        # [e1,e2], [e1,e4], [e2,e3] up to sign: the three underlined
        # generators span(e2, e4, e5)
        vecs = [sc.c[0][1], sc.c[0][3], sc.c[1][2]]
    elif model == "thm33":
        vecs = [sc.c[0][1], sc.c[0][3], sc.c[0][4]]
    else:
        raise InputError(f"no candidate for model {model!r}")
    return [list(v) for v in vecs]
