"""The residual automorphism family of the flat model and graph pushforward.

flat_automorphism expands the three rational component expressions of the
origin-fixing automorphisms (parameters lambda in C*, alpha in C, rho in R)
into a holomorphic map germ.  pushforward_graph implements the fundamental
equation: parametrise the source graph by (z, zeta, zbar, zetabar, v) via
w = F + i v, push the five realified coordinates through the germ, invert
that self-map of the CR chart, and substitute into u' to regraph the image.

normalize_residuals solves for (lambda, alpha, rho) stagewise: lambda from
the monomial transformation law of the branch's leading invariant, alpha
and rho from the affine action on the two supplementary slots of the
already-rescaled graph; every solved stage is re-verified exactly on the
transformed graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ComputationError, InputError, RootExtractionError
from .germs import MapGerm
from .hypersurfaces import (BRANCH_F30020, BRANCH_THETA, FLAT, BranchLabel,
                            HypersurfaceGraph, classify_branch)
from .linalg import gauss_nth_roots
from .scalars import (S_HALF, S_I, S_ONE, Scalar, as_scalar, complex_param,
                      qi)
from .series import Series, cr_chart, holo_chart, min_order


@dataclass
class ResidualParams:
    """Stage parameters: scaling lam, then alpha-map, then rho-map."""

    lam: Scalar
    alpha: Scalar
    rho: Scalar

    def __post_init__(self):
        self.lam = as_scalar(self.lam)
        self.alpha = as_scalar(self.alpha)
        self.rho = as_scalar(self.rho)
        if self.lam.is_zero():
            raise InputError("lambda must be nonzero")
        if self.rho.conj() != self.rho:
            raise InputError("rho must be real")

    def is_identity(self) -> bool:
        return (self.lam.is_one() and self.alpha.is_zero()
                and self.rho.is_zero())


def formal_params() -> ResidualParams:
    return ResidualParams(complex_param("lam"), complex_param("alpha"),
                          Scalar.param("rho"))


def flat_automorphism(p: ResidualParams, order: int) -> MapGerm:
    """The automorphism germ for parameters p, expanded through `order`."""
    H = holo_chart()
    z = Series.var(H, "z", order)
    ze = Series.var(H, "zeta", order)
    w = Series.var(H, "w", order)
    one = Series.one(H, order)
    lam, alpha, rho = p.lam, p.alpha, p.rho
    lamb = lam.conj()
    alphab = alpha.conj()
    irho = S_I * rho
    ialpha = S_I * alpha
    ialphab = S_I * alphab
    aab = alpha * alphab

    den = (one + z.scale(ialpha + ialpha) - (z * z).scale(alpha * alpha)
           - (ze * w).scale(alpha * alpha) + w.scale(aab - irho))
    dinv = den.invert_unit()

    znum = z + (z * z).scale(ialpha) + (ze * w).scale(ialpha) - w.scale(ialphab)
    zp = (znum * dinv).scale(lam)

    zenum = (ze + z.scale(ialphab + ialphab) - (z * z).scale(aab + irho)
             + w.scale(alphab * alphab) - (ze * w).scale(irho + aab))
    zep = (zenum * dinv).scale(lam / lamb)

    wp = (w * dinv).scale(lam * lamb)
    return MapGerm(H, H, {"z": zp, "zeta": zep, "w": wp})


def realified_parametrization(g: HypersurfaceGraph, M: MapGerm) -> tuple:
    """(Phi, u') where Phi maps the CR chart into itself via M along the graph.

    Phi sends (z, zeta, zbar, zetabar, v) to the primed quantities obtained
    by substituting w = F + i v into the germ components and conjugating.
    """
    C = cr_chart()
    order = min_order(g.F.order, M.order())
    F = g.F.truncate(min_order(g.F.order, order))
    v = Series.var(C, "v", order)
    w_on_m = F + v.scale(S_I)
    wbar_on_m = F - v.scale(S_I)

    plain = {
        "z": Series.var(C, "z", order),
        "zeta": Series.var(C, "zeta", order),
        "w": w_on_m,
    }
    barred = {
        "z": Series.var(C, "zbar", order),
        "zeta": Series.var(C, "zetabar", order),
        "w": wbar_on_m,
    }

    def push(comp: Series, conjugated: bool) -> Series:
        if conjugated:
            comp = Series(comp.chart, comp.order,
                          {e: c.conj() for e, c in comp.terms.items()})
            return comp.substitute(barred, target_chart=C)
        return comp.substitute(plain, target_chart=C)

    zp = push(M.components["z"], False)
    zep = push(M.components["zeta"], False)
    wp = push(M.components["w"], False)
    zbp = push(M.components["z"], True)
    zebp = push(M.components["zeta"], True)
    wbp = push(M.components["w"], True)

    up = (wp + wbp).scale(S_HALF)
    vp = (wp - wbp).scale(-(S_I * S_HALF))
    phi = MapGerm(C, C, {"z": zp, "zeta": zep, "zbar": zbp,
                         "zetabar": zebp, "v": vp})
    return phi, up


def pushforward_graph(g: HypersurfaceGraph, M: MapGerm) -> HypersurfaceGraph:
    """Graph of the image hypersurface under the holomorphic germ M.

    Solves u' = F'(z', zeta', zbar', zetabar', v') for F' triangularly by
    weighted order: the degree-n discrepancy composed with the inverse of
    the weighted-linear part of the primed coordinates gives the degree-n
    block of F', which is then resubstituted through the cached power
    table of the primed coordinates.
    """
    from .germs import _invert_weighted_linear

    C = cr_chart()
    phi, up = realified_parametrization(g, M)
    order = min_order(phi.order(), up.order)
    if order is None:
        raise InputError("pushforward needs a finite truncation order")
    linv = _invert_weighted_linear(phi.weighted_linear_part(), order)
    linv_assign = {n: s for n, s in linv.components.items()}

    # cached powers of the primed coordinates, keyed by exponent vector;
    # the realified germ is conjugation-equivariant, so mirrored exponents
    # come from conjugating the cached partner
    comps = [phi.components[n].truncate(
        min_order(phi.components[n].order, order)) for n in C.names]
    pairing = C.pairing
    mirror = (phi.components["zbar"] == phi.components["z"].conj()
              and phi.components["zetabar"] == phi.components["zeta"].conj()
              and phi.components["v"] == phi.components["v"].conj())
    cache = {(0,) * C.nvars: Series.one(C, order)}

    def power(exp: tuple) -> Series:
        hit = cache.get(exp)
        if hit is not None:
            return hit
        if mirror:
            pexp = [0] * len(exp)
            for i, k in enumerate(exp):
                pexp[pairing[i]] = k
            partner = cache.get(tuple(pexp))
            if partner is not None:
                out = partner.conj()
                cache[exp] = out
                return out
        out = None
        for i in range(C.nvars - 1, -1, -1):
            if exp[i]:
                prev = list(exp)
                prev[i] -= 1
                out = power(tuple(prev)) * comps[i]
                break
        cache[exp] = out
        return out

    rhs = up.truncate(min_order(up.order, order))
    result_terms: dict = {}
    for n in range(1, order + 1):
        block = rhs.weighted_component(n)
        if block.is_zero():
            continue
        fn = block.substitute(linv_assign, target_chart=C, cap=order)
        corr: dict = {}
        for e, c in fn.weighted_component(n).terms.items():
            result_terms[e] = c
            for e2, c2 in power(e).terms.items():
                prod = c2 * c
                acc = corr.get(e2)
                corr[e2] = prod if acc is None else acc + prod
        rhs = rhs - Series(C, rhs.order, corr)
    Fp = Series(C, order, result_terms)
    return HypersurfaceGraph(Fp, label=g.label + "|pushed")


# ---------------------------------------------------------------------------
# invariant transformation under the scaling subgroup


def diagonal_exponents(slot: tuple) -> tuple:
    """(p, q) with F'[slot] = F[slot] * lam^-p * lamb^-q under lam-scaling."""
    h, i, j, k, l = slot
    return (h + i - k + l - 1, j + k - i + l - 1)


def invariant_rescaling(g: HypersurfaceGraph, p: ResidualParams):
    """Ratios (F'[3,0,0,2,0]/F[...], F'[5,0,0,1,0]/F[...]) under aut(p).

    Slots whose source coefficient is identically zero return None.
    """
    order = g.F.order
    gp = pushforward_graph(g, flat_automorphism(p, order))
    out = []
    for slot in ((3, 0, 0, 2, 0), (5, 0, 0, 1, 0)):
        src = g.F.terms.get(slot)
        if src is None or src.is_zero():
            out.append(None)
            continue
        out.append(gp.F.coeff(slot) / src)
    return tuple(out)


# ---------------------------------------------------------------------------
# residual normalisation


def _solve_lambda_power(p: int, q: int, c: Scalar):
    """Solutions lam of lam^p * conj(lam)^q = c, canonical first."""
    cg = c.as_gauss()
    if cg.is_zero():
        raise RootExtractionError("scaling equation with zero right side")
    if p == q:
        raise RootExtractionError(
            "scaling equation determines lambda only up to phase")
    norm = cg.norm()
    from .linalg import _mpq_nth_root
    m = _mpq_nth_root(norm, p + q) if p + q != 0 else None
    if p + q == 0:
        # |lam| drops out: lam^(p-q) = c with |c| = 1 expected
        m = None
    if p + q != 0 and m is None:
        raise RootExtractionError(
            f"|lambda|^2 = |c|^(2/{p+q}) is not rational for c = {c.text()}")
    k = p - q
    if k > 0:
        target = cg if m is None else cg / qi(m) ** q
    else:
        target = (qi(1) / cg) if m is None else qi(m) ** q / cg
        k = -k
    roots = gauss_nth_roots(target, k)
    if m is not None:
        roots = [t for t in roots if t.norm() == m]
    if not roots:
        raise RootExtractionError(
            f"no exact Gaussian-rational lambda with lam^{p} lamb^{q} "
            f"= {c.text()}")
    return roots


def _alpha_action_solve(g: HypersurfaceGraph, slot: tuple, order: int):
    """alpha with F'[slot] = 0 after pushing by aut(1, alpha, 0).

    The action on the slot must be affine in (alpha_re, alpha_im); the
    solved alpha is re-verified exactly by the caller.
    """
    formal = ResidualParams(S_ONE, complex_param("alpha"), as_scalar(0))
    gp = pushforward_graph(g, flat_automorphism(formal, order))
    target = gp.F.coeff(slot)
    return _solve_affine_complex(target, "alpha_re", "alpha_im")


def _rho_action_solve(g: HypersurfaceGraph, slot: tuple, order: int):
    """rho with Im F'[slot] = 0 after pushing by aut(1, 0, rho)."""
    formal = ResidualParams(S_ONE, as_scalar(0), Scalar.param("rho"))
    gp = pushforward_graph(g, flat_automorphism(formal, order))
    target = gp.F.coeff(slot)
    _, im = target.re_im()
    sol = _solve_affine_real(im, "rho")
    return sol


def _poly_in(s: Scalar, names) -> dict:
    """Split a Scalar by its monomial part in the parameters `names`.

    Returns {exponent-tuple-over-names: Scalar coefficient}; raises if the
    denominator involves any of the names.
    """
    from .scalars import ParamPoly, register_param

    idxs = [register_param(n) for n in names]
    if any(i in s.den.params_used() for i in idxs):
        raise ComputationError(
            f"normalisation target is rational in {names}: {s.text()}")
    buckets: dict = {}
    for mono, coeff in s.num.terms.items():
        mdict = dict(mono)
        key = tuple(mdict.pop(i, 0) for i in idxs)
        rest = tuple(sorted(mdict.items()))
        b = buckets.setdefault(key, {})
        if rest in b:
            b[rest] = b[rest] + coeff
        else:
            b[rest] = coeff
    out = {}
    for key, terms in buckets.items():
        clean = {m: c for m, c in terms.items() if not c.is_zero()}
        out[key] = Scalar(ParamPoly(clean), s.den)
    return out


def _solve_affine_complex(target: Scalar, re_name: str, im_name: str):
    """(x, y) with target(x, y) = 0 for an affine complex-valued target."""
    buckets = _poly_in(target, (re_name, im_name))
    const = buckets.pop((0, 0), as_scalar(0))
    cx = buckets.pop((1, 0), as_scalar(0))
    cy = buckets.pop((0, 1), as_scalar(0))
    if buckets:
        raise ComputationError(
            "residual-parameter action is not affine; degrees "
            f"{sorted(buckets)} present")
    # split into real equations: const + cx*x + cy*y = 0, x,y real
    rows = []
    for pick in (0, 1):
        row = []
        for c in (cx, cy):
            row.append(c.re_im()[pick])
        rows.append((row, -const.re_im()[pick]))
    from .linalg import matrix_inverse, SingularMatrixError
    mat = [rows[0][0], rows[1][0]]
    rhs = [rows[0][1], rows[1][1]]
    try:
        inv = matrix_inverse(mat)
    except SingularMatrixError:
        raise ComputationError("affine action on the slot is singular")
    x = inv[0][0] * rhs[0] + inv[0][1] * rhs[1]
    y = inv[1][0] * rhs[0] + inv[1][1] * rhs[1]
    return x + S_I * y


def _solve_affine_real(target: Scalar, name: str) -> Scalar:
    buckets = _poly_in(target, (name,))
    const = buckets.pop((0,), as_scalar(0))
    lin = buckets.pop((1,), as_scalar(0))
    if buckets:
        raise ComputationError(
            f"residual-parameter action in {name} is not affine")
    if lin.is_zero():
        if const.is_zero():
            return as_scalar(0)
        raise ComputationError(f"slot does not depend on {name}")
    return -(const / lin)


@dataclass
class NormalizationResult:
    params: ResidualParams
    graph: HypersurfaceGraph
    branch: BranchLabel
    alternatives: tuple = ()   # other exact lambda roots


def normalize_residuals(g: HypersurfaceGraph) -> NormalizationResult:
    """Pin the residual parameters per branch; stages lam, alpha, rho."""
    branch = classify_branch(g)
    if branch == FLAT:
        return NormalizationResult(
            ResidualParams(S_ONE, as_scalar(0), as_scalar(0)), g, branch)
    if branch.kind == "UNKNOWN":
        raise ComputationError(f"cannot normalise: {branch.reason}")
    order = g.F.order
    if branch == BRANCH_F30020:
        lead, sup_alpha, sup_rho = ((3, 0, 0, 2, 0), (4, 0, 0, 2, 0),
                                    (3, 0, 2, 1, 0))
    else:
        lead, sup_alpha, sup_rho = ((5, 0, 0, 1, 0), (6, 0, 0, 1, 0),
                                    (4, 0, 3, 0, 0))
        if order is not None and order < 7:
            raise ComputationError("theta branch normalisation needs order >= 7")

    # stage 1: lambda from the leading relative invariant
    cslot = g.F.coeff(lead)
    p, q = diagonal_exponents(lead)
    if not cslot.is_number():
        raise ComputationError(
            f"leading invariant {cslot.text()} is not numeric; cannot "
            "extract lambda exactly")
    roots = _solve_lambda_power(p, q, cslot)
    lam = as_scalar(roots[0])
    alternatives = tuple(as_scalar(r) for r in roots[1:])
    g1 = pushforward_graph(
        g, flat_automorphism(ResidualParams(lam, 0, 0), order))
    if g1.F.coeff(lead) != S_ONE:
        raise ComputationError("lambda stage failed to normalise the slot")

    # stage 2: alpha from the supplementary coefficient
    alpha = _alpha_action_solve(g1, sup_alpha, order)
    g2 = pushforward_graph(
        g1, flat_automorphism(ResidualParams(S_ONE, alpha, 0), order))
    if not g2.F.coeff(sup_alpha).is_zero():
        raise ComputationError("alpha stage failed to zero the slot")

    # stage 3: rho from the imaginary part
    rho = _rho_action_solve(g2, sup_rho, order)
    g3 = pushforward_graph(
        g2, flat_automorphism(ResidualParams(S_ONE, as_scalar(0), rho), order))
    _, im = g3.F.coeff(sup_rho).re_im()
    if not im.is_zero():
        raise ComputationError("rho stage failed to kill the imaginary part")

    return NormalizationResult(ResidualParams(lam, alpha, rho), g3, branch,
                               alternatives)
