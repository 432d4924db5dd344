"""Exact linear algebra over the scalar fraction field, plus root extraction.

The solver below is a plain Gauss-Jordan elimination over Scalar values;
since Scalar division is exact and equality is decidable this is enough for
every system in the package (structure constants, germ linear parts,
tangency solving).  Systems coming from the tangency solver carry sparse
rows as dictionaries and are reduced incrementally; rows that end up with a
single unknown yield solutions, rows with several unknowns are carried
forward, and nonzero rows without unknowns witness inconsistency.

Rational and Gaussian-rational k-th roots are solved exactly: moduli via
integer k-th roots, the remaining phase via the rational root theorem on
the Chebyshev-style polynomial identity Re((p + i q)^k) with
q^2 = m - p^2.
"""

from __future__ import annotations

from gmpy2 import iroot, mpq, mpz

from .errors import RootExtractionError
from .scalars import (GaussRational, S_ONE, S_ZERO, Scalar, as_scalar, qi)


class SingularMatrixError(Exception):
    pass


def _pivot_size(s: Scalar):
    # prefer numeric pivots, then few-term polynomials
    return (0 if s.is_number() else 1, len(s.num.terms) + len(s.den.terms))


def matrix_inverse(mat):
    """Inverse of a square matrix of Scalars; raises SingularMatrixError."""
    n = len(mat)
    a = [list(row) for row in mat]
    inv = [[S_ONE if i == j else S_ZERO for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        best = None
        for r in range(col, n):
            if not a[r][col].is_zero():
                size = _pivot_size(a[r][col])
                if best is None or size < best:
                    piv, best = r, size
        if piv is None:
            raise SingularMatrixError(f"singular at column {col}")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = a[col][col]
        pinv = p.inv()
        a[col] = [x * pinv for x in a[col]]
        inv[col] = [x * pinv for x in inv[col]]
        for r in range(n):
            if r == col:
                continue
            f = a[r][col]
            if f.is_zero():
                continue
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
            inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


def rank(rows) -> int:
    """Rank of a list of Scalar vectors, parameters treated transcendental."""
    work = [list(r) for r in rows if any(not x.is_zero() for x in r)]
    if not work:
        return 0
    ncols = len(work[0])
    rk = 0
    col_of = []
    for col in range(ncols):
        piv = None
        best = None
        for r in range(rk, len(work)):
            if not work[r][col].is_zero():
                size = _pivot_size(work[r][col])
                if best is None or size < best:
                    piv, best = r, size
        if piv is None:
            continue
        work[rk], work[piv] = work[piv], work[rk]
        p = work[rk][col].inv()
        work[rk] = [x * p for x in work[rk]]
        for r in range(len(work)):
            if r == rk:
                continue
            f = work[r][col]
            if not f.is_zero():
                work[r] = [x - f * y for x, y in zip(work[r], work[rk])]
        col_of.append(col)
        rk += 1
        if rk == len(work):
            break
    return rk


def rank_with_pivots(rows):
    """(rank, list of pivot Scalars before normalisation).

    The pivot list lets callers report parameter values where the generic
    rank could drop.
    """
    work = [list(r) for r in rows if any(not x.is_zero() for x in r)]
    if not work:
        return 0, []
    ncols = len(work[0])
    rk = 0
    pivots = []
    for col in range(ncols):
        piv = None
        best = None
        for r in range(rk, len(work)):
            if not work[r][col].is_zero():
                size = _pivot_size(work[r][col])
                if best is None or size < best:
                    piv, best = r, size
        if piv is None:
            continue
        work[rk], work[piv] = work[piv], work[rk]
        pivots.append(work[rk][col])
        p = work[rk][col].inv()
        work[rk] = [x * p for x in work[rk]]
        for r in range(len(work)):
            if r == rk:
                continue
            f = work[r][col]
            if not f.is_zero():
                work[r] = [x - f * y for x, y in zip(work[r], work[rk])]
        rk += 1
        if rk == len(work):
            break
    return rk, pivots


def solve_exact(mat, rhs):
    """Solve a square system; raises SingularMatrixError when singular."""
    inv = matrix_inverse(mat)
    return [sum((c * b for c, b in zip(row, rhs)), S_ZERO) for row in inv]


class LinearReduction:
    """Incremental sparse Gauss-Jordan over Scalars.

    Rows are (coeffs: dict unknown -> Scalar, rhs: Scalar) with the
    convention  sum coeffs[u] * u = rhs.  After add_rows(), `solved`
    maps unknowns that were pinned uniquely to their Scalar values,
    `pending` holds rows still coupling several unknowns and
    `inconsistent` any nonzero contradiction rows.
    """

    def __init__(self):
        self.echelon: dict = {}   # pivot unknown -> (coeffs, rhs) normalised
        self.solved: dict = {}
        self.inconsistent: list = []

    def _substitute_solved(self, coeffs: dict, rhs: Scalar):
        out = {}
        for u, c in coeffs.items():
            if c.is_zero():
                continue
            val = self.solved.get(u)
            if val is not None:
                rhs = rhs - c * val
            else:
                out[u] = c
        return out, rhs

    def _reduce_row(self, coeffs: dict, rhs: Scalar):
        coeffs, rhs = self._substitute_solved(coeffs, rhs)
        changed = True
        while changed:
            changed = False
            for u in list(coeffs):
                row = self.echelon.get(u)
                if row is not None:
                    f = coeffs.pop(u)
                    rc, rr = row
                    for v, c in rc.items():
                        if v == u:
                            continue
                        acc = coeffs.get(v, S_ZERO) - f * c
                        if acc.is_zero():
                            coeffs.pop(v, None)
                        else:
                            coeffs[v] = acc
                    rhs = rhs - f * rr
                    changed = True
        return coeffs, rhs

    def add_row(self, coeffs: dict, rhs: Scalar):
        coeffs, rhs = self._reduce_row(dict(coeffs), rhs)
        if not coeffs:
            if not rhs.is_zero():
                self.inconsistent.append(rhs)
            return
        # pick pivot: numeric coefficient preferred, then smallest unknown id
        pivot = min(coeffs, key=lambda u: (_pivot_size(coeffs[u]), u))
        pinv = coeffs[pivot].inv()
        coeffs = {u: c * pinv for u, c in coeffs.items()}
        rhs = rhs * pinv
        # eliminate the new pivot from existing echelon rows
        for u, (rc, rr) in list(self.echelon.items()):
            f = rc.get(pivot)
            if f is None or f.is_zero():
                continue
            for v, c in coeffs.items():
                if v == pivot:
                    continue
                acc = rc.get(v, S_ZERO) - f * c
                if acc.is_zero():
                    rc.pop(v, None)
                else:
                    rc[v] = acc
            rc.pop(pivot, None)
            self.echelon[u] = (rc, rr - f * rhs)
        self.echelon[pivot] = (coeffs, rhs)
        self._harvest()

    def _harvest(self):
        # move single-unknown echelon rows into solved, then re-substitute
        progress = True
        while progress:
            progress = False
            for u, (rc, rr) in list(self.echelon.items()):
                others = [v for v in rc if v != u]
                if not others:
                    self.solved[u] = rr
                    del self.echelon[u]
                    progress = True
            if progress:
                for u, (rc, rr) in list(self.echelon.items()):
                    rc2, rr2 = self._substitute_solved(rc, rr)
                    self.echelon[u] = (rc2, rr2)
                    if u not in rc2:
                        # pivot itself got solved elsewhere: re-queue the rest
                        del self.echelon[u]
                        self.add_row(rc2, rr2)

    def add_rows(self, rows):
        for coeffs, rhs in rows:
            self.add_row(coeffs, rhs)

    def pending(self):
        return [(dict(rc), rr) for rc, rr in self.echelon.values()]

    def free_unknowns(self, universe) -> list:
        pinned = set(self.solved)
        for u, (rc, _) in self.echelon.items():
            pinned.add(u)
            pinned.update(rc)
        return [u for u in universe if u not in pinned]


# --------------------------------------------------------------------------
# exact roots


def _mpq_nth_root(x: mpq, k: int):
    """Exact k-th root of a rational, or None. Negative x needs odd k."""
    x = mpq(x)
    if x == 0:
        return mpq(0)
    neg = x < 0
    if neg and k % 2 == 0:
        return None
    ax = abs(x)
    rn, okn = iroot(mpz(ax.numerator), k)
    rd, okd = iroot(mpz(ax.denominator), k)
    if not (okn and okd):
        return None
    r = mpq(rn, rd)
    return -r if neg else r


def rational_nth_root(s: Scalar, k: int) -> Scalar:
    """Exact k-th root of a real rational Scalar; raises when inexact."""
    c = s.as_gauss()
    if c.im:
        raise RootExtractionError(f"{s.text()} is not real")
    r = _mpq_nth_root(c.re, k)
    if r is None:
        raise RootExtractionError(f"{s.text()} has no exact rational {k}-th root")
    return as_scalar(r)


def rational_roots(coeffs):
    """All rational roots of sum coeffs[j] x^j with mpq coefficients.

    Small integer data goes through the rational root theorem with trial
    divisors; anything larger is delegated to factorisation over Q
    (sympy ground_roots), which stays fast for the huge cleared
    denominators produced by staged eliminations.
    """
    cs = [mpq(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise RootExtractionError("zero polynomial")
    # strip powers of x
    shift = 0
    while cs[shift] == 0:
        shift += 1
    roots = set()
    if shift:
        roots.add(mpq(0))
        cs = cs[shift:]
    if len(cs) == 1:
        return sorted(roots)
    if len(cs) == 2:
        roots.add(-cs[0] / cs[1])
        return sorted(roots)
    den = 1
    for c in cs:
        den = den * c.denominator // _gcd(den, c.denominator)
    ics = [mpz(c * den) for c in cs]
    a0, an = abs(ics[0]), abs(ics[-1])
    if max(a0, an).bit_length() > 44:
        import sympy

        x = sympy.Symbol("x")
        poly = sympy.Poly([int(c) for c in reversed(ics)], x, domain="QQ")
        for r in poly.ground_roots():
            q = sympy.Rational(r)
            roots.add(mpq(q.p, q.q))
        return sorted(roots)
    for p in _divisors(a0):
        for q in _divisors(an):
            for cand in (mpq(p, q), mpq(-p, q)):
                if cand in roots:
                    continue
                acc = mpq(0)
                for c in reversed(ics):
                    acc = acc * cand + c
                if acc == 0:
                    roots.add(cand)
    return sorted(roots)


def _gcd(a, b):
    a, b = int(a), int(b)
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    n = int(abs(n))
    if n == 0:
        return [1]
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def gauss_nth_roots(c: GaussRational, k: int):
    """All Gaussian-rational solutions t of t^k = c, canonically sorted.

    Sorted by (Re t, Im t) descending so the canonical branch (largest real
    part, ties by largest imaginary part) comes first.
    """
    if k <= 0:
        raise RootExtractionError("root order must be positive")
    if c.is_zero():
        return [qi(0)]
    if k == 1:
        return [c]
    norm = c.norm()  # |c|^2
    m = _mpq_nth_root(norm, k)  # |t|^2
    if m is None:
        return []
    # write t = p + i q, with q^2 = m - p^2;  t^k = A(p) + i q B(p)
    # where A, B are polynomials in p with q^2 eliminated
    A = [mpq(1)]          # A(p) as coefficient list, constant first
    B = [mpq(0)]
    for _ in range(k):
        # (A + i q B)(p + i q) = (A p - B q^2) + i q (A + B p)
        Ap = _poly_shift_mul_x(A)
        Bq2 = _poly_mul_qsq(B, m)
        newA = _poly_sub(Ap, Bq2)
        newB = _poly_add(A, _poly_shift_mul_x(B))
        A, B = newA, newB
    # Re(t^k) = A(p) = Re(c)
    eq = list(A)
    eq[0] = eq[0] - c.re
    roots: list = []
    for p in rational_roots(eq):
        q2 = m - p * p
        if q2 < 0:
            continue
        q = _mpq_nth_root(q2, 2)
        if q is None:
            continue
        for qq in {q, -q}:
            t = qi(p, qq)
            if t ** k == c:
                roots.append(t)
    uniq = []
    for t in roots:
        if t not in uniq:
            uniq.append(t)
    uniq.sort(key=lambda t: (t.re, t.im), reverse=True)
    return uniq


def _poly_shift_mul_x(p):
    return [mpq(0)] + list(p)


def _poly_mul_qsq(p, m):
    # multiply by q^2 = m - x^2
    out = [c * m for c in p] + [mpq(0), mpq(0)]
    for i, c in enumerate(p):
        out[i + 2] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else mpq(0)) + (b[i] if i < len(b) else mpq(0))
            for i in range(n)]


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else mpq(0)) - (b[i] if i < len(b) else mpq(0))
            for i in range(n)]
