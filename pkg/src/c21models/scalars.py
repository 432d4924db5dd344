"""Exact scalars: Gaussian rationals extended by named formal real parameters.

Every coefficient in this package lives in the field Q(i)(p1, ..., pn) of
fractions of sparse polynomials in declared real parameters over the
Gaussian rationals.  Values are immutable and all operations are pure.

Parameters are interned in a global append-only registry.  A polynomial
stores each monomial as a sorted tuple of ``(parameter index, exponent)``
pairs, so values created before and after later registrations compare
equal.  Fractions are normalised just enough to make equality decidable:
constant denominators fold into the numerator, exact divisions are carried
out when they succeed, and any remaining denominator is made monic under
the graded term order.  Equality falls back to cross multiplication, so no
polynomial gcd machinery is needed.

Conjugation maps i to -i and fixes every parameter: complex quantities such
as lambda or alpha are always modelled as ``x_re + i*x_im`` with two real
parameters.
"""

from __future__ import annotations

from gmpy2 import mpq

from .errors import DivisionByZeroError, InputError

# --------------------------------------------------------------------------
# parameter registry


class _Registry:
    __slots__ = ("names", "index")

    def __init__(self):
        self.names: list[str] = []
        self.index: dict[str, int] = {}

    def register(self, name: str) -> int:
        idx = self.index.get(name)
        if idx is None:
            if not name.isidentifier() or name == "i":
                raise InputError(f"bad parameter name: {name!r}")
            idx = len(self.names)
            self.names.append(name)
            self.index[name] = idx
        return idx

    def lookup(self, name: str) -> int:
        idx = self.index.get(name)
        if idx is None:
            raise InputError(f"unknown parameter: {name!r}")
        return idx


_REGISTRY = _Registry()


def register_param(name: str) -> int:
    """Intern a real formal parameter, returning its registry index."""
    return _REGISTRY.register(name)


def param_name(idx: int) -> str:
    return _REGISTRY.names[idx]


def registered_params() -> list[str]:
    return list(_REGISTRY.names)


# --------------------------------------------------------------------------
# Gaussian rationals

_MPQ0 = mpq(0)
_MPQ1 = mpq(1)


class GaussRational:
    """A Gaussian rational re + i*im with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = mpq(re)
        self.im = mpq(im)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, type(_MPQ0))):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other: "GaussRational") -> "GaussRational":
        out = GaussRational.__new__(GaussRational)
        out.re = self.re + other.re
        out.im = self.im + other.im
        return out

    def __sub__(self, other: "GaussRational") -> "GaussRational":
        out = GaussRational.__new__(GaussRational)
        out.re = self.re - other.re
        out.im = self.im - other.im
        return out

    def __neg__(self) -> "GaussRational":
        out = GaussRational.__new__(GaussRational)
        out.re = -self.re
        out.im = -self.im
        return out

    def __mul__(self, other: "GaussRational") -> "GaussRational":
        a, b, c, d = self.re, self.im, other.re, other.im
        out = GaussRational.__new__(GaussRational)
        if not b and not d:
            out.re = a * c
            out.im = _MPQ0
        else:
            out.re = a * c - b * d
            out.im = a * d + b * c
        return out

    def __truediv__(self, other: "GaussRational") -> "GaussRational":
        c, d = other.re, other.im
        n = c * c + d * d
        if not n:
            raise DivisionByZeroError("division by zero GaussRational")
        a, b = self.re, self.im
        return GaussRational((a * c + b * d) / n, (b * c - a * d) / n)

    def conj(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self):
        """re^2 + im^2, a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def __pow__(self, n: int) -> "GaussRational":
        if n < 0:
            return QI_ONE / self ** (-n)
        out = QI_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __repr__(self):
        return f"GaussRational({self.re}, {self.im})"

    def __str__(self):
        return format_gauss(self)


QI_ZERO = GaussRational(0)
QI_ONE = GaussRational(1)
QI_I = GaussRational(0, 1)
QI_HALF = GaussRational(mpq(1, 2))


def qi(re=0, im=0) -> GaussRational:
    return GaussRational(re, im)


def format_gauss(c: GaussRational, mult: str = "*") -> str:
    """Canonical text: '3', '-1/2', 'i', '-2/3*i', '(1+2*i)'."""
    re, im = c.re, c.im
    if not im:
        return str(re)
    if not re:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{im}{mult}i"
    sign = "+" if im > 0 else "-"
    a = abs(im)
    istr = "i" if a == 1 else f"{a}{mult}i"
    return f"({re}{sign}{istr})"


# --------------------------------------------------------------------------
# sparse parameter monomials: sorted tuples of (index, exponent)

MONO_ONE: tuple = ()


def mono_mul(m1: tuple, m2: tuple) -> tuple:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        a, b = m1[i], m2[j]
        if a[0] == b[0]:
            out.append((a[0], a[1] + b[1]))
            i += 1
            j += 1
        elif a[0] < b[0]:
            out.append(a)
            i += 1
        else:
            out.append(b)
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def mono_div(m1: tuple, m2: tuple):
    """m1 / m2, or None when not divisible."""
    if not m2:
        return m1
    rest = dict(m1)
    out = []
    for idx, e in m2:
        have = rest.pop(idx, 0)
        if have < e:
            return None
        if have > e:
            out.append((idx, have - e))
    out.extend(rest.items())
    out.sort()
    return tuple(out)


def mono_degree(m: tuple) -> int:
    return sum(e for _, e in m)


def mono_key(m: tuple):
    # graded, then deterministic lexicographic on the sparse pairs
    return (mono_degree(m), m)


# --------------------------------------------------------------------------
# sparse polynomials over the parameters


class ParamPoly:
    """Sparse polynomial in the registered parameters over GaussRational."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        # takes ownership; callers must not pass zero coefficients
        self.terms = terms

    # construction ---------------------------------------------------------

    @staticmethod
    def zero() -> "ParamPoly":
        return PP_ZERO

    @staticmethod
    def const(c: GaussRational) -> "ParamPoly":
        if c.is_zero():
            return PP_ZERO
        return ParamPoly({MONO_ONE: c})

    @staticmethod
    def var(name: str) -> "ParamPoly":
        idx = register_param(name)
        return ParamPoly({((idx, 1),): QI_ONE})

    @staticmethod
    def _clean(terms: dict) -> "ParamPoly":
        out = {m: c for m, c in terms.items() if not c.is_zero()}
        return ParamPoly(out) if out else PP_ZERO

    # predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and MONO_ONE in self.terms)

    def const_value(self) -> GaussRational:
        return self.terms.get(MONO_ONE, QI_ZERO)

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get(MONO_ONE) == QI_ONE

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(mono_degree(m) for m in self.terms)

    def params_used(self) -> set:
        out = set()
        for m in self.terms:
            for idx, _ in m:
                out.add(idx)
        return out

    # arithmetic -----------------------------------------------------------

    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            if acc is None:
                out[m] = c
            else:
                s = acc + c
                if s.is_zero():
                    del out[m]
                else:
                    out[m] = s
        return ParamPoly(out) if out else PP_ZERO

    def __sub__(self, other: "ParamPoly") -> "ParamPoly":
        return self + (-other)

    def __neg__(self) -> "ParamPoly":
        return ParamPoly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "ParamPoly") -> "ParamPoly":
        a, b = self.terms, other.terms
        if not a or not b:
            return PP_ZERO
        if len(a) == 1:
            (m1, c1), = a.items()
            if len(b) == 1:
                (m2, c2), = b.items()
                c = c1 * c2
                if c.re or c.im:
                    return ParamPoly({mono_mul(m1, m2): c})
                return PP_ZERO
            if m1 == MONO_ONE:
                return other.scale(c1)
        elif len(b) == 1:
            (m2, c2), = b.items()
            if m2 == MONO_ONE:
                return self.scale(c2)
        out: dict = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                acc = out.get(m)
                if acc is None:
                    out[m] = c
                else:
                    s = acc + c
                    if s.is_zero():
                        del out[m]
                    else:
                        out[m] = s
        return ParamPoly(out) if out else PP_ZERO

    def scale(self, c: GaussRational) -> "ParamPoly":
        if c.is_zero() or not self.terms:
            return PP_ZERO
        if c == QI_ONE:
            return self
        return ParamPoly({m: v * c for m, v in self.terms.items()})

    def conj(self) -> "ParamPoly":
        # parameters are real; only the numeric coefficients conjugate
        return ParamPoly({m: c.conj() for m, c in self.terms.items()})

    def leading(self):
        m = max(self.terms, key=mono_key)
        return m, self.terms[m]

    def exact_div(self, g: "ParamPoly"):
        """self / g when the division is exact, else None."""
        if g.is_zero():
            raise DivisionByZeroError("polynomial division by zero")
        if not self.terms:
            return PP_ZERO
        if g.is_const():
            gc = g.const_value()
            return ParamPoly({m: c / gc for m, c in self.terms.items()})
        glm, glc = g.leading()
        rest = dict(self.terms)
        q: dict = {}
        while rest:
            rlm = max(rest, key=mono_key)
            mq = mono_div(rlm, glm)
            if mq is None:
                return None
            cq = rest[rlm] / glc
            q[mq] = cq
            for mg, cg in g.terms.items():
                mm = mono_mul(mq, mg)
                acc = rest.get(mm, QI_ZERO) - cq * cg
                if acc.is_zero():
                    rest.pop(mm, None)
                else:
                    rest[mm] = acc
        return ParamPoly(q)

    def substitute(self, bindings: dict) -> "Scalar":
        """Evaluate with parameter index -> Scalar bindings (may be partial)."""
        out = S_ZERO
        for m, c in self.terms.items():
            term = Scalar(ParamPoly.const(c), PP_ONE)
            for idx, e in m:
                val = bindings.get(idx)
                if val is None:
                    term = term * Scalar(ParamPoly({((idx, e),): QI_ONE}), PP_ONE)
                else:
                    term = term * val**e
            out = out + term
        return out

    # misc ------------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: mono_key(kv[0]))

    def re_im(self):
        """Split into (real, imaginary) polynomials with real coefficients."""
        re_t, im_t = {}, {}
        for m, c in self.terms.items():
            if c.re:
                re_t[m] = GaussRational(c.re)
            if c.im:
                im_t[m] = GaussRational(c.im)
        return (ParamPoly(re_t) if re_t else PP_ZERO,
                ParamPoly(im_t) if im_t else PP_ZERO)

    def __eq__(self, other) -> bool:
        if isinstance(other, ParamPoly):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"ParamPoly({format_poly(self)})"


PP_ZERO = ParamPoly({})
PP_ONE = ParamPoly({MONO_ONE: QI_ONE})


# --------------------------------------------------------------------------
# scalars: fractions of ParamPolys


class Scalar:
    """Element of the fraction field Q(i)(params).

    The denominator is 1 for everything outside linear solving and residual
    automorphisms with formal parameters.  Construction normalises: constant
    denominators fold into the numerator, exact divisions are taken, and
    surviving denominators are made monic.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: ParamPoly, den: ParamPoly = PP_ONE):
        if den.is_zero():
            raise DivisionByZeroError("scalar with zero denominator")
        if num.is_zero():
            self.num = PP_ZERO
            self.den = PP_ONE
            return
        if den.is_one():
            self.num = num
            self.den = PP_ONE
            return
        if den.is_const():
            c = den.const_value()
            self.num = num.scale(QI_ONE / c)
            self.den = PP_ONE
            return
        q = num.exact_div(den)
        if q is not None:
            self.num = q
            self.den = PP_ONE
            return
        _, lc = den.leading()
        inv = QI_ONE / lc
        self.num = num.scale(inv)
        self.den = den.scale(inv)

    # construction ----------------------------------------------------------

    @staticmethod
    def _poly(num: ParamPoly) -> "Scalar":
        # fast constructor for a known-clean polynomial numerator
        s = Scalar.__new__(Scalar)
        s.num = num
        s.den = PP_ONE
        return s

    @staticmethod
    def from_int(n) -> "Scalar":
        return Scalar._poly(ParamPoly.const(GaussRational(n)))

    @staticmethod
    def from_gauss(c: GaussRational) -> "Scalar":
        return Scalar._poly(ParamPoly.const(c))

    @staticmethod
    def param(name: str) -> "Scalar":
        return Scalar._poly(ParamPoly.var(name))

    # predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    def is_number(self) -> bool:
        return self.den.is_one() and self.num.is_const()

    def is_poly(self) -> bool:
        return self.den.is_one()

    def as_gauss(self) -> GaussRational:
        if not self.is_number():
            raise InputError(f"scalar is not a pure number: {self.text()}")
        return self.num.const_value()

    def as_poly(self) -> ParamPoly:
        if not self.den.is_one():
            raise InputError(f"scalar is not polynomial: {self.text()}")
        return self.num

    def params_used(self) -> set:
        return self.num.params_used() | self.den.params_used()

    # arithmetic ------------------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if self.den is PP_ONE and other.den is PP_ONE:
            return Scalar._poly(self.num + other.num)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __neg__(self) -> "Scalar":
        s = Scalar.__new__(Scalar)
        s.num = -self.num
        s.den = self.den
        return s

    def __mul__(self, other: "Scalar") -> "Scalar":
        if self.den is PP_ONE and other.den is PP_ONE:
            return Scalar._poly(self.num * other.num)
        if self.num.is_zero() or other.num.is_zero():
            return S_ZERO
        return Scalar(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if other.num.is_zero():
            raise DivisionByZeroError("scalar division by zero")
        return Scalar(self.num * other.den, self.den * other.num)

    def inv(self) -> "Scalar":
        if self.num.is_zero():
            raise DivisionByZeroError("inverting zero scalar")
        return Scalar(self.den, self.num)

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inv() ** (-n)
        out = S_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "Scalar":
        s = Scalar.__new__(Scalar)
        s.num = self.num.conj()
        s.den = self.den.conj()
        return s

    def re_im(self):
        """(Re, Im) as Scalars; requires a real denominator."""
        if self.den.conj() != self.den:
            num = self.num * self.den.conj()
            den = self.den * self.den.conj()
        else:
            num, den = self.num, self.den
        re, im = num.re_im()
        return Scalar(re, den), Scalar(im, den)

    def substitute(self, bindings: dict) -> "Scalar":
        """Substitute parameters by Scalars; keys are names or indices."""
        idx_bindings = {}
        for k, v in bindings.items():
            idx = _REGISTRY.lookup(k) if isinstance(k, str) else k
            if not isinstance(v, Scalar):
                v = as_scalar(v)
            idx_bindings[idx] = v
        num = self.num.substitute(idx_bindings)
        den = self.den.substitute(idx_bindings)
        if den.is_zero():
            raise DivisionByZeroError(
                f"substitution zeroes the denominator of {self.text()}")
        return num / den

    # equality / output ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Scalar.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def text(self) -> str:
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({self.text()})"

    def __str__(self):
        return self.text()


S_ZERO = Scalar(PP_ZERO, PP_ONE)
S_ONE = Scalar(PP_ONE, PP_ONE)
S_I = Scalar(ParamPoly.const(QI_I), PP_ONE)
S_HALF = Scalar(ParamPoly.const(QI_HALF), PP_ONE)


_SMALL_INTS: dict = {}


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        hit = _SMALL_INTS.get(x)
        if hit is None and -64 <= x <= 64:
            hit = _SMALL_INTS[x] = Scalar._poly(
                ParamPoly.const(GaussRational(x)))
        return hit if hit is not None else Scalar.from_int(x)
    if isinstance(x, GaussRational):
        return Scalar.from_gauss(x)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, type(_MPQ0)):
        return Scalar(ParamPoly.const(GaussRational(x)), PP_ONE)
    raise InputError(f"cannot interpret {x!r} as a scalar")


def rational(p, q=1) -> Scalar:
    return Scalar(ParamPoly.const(GaussRational(mpq(p, q))), PP_ONE)


def param(name: str) -> Scalar:
    return Scalar.param(name)


def complex_param(name: str) -> Scalar:
    """name_re + i*name_im as a Scalar over two real parameters."""
    return param(name + "_re") + S_I * param(name + "_im")


# --------------------------------------------------------------------------
# text form


def format_poly(p: ParamPoly, mult: str = "*") -> str:
    if not p.terms:
        return "0"
    parts = []
    for m, c in p.sorted_terms():
        mono = mult.join(
            f"{param_name(idx)}^{e}" if e > 1 else param_name(idx)
            for idx, e in m)
        if not mono:
            parts.append(format_gauss(c, mult))
            continue
        if c == QI_ONE:
            parts.append(mono)
        elif c == GaussRational(-1):
            parts.append(f"-{mono}")
        else:
            parts.append(f"{format_gauss(c, mult)}{mult}{mono}")
    out = parts[0]
    for t in parts[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def format_scalar(s: Scalar) -> str:
    if s.den.is_one():
        return format_poly(s.num)
    return f"({format_poly(s.num)})/({format_poly(s.den)})"


# --------------------------------------------------------------------------
# parser: +, -, *, /, ^, parentheses, integers, 'i', parameter names


class _Tok:
    __slots__ = ("kind", "val")

    def __init__(self, kind, val=None):
        self.kind = kind
        self.val = val


def _lex(text: str):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", int(text[i:j])))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            toks.append(_Tok("imag") if name == "i" else _Tok("name", name))
            i = j
        elif ch in "+-*/^()":
            toks.append(_Tok(ch))
            i += 1
        else:
            raise InputError(f"bad character {ch!r} in scalar text {text!r}")
    toks.append(_Tok("end"))
    return toks


class _Parser:
    def __init__(self, toks, register: bool):
        self.toks = toks
        self.pos = 0
        self.register = register

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        t = self.toks[self.pos]
        if kind and t.kind != kind:
            raise InputError(f"expected {kind}, got {t.kind}")
        self.pos += 1
        return t

    def expr(self) -> Scalar:
        out = self.term()
        while self.peek().kind in "+-":
            op = self.take().kind
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> Scalar:
        out = self.factor()
        while self.peek().kind in "*/":
            op = self.take().kind
            rhs = self.factor()
            out = out * rhs if op == "*" else out / rhs
        return out

    def factor(self) -> Scalar:
        sign = 1
        while self.peek().kind in "+-":
            if self.take().kind == "-":
                sign = -sign
        out = self.atom()
        if self.peek().kind == "^":
            self.take()
            neg = False
            if self.peek().kind == "-":
                self.take()
                neg = True
            e = self.take("int").val
            out = out ** (-e if neg else e)
        return -out if sign < 0 else out

    def atom(self) -> Scalar:
        t = self.peek()
        if t.kind == "int":
            self.take()
            return Scalar.from_int(t.val)
        if t.kind == "imag":
            self.take()
            return S_I
        if t.kind == "name":
            self.take()
            if not self.register:
                _REGISTRY.lookup(t.val)
            return param(t.val)
        if t.kind == "(":
            self.take()
            out = self.expr()
            self.take(")")
            return out
        raise InputError(f"unexpected token {t.kind} in scalar text")


def parse_scalar(text: str, register_names: bool = True) -> Scalar:
    """Parse canonical scalar text like ``-6/25*theta^2`` or ``(1+2*i)/(3)``.

    With ``register_names=False`` unknown parameter names are rejected
    instead of being interned (used by deserialisation to catch typos).
    """
    p = _Parser(_lex(text), register_names)
    out = p.expr()
    if p.peek().kind != "end":
        raise InputError(f"trailing input in scalar text {text!r}")
    return out
