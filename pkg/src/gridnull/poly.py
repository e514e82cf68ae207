"""Dense univariate and sparse multivariate polynomials with exact coefficients.

Univariate polynomials store a trimmed coefficient tuple, constant term
first.  Multivariate polynomials store a sparse map from exponent tuples to
nonzero coefficients.  The degree of the zero polynomial is the dedicated
sentinel MINUS_INFINITY, which compares below every integer and absorbs
addition, so degree arithmetic needs no special cases.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    DimensionMismatch,
    EmptySet,
    ExponentOutOfRange,
    MixedFields,
    ParseError,
    UnknownVariable,
)
from .field import FieldCtx, FieldElement, Rationals


class _MinusInfinity:
    """Order-absorbing degree sentinel for the zero polynomial."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()

Monomial = tuple[int, ...]


class UniPoly:
    """Univariate polynomial over a field context."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable = ()):
        cs = [c if isinstance(c, FieldElement) else ctx.element(c) for c in coeffs]
        for c in cs:
            if c.ctx != ctx:
                raise MixedFields("coefficient from a different field")
        while cs and cs[-1].is_zero:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @classmethod
    def from_roots(cls, ctx: FieldCtx, roots: Sequence[FieldElement]) -> "UniPoly":
        coeffs = [ctx.one]
        for a in roots:
            nxt = [ctx.zero] * (len(coeffs) + 1)
            for j, c in enumerate(coeffs):
                nxt[j + 1] = nxt[j + 1] + c
                nxt[j] = nxt[j] - a * c
            coeffs = nxt
        return cls(ctx, coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one

    def coefficient(self, k: int) -> FieldElement:
        if k < 0:
            raise ExponentOutOfRange("negative exponent")
        return self.coeffs[k] if k < len(self.coeffs) else self.ctx.zero

    def __call__(self, x) -> FieldElement:
        if not isinstance(x, FieldElement):
            x = self.ctx.element(x)
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        cs = [
            self.ctx.from_int(k) * c
            for k, c in enumerate(self.coeffs)
            if k >= 1
        ]
        return UniPoly(self.ctx, cs)

    def _binop(self, other, op):
        if not isinstance(other, UniPoly):
            return NotImplemented
        if other.ctx != self.ctx:
            raise MixedFields("polynomials over different fields")
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else self.ctx.zero
            b = other.coeffs[i] if i < len(other.coeffs) else self.ctx.zero
            out.append(op(a, b))
        return UniPoly(self.ctx, out)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __neg__(self):
        return UniPoly(self.ctx, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return UniPoly(self.ctx, [c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if other.ctx != self.ctx:
            raise MixedFields("polynomials over different fields")
        if self.is_zero or other.is_zero:
            return UniPoly(self.ctx, [])
        out = [self.ctx.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.ctx, out)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __str__(self):
        return _format_terms(
            [((k,), c) for k, c in enumerate(self.coeffs) if not c.is_zero],
            lambda m: _power_string("X", m[0]),
        )

    __repr__ = __str__


def char_poly(A) -> UniPoly:
    """Monic polynomial with simple roots exactly at the given elements."""
    elements = list(A)
    if not elements:
        raise EmptySet("cannot build the characteristic polynomial of nothing")
    ctx = elements[0].ctx
    if len(set(elements)) != len(elements):
        raise ValueError("elements must be distinct")
    return UniPoly.from_roots(ctx, elements)


def formal_derivative(f: UniPoly) -> UniPoly:
    return f.derivative()


class MultiPoly:
    """Sparse polynomial in n variables; keys are exponent tuples."""

    __slots__ = ("ctx", "n", "terms")

    def __init__(self, ctx: FieldCtx, n: int, terms: Mapping[Monomial, object] = ()):
        if n < 0:
            raise DimensionMismatch("variable count must be non-negative")
        clean: dict[Monomial, FieldElement] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            m = tuple(int(k) for k in m)
            if len(m) != n:
                raise DimensionMismatch(
                    f"exponent tuple {m} has length {len(m)}, expected {n}"
                )
            if any(k < 0 for k in m):
                raise ExponentOutOfRange("negative exponent")
            if not isinstance(c, FieldElement):
                c = ctx.element(c)
            elif c.ctx != ctx:
                raise MixedFields("coefficient from a different field")
            if not c.is_zero:
                clean[m] = clean[m] + c if m in clean else c
                if clean[m].is_zero:
                    del clean[m]
        self.ctx = ctx
        self.n = n
        self.terms = clean

    @classmethod
    def zero(cls, ctx: FieldCtx, n: int) -> "MultiPoly":
        return cls(ctx, n, {})

    @classmethod
    def constant(cls, ctx: FieldCtx, n: int, c) -> "MultiPoly":
        return cls(ctx, n, {(0,) * n: c})

    @classmethod
    def monomial(cls, ctx: FieldCtx, n: int, exponents: Sequence[int], c=1) -> "MultiPoly":
        return cls(ctx, n, {tuple(exponents): c})

    @classmethod
    def variable(cls, ctx: FieldCtx, n: int, index: int) -> "MultiPoly":
        """The variable x<index>, 1-based."""
        if not 1 <= index <= n:
            raise UnknownVariable(f"x{index} is outside 1..{n}")
        exps = [0] * n
        exps[index - 1] = 1
        return cls(ctx, n, {tuple(exps): 1})

    @property
    def total_degree(self):
        if not self.terms:
            return MINUS_INFINITY
        return max(sum(m) for m in self.terms)

    def var_degree(self, i: int) -> int:
        """Largest exponent of variable i (0-based); 0 for the zero polynomial."""
        return max((m[i] for m in self.terms), default=0)

    def var_degrees(self) -> tuple[int, ...]:
        return tuple(self.var_degree(i) for i in range(self.n))

    def coefficient(self, m: Sequence[int]) -> FieldElement:
        m = tuple(m)
        if len(m) != self.n:
            raise DimensionMismatch(f"monomial {m} has wrong arity")
        return self.terms.get(m, self.ctx.zero)

    def evaluate(self, point: Sequence) -> FieldElement:
        pt = tuple(
            x if isinstance(x, FieldElement) else self.ctx.element(x) for x in point
        )
        if len(pt) != self.n:
            raise DimensionMismatch(
                f"point has {len(pt)} coordinates, expected {self.n}"
            )
        for x in pt:
            if x.ctx != self.ctx:
                raise MixedFields("evaluation point from a different field")
        total = self.ctx.zero
        for m, c in self.terms.items():
            v = c
            for x, k in zip(pt, m):
                if k:
                    v = v * x**k
            total = total + v
        return total

    def _compat(self, other):
        if other.ctx != self.ctx:
            raise MixedFields("polynomials over different fields")
        if other.n != self.n:
            raise DimensionMismatch("polynomials in different variable counts")

    def __add__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = MultiPoly.constant(self.ctx, self.n, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._compat(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, self.ctx.zero) + c
            if s.is_zero:
                out.pop(m, None)
            else:
                out[m] = s
        return MultiPoly(self.ctx, self.n, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = MultiPoly.constant(self.ctx, self.n, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return MultiPoly(self.ctx, self.n, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.ctx.from_int(other)
        if isinstance(other, FieldElement):
            return MultiPoly(
                self.ctx, self.n, {m: c * other for m, c in self.terms.items()}
            )
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._compat(other)
        out: dict[Monomial, FieldElement] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, self.ctx.zero) + c1 * c2
                if s.is_zero:
                    out.pop(m, None)
                else:
                    out[m] = s
        return MultiPoly(self.ctx, self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ExponentOutOfRange("polynomial exponents must be integers >= 0")
        result = MultiPoly.constant(self.ctx, self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.n == other.n and self.terms == other.terms

    def __str__(self):
        return format_poly(self)

    __repr__ = __str__


def multi_eval(f: MultiPoly, point: Sequence) -> FieldElement:
    """Evaluate f at a point, with 0**0 taken as 1."""
    return f.evaluate(point)


def coefficient(f: MultiPoly, m: Sequence[int]) -> FieldElement:
    """The stored coefficient of the monomial with exponent tuple m."""
    return f.coefficient(m)


def raise_degree(f: MultiPoly, grid, k: Sequence[int]) -> MultiPoly:
    """Multiply f by prod_i x_i^(s_i - k_i - 1) where s_i are the factor sizes.

    Accepts a Grid or a plain sequence of sizes.  This moves the monomial k of
    f onto the top monomial (s_1 - 1, ..., s_n - 1) of the product.
    """
    sizes = getattr(grid, "sizes", None)
    if sizes is None:
        sizes = tuple(int(s) for s in grid)
    k = tuple(int(x) for x in k)
    if len(k) != f.n or len(sizes) != f.n:
        raise DimensionMismatch("sizes, exponents, and variables disagree")
    for ki, si in zip(k, sizes):
        if not 0 <= ki <= si - 1:
            raise ExponentOutOfRange(f"exponent {ki} outside 0..{si - 1}")
    shifts = tuple(si - ki - 1 for ki, si in zip(k, sizes))
    shifted = {
        tuple(e + s for e, s in zip(m, shifts)): c for m, c in f.terms.items()
    }
    return MultiPoly(f.ctx, f.n, shifted)


# ---------------------------------------------------------------------------
# Parsing and formatting
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(x\d+)|(t)|([+\-*^()/]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad = pos + (len(text) - pos - len(stripped))
            raise ParseError(f"unexpected character {stripped[0]!r}", bad)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("var", int(m.group(2)[1:]), m.start(2)))
        elif m.group(3) is not None:
            tokens.append(("gen", "t", m.start(3)))
        else:
            tokens.append(("op", m.group(4), m.start(4)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int, ctx: FieldCtx):
        self.tokens = _tokenize(text)
        self.i = 0
        self.n = n
        self.ctx = ctx

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self) -> MultiPoly:
        f = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {val!r}", pos)
        return f

    def expr(self) -> MultiPoly:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        f = self.term()
        if sign < 0:
            f = -f
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                g = self.term()
                f = f + g if val == "+" else f - g
            else:
                return f

    def term(self) -> MultiPoly:
        f = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                f = f * self.factor()
            else:
                return f

    def factor(self) -> MultiPoly:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, exp, pos = self.take()
            if kind != "int":
                raise ParseError("expected a non-negative integer exponent", pos)
            base = base**exp
        return base

    def atom(self) -> MultiPoly:
        kind, val, pos = self.take()
        if kind == "int":
            nxt_kind, nxt_val, _ = self.peek()
            if nxt_kind == "op" and nxt_val == "/":
                if self.ctx.kind != "rationals":
                    raise ParseError("fraction literals need the rationals", pos)
                self.take()
                dkind, den, dpos = self.take()
                if dkind != "int" or den == 0:
                    raise ParseError("expected a nonzero denominator", dpos)
                from fractions import Fraction

                return MultiPoly.constant(self.ctx, self.n, Fraction(val, den))
            return MultiPoly.constant(self.ctx, self.n, val)
        if kind == "var":
            if not 1 <= val <= self.n:
                raise UnknownVariable(f"x{val} is outside 1..{self.n}", pos)
            return MultiPoly.variable(self.ctx, self.n, val)
        if kind == "gen":
            if self.ctx.kind != "extension":
                raise UnknownVariable(
                    "t denotes the extension generator and needs an extension field",
                    pos,
                )
            return MultiPoly.constant(self.ctx, self.n, self.ctx.generator)
        if kind == "op" and val == "(":
            f = self.expr()
            self.expect_op(")")
            return f
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_poly(text: str, n: int, ctx: FieldCtx) -> MultiPoly:
    """Parse a polynomial in variables x1..xn over the given field.

    Terms are joined by + and -; a term is a product of integer literals
    (fractions over the rationals, t over an extension field), variables with
    optional integer exponents, and parenthesized subexpressions, which are
    expanded during parsing.
    """
    return _Parser(text, n, ctx).parse()


def parse_element(text: str, ctx: FieldCtx) -> FieldElement:
    """Parse a single field element using the polynomial grammar."""
    return parse_poly(text, 0, ctx).evaluate(())


def _power_string(name: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return name
    return f"{name}^{k}"


def _format_terms(pairs, monomial_str) -> str:
    """Shared term joiner; pairs are (sort-key monomial, coefficient)."""
    if not pairs:
        return "0"
    ordered = sorted(pairs, key=lambda mc: (sum(mc[0]), mc[0]), reverse=True)
    pieces = []
    for m, c in ordered:
        var_part = monomial_str(m)
        s = str(c)
        negative = s.startswith("-")
        if negative:
            s = s[1:]
        if var_part:
            if s == "1":
                body = var_part
            else:
                if any(ch in s for ch in "+-*"):
                    s = f"({s})"
                body = f"{s}*{var_part}"
        else:
            body = s
        pieces.append(("-" if negative else "+", body))
    sign, body = pieces[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def format_poly(f: MultiPoly) -> str:
    """Render terms in graded-lexicographic order, highest first."""

    def mono(m: Monomial) -> str:
        parts = [
            _power_string(f"x{i + 1}", k) for i, k in enumerate(m) if k > 0
        ]
        return "*".join(parts)

    return _format_terms(list(f.terms.items()), mono)
