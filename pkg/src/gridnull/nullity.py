"""Moment analysis of finite subsets of a field.

A finite set A carries three families of moments: elementary (signed
coefficients of the monic polynomial vanishing on A), complete (computed by
an entwining recurrence from the elementary ones), and power sums.  The
nullity of A is the number of leading elementary moments that vanish, and
the Vandermonde degree counts leading vanishing power sums.  Both are capped
at |A|, and the cap is attained only by {0}.

Weights 1/P'(a) against the derivative of the vanishing polynomial drive the
coefficient-extraction and interpolation machinery; the classical rational
sum over A of a^d/P'(a) collapses to 0, 1, or a complete moment.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EmptySet,
    MixedFields,
    ParseError,
    PointNotOnGrid,
    PreconditionViolated,
)
from .field import FieldCtx, FieldElement
from .poly import UniPoly, parse_element


@dataclass(frozen=True)
class MomentTable:
    """Moments of one set, indexed 0..R: e[r], h[r], p[r]."""

    e: tuple
    h: tuple
    p: tuple

    @property
    def order(self) -> int:
        return len(self.e) - 1


class FiniteSet:
    """Immutable nonempty set of distinct field elements, insertion-ordered.

    Moment tables grow monotonically to the largest order ever requested;
    already-computed entries are never recomputed.  Cache fills replace whole
    tuples, so readers see either the old table or the extended one.
    """

    __slots__ = ("ctx", "elements", "_set", "_char", "_e", "_h", "_p", "_pows", "_weights")

    def __init__(self, ctx: FieldCtx, elements):
        elems = []
        seen = set()
        for v in elements:
            x = v if isinstance(v, FieldElement) else ctx.element(v)
            if x.ctx != ctx:
                raise MixedFields("set elements must share one field")
            if x not in seen:
                seen.add(x)
                elems.append(x)
        if not elems:
            raise EmptySet("a finite set of field elements must be non-empty")
        self.ctx = ctx
        self.elements = tuple(elems)
        self._set = frozenset(elems)
        self._char = None
        self._e = (ctx.one,)
        self._h = (ctx.one,)
        self._p = (ctx.from_int(len(elems)),)
        self._pows = tuple(ctx.one for _ in elems)  # a^r alongside _p[r]
        self._weights = None

    @property
    def char_poly(self) -> UniPoly:
        if self._char is None:
            self._char = UniPoly.from_roots(self.ctx, self.elements)
        return self._char

    def _check_order(self, R: int) -> None:
        if R < 0:
            raise PreconditionViolated("moment order must be non-negative")

    def _ensure_e(self, R: int) -> None:
        self._check_order(R)
        if len(self._e) > R:
            return
        n = len(self.elements)
        cp = self.char_poly
        e = list(self._e)
        for r in range(len(e), R + 1):
            if r > n:
                e.append(self.ctx.zero)
            else:
                c = cp.coefficient(n - r)
                e.append(-c if r % 2 else c)
        self._e = tuple(e)

    def _ensure_h(self, R: int) -> None:
        self._check_order(R)
        if len(self._h) > R:
            return
        self._ensure_e(R)
        e, h = self._e, list(self._h)
        for r in range(len(h), R + 1):
            acc = self.ctx.zero
            for i in range(1, r + 1):
                term = e[i] * h[r - i]
                acc = acc - term if i % 2 == 0 else acc + term
            h.append(acc)
        self._h = tuple(h)

    def _ensure_p(self, R: int) -> None:
        self._check_order(R)
        if len(self._p) > R:
            return
        p, pows = list(self._p), list(self._pows)
        for _ in range(len(p), R + 1):
            pows = [w * a for w, a in zip(pows, self.elements)]
            acc = self.ctx.zero
            for w in pows:
                acc = acc + w
            p.append(acc)
        self._p, self._pows = tuple(p), tuple(pows)

    def moments(self, R: int) -> MomentTable:
        self._ensure_e(R)
        self._ensure_h(R)
        self._ensure_p(R)
        return MomentTable(self._e[: R + 1], self._h[: R + 1], self._p[: R + 1])

    @property
    def nullity(self) -> int:
        n = len(self.elements)
        self._ensure_e(n)
        for r in range(1, n + 1):
            if not self._e[r].is_zero:
                return r - 1
        return n

    @property
    def vandermonde_degree(self) -> int:
        n = len(self.elements)
        self._ensure_p(n)
        for r in range(1, n + 1):
            if not self._p[r].is_zero:
                return r - 1
        return n

    def weight_at(self, a) -> FieldElement:
        """1/P'(a) for a in the set; distinct roots keep P'(a) nonzero."""
        if not isinstance(a, FieldElement):
            a = self.ctx.element(a)
        if self._weights is None:
            deriv = self.char_poly.derivative()
            self._weights = {x: deriv(x).inv() for x in self.elements}
        try:
            return self._weights[a]
        except KeyError:
            raise PointNotOnGrid(f"{a} is not in the set") from None

    def sylvester_sum(self, d: int) -> FieldElement:
        if d < 0:
            raise PreconditionViolated("sylvester_sum needs d >= 0")
        acc = self.ctx.zero
        for a in self.elements:
            acc = acc + a**d * self.weight_at(a)
        return acc

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, v) -> bool:
        try:
            x = v if isinstance(v, FieldElement) else self.ctx.element(v)
        except Exception:
            return False
        return x in self._set

    def __eq__(self, other):
        if not isinstance(other, FiniteSet):
            return NotImplemented
        return self.ctx == other.ctx and self._set == other._set

    def __hash__(self):
        return hash((self.ctx, self._set))

    def __repr__(self):
        return "{" + ", ".join(str(x) for x in self.elements) + "}"


def elementary_moments(A: FiniteSet, R: int) -> list:
    """[e_0, ..., e_R]; e_r is the signed degree-(|A|-r) coefficient."""
    return list(A.moments(R).e)


def complete_moments(A: FiniteSet, R: int) -> list:
    """[h_0, ..., h_R] via h_r = sum_{i=1}^{r} (-1)^(i+1) e_i h_{r-i}."""
    return list(A.moments(R).h)


def power_sums(A: FiniteSet, R: int) -> list:
    """[p_0, ..., p_R] with p_r the sum of r-th powers; p_0 = |A|."""
    return list(A.moments(R).p)


def nullity(A: FiniteSet) -> int:
    """Largest L in [0, |A|] with e_1 = ... = e_L = 0; |A| only for {0}."""
    return A.nullity


def vandermonde_degree(A: FiniteSet) -> int:
    """Largest L in [0, |A|] with p_1 = ... = p_L = 0."""
    return A.vandermonde_degree


def weight(grid, a) -> FieldElement:
    """Product over coordinates of 1/P'_i(a_i) for a point of the grid."""
    factors = grid.factors
    point = tuple(a)
    if len(point) != len(factors):
        raise PointNotOnGrid(
            f"point has {len(point)} coordinates, grid has {len(factors)}"
        )
    w = factors[0].ctx.one
    for A, x in zip(factors, point):
        w = w * A.weight_at(x)
    return w


def sylvester_sum(A: FiniteSet, d: int) -> FieldElement:
    """Sum over a in A of a^d / P'(a), evaluated directly."""
    return A.sylvester_sum(d)


def _split_top_level(text: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ParseError("unbalanced parentheses")
    parts.append("".join(cur))
    return parts


def parse_set(text: str, ctx: FieldCtx) -> FiniteSet:
    """Parse a brace-wrapped, comma-separated set of field elements."""
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise ParseError("set literal must look like {a, b, ...}")
    inner = s[1:-1].strip()
    if not inner:
        raise EmptySet("empty set literal")
    return FiniteSet(ctx, [parse_element(p, ctx) for p in _split_top_level(inner, ",")])
