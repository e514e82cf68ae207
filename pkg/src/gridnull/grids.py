"""Cartesian grids of finite sets, and the structured families that feed them.

A grid is a product A_1 x ... x A_n of finite subsets of one field.  Its
joint nullity (and joint Vandermonde degree) is the minimum over the
factors, which is what every grid-level bound consumes.  The structured
constructors build the families with extremal nullity: shifted
multiplicative subgroups, cosets of additive subgroups in positive
characteristic, and the kernel of the absolute trace.
"""

from __future__ import annotations

import itertools
from math import prod

from .errors import (
    CharacteristicZero,
    EmptyFactorList,
    InfiniteField,
    MixedFields,
    NotExtensionField,
    OrderDoesNotDivide,
    ParseError,
    ZeroShift,
)
from .field import FieldCtx, FieldElement, trace
from .nullity import FiniteSet, _split_top_level, parse_set, weight as _weight
from .poly import parse_element


class Grid:
    """Immutable product of factors sharing one field."""

    __slots__ = (
        "ctx",
        "factors",
        "sizes",
        "size",
        "has_singleton",
        "joint_nullity",
        "joint_vandermonde",
    )

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise EmptyFactorList("a grid needs at least one factor")
        ctx = factors[0].ctx
        for A in factors:
            if A.ctx != ctx:
                raise MixedFields("grid factors must share one field")
        self.ctx = ctx
        self.factors = factors
        self.sizes = tuple(len(A) for A in factors)
        self.size = prod(self.sizes)
        self.has_singleton = any(s == 1 for s in self.sizes)
        self.joint_nullity = min(A.nullity for A in factors)
        self.joint_vandermonde = min(A.vandermonde_degree for A in factors)

    @property
    def n(self) -> int:
        return len(self.factors)

    def points(self):
        """Lexicographic product order, last coordinate fastest."""
        return itertools.product(*(A.elements for A in self.factors))

    def weight(self, a) -> FieldElement:
        return _weight(self, a)

    def __contains__(self, point) -> bool:
        pt = tuple(point)
        return len(pt) == len(self.factors) and all(
            x in A for A, x in zip(self.factors, pt)
        )

    def __eq__(self, other):
        if not isinstance(other, Grid):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return " x ".join(repr(A) for A in self.factors)


def grid_make(factors) -> Grid:
    """Build a grid from FiniteSet factors, populating the joint caches."""
    return Grid(factors)


def grid_points(grid: Grid):
    return list(grid.points())


def multiplicative_coset(ctx: FieldCtx, d: int, shift=None) -> FiniteSet:
    """shift * {x : x^d = 1}, for d dividing the number of units.

    Elements are listed with the subgroup in field enumeration order, then
    multiplied by the shift.
    """
    if ctx.kind == "rationals":
        raise InfiniteField("multiplicative cosets need a finite field")
    q = ctx.cardinality
    if d < 1 or (q - 1) % d != 0:
        raise OrderDoesNotDivide(f"{d} does not divide {q - 1}")
    if shift is None:
        shift = ctx.one
    elif not isinstance(shift, FieldElement):
        shift = ctx.element(shift)
    if shift.is_zero:
        raise ZeroShift("the shift must be a unit")
    one = ctx.one
    subgroup = [x for x in ctx.elements() if not x.is_zero and x**d == one]
    return FiniteSet(ctx, [shift * x for x in subgroup])


def additive_coset(ctx: FieldCtx, generators, shift=None) -> FiniteSet:
    """shift + span of the generators over the prime subfield.

    The span is enumerated by coefficient vectors in product order, so the
    result's element order is deterministic; dependent generators collapse
    by deduplication and the size is a power of the characteristic.
    """
    if ctx.kind == "rationals":
        raise CharacteristicZero("additive cosets need positive characteristic")
    p = ctx.characteristic
    gens = [
        g if isinstance(g, FieldElement) else ctx.element(g) for g in generators
    ]
    if shift is None:
        shift = ctx.zero
    elif not isinstance(shift, FieldElement):
        shift = ctx.element(shift)
    elements = []
    for coeffs in itertools.product(range(p), repeat=len(gens)):
        acc = shift
        for c, g in zip(coeffs, gens):
            if c:
                acc = acc + ctx.from_int(c) * g
        elements.append(acc)
    return FiniteSet(ctx, elements)


def trace_zero_set(ctx: FieldCtx) -> FiniteSet:
    """All elements with absolute trace zero, in field enumeration order."""
    if ctx.kind != "extension":
        raise NotExtensionField("the trace kernel needs a proper extension field")
    return FiniteSet(ctx, [x for x in ctx.elements() if trace(x).is_zero])


def parse_factor(text: str, ctx: FieldCtx) -> FiniteSet:
    """One factor: {…} literal, mul(d[,shift]), add(g;…[,shift]), tracezero, all, units."""
    s = text.strip()
    if s.startswith("{"):
        return parse_set(s, ctx)
    if s == "all":
        if ctx.kind == "rationals":
            raise InfiniteField("'all' needs a finite field")
        return FiniteSet(ctx, ctx.elements())
    if s == "units":
        if ctx.kind == "rationals":
            raise InfiniteField("'units' needs a finite field")
        return FiniteSet(ctx, [x for x in ctx.elements() if not x.is_zero])
    if s == "tracezero":
        return trace_zero_set(ctx)
    for name in ("mul", "add"):
        if s.startswith(name + "(") and s.endswith(")"):
            args = _split_top_level(s[len(name) + 1 : -1], ",")
            args = [a.strip() for a in args]
            if name == "mul":
                if len(args) not in (1, 2) or not args[0].isdigit():
                    raise ParseError("expected mul(d) or mul(d, shift)")
                shift = parse_element(args[1], ctx) if len(args) == 2 else None
                return multiplicative_coset(ctx, int(args[0]), shift)
            if len(args) not in (1, 2):
                raise ParseError("expected add(g1;g2;...) or add(g1;...;gk, shift)")
            gen_texts = [g for g in _split_top_level(args[0], ";") if g.strip()]
            gens = [parse_element(g, ctx) for g in gen_texts]
            shift = parse_element(args[1], ctx) if len(args) == 2 else None
            return additive_coset(ctx, gens, shift)
    raise ParseError(f"unrecognized grid factor {s!r}")


def _split_factors(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced brackets in grid")
        if ch == "x" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ParseError("unbalanced brackets in grid")
    parts.append("".join(cur))
    return parts


def parse_grid(text: str, ctx: FieldCtx) -> Grid:
    """Parse factors separated by x, e.g. 'mul(3) x {0,1} x tracezero'."""
    parts = _split_factors(text)
    if not any(p.strip() for p in parts):
        raise EmptyFactorList("empty grid expression")
    return grid_make([parse_factor(p, ctx) for p in parts])
