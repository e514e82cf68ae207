"""Naive reference implementations and exhaustive scans.

Everything here is deliberately slow and literal: subset enumeration for
elementary moments, weak compositions for complete ones, full power-set
scans for the classification results.  The fast paths are tested against
these, never the other way around, and every oracle enforces its size
bounds with an error instead of silently delegating.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import (
    CharacteristicZero,
    EvenQ,
    FieldNotRationals,
    NotPrimeField,
    PreconditionViolated,
    ScanTooLarge,
    SizeBoundExceeded,
)
from .field import ExtensionField, FieldCtx, FieldElement, PrimeField, _is_prime
from .grids import additive_coset
from .nullity import FiniteSet, MomentTable
from .poly import MultiPoly, Monomial
from .reports import ScanReport


@dataclass(frozen=True)
class OracleConfig:
    max_set_size: int = 8
    max_degree: int = 16
    max_subset_scan_q: int = 13
    series_truncation_order: int = 12
    rng_seed: int = 0

    def __post_init__(self):
        if min(
            self.max_set_size,
            self.max_degree,
            self.max_subset_scan_q,
            self.series_truncation_order,
        ) <= 0:
            raise PreconditionViolated("oracle bounds must be positive")


_DEFAULT = OracleConfig()


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def moments_bruteforce(A: FiniteSet, R: int, config: OracleConfig = None) -> MomentTable:
    """Moments by raw enumeration: r-subsets, weak compositions, power sums."""
    cfg = config or _DEFAULT
    if len(A) > cfg.max_set_size:
        raise SizeBoundExceeded(f"set size {len(A)} exceeds {cfg.max_set_size}")
    if R > cfg.max_degree:
        raise SizeBoundExceeded(f"order {R} exceeds {cfg.max_degree}")
    ctx = A.ctx
    elems = A.elements
    e = [ctx.one]
    h = [ctx.one]
    p = [ctx.from_int(len(elems))]
    for r in range(1, R + 1):
        acc = ctx.zero
        for subset in itertools.combinations(elems, r):
            prod = ctx.one
            for x in subset:
                prod = prod * x
            acc = acc + prod
        e.append(acc)
        acc = ctx.zero
        for ks in _compositions(r, len(elems)):
            prod = ctx.one
            for x, k in zip(elems, ks):
                if k:
                    prod = prod * x**k
            acc = acc + prod
        h.append(acc)
        acc = ctx.zero
        for x in elems:
            acc = acc + x**r
        p.append(acc)
    return MomentTable(tuple(e), tuple(h), tuple(p))


def sylvester_rhs_bruteforce(A: FiniteSet, d: int, config: OracleConfig = None) -> FieldElement:
    """Sum of all monomials of degree d - |A| + 1 in the elements of A."""
    cfg = config or _DEFAULT
    if len(A) > cfg.max_set_size:
        raise SizeBoundExceeded(f"set size {len(A)} exceeds {cfg.max_set_size}")
    if d > cfg.max_degree:
        raise SizeBoundExceeded(f"degree {d} exceeds {cfg.max_degree}")
    ctx = A.ctx
    total = d - len(A) + 1
    if total < 0:
        return ctx.zero
    acc = ctx.zero
    for ks in _compositions(total, len(A)):
        prod = ctx.one
        for x, k in zip(A.elements, ks):
            if k:
                prod = prod * x**k
        acc = acc + prod
    return acc


def exp_series_check(A: FiniteSet, D: int, config: OracleConfig = None) -> bool:
    """Exponential generating identity, compared term by term up to z^D.

    The left side packages the complete moments with factorial denominators;
    the right side is the sum of exp(a z) against the derivative weights.
    Both sides are expanded with independent code paths and exact rationals.
    """
    cfg = config or _DEFAULT
    if A.ctx.kind != "rationals":
        raise FieldNotRationals("the series identity is checked over the rationals")
    if len(A) < 2:
        raise PreconditionViolated("the series identity needs at least two elements")
    if D > cfg.series_truncation_order:
        raise SizeBoundExceeded(f"order {D} exceeds {cfg.series_truncation_order}")
    ctx = A.ctx
    m = len(A)
    table = moments_bruteforce(A, max(D - m + 1, 0), cfg)
    for s in range(D + 1):
        lhs = table.h[s - m + 1] if s >= m - 1 else ctx.zero
        rhs = ctx.zero
        for a in A:
            rhs = rhs + a**s * A.weight_at(a)
        if lhs != rhs:
            return False
    return True


def _field_for_order(q: int) -> FieldCtx:
    if _is_prime(q):
        return PrimeField(q)
    for p in range(2, q):
        if _is_prime(p) and q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m == 1:
                return ExtensionField(p, e)
            break
    raise PreconditionViolated(f"{q} is not a prime power")


def redei_scan(q: int, config: OracleConfig = None) -> ScanReport:
    """All subsets of a small odd field: who reaches nullity (q-1)/2?

    The expected answer is exactly the full field and its units.
    """
    cfg = config or _DEFAULT
    if q % 2 == 0:
        raise EvenQ(f"half of {q} - 1 is not an integer")
    if q <= 3:
        raise PreconditionViolated("the classification needs q > 3")
    if q > cfg.max_subset_scan_q:
        raise ScanTooLarge(f"2^{q} subsets exceed the scan bound")
    ctx = _field_for_order(q)
    elements = ctx.elements()
    lam = (q - 1) // 2
    qualifying = []
    instances = 0
    for mask in range(1, 1 << q):
        instances += 1
        subset = [elements[i] for i in range(q) if mask >> i & 1]
        A = FiniteSet(ctx, subset)
        if A.nullity >= lam:
            qualifying.append(A)
    expected = [
        FiniteSet(ctx, elements),
        FiniteSet(ctx, [x for x in elements if not x.is_zero]),
    ]
    unexpected = [A for A in qualifying if A not in expected]
    missing = [A for A in expected if A not in qualifying]
    verdict = not unexpected and not missing
    return ScanReport(
        name="redei",
        instances=instances,
        verdict=verdict,
        details={
            "q": q,
            "lambda": lam,
            "qualifying": [repr(A) for A in qualifying],
        },
        counterexamples=tuple(
            {"set": repr(A), "problem": "unexpected"} for A in unexpected
        )
        + tuple({"set": repr(A), "problem": "missing"} for A in missing),
    )


def scd_scan(p: int, config: OracleConfig = None) -> ScanReport:
    """Sumset dichotomy over F_p for every pair of nonempty subsets.

    Subsets are bitmasks; the sumset of masks is an or-fold of cyclic
    rotations, and nullities are precomputed once per mask.
    """
    if not _is_prime(p):
        raise NotPrimeField(f"{p} is not prime")
    if p > 7:
        raise ScanTooLarge(f"all-pairs scan needs p <= 7, got {p}")
    ctx = PrimeField(p)
    elements = ctx.elements()
    full = (1 << p) - 1
    null_of = [0] * (full + 1)
    size_of = [0] * (full + 1)
    for mask in range(1, full + 1):
        subset = [elements[i] for i in range(p) if mask >> i & 1]
        null_of[mask] = FiniteSet(ctx, subset).nullity
        size_of[mask] = len(subset)

    def rotate(mask: int, shift: int) -> int:
        shift %= p
        return ((mask << shift) | (mask >> (p - shift))) & full

    bad = []
    instances = 0
    for a_mask in range(1, full + 1):
        for b_mask in range(1, full + 1):
            instances += 1
            c_mask = 0
            for b in range(p):
                if b_mask >> b & 1:
                    c_mask |= rotate(a_mask, b)
            ok = null_of[c_mask] >= min(null_of[a_mask], null_of[b_mask]) or (
                size_of[c_mask] >= size_of[a_mask] + size_of[b_mask] + null_of[c_mask]
            )
            if not ok:
                bad.append({"a_mask": a_mask, "b_mask": b_mask, "sum_mask": c_mask})
    return ScanReport(
        name="scd",
        instances=instances,
        verdict=not bad,
        details={"p": p, "pairs": instances},
        counterexamples=tuple(bad),
    )


def ore_form_check(ctx: FieldCtx, generators, shift=None, config: OracleConfig = None) -> bool:
    """Structural checks for a coset of an additive subgroup.

    Verifies that the vanishing polynomial is supported on p-power degrees
    (plus a constant), the binomial relations on elementary moments, the
    translation invariance of moments under subgroup shifts, and, for the
    subgroup itself, that the coefficient of X is the product of the nonzero
    elements.
    """
    if ctx.kind == "rationals":
        raise CharacteristicZero("additive structure needs characteristic p > 0")
    p = ctx.characteristic
    subgroup = additive_coset(ctx, generators)
    A = additive_coset(ctx, generators, shift)
    n = len(A)
    cp = A.char_poly

    p_powers = set()
    power = 1
    while power <= n:
        p_powers.add(power)
        power *= p
    support = {k for k in range(n + 1) if not cp.coefficient(k).is_zero}
    if not support <= p_powers | {0}:
        return False
    shift_in_subgroup = (shift is None) or (
        (shift if isinstance(shift, FieldElement) else ctx.element(shift)) in subgroup
    )
    if shift_in_subgroup and not cp.coefficient(0).is_zero:
        return False

    base = A.moments(n - 1).e
    for k in range(1, n):
        for r in range(k):
            if not (ctx.from_int(math.comb(n - r, k - r)) * base[r]).is_zero:
                return False

    for c in subgroup:
        translated = FiniteSet(ctx, [c + a for a in A])
        if translated.moments(n - 1).e != base:
            return False

    if shift_in_subgroup:
        prod = ctx.one
        for b in subgroup:
            if not b.is_zero:
                prod = prod * b
        coeff_x = subgroup.char_poly.coefficient(1)
        if coeff_x != prod or coeff_x.is_zero:
            return False
    return True


def enumerate_additive_subgroups(ctx: FieldCtx) -> list:
    """Generator tuples, one per distinct additive subgroup of the field.

    Scans generator subsets of size up to the extension degree and keeps the
    first subset that spans each subgroup; the empty tuple spans {0}.
    """
    if ctx.kind == "rationals":
        raise CharacteristicZero("additive subgroups need characteristic p > 0")
    e = ctx.e if ctx.kind == "extension" else 1
    nonzero = [x for x in ctx.elements() if not x.is_zero]
    found = {}
    for size in range(e + 1):
        for gens in itertools.combinations(nonzero, size):
            span = frozenset(additive_coset(ctx, list(gens)).elements)
            if span not in found:
                found[span] = gens
    return list(found.values())


def coefficient_oracle(f: MultiPoly, k: Monomial) -> FieldElement:
    """Independent coefficient lookup by scanning the term list."""
    k = tuple(int(x) for x in k)
    for m, c in f.terms.items():
        if m == k:
            return c
    return f.ctx.zero
