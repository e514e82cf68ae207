"""Seeded instance generators shared across the suite.

Every random draw goes through a random.Random seeded by the caller, so a
failing batch replays exactly from its seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

import gridnull as g

Q = g.Rationals()
F2 = g.PrimeField(2)
F3 = g.PrimeField(3)
F5 = g.PrimeField(5)
F7 = g.PrimeField(7)
F11 = g.PrimeField(11)
F13 = g.PrimeField(13)
F4 = g.ExtensionField(2, 2)
F8 = g.ExtensionField(2, 3)
F9 = g.ExtensionField(3, 2)
F27 = g.ExtensionField(3, 3)


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_rational(rng) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 4))


def random_element(rng, ctx):
    if ctx.kind == "rationals":
        return ctx.element(random_rational(rng))
    return rng.choice(ctx.elements())


def nonzero_element(rng, ctx):
    while True:
        x = random_element(rng, ctx)
        if not x.is_zero:
            return x


def random_rational_set(rng, size: int) -> g.FiniteSet:
    vals = set()
    while len(vals) < size:
        vals.add(random_rational(rng))
    return g.FiniteSet(Q, sorted(vals))


def random_subset(rng, ctx, size: int) -> g.FiniteSet:
    return g.FiniteSet(ctx, rng.sample(ctx.elements(), size))


def random_set(rng, ctx, size: int) -> g.FiniteSet:
    if ctx.kind == "rationals":
        return random_rational_set(rng, size)
    return random_subset(rng, ctx, size)


def zero_sum_rational_set(rng, size: int) -> g.FiniteSet:
    """A rational set with vanishing element sum (so at least 1-Vandermonde)."""
    while True:
        head = set()
        while len(head) < size - 1:
            head.add(random_rational(rng))
        last = -sum(head)
        if last not in head:
            return g.FiniteSet(Q, sorted(head) + [last])


def random_monomial(rng, n: int, total_bound: int, var_bound=None) -> tuple:
    m = []
    remaining = rng.randint(0, total_bound)
    for _ in range(n):
        cap = remaining if var_bound is None else min(remaining, var_bound)
        k = rng.randint(0, cap)
        m.append(k)
        remaining -= k
    rng.shuffle(m)
    return tuple(m)


def random_multipoly(rng, ctx, n: int, total_bound: int, max_terms: int = 6,
                     var_bound=None) -> g.MultiPoly:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        m = random_monomial(rng, n, total_bound, var_bound)
        terms.append((m, random_element(rng, ctx)))
    return g.MultiPoly(ctx, n, terms)


def random_varbounded_poly(rng, ctx, n: int, var_bound: int,
                           max_terms: int = 6) -> g.MultiPoly:
    """Each variable's exponent at most var_bound; total degree unrestricted."""
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        m = tuple(rng.randint(0, var_bound) for _ in range(n))
        terms.append((m, random_element(rng, ctx)))
    return g.MultiPoly(ctx, n, terms)


def random_structured_factor(rng, ctx, max_size: int = 6) -> g.FiniteSet:
    """A factor that is sometimes a shifted multiplicative subgroup, else a
    plain random subset of size at least 2."""
    q = ctx.cardinality
    if rng.random() < 0.4:
        divisors = [d for d in range(2, max_size + 1) if (q - 1) % d == 0]
        if divisors:
            return g.multiplicative_coset(
                ctx, rng.choice(divisors), nonzero_element(rng, ctx)
            )
    return random_subset(rng, ctx, rng.randint(2, min(max_size, q)))


def random_gcn_instance(rng):
    """A (poly, grid, monomial) triple satisfying the witness hypothesis."""
    ctx = rng.choice([F5, F7, F11, F13])
    n = rng.randint(1, 3)
    grid = g.grid_make([random_structured_factor(rng, ctx) for _ in range(n)])
    k = tuple(rng.randint(0, s - 1) for s in grid.sizes)
    bound = sum(k) + grid.joint_nullity
    terms = [(k, nonzero_element(rng, ctx))]
    for _ in range(rng.randint(0, 4)):
        m = random_monomial(rng, n, bound)
        if m != k:
            terms.append((m, random_element(rng, ctx)))
    return g.MultiPoly(ctx, n, terms), grid, k


def random_cct_instance(rng):
    """A (poly, grid) pair within the weighted-sum degree bound."""
    ctx = rng.choice([F5, F7, F11])
    n = rng.randint(1, 3)
    grid = g.grid_make([random_structured_factor(rng, ctx) for _ in range(n)])
    bound = sum(s - 1 for s in grid.sizes) + grid.joint_nullity
    f = random_multipoly(rng, ctx, n, bound)
    return f, grid


def random_cct_overflow_instance(rng):
    """A (poly, grid) pair whose degree exceeds the bound by exactly one."""
    ctx = rng.choice([F5, F7, F11])
    n = rng.randint(1, 2)
    grid = g.grid_make([random_structured_factor(rng, ctx) for _ in range(n)])
    bound = sum(s - 1 for s in grid.sizes) + grid.joint_nullity
    over = [0] * n
    remaining = bound + 1
    for i in range(n - 1):
        over[i] = rng.randint(0, remaining)
        remaining -= over[i]
    over[-1] = remaining
    rng.shuffle(over)
    terms = [(tuple(over), nonzero_element(rng, ctx))]
    for _ in range(rng.randint(0, 3)):
        terms.append((random_monomial(rng, n, bound), random_element(rng, ctx)))
    return g.MultiPoly(ctx, n, terms), grid


def random_mul_grid(rng, ctx, n=None) -> g.Grid:
    """Factors are shifted multiplicative subgroups of order at least 2."""
    q = ctx.cardinality
    divisors = [d for d in range(2, q) if (q - 1) % d == 0]
    n = n or rng.randint(1, 3)
    return g.grid_make(
        [
            g.multiplicative_coset(ctx, rng.choice(divisors), nonzero_element(rng, ctx))
            for _ in range(n)
        ]
    )


def random_add_grid(rng, ctx, n=None, min_size=3, shifts=True) -> g.Grid:
    """Factors are additive cosets of size at least min_size."""
    nonzero = [x for x in ctx.elements() if not x.is_zero]
    n = n or rng.randint(1, 3)
    factors = []
    while len(factors) < n:
        rank = rng.randint(1, ctx.e)
        gens = rng.sample(nonzero, rank)
        shift = random_element(rng, ctx) if shifts else None
        A = g.additive_coset(ctx, gens, shift)
        if len(A) >= min_size:
            factors.append(A)
    return g.grid_make(factors)
