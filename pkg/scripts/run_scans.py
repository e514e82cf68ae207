#!/usr/bin/env python3
"""Run every exhaustive scan in one pass and print compact verdict lines.

Covers the sumset size dichotomy, the extremal-nullity classification, the
additive-coset vanishing-form check, and both plane-count scans.  Exit code
is nonzero when any scan reports a counterexample.
"""

import argparse
import sys
import time

import gridnull as g


def line(name, verdict, instances, elapsed):
    tag = "ok" if verdict else "COUNTEREXAMPLE"
    print(f"{name:<28} {tag:<16} instances={instances:<7} {elapsed:.2f}s")
    return verdict


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scd-primes", type=int, nargs="*", default=[2, 3, 5, 7])
    ap.add_argument("--redei-orders", type=int, nargs="*", default=[5, 7, 9, 11, 13])
    ap.add_argument(
        "--ore-fields", nargs="*", default=["F2^2", "F2^3", "F3^2", "F3^3"]
    )
    args = ap.parse_args()

    all_ok = True
    for p in args.scd_primes:
        t0 = time.perf_counter()
        rep = g.scd_scan(p)
        all_ok &= line(f"sumset-dichotomy p={p}", rep.verdict, rep.instances,
                       time.perf_counter() - t0)
    for q in args.redei_orders:
        t0 = time.perf_counter()
        rep = g.redei_scan(q)
        all_ok &= line(f"extremal-nullity q={q}", rep.verdict, rep.instances,
                       time.perf_counter() - t0)
    for spec in args.ore_fields:
        ctx = g.parse_field(spec)
        t0 = time.perf_counter()
        groups = g.enumerate_additive_subgroups(ctx)
        ok = all(
            g.ore_form_check(ctx, list(gens))
            and g.ore_form_check(ctx, list(gens), shift=ctx.generator)
            for gens in groups
        )
        all_ok &= line(f"additive-form {spec}", ok, 2 * len(groups),
                       time.perf_counter() - t0)

    t0 = time.perf_counter()
    rep = g.plane_scan(g.parse_grid("mul(3) x mul(3) x mul(2)", g.parse_field("F7")),
                       mode="pp")
    all_ok &= line("plane-scan F7 mul grid", rep.verdict, rep.instances,
                   time.perf_counter() - t0)
    t0 = time.perf_counter()
    rep = g.plane_scan(
        g.parse_grid("all x tracezero x tracezero", g.parse_field("F3^2")),
        mode="ppp",
    )
    all_ok &= line("plane-scan F9 additive grid", rep.verdict, rep.instances,
                   time.perf_counter() - t0)
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
