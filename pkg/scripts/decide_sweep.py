#!/usr/bin/env python3
"""Decide a stream of random formulas, verify every countermodel
certificate, and cross-check every theorem against the small-frame
validity oracle. Prints summary statistics."""

import argparse
import random
import time

from glkit.completeness import Countermodel, decide, verify_certificate
from glkit.kripke import itf_valid_small
from glkit.syntax import Box, FALSE, TRUE, And, Atom, Iff, Imp, Not, Or, subformulas


def random_formula(rng, depth, names):
    if depth == 0 or rng.random() < 0.3:
        return rng.choice([FALSE, TRUE] + [Atom(a) for a in names])
    kind = rng.randrange(6)
    if kind == 0:
        return Not(random_formula(rng, depth - 1, names))
    if kind == 1:
        return Box(random_formula(rng, depth - 1, names))
    op = [And, Or, Imp, Iff][kind - 2]
    return op(
        random_formula(rng, depth - 1, names), random_formula(rng, depth - 1, names)
    )


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--depth", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--atoms", default="p,q")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    names = tuple(args.atoms.split(","))
    theorems = countermodels = 0
    world_total = 0
    failures = 0
    started = time.perf_counter()
    for _ in range(args.count):
        f = random_formula(rng, args.depth, names)
        if sum(1 for g in subformulas(f) if isinstance(g, Box)) > 4:
            continue
        v = decide(f)
        if isinstance(v, Countermodel):
            countermodels += 1
            world_total += len(v.model.worlds)
            if not verify_certificate(v):
                failures += 1
                print(f"CERTIFICATE REJECTED: {f}")
        else:
            theorems += 1
            if not itf_valid_small(f, 3):
                failures += 1
                print(f"THEOREM FAILS ORACLE: {f}")
    elapsed = time.perf_counter() - started

    decided = theorems + countermodels
    print(f"decided:            {decided}")
    print(f"theorems:           {theorems}")
    print(f"countermodels:      {countermodels}")
    if countermodels:
        print(f"avg model size:     {world_total / countermodels:.1f} worlds")
    print(f"verification fails: {failures}")
    print(f"elapsed:            {elapsed:.2f}s")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
