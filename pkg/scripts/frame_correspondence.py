#!/usr/bin/env python3
"""Sweep all frames up to a world bound and tabulate the correspondence
between Lob-schema validity and the transitive+acyclic frame condition."""

import argparse
from collections import Counter

from glkit.kripke import (
    LOB_INSTANCE,
    acyclic,
    enumerate_frames,
    is_itf,
    transitive,
    valid_on_frame,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-worlds", type=int, default=3)
    args = ap.parse_args()

    tally: Counter[tuple[bool, bool]] = Counter()
    itf_count = 0
    mismatches = 0
    total = 0
    for fr in enumerate_frames(args.max_worlds):
        total += 1
        lob = valid_on_frame(fr, LOB_INSTANCE)
        cond = transitive(fr) and acyclic(fr)
        tally[(lob, cond)] += 1
        if lob != cond:
            mismatches += 1
            print(f"MISMATCH: worlds={sorted(fr.worlds)} rel={sorted(fr.rel)}")
        if is_itf(fr):
            itf_count += 1
            if not lob:
                print(f"ITF FRAME REFUTES LOB: rel={sorted(fr.rel)}")

    print(f"frames scanned:              {total}")
    print(f"validating Lob:              {tally[(True, True)] + tally[(True, False)]}")
    print(f"transitive and acyclic:      {tally[(True, True)] + tally[(False, True)]}")
    print(f"ITF frames:                  {itf_count}")
    print(f"correspondence mismatches:   {mismatches}")
    return 0 if mismatches == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
