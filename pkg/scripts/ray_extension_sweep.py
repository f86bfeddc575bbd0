#!/usr/bin/env python3
"""Extend random ray colorings over seeded one-ended truncations and verify.

    python3 scripts/ray_extension_sweep.py --count 200 --seed 7
"""

import argparse
import sys
from collections import Counter

from treesym import extend_ray_coloring, motion, random_one_ended_truncation, verify_distinguishing
import random


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--max-ray", type=int, default=20)
    ap.add_argument("--max-lobe", type=int, default=6)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    motions = Counter()
    failures = 0
    sizes = []
    for _ in range(args.count):
        tr, colors = random_one_ended_truncation(rng, max_ray=args.max_ray, max_lobe=args.max_lobe)
        sizes.append(tr.tree.n)
        motions[motion(tr.tree).to_json()] += 1
        ext = extend_ray_coloring(tr, colors)
        if not verify_distinguishing(tr.tree, ext, pinned=tr.ray[-1]):
            failures += 1

    print(f"truncations:   {args.count}")
    print(f"orders:        min {min(sizes)}, max {max(sizes)}")
    print(f"motions:       {dict(sorted(motions.items(), key=str))}")
    print(f"failures:      {failures}")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
