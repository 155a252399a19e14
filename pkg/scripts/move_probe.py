#!/usr/bin/env python3
"""Exhaustively verify that every proper (max degree + 1)-coloring with class
gap at least 2 on a small graph admits an admissible move of size at most 3.

Sweeps all graphs up to isomorphism for n <= --max-n and all proper
colorings up to color permutation (both reductions are sound because move
existence is invariant under graph isomorphism and palette permutation).
Counterexamples, if any ever appear, are printed and written to a JSON
archive.

Usage: python3 scripts/move_probe.py [--max-n 7] [--archive FILE]
"""

import argparse
import json
import sys
import time

from equicolor import PartialColoring
from equicolor.oracle import (
    OracleBudget,
    canonical_graphs,
    colorings_up_to_color_permutation,
    improving_move_exists,
)


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--archive", default="move_probe_counterexamples.json")
    args = parser.parse_args()

    budget = OracleBudget(max_vertices=args.max_n + 1,
                          max_palette=args.max_n + 1)
    bad = []
    t0 = time.perf_counter()
    total = 0
    for n in range(1, args.max_n + 1):
        atlas = canonical_graphs(n)
        layer = 0
        for g in atlas:
            k = g.max_degree + 1
            for colors in colorings_up_to_color_permutation(g, k):
                f = PartialColoring(n, k, list(colors))
                if f.gap() < 2:
                    continue
                layer += 1
                if not improving_move_exists(g, f, 3, budget):
                    bad.append({"n": n, "edges": g.edges(),
                                "coloring": list(colors)})
        total += layer
        print(f"n={n}: {len(atlas)} graphs, {layer} colorings with gap >= 2, "
              f"{len(bad)} counterexamples so far")
    print(f"\ntotal: {total} colorings in {time.perf_counter() - t0:.1f}s, "
          f"{len(bad)} counterexamples")
    if bad:
        with open(args.archive, "w") as fh:
            json.dump(bad, fh, indent=2)
        print(f"archived to {args.archive}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
