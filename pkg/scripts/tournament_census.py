#!/usr/bin/env python3
"""Dichromatic numbers of small tournaments: seeded random sweep plus the
circulant family, cross-checked between the brute and CEGAR solvers.

Usage: python scripts/tournament_census.py [max-n] [samples-per-n]
"""

import sys
from collections import Counter

from dicolor.generators import GenSpec, gen_tournament
from dicolor.solvers import SolveConfig, dichromatic_number


def circulant_sets(n: int):
    """All valid connection sets for order n (one of {d, n-d} per d)."""
    half = [(d, n - d) for d in range(1, (n + 1) // 2)]

    def extend(chosen, rest):
        if not rest:
            yield tuple(sorted(chosen))
            return
        (d, nd), tail = rest[0], rest[1:]
        yield from extend(chosen + [d], tail)
        yield from extend(chosen + [nd], tail)

    yield from extend([], half)


def main() -> int:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 9
    samples = int(sys.argv[2]) if len(sys.argv) > 2 else 30

    print("random tournaments (seeded):")
    for n in range(2, max_n + 1):
        histogram = Counter()
        for seed in range(samples):
            t = gen_tournament(GenSpec("tournament-random", n=n, seed=1000 * n + seed))
            k_brute = dichromatic_number(t, SolveConfig(method="brute"))[0]
            k_cegar = dichromatic_number(t, SolveConfig(method="cegar"))[0]
            assert k_brute == k_cegar, f"solver disagreement at n={n} seed={seed}"
            histogram[k_brute] += 1
        dist = "  ".join(f"k={k}:{c}" for k, c in sorted(histogram.items()))
        print(f"  n={n}: {dist}")

    print("circulant tournaments (all connection sets, odd n):")
    for n in range(3, max_n + 1, 2):
        for conn in circulant_sets(n):
            t = gen_tournament(GenSpec("tournament-random", n=n, circulant=conn))
            k = dichromatic_number(t, SolveConfig(method="brute"))[0]
            print(f"  n={n} connection={conn}: dichromatic number {k}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
