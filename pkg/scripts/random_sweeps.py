#!/usr/bin/env python3
"""Randomized verification sweeps, sized from the command line.

Runs three experiment families over seeded random inputs and prints one
summary line per family:

  circuits     exhaustive |P| = nullity(I_P) + c(G) sweeps on random
               4-regular multigraphs (all 3^n assignments each)
  polynomials  q_N / q identities between the nullity-sum and the traced
               circuit-partition routes, over all loop sets
  orbits       Cohn-Lempel orbit counts and the pair-digraph reduction
               against the brute-force cycle counter

Exit status is nonzero if any comparison fails (never expected).
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from circuitnull import (
    Permutation,
    compose_cycle_with_transpositions,
    euler_system,
    interlace_graph,
    orbit_count,
    orbit_count_via_nullity,
    q2_from_partitions,
    q_from_partitions,
    q_nullity,
    q_two_variable,
    random_regular_multigraph,
    verify_extended_cle,
    verify_permutation_reduction,
)


def sweep_circuits(rng: random.Random, graphs: int, max_vertices: int) -> tuple[int, int]:
    checked = failures = 0
    for _ in range(graphs):
        g = random_regular_multigraph(rng.randint(1, max_vertices), rng)
        report = verify_extended_cle(g, euler_system(g))
        checked += report.checked
        failures += len(report.failures)
    return checked, failures


def sweep_polynomials(rng: random.Random, systems: int, max_vertices: int) -> tuple[int, int]:
    checked = failures = 0
    for _ in range(systems):
        g = random_regular_multigraph(rng.randint(1, max_vertices), rng)
        es = euler_system(g)
        n = len(g.vertices)
        for mask in range(1 << n):
            loops = {g.vertices[i] for i in range(n) if (mask >> i) & 1}
            h = interlace_graph(es, loops)
            checked += 2
            if q_from_partitions(g, es, loops) != q_nullity(h):
                failures += 1
            if q2_from_partitions(g, es, loops) != q_two_variable(h):
                failures += 1
    return checked, failures


def sweep_orbits(rng: random.Random, trials: int, max_size: int) -> tuple[int, int]:
    checked = failures = 0
    for _ in range(trials):
        m = rng.randint(1, max_size)
        elements = list(range(1, m + 1))
        rng.shuffle(elements)
        k = rng.randint(0, m // 2)
        transpositions = [(elements[2 * i], elements[2 * i + 1]) for i in range(k)]
        composed = compose_cycle_with_transpositions(m, transpositions)
        checked += 1
        if orbit_count_via_nullity(m, transpositions) != orbit_count(composed):
            failures += 1
        image = list(range(1, m + 1))
        rng.shuffle(image)
        p = Permutation(tuple(image))
        report = verify_permutation_reduction(p)
        checked += 1
        if not (report.ok and report.orbits == orbit_count(p)):
            failures += 1
    return checked, failures


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--graphs", type=int, default=100)
    parser.add_argument("--systems", type=int, default=25)
    parser.add_argument("--trials", type=int, default=250)
    parser.add_argument("--max-vertices", type=int, default=6)
    parser.add_argument("--max-size", type=int, default=14)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    total_failures = 0
    for name, runner, kwargs in (
        ("circuits", sweep_circuits, {"graphs": args.graphs, "max_vertices": args.max_vertices}),
        ("polynomials", sweep_polynomials, {"systems": args.systems, "max_vertices": args.max_vertices}),
        ("orbits", sweep_orbits, {"trials": args.trials, "max_size": args.max_size}),
    ):
        start = time.perf_counter()
        checked, failures = runner(rng, **kwargs)
        elapsed = time.perf_counter() - start
        total_failures += failures
        status = "ok" if failures == 0 else f"{failures} FAILURES"
        print(f"{name:12s} {checked:8d} checks  {elapsed:7.2f}s  {status}")
    return 1 if total_failures else 0


if __name__ == "__main__":
    sys.exit(main())
