"""Check the emitted minimal tame formula of each catalog point against enumerated small formulas.

Every enumerated formula true at the point must also hold at the realizations
of the minimal formula; any failure is printed as a counterexample.
"""

import argparse
import time

from noetherpairs.pairs import Sampler, catalog, emit_minimal_tame, enumerate_tame, tame_eval


def sweep(point, budget, equations, realizations, seed):
    a = point.point
    start = time.time()
    phi = emit_minimal_tame(a, point.base)
    R = Sampler(seed).realizations(phi, a, point.base, realizations)
    total = true_at_a = bad = 0
    for psi in enumerate_tame(point.arity, budget=budget, equations=equations):
        total += 1
        if not tame_eval(psi, a):
            continue
        true_at_a += 1
        for b in R:
            if not tame_eval(psi, b):
                bad += 1
                print("  counterexample:", psi, "fails at", b)
                break
    print("%-22s %s\n    %d realizations, %d enumerated, %d true at a, %d counterexamples, %.1f s"
          % (point.name, phi, len(R), total, true_at_a, bad, time.time() - start), flush=True)
    return bad


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", help="catalog point names (default: all of arity <= max-arity)")
    ap.add_argument("--max-arity", type=int, default=2)
    ap.add_argument("--budget", type=int, default=500)
    ap.add_argument("--equations", type=int, default=1)
    ap.add_argument("--realizations", type=int, default=20)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    bad = 0
    for p in catalog(args.max_arity):
        if args.names and p.name not in args.names:
            continue
        bad += sweep(p, args.budget, args.equations, args.realizations, args.seed)
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
