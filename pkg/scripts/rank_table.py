"""Print transcendence degrees, RM rank and the emitted formulas for the catalog points."""

import argparse

from noetherpairs.pairs import (catalog, emit_chi, emit_minimal_tame, emit_theta, rm_rank,
                                transcendence_degree)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-arity", type=int, default=None)
    ap.add_argument("--formulas", action="store_true", help="also print theta, chi and the minimal formula")
    args = ap.parse_args()
    print("%-22s %4s %4s %6s" % ("point", "trE", "trk", "rank"))
    for p in catalog(args.max_arity):
        a = p.point
        print("%-22s %4d %4d %6s" % (p.name, transcendence_degree(a, p.base),
                                      transcendence_degree(a, p.base, over="k"), rm_rank(a, p.base)))
        if args.formulas:
            print("    theta:", emit_theta(a, p.base))
            print("    chi:  ", emit_chi(a, p.base))
            print("    min:  ", emit_minimal_tame(a, p.base))


if __name__ == "__main__":
    main()
