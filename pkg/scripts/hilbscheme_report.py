"""Summarize the Hilbert scheme data for (n, Q) and optionally locate a point given by an ideal.

    python scripts/hilbscheme_report.py --n 2 --coords 2            # two points in P^2
    python scripts/hilbscheme_report.py --n 2 --coords 2 --ideal "x2, x0*x1"
"""

import argparse

from noetherpairs.groebner import Ideal
from noetherpairs.hilbscheme import hilbert_scheme_data, ideal_from_point, on_scheme, point_from_ideal
from noetherpairs.numerical import NumericalPolynomial


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, required=True, help="ambient projective dimension")
    ap.add_argument("--coords", required=True,
                    help="Q in the binomial basis, comma separated: c0,c1,... for sum c_i C(d+i,i)")
    ap.add_argument("--window", type=int, default=2)
    ap.add_argument("--full", action="store_true", help="list every scheme equation and template")
    ap.add_argument("--ideal", help="comma separated homogeneous generators in x0..xn")
    args = ap.parse_args()
    Q = NumericalPolynomial(tuple(int(c) for c in args.coords.split(",")))
    data = hilbert_scheme_data(args.n, Q, window=args.window)
    text = data.to_text()
    if not args.full:
        text = "\n".join(line for line in text.splitlines() if not line.startswith("  "))
    print(text)
    if args.ideal:
        I = Ideal(data.x_ring, [g for g in args.ideal.split(",") if g.strip()])
        pt = point_from_ideal(I, data)
        print("point:", pt)
        print("on scheme:", on_scheme(pt.eta, data))
        print("recovered generators:", ", ".join(str(g) for g in ideal_from_point(pt.eta, data).gens))


if __name__ == "__main__":
    main()
