"""Regenerate (or check) the expected outputs of the CLI golden corpus.

    python scripts/update_golden.py          # rewrite tests/golden/*.out
    python scripts/update_golden.py --check  # exit 1 on any difference
"""

import argparse
import pathlib
import sys

from noetherpairs.cli import run_text

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    bad = 0
    for job in sorted(GOLDEN.glob("*.job")):
        got = run_text(job.read_text())
        out = job.with_suffix(".out")
        if args.check:
            if not out.exists() or out.read_text() != got:
                print("differs:", job.name)
                bad += 1
        else:
            out.write_text(got)
    print("%d jobs, %d differences" % (len(list(GOLDEN.glob("*.job"))), bad))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
