"""Run every identity in every mode it supports and write a CSV table.

    python scripts/identity_table.py --numeric-to 20 --exhaustive-to 4 -o identities.csv
"""

import argparse
import csv
import sys

from catconv import verifiers
from catconv.caps import current
from catconv.errors import CapExceeded


def exhaustive_limit(ident, want):
    # largest n <= want that the default caps allow
    n = want
    while n >= 0:
        try:
            verifiers.check_request(ident, n, "exhaustive")
            return n
        except CapExceeded:
            n -= 1
    return -1


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--numeric-to", type=int, default=current().numeric)
    ap.add_argument("--exhaustive-to", type=int, default=5)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("-o", "--out", default="-")
    args = ap.parse_args()

    rows = []
    for ident in verifiers.IDENTITIES:
        modes = verifiers.supported_modes(ident)
        lo = 1 if ident == "cor10" else 0
        if "numeric" in modes:
            rows += verifiers.verify_range(ident, lo, args.numeric_to, "numeric", args.workers)
        if "exhaustive" in modes:
            hi = exhaustive_limit(ident, args.exhaustive_to)
            if hi >= lo:
                rows += verifiers.verify_range(ident, lo, hi, "exhaustive", args.workers)

    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["identity", "n", "mode", "expected", "actual", "passed", "elapsed_ms"])
    for r in rows:
        j = r.to_json()
        w.writerow([j["identity"], j["n"], j["mode"], j["expected"], j["actual"], str(j["passed"]).lower(), j["elapsed_ms"]])
    if fh is not sys.stdout:
        fh.close()
    failed = [r for r in rows if not r.passed]
    print(f"{len(rows)} checks, {len(failed)} failed", file=sys.stderr)
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
