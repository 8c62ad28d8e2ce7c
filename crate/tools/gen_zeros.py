#!/usr/bin/env python3
"""Generate zero-ordinate fixture tables.

Computes the imaginary parts of the first N nontrivial zeros of the
Riemann zeta function on the critical line with mpmath's `zetazero`
(18 significant digits), and writes them one per line with 13 decimal
places, preceded by a provenance comment.

Usage: gen_zeros.py FIRST LAST OUTFILE [WORKERS]
"""

import sys
from decimal import Decimal
from multiprocessing import Pool

import mpmath as mp

DPS = 18
QUANTUM = Decimal("1e-13")


def ordinate(k: int) -> str:
    mp.mp.dps = DPS
    gamma = mp.zetazero(k).imag
    return str(Decimal(mp.nstr(gamma, DPS)).quantize(QUANTUM))


def main() -> None:
    first, last, outfile = int(sys.argv[1]), int(sys.argv[2]), sys.argv[3]
    workers = int(sys.argv[4]) if len(sys.argv) > 4 else 2
    ks = range(first, last + 1)
    with Pool(workers) as pool:
        values = pool.map(ordinate, ks, chunksize=25)
    with open(outfile, "w") as fh:
        for v in values:
            fh.write(v + "\n")
    print(f"wrote {len(values)} ordinates ({first}..{last}) to {outfile}")


if __name__ == "__main__":
    main()
