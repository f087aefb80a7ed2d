#!/usr/bin/env python3
"""Tabulate how fast the deformed kernel relaxes to the undeformed one.

Writes CSV (|q|, |Wq - W| at a ramification pair, decay-normalized value)
for a logarithmic grid of real q.  The product column should be flat:
the shift decays like 1/|q|.
"""

import argparse
import sys

from hurwitz1.kernels import kernel_at_ramification
from hurwitz1.torus import TorusCovering


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--w", type=complex, default=0.5)
    ap.add_argument("--wp", type=complex, default=0.15 + 0.55j)
    ap.add_argument("--c", type=complex, default=0.3 - 0.1j)
    ap.add_argument("--decades", type=int, default=5)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    cov = TorusCovering(args.w, args.wp, args.c)
    base = kernel_at_ramification("W", 0, 1, cov)
    lines = ["absq,shift,shift_times_absq"]
    for d in range(1, args.decades + 1):
        q = 10.0 ** d
        shift = abs(kernel_at_ramification("Wq", 0, 1, cov, q) - base)
        lines.append("%r,%r,%r" % (q, shift, shift * q))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
