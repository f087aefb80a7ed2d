#!/usr/bin/env python3
"""Associativity residual grids for the three- and six-coordinate
prepotentials: worst residual per (chart batch, q), CSV to stdout.

Useful for spotting conditioning trouble: the six-coordinate commutator
is an absolute residual whose tensor entries grow near the chart poles,
so charts are redrawn below a distance floor (same policy as the tests).
"""

import argparse
import cmath
import math
import sys

import numpy as np

from hurwitz1.frobenius3 import FlatChart3, PrepotentialFamily3, wdvv_residual3
from hurwitz1.realdouble import FlatChart6, wdvv_residual6

_2PII = 2j * math.pi


def charts3(n, q, rng):
    out = []
    for _ in range(n):
        mu = complex(rng.uniform(-0.45, 0.45), rng.uniform(0.7, 1.6))
        m = mu if q is None else complex(q) * mu / (mu + complex(q))
        out.append(FlatChart3(
            complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            complex(rng.uniform(0.7, 1.6), rng.uniform(-0.4, 0.4)),
            m / _2PII))
    return out


def charts6(n, q, rng):
    out = []
    while len(out) < n:
        u1 = complex(rng.uniform(-0.45, 0.45), rng.uniform(0.7, 1.6))
        u2 = complex(rng.uniform(-0.45, 0.45), rng.uniform(0.7, 1.6))
        wfac = 1.0 + u1 / q
        t6 = u2 * wfac / (_2PII * (u1 + u2 * wfac))
        t3 = u1 * t6 / wfac
        if min(abs(t6 - t3 / q), abs(_2PII * t6 - 1.0), abs(t3)) < 0.05:
            continue
        t = FlatChart6(
            complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            complex(rng.uniform(0.7, 1.6), rng.uniform(-0.4, 0.4)),
            t3,
            complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            complex(rng.uniform(0.7, 1.6), rng.uniform(-0.4, 0.4)),
            t6)
        if t.in_domain(q):
            out.append(t)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--charts", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rows = ["family,q,worst_residual"]
    for q in (1.0, 2.0 + 1.0j, 5.0j, 1e3):
        rng = np.random.default_rng(args.seed)
        fam = PrepotentialFamily3.deformed(q)
        worst = max(wdvv_residual3(fam, t) for t in charts3(args.charts, q, rng))
        rows.append("three,%s,%r" % (q, worst))
    for q in (1j, 3j, 1e3j):
        rng = np.random.default_rng(args.seed + 1)
        worst = max(wdvv_residual6(t, q) for t in charts6(args.charts, q, rng))
        rows.append("six,%s,%r" % (q, worst))
    sys.stdout.write("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
