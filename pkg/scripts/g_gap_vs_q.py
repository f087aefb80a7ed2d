#!/usr/bin/env python3
"""Spread between the two routes to the six-coordinate G-function.

g_function6 evaluates the displayed closed form (eta at the deformed
modular arguments); g_assembly6 builds G from the tau-function of the
deformed Schiffer/Bergman pairing.  The two agree up to an additive
constant only as |q| grows: this script tabulates the cross-covering
variance of their difference against |q|, which decays like 1/|q|^2.
"""

import argparse
import sys

from hurwitz1.errors import DomainError
from hurwitz1.realdouble import flat_coords6, g_assembly6, g_function6
from hurwitz1.torus import TorusCovering

POOL = [
    TorusCovering(0.5, 0.2 + 0.9j, 0.3 - 0.1j),
    TorusCovering(0.5, 0.15 + 1.1j, -0.2 + 0.4j),
    TorusCovering(0.5, 0.3 + 0.8j, 0.1 + 0.2j),
    TorusCovering(0.4 - 0.1j, (0.4 - 0.1j) * (0.25 + 1.3j), 0.5),
    TorusCovering(0.5, 0.1 + 0.7j, -0.4 - 0.3j),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--decades", type=int, default=6)
    args = ap.parse_args()

    sys.stdout.write("absq,variance,mean_re,mean_im\n")
    for d in range(args.decades + 1):
        q = 1j * 10.0 ** d
        try:
            diffs = [g_function6(flat_coords6(cov, q), q) - g_assembly6(cov, q)
                     for cov in POOL]
        except DomainError:
            # small |q| can push a deformed eta-argument out of the upper
            # half-plane for some coverings: the display has no value there
            sys.stdout.write("%r,nan,nan,nan\n" % abs(q))
            continue
        mean = sum(diffs) / len(diffs)
        var = sum(abs(x - mean) ** 2 for x in diffs) / len(diffs)
        sys.stdout.write("%r,%r,%r,%r\n" % (abs(q), var, mean.real, mean.imag))


if __name__ == "__main__":
    main()
