"""Independent reference computations used by the test-suite.

Nothing in here goes through the package's theta series: Eisenstein
q-series, direct lattice sums, the AGM, and Euler's pentagonal series
give second routes to the same numbers.
"""

import cmath
import math

import numpy as np

_PI = math.pi


def agm(a, b, tol=1e-15):
    """Arithmetic-geometric mean of two positive reals."""
    a, b = float(a), float(b)
    while abs(a - b) > tol * abs(a):
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return a


def eisenstein_E2(mu, nterms=200):
    q = cmath.exp(2j * _PI * mu)
    s = 0j
    for n in range(1, nterms):
        qn = q ** n
        s += n * qn / (1 - qn)
    return 1 - 24 * s


def eisenstein_E4(mu, nterms=200):
    q = cmath.exp(2j * _PI * mu)
    s = 0j
    for n in range(1, nterms):
        qn = q ** n
        s += n ** 3 * qn / (1 - qn)
    return 1 + 240 * s


def eisenstein_E6(mu, nterms=200):
    q = cmath.exp(2j * _PI * mu)
    s = 0j
    for n in range(1, nterms):
        qn = q ** n
        s += n ** 5 * qn / (1 - qn)
    return 1 - 504 * s


def eta_pentagonal(mu, nterms=60):
    """Dedekind eta via Euler's pentagonal number series."""
    q = cmath.exp(2j * _PI * mu)
    s = 1.0 + 0j
    for n in range(1, nterms):
        s += (-1) ** n * (q ** (n * (3 * n - 1) // 2) + q ** (n * (3 * n + 1) // 2))
    return cmath.exp(2j * _PI * mu / 24.0) * s


def wp_lattice(s, w, wprime, N=40):
    """Direct lattice sum for wp(s) on {2w m + 2w' n}, tail-corrected.

    The bare box sum carries an O(s^2 / N^3) truncation error of a few
    1e-4; replacing the box partial sums of sum' L^-4 and sum' L^-6 by
    their exact Eisenstein values pushes the error below 1e-12 for the
    moduli used in the tests.
    """
    m = np.arange(-N, N + 1)
    M, Nn = np.meshgrid(m, m, indexing="ij")
    L = 2 * w * M + 2 * wprime * Nn
    mask = (M != 0) | (Nn != 0)
    Lnz = L[mask]
    val = 1.0 / s ** 2 + np.sum(1.0 / (s - Lnz) ** 2 - 1.0 / Lnz ** 2)
    S4box = np.sum(1.0 / Lnz ** 4)
    S6box = np.sum(1.0 / Lnz ** 6)
    mu = wprime / w
    S4 = (_PI ** 4 / 45.0) * eisenstein_E4(mu) / (2 * w) ** 4
    S6 = (2 * _PI ** 6 / 945.0) * eisenstein_E6(mu) / (2 * w) ** 6
    return val + 3 * s ** 2 * (S4 - S4box) + 5 * s ** 4 * (S6 - S6box)


def mu_box_samples(count, seed, re_lo=-0.45, re_hi=0.45, im_lo=0.6, im_hi=2.0):
    """Deterministic moduli in a box bounded away from the real axis."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        out.append(complex(rng.uniform(re_lo, re_hi), rng.uniform(im_lo, im_hi)))
    return out


def covering_pool(count, seed, with_scale=True):
    """Deterministic (w, w', c) triples for covering-space tests."""
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        mu = complex(rng.uniform(-0.45, 0.45), rng.uniform(0.6, 2.0))
        if with_scale and k % 3 == 2:
            w = complex(rng.uniform(0.3, 0.8), rng.uniform(-0.2, 0.2))
        else:
            w = 0.5
        c = complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
        out.append((w, w * mu, c))
    return out


def fd_second_derivative(f, z, h):
    """Plain 5-point central second derivative, no extrapolation."""
    return (-f(z + 2 * h) + 16 * f(z + h) - 30 * f(z) + 16 * f(z - h) - f(z - 2 * h)) / (12 * h ** 2)


# Frozen closed-form constants (Gamma(1/4) route, checked once against the
# AGM and the pentagonal series; digits are exact to double precision).
THETA3_AT_I = 1.0864348112133080
ETA_AT_I = 0.7682254223260567
AGM_ONE_INVSQRT2 = 0.8472130847939792
