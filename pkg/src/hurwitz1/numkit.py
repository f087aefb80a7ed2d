"""Shared numerical kit.

Finite-difference derivatives of holomorphic callables with Richardson
extrapolation, composite Gauss-Legendre quadrature along polyline contours,
and small finite-difference Jacobians with inverses.

Every derivative comes back with an error estimate read off the
extrapolation tableau; every contour integral is re-evaluated at doubled
node count until the relative change falls below an internal guard.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, QuadratureError

__all__ = [
    "DiffConfig",
    "QuadratureSpec",
    "CheckReport",
    "fornberg_weights",
    "nth_derivative",
    "contour_integral",
    "jacobian_fd",
    "richardson",
]


@dataclass(frozen=True)
class DiffConfig:
    """Settings for nth_derivative / jacobian_fd.

    base_step is relative: the actual step is base_step*(1+|z0|).
    scheme_order is the accuracy order of the central stencil (even);
    richardson_levels >= 2 halvings are extrapolated.
    """

    base_step: float = 1e-2
    richardson_levels: int = 3
    scheme_order: int = 4

    def __post_init__(self):
        if self.richardson_levels < 2:
            raise DomainError("richardson_levels must be >= 2")
        if self.scheme_order < 2 or self.scheme_order % 2:
            raise DomainError("scheme_order must be a positive even integer")
        if not (0 < self.base_step < 1):
            raise DomainError("base_step must lie in (0, 1)")


@dataclass(frozen=True)
class QuadratureSpec:
    """Polyline contour plus Gauss-Legendre node budget (per segment)."""

    endpoints: tuple
    node_count: int = 32
    rule: str = "gauss"

    def __post_init__(self):
        if len(self.endpoints) < 2:
            raise DomainError("need at least two endpoints")
        if self.node_count < 16 or self.node_count % 2:
            raise DomainError("node_count must be even and >= 16")
        if self.rule != "gauss":
            raise DomainError("unknown quadrature rule %r" % (self.rule,))


@dataclass
class CheckReport:
    """One verification result; the CLI serializes these as JSON lines."""

    name: str
    params: dict
    residual: float
    tolerance: float

    @property
    def passed(self):
        return bool(self.residual < self.tolerance)

    def as_dict(self, suite=None, seed=None):
        d = {
            "suite": suite,
            "name": self.name,
            "params": self.params,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "seed": seed,
        }
        return d


def fornberg_weights(m, offsets):
    """Finite-difference weights for the m-th derivative at 0 on the given
    1-d stencil (Fornberg's recursion).  Exact for polynomials of degree
    < len(offsets).

    >>> w = fornberg_weights(1, [-1.0, 0.0, 1.0])
    >>> [round(x, 12) for x in w]
    [-0.5, 0.0, 0.5]
    """
    x = np.asarray(offsets, dtype=float)
    n = len(x)
    if m >= n:
        raise DomainError("stencil too short for derivative order %d" % m)
    c = np.zeros((n, m + 1))
    c1 = 1.0
    c4 = x[0]
    c[0, 0] = 1.0
    for i in range(1, n):
        mn = min(i, m)
        c2 = 1.0
        c5 = c4
        c4 = x[i]
        for j in range(i):
            c3 = x[i] - x[j]
            c2 = c2 * c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i, k] = c1 * (k * c[i - 1, k - 1] - c5 * c[i - 1, k]) / c2
                c[i, 0] = -c1 * c5 * c[i - 1, 0] / c2
            for k in range(mn, 0, -1):
                c[j, k] = (c4 * c[j, k] - k * c[j, k - 1]) / c3
            c[j, 0] = c4 * c[j, 0] / c3
        c1 = c2
    return c[:, m]


def richardson(values, order, factor=2.0):
    """Extrapolate a sequence D(h), D(h/f), D(h/f^2), ... whose error
    expands in even powers h^order, h^(order+2), ...  Returns (value, err).
    """
    t = [complex(v) for v in values]
    levels = len(t)
    prev_last = t[-1]
    for j in range(1, levels):
        r = factor ** (order + 2 * (j - 1))
        t = [(r * t[i + 1] - t[i]) / (r - 1.0) for i in range(len(t) - 1)]
    err = abs(t[0] - prev_last)
    return t[0], err


def _central_offsets(n, order):
    # symmetric stencil wide enough for derivative n at accuracy >= order
    halfwidth = (n + order - 1 + 1) // 2  # ceil((n+order-1)/2)
    return np.arange(-halfwidth, halfwidth + 1, dtype=float)


def nth_derivative(f, z0, n, cfg=DiffConfig()):
    """n-th derivative (n = 0..3) of a holomorphic f at z0 by central
    differences + Richardson.  Returns (value, error_estimate).
    """
    if not isinstance(n, int) or not 0 <= n <= 3:
        raise DomainError("derivative order must be an integer in 0..3")
    if n == 0:
        return f(z0), 0.0
    offsets = _central_offsets(n, cfg.scheme_order)
    w = fornberg_weights(n, offsets)
    h0 = cfg.base_step * (1.0 + abs(z0))
    approx = []
    for lev in range(cfg.richardson_levels):
        h = h0 / (2.0 ** lev)
        s = 0.0 + 0.0j
        for off, wt in zip(offsets, w):
            if wt != 0.0:
                s += wt * f(z0 + off * h)
        approx.append(s / h ** n)
    return richardson(approx, cfg.scheme_order)


def _gauss_segment(f, a, b, nodes, weights):
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    total = 0.0 + 0.0j
    mass = 0.0
    for x, wt in zip(nodes, weights):
        v = wt * f(mid + half * x)
        total += v
        mass += abs(v)
    return total * half, mass * abs(half)


def contour_integral(f, spec):
    """Integrate f(z)dz along the polyline spec.endpoints.

    The composite Gauss-Legendre result is accepted once doubling the node
    count changes it by < 1e-10 relative to the result or < 1e-13 relative
    to the accumulated |f| mass (integrals that cancel to ~0 bottom out at
    roundoff of the mass, not of the value); five doublings without
    stabilizing raise QuadratureError.
    """
    pts = [complex(p) for p in spec.endpoints]
    n = spec.node_count
    prev = None
    for _ in range(6):
        nodes, weights = np.polynomial.legendre.leggauss(n)
        total = 0.0 + 0.0j
        mass = 0.0
        for a, b in zip(pts[:-1], pts[1:]):
            val, m = _gauss_segment(f, a, b, nodes, weights)
            total += val
            mass += m
        if prev is not None:
            scale = max(abs(total), abs(prev), 1e-300)
            if abs(total - prev) / scale < 1e-10 or abs(total - prev) < 1e-13 * max(mass, 1e-300):
                return total
            last_pair = (prev, total)
        prev = total
        n *= 2
    raise QuadratureError(
        "contour integral did not stabilize after node doubling "
        "(last two values %r, %r)" % last_pair
    )


def jacobian_fd(F, x0, cfg=DiffConfig()):
    """Jacobian dF_i/dx_j of a holomorphic map C^n -> C^n by per-column
    central differences, plus its inverse.  Raises DomainError when the
    matrix is numerically singular (condition number > 1e12).
    """
    x0 = np.asarray(x0, dtype=complex)
    n = x0.size
    J = np.zeros((n, n), dtype=complex)
    for j in range(n):
        def along(s, j=j):
            x = x0.copy()
            x[j] = x[j] + s
            return np.asarray(F(x), dtype=complex)

        offsets = _central_offsets(1, cfg.scheme_order)
        w = fornberg_weights(1, offsets)
        h0 = cfg.base_step * (1.0 + abs(x0[j]))
        approx = []
        for lev in range(cfg.richardson_levels):
            h = h0 / (2.0 ** lev)
            col = np.zeros(n, dtype=complex)
            for off, wt in zip(offsets, w):
                if wt != 0.0:
                    col += wt * along(off * h)
            approx.append(col / h)
        col, _ = _richardson_vec(approx, cfg.scheme_order)
        J[:, j] = col
    s = np.linalg.svd(J, compute_uv=False)
    if s[-1] == 0.0 or s[0] / s[-1] > 1e12:
        raise DomainError("finite-difference Jacobian is numerically singular")
    return J, np.linalg.inv(J)


def _richardson_vec(values, order, factor=2.0):
    t = [np.asarray(v, dtype=complex) for v in values]
    prev_last = t[-1]
    for j in range(1, len(t)):
        r = factor ** (order + 2 * (j - 1))
        t = [(r * t[i + 1] - t[i]) / (r - 1.0) for i in range(len(t) - 1)]
    return t[0], float(np.max(np.abs(t[0] - prev_last)))
