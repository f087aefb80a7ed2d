"""Weierstrass data of a two-fold genus-one covering.

A covering is the pair (C/{2w, 2w'}, lambda) with lambda(s) = wp(s) + c.
Everything here is expressed through theta1 at v = s/(2w):

    wp(s)   = -(1/(2w))^2 (log theta1)''(v) - eta1/w,
    eta1    = -theta1'''(0) / (12 w theta1'(0)),
    zeta(s) = (eta1/w) s + (1/(2w)) theta1'(v)/theta1(v).

Ramification points sit at the half-periods, ordered s1 = w', s2 = w,
s3 = w + w'; this ordering is the one under which the Thomae-type
identities read pi^2 th2^4 = (2w)^2(l3-l1), pi^2 th4^4 = (2w)^2(l2-l3),
pi^2 th3^4 = (2w)^2(l2-l1), and the cross-ratio (l3-l1)/(l2-l1) equals
the modular lambda th2^4/th3^4.
"""

import cmath
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import numkit
from .errors import DegenerateCoveringError, DomainError
from .theta import theta1, theta1_zero_derivatives

__all__ = [
    "TorusCovering",
    "RamificationData",
    "weierstrass_p",
    "weierstrass_sigma",
    "weierstrass_p_difference",
    "weierstrass_p_regularized",
    "weierstrass_p_branch_series",
    "weierstrass_zeta",
    "eta1_const",
    "eta2_const",
    "branch_points",
    "ramification_data",
    "thomae_residual",
    "canonical_jacobian",
    "lambda_gradient",
    "cross_ratio",
]

_PI = cmath.pi


@dataclass(frozen=True)
class TorusCovering:
    """Half-periods w, w' and the additive constant c of lambda = wp + c."""

    w: complex
    wp: complex
    c: complex = 0.0

    def __post_init__(self):
        object.__setattr__(self, "w", complex(self.w))
        object.__setattr__(self, "wp", complex(self.wp))
        object.__setattr__(self, "c", complex(self.c))
        if self.w == 0:
            raise DegenerateCoveringError("half-period w must be nonzero")
        if not (self.mu.imag > 0):
            raise DegenerateCoveringError("mu = wp/w must lie in the upper half-plane")

    @property
    def mu(self):
        return self.wp / self.w


@dataclass(frozen=True)
class RamificationData:
    """Per-point data at the three finite ramification points.

    sigma_i: half-period locations; lambda_i: branch points;
    pp2_i: wp''(sigma_i); omega_at_Pi: value of the normalized holomorphic
    differential ds/(2w) in the local parameter x_i = sqrt(lambda-lambda_i),
    i.e. omega(P_i) = b_i/(2w) with b_i = (ds/dx_i)(0) = sqrt(2/pp2_i).
    """

    sigma: tuple
    lam: tuple
    pp2: tuple
    omega_at_Pi: tuple

    @property
    def b(self):
        """Local-parameter derivatives ds/dx_i: b_i = sqrt(2/wp''(sigma_i))."""
        return tuple(cmath.sqrt(2.0 / v) for v in self.pp2)


def _log_theta1_derivs(v, m, upto):
    """(log theta1)^(k)(v) for k = 2..upto (upto <= 4)."""
    t0 = theta1(v, m)
    t1 = theta1(v, m, 1)
    if abs(t0) < 1e-12 * max(1.0, abs(t1)):
        raise DegenerateCoveringError("evaluation point hit a lattice point")
    t2 = theta1(v, m, 2)
    r1 = t1 / t0
    r2 = t2 / t0
    out = {2: r2 - r1 * r1}
    if upto >= 3:
        t3 = theta1(v, m, 3)
        r3 = t3 / t0
        out[3] = r3 - 3.0 * r2 * r1 + 2.0 * r1 ** 3
    if upto >= 4:
        t4 = theta1(v, m, 4)
        r4 = t4 / t0
        out[4] = r4 - 4.0 * r3 * r1 - 3.0 * r2 * r2 + 12.0 * r2 * r1 * r1 - 6.0 * r1 ** 4
    return out


def weierstrass_p(s, cov, order=0):
    """wp(s), wp'(s) or wp''(s) on the lattice {2w, 2w'} (order = 0..2)."""
    if not isinstance(order, int) or not 0 <= order <= 2:
        raise DomainError("order must be an integer in 0..2")
    w = cov.w
    v = s / (2.0 * w)
    L = _log_theta1_derivs(v, cov.mu, order + 2)
    pref = -((2.0 * w) ** (-(order + 2)))
    if order == 0:
        return pref * L[2] - eta1_const(cov) / w
    return pref * L[order + 2]


def weierstrass_sigma(s, cov):
    """sigma(s) = (2w/theta1'(0)) exp(eta1 s²/(2w)) theta1(s/(2w)).

    Entire, odd, sigma(s) ~ s near 0; used where wp(u) - wp(v) must be
    evaluated without cancellation: wp(u)-wp(v) = -σ(u+v)σ(u-v)/(σ²(u)σ²(v)).
    """
    w = cov.w
    u = _theta1_zero_cache(cov.mu)
    return (2.0 * w / u[1]) * cmath.exp(eta1_const(cov) * s * s / (2.0 * w)) \
        * theta1(s / (2.0 * w), cov.mu)


def weierstrass_p_difference(s1, s2, cov):
    """wp(s1) - wp(s2) as a sigma-product (multiplicative, cancellation-free)."""
    num = weierstrass_sigma(s1 + s2, cov) * weierstrass_sigma(s1 - s2, cov)
    den = (weierstrass_sigma(s1, cov) * weierstrass_sigma(s2, cov)) ** 2
    return -num / den


def _invariants(cov):
    """(g2, g3) from the branch values; Sigma e_i = 0 is built in."""
    rd = ramification_data(cov)
    e = [l - cov.c for l in rd.lam]
    g2 = -4.0 * (e[0] * e[1] + e[0] * e[2] + e[1] * e[2])
    g3 = 4.0 * e[0] * e[1] * e[2]
    return g2, g3


def weierstrass_p_regularized(u, cov, max_terms=60):
    """wp(u) - 1/u² by the Laurent series c_k u^(2k-2).

    Near the pole the theta route loses digits like 1e-16/|u| to the
    near-cancellation of theta1 at small argument; the series (from the
    recursion the ODE wp'' = 6wp² - g2/2 induces on the c_k) keeps full
    relative precision for |u| well inside the lattice.
    """
    g2, g3 = _invariants(cov)
    c = [0j, 0j, g2 / 20.0, g3 / 28.0]
    u2 = u * u
    total = c[2] * u2 + c[3] * u2 * u2
    power = u2 * u2
    small = 0
    for k in range(4, max_terms):
        ck = 3.0 / ((2 * k + 1) * (k - 3)) * sum(c[m] * c[k - m] for m in range(2, k - 1))
        c.append(ck)
        power *= u2
        term = ck * power
        total += term
        small = small + 1 if abs(term) <= 1e-16 * max(abs(total), 1e-300) else 0
        if small >= 2:
            return total
    raise DomainError("regularized wp series did not converge; |u| too large")


def weierstrass_p_branch_series(i, t, cov, max_terms=40):
    """wp(sigma_i + t) - e_i by the even Taylor series at the half-period.

    y(t) = wp(sigma_i + t) solves y'' = 6y² - g2/2 with y(0) = e_i and
    y'(0) = 0, so the coefficients a_k of Sigma a_k t^(2k) follow from
    a_(k+1) = 6 (Sigma_(m<=k) a_m a_(k-m)) / ((2k+2)(2k+1)) once a_1 =
    3 e_i² - g2/4 absorbs the constant.  Exact in the branch data; used
    where the plain difference of two wp values would cancel badly.
    """
    rd = ramification_data(cov)
    g2, _ = _invariants(cov)
    e = rd.lam[i] - cov.c
    a = [e, 3.0 * e * e - g2 / 4.0]
    t2 = t * t
    total = a[1] * t2
    power = t2
    small = 0
    for k in range(1, max_terms):
        ak = 6.0 * sum(a[m] * a[k - m] for m in range(k + 1)) / ((2 * k + 2) * (2 * k + 1))
        a.append(ak)
        power *= t2
        term = ak * power
        total += term
        small = small + 1 if abs(term) <= 1e-16 * max(abs(total), 1e-300) else 0
        if small >= 2:
            return total
    raise DomainError("branch-point wp series did not converge; |t| too large")


def weierstrass_zeta(s, cov):
    """zeta(s): the odd primitive of -wp with zeta(s+2w) = zeta(s) + 2 eta1."""
    w = cov.w
    v = s / (2.0 * w)
    t0 = theta1(v, cov.mu)
    t1 = theta1(v, cov.mu, 1)
    if abs(t0) < 1e-12 * max(1.0, abs(t1)):
        raise DegenerateCoveringError("zeta evaluated at a lattice point")
    return (eta1_const(cov) / w) * s + t1 / t0 / (2.0 * w)


@lru_cache(maxsize=512)
def _theta1_zero_cache(mu):
    return theta1_zero_derivatives(mu, 3)


def eta1_const(cov):
    """eta1 = zeta(w) = -theta1'''(0)/(12 w theta1'(0))."""
    u = _theta1_zero_cache(cov.mu)
    return -u[3] / (12.0 * cov.w * u[1])


def eta2_const(cov):
    """eta2 = zeta(w'), from the Legendre relation eta1 w' - eta2 w = pi i/2."""
    return eta1_const(cov) * cov.mu - _PI * 1j / (2.0 * cov.w)


def _sigmas(cov):
    return (cov.wp, cov.w, cov.w + cov.wp)


def branch_points(cov):
    """(l1, l2, l3) = wp(sigma_i) + c at sigma = (w', w, w+w')."""
    lam = tuple(weierstrass_p(s, cov) + cov.c for s in _sigmas(cov))
    scale = max(1.0, *(abs(v) for v in lam))
    for i in range(3):
        for j in range(i + 1, 3):
            if abs(lam[i] - lam[j]) < 1e-12 * scale:
                raise DegenerateCoveringError("branch points collided")
    return lam


@lru_cache(maxsize=256)
def ramification_data(cov):
    """Locations, branch points, wp'' values and omega(P_i) for the covering."""
    sig = _sigmas(cov)
    lam = branch_points(cov)
    pp2 = tuple(weierstrass_p(s, cov, 2) for s in sig)
    if any(v == 0 for v in pp2):
        raise DegenerateCoveringError("vanishing wp'' at a ramification point")
    omega = tuple(cmath.sqrt(2.0 / v) / (2.0 * cov.w) for v in pp2)
    return RamificationData(sigma=sig, lam=lam, pp2=pp2, omega_at_Pi=omega)


def local_frame(cov, i):
    """(sigma_i, lambda_i, b_i) with b_i = ds/dx_i at x_i = 0."""
    rd = ramification_data(cov)
    return rd.sigma[i], rd.lam[i], rd.omega_at_Pi[i] * 2.0 * cov.w


def thomae_residual(cov):
    """max over the three Thomae-type identities of |lhs - rhs| / scale."""
    from .theta import theta_constants

    t2, t3, t4 = theta_constants(cov.mu)
    l1, l2, l3 = branch_points(cov)
    sq = (2.0 * cov.w) ** 2
    pairs = [
        (_PI ** 2 * t2 ** 4, sq * (l3 - l1)),
        (_PI ** 2 * t4 ** 4, sq * (l2 - l3)),
        (_PI ** 2 * t3 ** 4, sq * (l2 - l1)),
    ]
    res = 0.0
    for lhs, rhs in pairs:
        res = max(res, abs(lhs - rhs) / max(1.0, abs(lhs)))
    return res


def cross_ratio(cov):
    """x = (l3 - l1)/(l2 - l1); equals theta2^4/theta3^4."""
    l1, l2, l3 = branch_points(cov)
    return (l3 - l1) / (l2 - l1)


@lru_cache(maxsize=256)
def canonical_jacobian(cov, base_step=1e-3):
    """(J, Jinv) with J[i, p] = d lambda_i / d(w, w', c).

    The c-column is exactly 1; the w/w' columns come from Richardson
    finite differences.  Jinv realizes d(w, w', c)/d lambda_j, the chain
    rule used for all lambda-derivatives in the package.
    """
    cfg = numkit.DiffConfig(base_step=base_step, richardson_levels=3, scheme_order=4)
    J = np.zeros((3, 3), dtype=complex)
    params = ("w", "wp")
    for pcol, name in enumerate(params):
        def lam_of(shift, name=name):
            kw = {"w": cov.w, "wp": cov.wp, "c": cov.c}
            kw[name] = kw[name] + shift
            return branch_points(TorusCovering(**kw))

        for i in range(3):
            val, _ = numkit.nth_derivative(lambda s, i=i: lam_of(s)[i], 0.0, 1, cfg)
            J[i, pcol] = val
    J[:, 2] = 1.0
    s = np.linalg.svd(J, compute_uv=False)
    if s[-1] == 0.0 or s[0] / s[-1] > 1e10:
        raise DegenerateCoveringError("canonical coordinate Jacobian is singular")
    return J, np.linalg.inv(J)


def lambda_gradient(F, cov, eps=1e-3, indices=(0, 1, 2)):
    """(dF/dlambda_j for j in indices) for a scalar function F(cov).

    Realized by steering (w, w', c) along the inverse-Jacobian columns
    (the direction that moves lambda_j alone), central differences plus
    one Richardson level.  This is the single chain rule behind every
    lambda-derivative check: Rauch, Darboux-Egoroff, tau-ODEs, Euler.
    """
    _, Jinv = canonical_jacobian(cov)
    out = []
    for j in indices:
        d = Jinv[:, j]

        def D(e, d=d):
            plus = F(TorusCovering(cov.w + d[0] * e, cov.wp + d[1] * e,
                                   cov.c + d[2] * e))
            minus = F(TorusCovering(cov.w - d[0] * e, cov.wp - d[1] * e,
                                    cov.c - d[2] * e))
            return (plus - minus) / (2.0 * e)

        val, _ = numkit.richardson([D(eps), D(eps / 2.0)], order=2)
        out.append(val)
    return np.asarray(out)
