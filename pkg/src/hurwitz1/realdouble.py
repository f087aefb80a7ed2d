"""Real double of the deformed structure: six flat coordinates.

The double couples the covering to its conjugate through the differential

    Phi_s = (q/(mu^Omega+q)) ( rho omega + conj(rho) conj(omega) ),
    rho = mu~/(mu~-mu),   mu^Omega = mu mu~/(mu~-mu),

with purely imaginary q (then mu^Omega+q is imaginary and the prefactor
real).  Flat coordinates t1..t6 follow; t1 and t4 involve averaged period
integrals of the covering map, computed here by contour quadrature:

    A_a = (1/2w) oint_a (wp(s)+c) ds,    A_b = (1/2w) oint_b (wp(s)+c) ds.

The prepotential couples two independent modular blocks through the
gamma-function of module theta,

    u1 = t3/(t6 - t3/q),        u2 = 2 pi i t3/(1 - 2 pi i t6);

on charts coming from coverings u1 = mu/(1-mu/q) and u2 = -mu~/(1-mu~/q),
the holomorphic and antiholomorphic halves of the double.  All third
derivatives are exact through degree-3 jets in six variables; the metric
(third derivatives against t1) is the constant matrix METRIC6.

Quasihomogeneity weights are (1, 1/2, 0, 1, 1/2, 0): t2 and t5 enter in
even powers only, so the check is exact for every nonzero kappa.  The
q -> i*infinity limit reproduces the undeformed double; reference values
for that limit are these same formulas at large imaginary q.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import numkit
from .errors import DivisorError, DomainError
from .jets import Jet
from .kernels import v_and_muOmega
from .tau import tau_omega_q
from .theta import dedekind_eta, gamma_derivatives
from .torus import ramification_data, weierstrass_p

__all__ = [
    "ImaginaryQ",
    "FlatChart6",
    "METRIC6",
    "period_integrals",
    "flat_coords6",
    "prepotential6",
    "third_derivatives6",
    "wdvv_residual6",
    "quasihomogeneity_residual6",
    "euler_action6",
    "euler_residual6",
    "g_function6",
    "phi_double_product",
    "g_assembly6",
]

_PI = math.pi
_2PII = 2j * _PI
_INV_2PII = 1.0 / _2PII

METRIC6 = np.zeros((6, 6), dtype=complex)
METRIC6[0, 2] = METRIC6[2, 0] = 1.0
METRIC6[1, 1] = METRIC6[4, 4] = -0.5
METRIC6[3, 5] = METRIC6[5, 3] = -1.0


@dataclass(frozen=True)
class ImaginaryQ:
    """Deformation parameter of the double; must be purely imaginary."""

    q: complex

    def __post_init__(self):
        object.__setattr__(self, "q", complex(self.q))
        if self.q == 0:
            raise DomainError("deformation parameter q must be nonzero")
        if abs(self.q.real) > 1e-12 * abs(self.q):
            raise DomainError("the double couples to conjugates only for "
                              "purely imaginary q")


def _as_imq(q):
    if isinstance(q, ImaginaryQ):
        return q.q
    return ImaginaryQ(getattr(q, "q", q)).q


@dataclass(frozen=True)
class FlatChart6:
    """Six flat coordinates of the double."""

    t1: complex
    t2: complex
    t3: complex
    t4: complex
    t5: complex
    t6: complex

    def __post_init__(self):
        for name in ("t1", "t2", "t3", "t4", "t5", "t6"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.t3 == 0:
            raise DomainError("flat chart needs t3 != 0")

    def as_tuple(self):
        return (self.t1, self.t2, self.t3, self.t4, self.t5, self.t6)

    def gamma_args(self, q):
        """(u1, u2), the two modular-block arguments."""
        qv = _as_imq(q)
        a = self.t6 - self.t3 / qv
        b = 1.0 - _2PII * self.t6
        if a == 0 or b == 0:
            raise DivisorError("chart sits on a divisor of the double")
        return self.t3 / a, _2PII * self.t3 / b

    def in_domain(self, q):
        try:
            u1, u2 = self.gamma_args(q)
        except DivisorError:
            return False
        return u1.imag > 0 and u2.imag > 0


def period_integrals(cov, node_count=64):
    """(A_a, A_b): cycle averages of the covering map by quadrature.

    Contours start near w + wp, so each runs mid-cell: the a-path keeps a
    full |wp| away from the pole rows and the b-path a full |w| away from
    the pole columns, whatever the lattice shape.
    """
    z0 = 1.03 * cov.w + 0.97 * cov.wp

    def f(s):
        return weierstrass_p(s, cov) + cov.c

    scale = 1.0 / (2.0 * cov.w)
    out = []
    for period in (2.0 * cov.w, 2.0 * cov.wp):
        spec = numkit.QuadratureSpec((z0, z0 + period), node_count=node_count)
        out.append(numkit.contour_integral(f, spec) * scale)
    return tuple(out)


def flat_coords6(cov, q):
    """The six flat functions of the covering for the fixed imaginary q."""
    qv = _as_imq(q)
    _, mu_om = v_and_muOmega(cov)
    den = mu_om + qv
    if abs(den) < 1e-12 * max(1.0, abs(qv)):
        raise DivisorError("flat chart undefined on mu^Omega = -q")
    mu = cov.mu
    rho = mu.conjugate() / (mu.conjugate() - mu)
    pref = qv / den
    a_a, a_b = period_integrals(cov)
    t1 = -pref * (2.0 * (rho * a_a).real + rho * a_b / qv)
    t2 = pref * rho / cov.w
    t4 = -2.0 * pref * (rho * a_b).real
    return FlatChart6(t1, t2, pref * mu_om / _2PII,
                      t4, t2.conjugate(), pref * rho / _2PII)


def _reciprocal(x):
    v = x.value if isinstance(x, Jet) else x
    if v == 0:
        raise DivisorError("prepotential pole: a divisor factor vanished")
    if isinstance(x, Jet):
        return x.compose_univariate(
            [1.0 / v, -1.0 / v ** 2, 2.0 / v ** 3, -6.0 / v ** 4])
    return 1.0 / x


def _gamma_block(arg):
    v = arg.value if isinstance(arg, Jet) else arg
    if not v.imag > 0:
        raise DomainError("modular-block argument left the upper half-plane")
    if isinstance(arg, Jet):
        return arg.compose_univariate(gamma_derivatives(v))
    return gamma_derivatives(v)[0]


def _f6(x, qv, t2_block_scale=1.0):
    """F of the double on six scalars or jets x = (x1..x6)."""
    x1, x2, x3, x4, x5, x6 = x
    inv3 = _reciprocal(x3)
    rational = (-0.25 * x1 * x2 ** 2 - 0.25 * x1 * x5 ** 2
                + 0.5 * x1 ** 2 * x3
                - 0.5 * x1 * x4 * (2.0 * x6 - _INV_2PII)
                + inv3 * (0.25 * x2 ** 2 * x4 * (x6 - _INV_2PII)
                          + 0.25 * x4 * x5 ** 2 * x6
                          + 0.5 * x4 ** 2 * x6 * (x6 - _INV_2PII)
                          + 0.0625 * x2 ** 2 * x5 ** 2))
    a = x6 - x3 * (1.0 / qv)
    inv_a = _reciprocal(a)
    g1 = _gamma_block(x3 * inv_a)
    block1 = ((-1.0 / (4j * _PI)) * g1 * inv_a ** 2 + inv3
              - _INV_2PII * inv3 * inv_a)
    b = _2PII * x6 - 1.0
    inv_b = _reciprocal(b)
    g2 = _gamma_block((-_2PII) * x3 * inv_b)  # 1 - 2 pi i x6 = -b
    block2 = (-1j * _PI) * g2 * inv_b ** 2 + inv3 + inv3 * inv_b
    return (rational
            + t2_block_scale * (1.0 / 32.0) * x2 ** 4 * block1
            + (1.0 / 32.0) * x5 ** 4 * block2)


def _chart_jet(t, qv, t2_block_scale=1.0):
    x = tuple(Jet.variable(i, v, 6) for i, v in enumerate(t.as_tuple()))
    return _f6(x, qv, t2_block_scale)


def prepotential6(t, q, deriv=()):
    """F (or an exact partial derivative, up to third order) at the chart."""
    qv = _as_imq(q)
    deriv = tuple(deriv)
    if len(deriv) > 3 or any(not isinstance(i, int) or not 0 <= i < 6
                             for i in deriv):
        raise DomainError("deriv must be up to three indices in 0..5")
    if not deriv:
        return _f6(t.as_tuple(), qv)
    return _chart_jet(t, qv).derivative(*deriv)


def third_derivatives6(t, q, t2_block_scale=1.0):
    """All third partials of F as a (6,6,6) array (exact, via jets)."""
    qv = _as_imq(q)
    return _chart_jet(t, qv, t2_block_scale).third_derivative_tensor()


def wdvv_residual6(t, q, perturb=None):
    """max over pairs i<j of |F_i F1^-1 F_j - F_j F1^-1 F_i|.

    perturb scales the t2^4 modular block by (1+perturb) (associativity
    control; the unperturbed residual is at roundoff level).
    """
    scale = 1.0 if perturb is None else 1.0 + perturb
    big_t = third_derivatives6(t, q, t2_block_scale=scale)
    f1 = big_t[0]
    try:
        f1_inv = np.linalg.inv(f1)
    except np.linalg.LinAlgError:
        raise DomainError("metric slice is singular at this chart")
    out = 0.0
    for i in range(6):
        for j in range(i + 1, 6):
            comm = big_t[i] @ f1_inv @ big_t[j] - big_t[j] @ f1_inv @ big_t[i]
            out = max(out, float(np.max(np.abs(comm))))
    return out


_WEIGHTS = (1.0, 0.5, 0.0, 1.0, 0.5, 0.0)


def quasihomogeneity_residual6(t, q, kappa):
    """|F(kappa^nu t) - kappa^2 F(t)| with weights (1, 1/2, 0, 1, 1/2, 0)."""
    qv = _as_imq(q)
    kappa = complex(kappa)
    if kappa == 0:
        raise DomainError("kappa must be nonzero")
    root = cmath.sqrt(kappa)
    factors = (kappa, root, 1.0, kappa, root, 1.0)
    scaled = tuple(f * v for f, v in zip(factors, t.as_tuple()))
    return abs(_f6(scaled, qv) - kappa ** 2 * _f6(t.as_tuple(), qv))


def euler_action6(t):
    """E = t1 d1 + (1/2) t2 d2 + t4 d4 + (1/2) t5 d5 as a coefficient vector."""
    return np.array([t.t1, 0.5 * t.t2, 0.0, t.t4, 0.5 * t.t5, 0.0],
                    dtype=complex)


def euler_residual6(t, q):
    """|E(F) - 2F| with exact first derivatives."""
    qv = _as_imq(q)
    jet = _chart_jet(t, qv)
    e = euler_action6(t)
    val = sum(e[i] * jet.derivative(i) for i in range(6))
    return abs(val - 2.0 * jet.value)


def g_function6(t, q):
    """-log{eta(u1) eta(u2) (t2 t5)^(1/8) (t3/((t6-t3/q)(2 pi i t6-1)))^(1/2)}.

    Principal branches per factor; meaningful modulo additive constants.
    """
    qv = _as_imq(q)
    u1, u2 = t.gamma_args(qv)
    if t.t2 * t.t5 == 0:
        raise DomainError("G of the double needs t2 t5 != 0")
    a = t.t6 - t.t3 / qv
    b = _2PII * t.t6 - 1.0
    g = -cmath.log(dedekind_eta(u1)) - cmath.log(dedekind_eta(u2))
    g -= cmath.log(t.t2 * t.t5) / 8.0
    g -= 0.5 * cmath.log(t.t3 / (a * b))
    return g


def phi_double_product(cov, q):
    """prod_i Phi_(1,0)(P_i) Phi_(0,1)(P_i); real and positive.

    The (0,1) half is the conjugate of the (1,0) half at the physical
    point, so each pair contributes |pref rho omega(P_i)|^2.
    """
    qv = _as_imq(q)
    _, mu_om = v_and_muOmega(cov)
    den = mu_om + qv
    if abs(den) < 1e-12 * max(1.0, abs(qv)):
        raise DivisorError("double undefined on mu^Omega = -q")
    mu = cov.mu
    rho = mu.conjugate() / (mu.conjugate() - mu)
    pref = qv / den
    rd = ramification_data(cov)
    out = 1.0
    for om in rd.omega_at_Pi:
        out *= abs(pref * rho * om) ** 2
    return out


def g_assembly6(cov, q):
    """G of the double from the conjugation-coupled tau-function:

    -(1/2) log{ |tau_W|^2 Im(mu) (mu^Omega+q)/q } - (1/24) log prod Phi Phi.
    Compare only differences across coverings.
    """
    qv = _as_imq(q)
    log_tau = tau_omega_q(cov, qv).log_tau
    return (-0.5 * (log_tau - cmath.log(qv))
            - cmath.log(phi_double_product(cov, qv)) / 24.0)
