"""The 3-dimensional Frobenius manifold attached to the deformed pairing.

Everything here is an explicit function of a flat chart (t1, t2, t3):

    F(t) = -(1/4) t1 t2^2 + (1/2) t1^2 t3 - (pi*i/32) t2^4 f(2*pi*i*t3),

and F solves WDVV exactly when f solves the Chazy equation
f''' = 6 f f'' - 9 (f')^2.  Taking f = gamma (theta.gamma_chazy) gives the
classical structure; the q-deformation is the SL2 orbit point

    f_q(m) = gamma(m/(1 - m/q)) / (1 - m/q)^2 + 2/(q (1 - m/q)),

i.e. ChazyFunction.sl2_of_gamma(1, 0, -1/q, 1).  For 1/q a (rational)
integer the matrix lies in SL(2,Z) and f_q collapses back to gamma, so the
deformed and undeformed prepotentials coincide.

Charts come from coverings via flat_coords3; after that the covering is
never consulted again (WDVV, quasihomogeneity, the Euler field and the
G-function are statements about F as a function of t alone).

Derivatives of F are exact: the polynomial part and the t2^4 block are
pushed through degree-3 jet arithmetic, with the Chazy factor entering via
compose_univariate on its (f, f', f'', f''') data.  Finite differences are
kept out of this module and used only as an independent test oracle.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DivisorError, DomainError
from .jets import Jet
from .theta import ChazyFunction, dedekind_eta, gamma_chazy

__all__ = [
    "FlatChart3",
    "PrepotentialFamily3",
    "METRIC3",
    "flat_coords3",
    "prepotential3",
    "third_derivatives3",
    "wdvv_residual3",
    "quasihomogeneity_residual3",
    "euler_action3",
    "euler_residual3",
    "g_function3",
]

_PI = math.pi
_2PII = 2j * _PI

# Constant Gram matrix of the invariant pairing in the chart:
# ds^2 = (1/2) dt2^2 - 2 dt1 dt3, and F_1[A,B] = d^3 F / dt1 dtA dtB = -ds^2.
METRIC3 = np.array(
    [[0.0, 0.0, 1.0], [0.0, -0.5, 0.0], [1.0, 0.0, 0.0]], dtype=complex
)


@dataclass(frozen=True)
class FlatChart3:
    """A point (t1, t2, t3) of the flat chart.

    t2 must be nonzero (it enters G as t2^(1/8) and the inversion back to
    the covering divides by it).  The torus modulus behind the chart is
    recovered by modulus(): 2*pi*i*t3 = q*mu/(mu+q), so
    mu = 2*pi*i*t3 / (1 - 2*pi*i*t3/q), with q=None meaning the
    undeformed chart mu = 2*pi*i*t3.
    """

    t1: complex
    t2: complex
    t3: complex

    def __post_init__(self):
        object.__setattr__(self, "t1", complex(self.t1))
        object.__setattr__(self, "t2", complex(self.t2))
        object.__setattr__(self, "t3", complex(self.t3))
        if self.t2 == 0:
            raise DomainError("flat chart needs t2 != 0")

    def modulus(self, q=None):
        """The torus modulus this chart encodes (for deformation q)."""
        m = _2PII * self.t3
        if q is None:
            return m
        den = 1.0 - m / complex(q)
        if den == 0:
            raise DivisorError("chart sits on the divisor 2*pi*i*t3 = q")
        return m / den

    def in_domain(self, q=None):
        """Validity flag: does the recovered modulus lie in Im > 0?"""
        try:
            return self.modulus(q).imag > 0
        except DivisorError:
            return False


class PrepotentialFamily3:
    """A member of the Chazy family of prepotentials.

    Carries the ChazyFunction f feeding the t2^4 block.  Kinds:
      undeformed        f = gamma
      deformed(q)       f = sl2_of_gamma(1, 0, -1/q, 1)
      chazy_family(f)   any ChazyFunction (need not solve Chazy; WDVV
                        then fails, which is the point of the probe)
      sl2_family(a,b,c,d)  the full SL(2,C) orbit of gamma
    """

    def __init__(self, kind, chazy, q=None):
        self.kind = kind
        self.chazy = chazy
        self.q = q

    def __repr__(self):
        return "PrepotentialFamily3(%s)" % (self.kind,)

    @staticmethod
    def undeformed():
        return PrepotentialFamily3("undeformed", ChazyFunction.gamma())

    @staticmethod
    def deformed(q):
        q = complex(q)
        if q == 0:
            raise DomainError("deformation parameter q must be nonzero")
        f = ChazyFunction.sl2_of_gamma(1.0, 0.0, -1.0 / q, 1.0)
        return PrepotentialFamily3("deformed(q=%r)" % (q,), f, q=q)

    @staticmethod
    def chazy_family(f):
        if not isinstance(f, ChazyFunction):
            raise DomainError("chazy_family expects a ChazyFunction")
        return PrepotentialFamily3("chazy_family(%s)" % (f.kind,), f)

    @staticmethod
    def sl2_family(a, b, c, d):
        f = ChazyFunction.sl2_of_gamma(a, b, c, d)
        return PrepotentialFamily3(
            "sl2_family(%r,%r,%r,%r)" % (a, b, c, d), f
        )


def flat_coords3(cov, q):
    """Flat chart of a covering (w, w', c) at deformation q:

        t1 = -pi*i*gamma(mu)/(4 w^2) - c - pi*i/(2 w^2 (mu+q))
        t2 = (q/(mu+q)) / w
        t3 = (1/(2*pi*i)) q mu/(mu+q)

    q=None gives the limit chart (drop the 1/(mu+q) term, t2 = 1/w,
    t3 = mu/(2*pi*i)).  The last term of t1 carries 1/w^2, like the gamma
    term: both come from b-periods of the quadratic differential and scale
    as kappa under lambda -> kappa*lambda.
    """
    mu = cov.mu
    w = cov.w
    g = gamma_chazy(mu)
    t1_flat = -_PI * 1j * g / (4.0 * w * w) - cov.c
    if q is None:
        return FlatChart3(t1_flat, 1.0 / w, mu / _2PII)
    q = complex(q)
    if mu + q == 0:
        raise DivisorError("flat chart undefined at mu = -q")
    pref = q / (mu + q)
    t1 = t1_flat - _PI * 1j / (2.0 * w * w * (mu + q))
    return FlatChart3(t1, pref / w, pref * mu / _2PII)


def _family_jet(fam, t):
    """F as a degree-3 jet around the chart point (exact partials <= 3)."""
    x1 = Jet.variable(0, t.t1, 3)
    x2 = Jet.variable(1, t.t2, 3)
    x3 = Jet.variable(2, t.t3, 3)
    F = -0.25 * (x1 * x2 * x2) + 0.5 * (x1 * x1 * x3)
    arg = _2PII * x3
    block = arg.compose_univariate(fam.chazy.derivatives(arg.value))
    return F - (_PI * 1j / 32.0) * (x2 ** 4) * block


def prepotential3(fam, t, deriv=()):
    """F(t) or an exact partial derivative of it.

    deriv is a tuple of variable indices (0, 1, 2 for t1, t2, t3), at most
    three of them; e.g. deriv=(0, 1, 1) is d^3 F / dt1 dt2^2.
    """
    deriv = tuple(deriv)
    if len(deriv) > 3:
        raise DomainError("derivatives are carried up to order 3 only")
    if any((not isinstance(i, int)) or i not in (0, 1, 2) for i in deriv):
        raise DomainError("derivative indices must be 0, 1 or 2")
    F = _family_jet(fam, t)
    if not deriv:
        return F.value
    return F.derivative(*deriv)


def third_derivatives3(fam, t):
    """The full (3,3,3) tensor of third partials of F at t."""
    return _family_jet(fam, t).third_derivative_tensor()


def wdvv_residual3(fam, t):
    """max_(i,j) || F_i F_1^(-1) F_j - F_j F_1^(-1) F_i || at the chart t,
    with F_i the matrix of third partials in direction i.  Zero iff the
    associativity equations hold there.
    """
    T = third_derivatives3(fam, t)
    F1 = T[0]
    try:
        F1inv = np.linalg.inv(F1)
    except np.linalg.LinAlgError:
        raise DomainError("metric matrix F_1 is singular at this chart")
    worst = 0.0
    for i in range(3):
        for j in range(i + 1, 3):
            comm = T[i] @ F1inv @ T[j] - T[j] @ F1inv @ T[i]
            worst = max(worst, float(np.linalg.norm(comm)))
    return worst


def quasihomogeneity_residual3(fam, t, kappa):
    """|F(kappa t1, kappa^(1/2) t2, t3) - kappa^2 F(t)|.

    t2 enters F only through even powers, so the square-root branch is
    immaterial; the residual vanishes for every nonzero kappa.
    """
    kappa = complex(kappa)
    if kappa == 0:
        raise DomainError("scaling kappa must be nonzero")
    root = cmath.sqrt(kappa)
    scaled = FlatChart3(kappa * t.t1, root * t.t2, t.t3)
    return abs(prepotential3(fam, scaled) - kappa * kappa * prepotential3(fam, t))


def euler_action3(t):
    """Coefficients of the Euler field E = t1 d/dt1 + (1/2) t2 d/dt2 at t."""
    return np.array([t.t1, 0.5 * t.t2, 0.0], dtype=complex)


def euler_residual3(fam, t):
    """|E(F) - 2 F| with exact first derivatives; the infinitesimal form of
    the quasihomogeneity law (no quadratic defect in this normalization)."""
    F = _family_jet(fam, t)
    e = np.dot(euler_action3(t), [F.derivative(0), F.derivative(1), F.derivative(2)])
    return abs(e - 2.0 * F.value)


def g_function3(t, q=None):
    """G(t) = -log{ eta(m_q) t2^(1/8) (2*pi*i*t3/q - 1)^(-1/2) } with
    m_q = 2*pi*i*t3/(1 - 2*pi*i*t3/q); q=None drops the last factor and
    uses m = 2*pi*i*t3.

    All fractional powers are principal (log-based), so G itself is fixed
    only up to an additive constant; compare differences G(t) - G(t'),
    never raw values.
    """
    m = t.modulus(q)
    g = -cmath.log(dedekind_eta(m)) - cmath.log(t.t2) / 8.0
    if q is not None:
        g += 0.5 * cmath.log(_2PII * t.t3 / complex(q) - 1.0)
    return g
