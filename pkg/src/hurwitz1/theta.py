"""Jacobi theta functions with half-integer characteristics.

Convention:

    theta[p,q](z; mu) = sum_n exp( pi*i*mu*(n+p)^2 + 2*pi*i*(n+p)*(z+q) )

so theta1(z) = -theta[1/2,1/2](z) is odd, and the theta constants are
theta2 = theta[1/2,0](0), theta3 = theta[0,0](0), theta4 = theta[0,1/2](0).

The series is summed outward from the index where the terms peak, so no
argument reduction is needed; truncation stops once two consecutive rings
fall below 1e-16 of the running sum (hard cap 200 terms).

The module also carries the Dedekind eta function, the Chazy-equation
machinery around gamma(mu) = theta1'''(0)/(3*pi*i*theta1'(0)), and its
SL(2,C) orbit.
"""

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .jets import Jet

__all__ = [
    "Modulus",
    "ThetaChar",
    "CHAR1",
    "CHAR2",
    "CHAR3",
    "CHAR4",
    "theta_eval",
    "theta_mu_derivative",
    "theta1",
    "theta1_zero_derivatives",
    "theta_constants",
    "dedekind_eta",
    "gamma_derivatives",
    "gamma_chazy",
    "ChazyFunction",
    "sl2_transform_chazy",
    "chazy_residual",
]

_PI = cmath.pi
_2PII = 2j * _PI

_SERIES_EPS = 1e-16
_SERIES_CAP = 200


@dataclass(frozen=True)
class Modulus:
    """Torus period mu, constrained to the upper half-plane."""

    mu: complex

    def __post_init__(self):
        if not (self.mu.imag > 0):
            raise DomainError("modulus must have positive imaginary part")


def _as_mu(m):
    mu = m.mu if isinstance(m, Modulus) else complex(m)
    if not (mu.imag > 0):
        raise DomainError("modulus must have positive imaginary part")
    return mu


@dataclass(frozen=True)
class ThetaChar:
    """Half-integer characteristics; stored exactly as fractions."""

    p: Fraction
    q_char: Fraction

    def __post_init__(self):
        for v in (self.p, self.q_char):
            if v not in (Fraction(0), Fraction(1, 2)):
                raise DomainError("characteristics must be 0 or 1/2")


CHAR1 = ThetaChar(Fraction(1, 2), Fraction(1, 2))
CHAR2 = ThetaChar(Fraction(1, 2), Fraction(0))
CHAR3 = ThetaChar(Fraction(0), Fraction(0))
CHAR4 = ThetaChar(Fraction(0), Fraction(1, 2))


def _series(p, q, z, mu, factor):
    """sum_n factor(n+p) * exp(pi*i*mu*(n+p)^2 + 2*pi*i*(n+p)*(z+q)),
    summed outward from the peak of |term|."""
    zq = z + q
    # |term| peaks where d/dn of Im(mu)(n+p)^2 + 2(n+p)Im(zq) vanishes
    center = int(round(-zq.imag / mu.imag - p))

    def term(n):
        np_ = n + p
        return factor(np_) * cmath.exp(_PI * 1j * mu * np_ * np_ + _2PII * np_ * zq)

    s = term(center)
    below = 0
    for k in range(1, _SERIES_CAP // 2 + 1):
        tp = term(center + k)
        tm = term(center - k)
        s += tp + tm
        if abs(tp) + abs(tm) <= _SERIES_EPS * abs(s):
            below += 1
            if below >= 2:
                return s
        else:
            below = 0
    raise DomainError("theta series did not converge within %d terms" % _SERIES_CAP)


def theta_eval(char, z, m, dz_order=0):
    """theta[p,q](z; mu) or its dz_order-th z-derivative (dz_order = 0..5)."""
    if not isinstance(dz_order, int) or not 0 <= dz_order <= 5:
        raise DomainError("dz_order must be an integer in 0..5")
    return _theta_any_order(char, z, m, dz_order)


def _theta_any_order(char, z, m, dz_order):
    mu = _as_mu(m)
    p = float(char.p)
    q = float(char.q_char)
    z = complex(z)
    if dz_order == 0:
        fac = lambda np_: 1.0
    else:
        fac = lambda np_: (_2PII * np_) ** dz_order
    return _series(p, q, z, mu, fac)


def theta_mu_derivative(char, z, m):
    """d/dmu of theta[p,q](z; mu), by direct series (term factor pi*i*(n+p)^2).

    Satisfies the heat equation: 4*pi*i * theta_mu_derivative == d^2/dz^2 theta.
    """
    mu = _as_mu(m)
    p = float(char.p)
    q = float(char.q_char)
    return _series(p, q, complex(z), mu, lambda np_: _PI * 1j * np_ * np_)


def theta1(z, m, dz_order=0):
    """theta1 = -theta[1/2,1/2]; odd, with theta1'(0) = pi*theta2*theta3*theta4."""
    return -theta_eval(CHAR1, z, m, dz_order)


def theta1_zero_derivatives(m, max_order=9):
    """Odd z-derivatives of theta1 at z = 0, orders 1, 3, ..., max_order.

    Returns a dict {order: value}.  Orders above the public theta_eval cap
    are needed internally: the mu-derivative ladder u_k' = u_{k+2}/(4*pi*i)
    pushes gamma''' down to the ninth derivative.
    """
    mu = _as_mu(m)
    if max_order % 2 == 0 or max_order < 1 or max_order > 11:
        raise DomainError("max_order must be odd, between 1 and 11")
    out = {}
    for k in range(1, max_order + 1, 2):
        out[k] = -_series(0.5, 0.5, 0.0 + 0.0j, mu, lambda np_: (_2PII * np_) ** k)
    return out


def theta_constants(m):
    """(theta2, theta3, theta4) at z = 0."""
    return (
        theta_eval(CHAR2, 0.0, m),
        theta_eval(CHAR3, 0.0, m),
        theta_eval(CHAR4, 0.0, m),
    )


def dedekind_eta(m):
    """Dedekind eta via the q-product e^(pi*i*mu/12) prod (1-q^n).

    With mu in the usual sampling window the value agrees with the
    principal cube root of theta1'(0)/(2*pi) (arg in (-pi/3, pi/3]).
    """
    mu = _as_mu(m)
    q = cmath.exp(_2PII * mu)
    prod = 1.0 + 0.0j
    qn = 1.0 + 0.0j
    for n in range(1, 400):
        qn *= q
        prod *= 1.0 - qn
        if abs(qn) < 1e-18:
            break
    else:
        raise DomainError("eta product too slow to converge for this modulus")
    return cmath.exp(_PI * 1j * mu / 12.0) * prod


_4PII = 4j * _PI
_3PII = 3j * _PI


def gamma_derivatives(m):
    """(gamma, gamma', gamma'', gamma''') at mu.

    gamma = u3/(3*pi*i*u1) with u_k = theta1^(k)(0); mu-derivatives come
    from the heat-equation ladder du_k/dmu = u_{k+2}/(4*pi*i), assembled
    with truncated Taylor arithmetic.
    """
    u = theta1_zero_derivatives(m, 9)
    # degree-3 Taylor coefficients of u1(mu+e) and u3(mu+e)
    v0 = Jet(1, [u[1], u[3] / _4PII, u[5] / _4PII ** 2 / 2.0, u[7] / _4PII ** 3 / 6.0])
    v1 = Jet(1, [u[3], u[5] / _4PII, u[7] / _4PII ** 2 / 2.0, u[9] / _4PII ** 3 / 6.0])
    g = v1 / (v0 * _3PII)
    return (g.c[0], g.c[1], 2.0 * g.c[2], 6.0 * g.c[3])


def gamma_chazy(m, order=0):
    """gamma(mu) = theta1'''(0)/(3*pi*i*theta1'(0)) or a mu-derivative of it
    (order = 0..3).  Solves the Chazy equation f''' = 6 f f'' - 9 f'^2.
    """
    if not isinstance(order, int) or not 0 <= order <= 3:
        raise DomainError("order must be an integer in 0..3")
    return gamma_derivatives(m)[order]


class ChazyFunction:
    """A probe function for the Chazy equation: carries values and three
    mu-derivatives.  Kinds: gamma, sl2_of_gamma(a,b,c,d), constant(v),
    custom(fn) with fn(mu) -> (f, f', f'', f''').
    """

    def __init__(self, kind, derivs_fn):
        self.kind = kind
        self._derivs_fn = derivs_fn

    def derivatives(self, m):
        return self._derivs_fn(m)

    def __call__(self, m):
        return self.derivatives(m)[0]

    def __repr__(self):
        return "ChazyFunction(%s)" % (self.kind,)

    @staticmethod
    def gamma():
        return ChazyFunction("gamma", gamma_derivatives)

    @staticmethod
    def constant(v):
        v = complex(v)
        return ChazyFunction("constant(%r)" % (v,), lambda m: (v, 0.0, 0.0, 0.0))

    @staticmethod
    def custom(fn, label="custom"):
        return ChazyFunction(label, fn)

    @staticmethod
    def sl2_of_gamma(a, b, c, d):
        return sl2_transform_chazy(ChazyFunction.gamma(), a, b, c, d)


def sl2_transform_chazy(f, a, b, c, d):
    """The Chazy-equation symmetry
        g(mu) = f((a*mu+b)/(c*mu+d)) / (c*mu+d)^2 - 2c/(c*mu+d),
    for (a b; c d) in SL(2,C); maps solutions to solutions.
    """
    a, b, c, d = complex(a), complex(b), complex(c), complex(d)
    if abs(a * d - b * c - 1.0) > 1e-12:
        raise DomainError("matrix must have determinant 1")

    def derivs(m, f=f, a=a, b=b, c=c, d=d):
        m = m.mu if isinstance(m, Modulus) else complex(m)
        den = c * m + d
        if den == 0:
            raise DomainError("Moebius map has a pole at this modulus")
        mj = Jet.variable(0, m, 1)
        dj = c * mj + d
        mtj = (a * mj + b) / dj
        fj = mtj.compose_univariate(f.derivatives(mtj.value))
        gj = fj / (dj * dj) - 2.0 * c * dj.reciprocal()
        return (gj.c[0], gj.c[1], 2.0 * gj.c[2], 6.0 * gj.c[3])

    label = "sl2(%r,%r,%r,%r)·%s" % (a, b, c, d, f.kind)
    return ChazyFunction(label, derivs)


def chazy_residual(f, m):
    """| f''' - 6 f f'' + 9 (f')^2 | at mu; zero iff f solves Chazy there."""
    d0, d1, d2, d3 = f.derivatives(m)
    return abs(d3 - 6.0 * d0 * d2 + 9.0 * d1 * d1)
