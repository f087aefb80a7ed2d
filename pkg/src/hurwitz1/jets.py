"""Truncated multivariate Taylor arithmetic, total degree <= 3.

Just enough forward-mode jet algebra to read exact third derivatives off
explicit prepotentials (polynomial/rational blocks plus compositions with
a univariate function given by a short derivative list).  No CAS needed;
coefficients live densely on the graded monomial basis of
C[x1..xn] / (degree > 3).
"""

import itertools
import math

import numpy as np

from .errors import DomainError

_CACHE = {}


def _basis(nvars):
    """Monomial exponent tuples of total degree <= 3, graded lex, plus the
    index map and the vectorized multiplication table (I, J, K arrays with
    mono[K] = mono[I]*mono[J])."""
    if nvars in _CACHE:
        return _CACHE[nvars]
    monos = []
    for deg in range(4):
        for alpha in itertools.product(range(deg + 1), repeat=nvars):
            if sum(alpha) == deg:
                monos.append(alpha)
    index = {a: i for i, a in enumerate(monos)}
    I, J, K = [], [], []
    for i, a in enumerate(monos):
        for j, b in enumerate(monos):
            if sum(a) + sum(b) <= 3:
                c = tuple(x + y for x, y in zip(a, b))
                I.append(i)
                J.append(j)
                K.append(index[c])
    table = (np.array(I), np.array(J), np.array(K))
    _CACHE[nvars] = (monos, index, table)
    return _CACHE[nvars]


class Jet:
    """A truncated Taylor expansion around a point (degree <= 3)."""

    __slots__ = ("nvars", "c")

    def __init__(self, nvars, coeffs=None):
        self.nvars = nvars
        size = len(_basis(nvars)[0])
        if coeffs is None:
            self.c = np.zeros(size, dtype=complex)
        else:
            self.c = np.asarray(coeffs, dtype=complex).copy()

    # -- constructors -------------------------------------------------
    @staticmethod
    def constant(value, nvars):
        j = Jet(nvars)
        j.c[0] = value
        return j

    @staticmethod
    def variable(i, value, nvars):
        """value + x_i as a jet (seed for differentiation w.r.t. x_i)."""
        j = Jet(nvars)
        j.c[0] = value
        _, index, _ = _basis(nvars)
        e = tuple(1 if k == i else 0 for k in range(nvars))
        j.c[index[e]] = 1.0
        return j

    # -- ring operations ----------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Jet):
            if other.nvars != self.nvars:
                raise DomainError("jet arity mismatch")
            return other
        return Jet.constant(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        out = Jet(self.nvars)
        out.c = self.c + other.c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Jet(self.nvars)
        out.c = -self.c
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Jet):
            out = Jet(self.nvars)
            out.c = self.c * other
            return out
        if other.nvars != self.nvars:
            raise DomainError("jet arity mismatch")
        I, J, K = _basis(self.nvars)[2]
        out = Jet(self.nvars)
        np.add.at(out.c, K, self.c[I] * other.c[J])
        return out

    def __rmul__(self, other):
        return self * other

    def reciprocal(self):
        a0 = self.c[0]
        if a0 == 0:
            raise DomainError("jet reciprocal at a zero constant term")
        u = self * (1.0 / a0)
        u.c[0] = 0.0  # u is nilpotent: (1+u)^(-1) = 1 - u + u^2 - u^3
        one = Jet.constant(1.0, self.nvars)
        inv = one - u + u * u - u * u * u
        return inv * (1.0 / a0)

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return self * (1.0 / other)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, n):
        if not isinstance(n, int):
            raise DomainError("jet powers must be integers")
        if n < 0:
            return self.reciprocal() ** (-n)
        out = Jet.constant(1.0, self.nvars)
        for _ in range(n):
            out = out * self
        return out

    # -- composition ---------------------------------------------------
    def compose_univariate(self, derivs):
        """f(self) where f is given by [f, f', f'', f'''] at self.c[0]."""
        if len(derivs) < 4:
            raise DomainError("need derivatives up to order 3")
        d = self - self.c[0]  # nilpotent deviation
        out = Jet.constant(derivs[0], self.nvars)
        out = out + derivs[1] * d
        d2 = d * d
        out = out + (derivs[2] / 2.0) * d2
        out = out + (derivs[3] / 6.0) * (d2 * d)
        return out

    # -- readout --------------------------------------------------------
    @property
    def value(self):
        return self.c[0]

    def derivative(self, *var_indices):
        """Mixed partial d^k/dx_{i1}..dx_{ik} at the expansion point, k<=3."""
        if len(var_indices) > 3:
            raise DomainError("jets carry derivatives up to order 3 only")
        alpha = [0] * self.nvars
        for i in var_indices:
            alpha[i] += 1
        _, index, _ = _basis(self.nvars)
        fact = 1.0
        for a in alpha:
            fact *= math.factorial(a)
        return self.c[index[tuple(alpha)]] * fact

    def third_derivative_tensor(self):
        """All d^3/dx_i dx_j dx_k as an (n,n,n) array."""
        n = self.nvars
        out = np.zeros((n, n, n), dtype=complex)
        for i in range(n):
            for j in range(i, n):
                for k in range(j, n):
                    v = self.derivative(i, j, k)
                    for p in set(itertools.permutations((i, j, k))):
                        out[p] = v
        return out
