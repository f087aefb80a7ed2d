"""Tau-functions of the covering space and assembly of the G-function.

The base object factorizes over the covering data:

    tau_W = eta(mu)^2 (2w)^(-1/4) (prod_i omega(P_i))^(-1/12),

with omega(P_i) the normalized holomorphic differential evaluated at the
ramification point P_i in the local parameter x_i = sqrt(lambda-lambda_i).
Deformation multiplies in the period factor:  tau_Wq = tau_W (mu + q).
The conjugation-coupled variant used by the real double is

    tau_Omega_q = |tau_W|^2 Im(mu) (mu^Omega + q),      mu^Omega = mu mu~/(mu~-mu),

which is real-analytic rather than holomorphic in the branch points.

Every tau-function is pinned down by its log-derivatives along the branch
points, d(log tau)/d(lambda_i) = -S_i/2, where S_i is the constant term of
the matching kernel at coinciding arguments near P_i (the projective
connection of module kernels).  Values carry an arbitrary normalization;
all comparisons here are differences or derivatives.

Branch policy: log tau is a sum of per-factor principal logs.  Derivatives
difference two nearby coverings per factor through log(f_t/f_0) of a
near-unit ratio, with the local-parameter roots b_i of the steered covering
aligned to the base covering (the principal square root of 2/wp''(sigma_i)
is discontinuous whenever wp'' crosses the negative real axis, which it
does on rectangular lattices).  A ratio straying more than 0.5 from 1
trips a guard instead of silently wrapping.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import DivisorError, DomainError
from .isomono import rotation_from_Wq
from .kernels import bergman_projective_connection, v_and_muOmega
from .theta import dedekind_eta
from .torus import lambda_gradient, ramification_data

__all__ = [
    "TauValue",
    "tau_w",
    "tau_wq",
    "tau_omega_q",
    "log_tau_gradient",
    "log_tau_wirtinger_gradient",
    "tau_ode_residual",
    "tau_omega_ode_residual",
    "tau_i_relation_residual",
    "s_euler_residuals",
    "phi_s_product",
    "g_assembly",
]

_KINDS = ("W", "Wq", "OmegaQ")


def _q_value(q):
    qv = complex(getattr(q, "q", q))
    if qv == 0:
        raise DomainError("deformation parameter q must be nonzero")
    return qv


def _imaginary_q(q):
    qv = _q_value(q)
    if abs(qv.real) > 1e-12 * abs(qv):
        raise DomainError("conjugation-coupled deformation needs purely imaginary q")
    return qv


def _mu_plus_q(cov, qv):
    d = cov.mu + qv
    if abs(d) < 1e-12 * max(1.0, abs(qv)):
        raise DivisorError("tau-function undefined at mu = -q")
    return d


def _mu_omega_plus_q(cov, qv):
    _, mo = v_and_muOmega(cov)
    d = mo + qv
    if abs(d) < 1e-12 * max(1.0, abs(qv)):
        raise DivisorError("tau-function undefined at mu^Omega = -q")
    return d


@dataclass(frozen=True, eq=False)
class TauValue:
    """log tau together with its factor breakdown.

    log_tau is the sum of principal logs of the factors, so comparisons of
    values are only meaningful as differences; factors() multiplying back to
    exp(log_tau) is the internal consistency invariant.
    """

    log_tau: complex
    factors: dict

    @property
    def value(self):
        return cmath.exp(self.log_tau)

    def product(self):
        p = 1.0 + 0.0j
        for f in self.factors.values():
            p *= f
        return p

    def consistency_residual(self):
        p = self.product()
        return abs(self.value - p) / abs(p)


def _tau_w_parts(cov):
    """(eta, 2w, prod omega(P_i)) with the recorded branch convention."""
    rd = ramification_data(cov)
    eta = dedekind_eta(cov.mu)
    prod_om = rd.omega_at_Pi[0] * rd.omega_at_Pi[1] * rd.omega_at_Pi[2]
    return eta, 2.0 * cov.w, prod_om, rd


def tau_w(cov):
    """tau_W = eta^2 (2w)^(-1/4) (prod omega(P_i))^(-1/12)."""
    eta, w2, prod_om, _ = _tau_w_parts(cov)
    log_eta2 = 2.0 * cmath.log(eta)
    log_w = -0.25 * cmath.log(w2)
    log_om = -cmath.log(prod_om) / 12.0
    factors = {
        "eta^2": cmath.exp(log_eta2),
        "(2w)^(-1/4)": cmath.exp(log_w),
        "omega_product^(-1/12)": cmath.exp(log_om),
        "det_factor": 1.0 + 0.0j,
    }
    return TauValue(log_eta2 + log_w + log_om, factors)


def tau_wq(cov, q):
    """Deformed tau-function tau_W * (mu + q)."""
    qv = _q_value(q)
    det = _mu_plus_q(cov, qv)
    base = tau_w(cov)
    factors = dict(base.factors)
    factors["det_factor"] = det
    return TauValue(base.log_tau + cmath.log(det), factors)


def tau_omega_q(cov, q):
    """Conjugation-coupled tau-function |tau_W|^2 Im(mu) (mu^Omega + q)."""
    qv = _imaginary_q(q)
    det = _mu_omega_plus_q(cov, qv)
    base = tau_w(cov)
    factors = {
        "abs_tau_w^2": cmath.exp(2.0 * base.log_tau.real),
        "im_mu": complex(cov.mu.imag),
        "det_factor": det,
    }
    log = 2.0 * base.log_tau.real + cmath.log(cov.mu.imag) + cmath.log(det)
    return TauValue(log, factors)


def _guard(name, r):
    if abs(r - 1.0) > 0.5:
        raise DomainError(
            "factor %r moved too far for a branch-safe log difference" % (name,))
    return r


def _log_tau_delta(cov0, q=None, kind="W"):
    """F with F(cov_t) = log tau(cov_t) - log tau(cov0), branch-safe.

    Each factor contributes the principal log of a near-unit ratio; the
    local-parameter roots of the steered covering are aligned to cov0.
    """
    if kind not in _KINDS:
        raise DomainError("unknown tau-function kind %r" % (kind,))
    eta0, w20, _, rd0 = _tau_w_parts(cov0)
    p0 = rd0.b[0] * rd0.b[1] * rd0.b[2] / w20 ** 3
    if kind == "Wq":
        qv = _q_value(q)
        det0 = _mu_plus_q(cov0, qv)
    elif kind == "OmegaQ":
        qv = _imaginary_q(q)
        det0 = _mu_omega_plus_q(cov0, qv)

    def delta_w(cov_t):
        rdt = ramification_data(cov_t)
        b = [bt if abs(bt - rb) <= abs(bt + rb) else -bt
             for bt, rb in zip(rdt.b, rd0.b)]
        pt = b[0] * b[1] * b[2] / (2.0 * cov_t.w) ** 3
        r_eta = _guard("eta", dedekind_eta(cov_t.mu) / eta0)
        r_w = _guard("2w", 2.0 * cov_t.w / w20)
        r_p = _guard("omega_product", pt / p0)
        return (2.0 * cmath.log(r_eta) - 0.25 * cmath.log(r_w)
                - cmath.log(r_p) / 12.0)

    if kind == "W":
        return delta_w

    if kind == "Wq":
        def delta(cov_t):
            r_det = _guard("det_factor", _mu_plus_q(cov_t, qv) / det0)
            return delta_w(cov_t) + cmath.log(r_det)
        return delta

    im0 = cov0.mu.imag

    def delta_omega(cov_t):
        r_det = _guard("det_factor", _mu_omega_plus_q(cov_t, qv) / det0)
        r_im = _guard("im_mu", cov_t.mu.imag / im0)
        return (2.0 * delta_w(cov_t).real + cmath.log(r_im).real
                + cmath.log(r_det))

    return delta_omega


def log_tau_gradient(cov, q=None, kind="W", eps=1e-4):
    """(d log tau / d lambda_i)_{i=1..3} by inverse-Jacobian steering."""
    return lambda_gradient(_log_tau_delta(cov, q, kind), cov, eps=eps)


def log_tau_wirtinger_gradient(cov, q, eps=1e-4):
    """(d/d lambda_i, d/d lambda_bar_i) of log tau_Omega_q.

    The tau-function is real-analytic, not holomorphic: a real steering
    step e moves lambda_i and lambda_bar_i together (D_x = d + d_bar),
    an imaginary step moves them oppositely (D_y = d - d_bar).
    """
    F = _log_tau_delta(cov, q, "OmegaQ")
    dx = lambda_gradient(F, cov, eps=eps)
    dy = lambda_gradient(F, cov, eps=1j * eps)
    return (dx + dy) / 2.0, (dx - dy) / 2.0


def tau_ode_residual(cov, q=None, kind="W", eps=1e-4):
    """max_i |d log tau/d lambda_i + S_i/2| for the matching kernel."""
    grad = log_tau_gradient(cov, q, kind, eps=eps)
    out = 0.0
    for i in range(3):
        s = bergman_projective_connection(i, cov, q, kind=kind)
        out = max(out, abs(grad[i] + 0.5 * s))
    return out


def tau_omega_ode_residual(cov, q, eps=1e-4):
    """max over i of both defining equations of tau_Omega_q.

    d log tau/d lambda_i = -S_i/2 and d log tau/d lambda_bar_i = -conj(S_i)/2
    with S_i extracted from the conjugation-coupled kernel.
    """
    dl, dlbar = log_tau_wirtinger_gradient(cov, q, eps=eps)
    out = 0.0
    for i in range(3):
        s = bergman_projective_connection(i, cov, q, kind="OmegaQ")
        out = max(out, abs(dl[i] + 0.5 * s))
        out = max(out, abs(dlbar[i] + 0.5 * s.conjugate()))
    return out


def tau_i_relation_residual(cov, q, eps=1e-4):
    """Isomonodromic tau-function via tau_I = tau_Wq^(-1/2).

    Checks max_i |d log tau_I/d lambda_i - (1/2) sum_{j!=i} beta_ij^2
    (lambda_i - lambda_j)| with the rotation coefficients of the deformed
    kernel.
    """
    grad = log_tau_gradient(cov, q, kind="Wq", eps=eps)
    rot = rotation_from_Wq(cov, q)
    lam = ramification_data(cov).lam
    bsq = {(0, 1): rot.b12 ** 2, (0, 2): rot.b13 ** 2, (1, 2): rot.b23 ** 2}
    out = 0.0
    for i in range(3):
        rhs = 0.0
        for j in range(3):
            if j == i:
                continue
            rhs += 0.5 * bsq[(min(i, j), max(i, j))] * (lam[i] - lam[j])
        out = max(out, abs(-0.5 * grad[i] - rhs))
    return out


def s_euler_residuals(cov, q, i, eps=2e-3):
    """(|e(S_i)|, |E(S_i) + S_i|) for the deformed projective connection.

    e = sum_j d/d lambda_j and E = sum_j lambda_j d/d lambda_j; the unit
    vector field annihilates S_i^{Wq} and the Euler field scales it with
    weight -1.
    """
    def F(cov_t):
        return bergman_projective_connection(i, cov_t, q, kind="Wq")

    g = lambda_gradient(F, cov, eps=eps)
    lam = np.asarray(ramification_data(cov).lam)
    s0 = bergman_projective_connection(i, cov, q, kind="Wq")
    return abs(np.sum(g)), abs(np.dot(lam, g) + s0)


def phi_s_product(cov, q=None):
    """prod_i phi_s(P_i) with phi_s(P_i) = (q/(mu+q)) omega(P_i).

    q=None drops the deformation prefactor (phi_s -> omega).
    """
    _, _, prod_om, _ = _tau_w_parts(cov)
    if q is None:
        return prod_om
    qv = _q_value(q)
    pref = qv / _mu_plus_q(cov, qv)
    return pref ** 3 * prod_om


def g_assembly(cov, q=None, phi_product=None):
    """G = -(1/2) log{tau_W (mu+q)/q} - (1/24) log prod phi_s(P_i) + const.

    The (mu+q)/q factor normalizes the deformed G so that it reduces to the
    undeformed one as q grows; q=None evaluates the undeformed assembly.
    Values are meaningful mod an additive constant: compare differences
    across coverings only.
    """
    if phi_product is None:
        phi_product = phi_s_product(cov, q)
    g = -0.5 * tau_w(cov).log_tau - cmath.log(phi_product) / 24.0
    if q is not None:
        qv = _q_value(q)
        g -= 0.5 * cmath.log(_mu_plus_q(cov, qv) / qv)
    return g
