"""The one-parameter Omega-triplet and its isomonodromic identities.

The three functions (theta constants at z = 0, d_mu their logs)

    O1 = -(1/(pi th2^2 th3^2)) (2 d_mu log th4 + 1/(mu+q)),
    O2 = -(1/(pi th3^2 th4^2)) (2 d_mu log th2 + 1/(mu+q)),
    O3 = -(1/(pi*i th2^2 th4^2)) (2 d_mu log th3 + 1/(mu+q)),

satisfy O1^2 + O2^2 + O3^2 = -1/4 and, as functions of the cross-ratio
x = (l3-l1)/(l2-l1) = th2^4/th3^4,

    dO1/dx = O2 O3 / x,   dO2/dx = -O1 O3/(x-1),   dO3/dx = O1 O2/(x(x-1)).

Dividing by branch-point differences turns the triplet into rotation
coefficients of a flat Darboux-Egoroff metric, and these coincide with the
coefficients beta_ij = W_q(P_i, P_j)/2 read off the deformed bidifferential
at the ramification points (the two constructions are compared on squares
and on the triple product b12*b13*b23, which are free of the local-parameter
square-root signs).

The x-derivative is realized as a lambda-gradient: moving l3 with l1, l2
held fixed scales into d/dx by dx/dl3 = 1/(l2-l1); mu is a function of x
along the family, so steering through torus.lambda_gradient is exactly the
derivative the system means.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivisorError, DomainError
from .kernels import W_eval, Wq_eval, kernel_at_ramification
from .theta import CHAR2, CHAR3, CHAR4, Modulus, theta_eval, theta_mu_derivative
from .torus import cross_ratio, lambda_gradient, ramification_data

__all__ = [
    "OmegaTriplet",
    "RotationCoefficients",
    "NOTATION_BRIDGE",
    "omega_triplet",
    "top_system_residual",
    "rotation_from_omega",
    "rotation_from_Wq",
    "rotation_euler_residual",
    "proposition_crosscheck",
    "darboux_egoroff_residual",
]

_PI = math.pi

# External-convention bridge (documentation data, not used in computations):
# the triplet and branch points of the isomonodromy literature convention
# map onto ours by a relabeling with unimodular prefactors and iota*mu = mu.
NOTATION_BRIDGE = {
    "Omega1": ("Omega3", 1.0),
    "Omega2": ("Omega1", 1j),
    "Omega3": ("Omega2", -1j),
    "lambda_permutation": (3, 2, 1),
    "modulus": "i*mu_theirs = mu_ours",
}


@dataclass(frozen=True)
class OmegaTriplet:
    """Values (O1, O2, O3) at a modulus mu and deformation q (None = limit)."""

    O1: complex
    O2: complex
    O3: complex
    mu: complex
    q: object = None

    def constraint_residual(self):
        """|O1^2 + O2^2 + O3^2 + 1/4|."""
        return abs(self.O1 ** 2 + self.O2 ** 2 + self.O3 ** 2 + 0.25)

    def as_tuple(self):
        return (self.O1, self.O2, self.O3)


@dataclass(frozen=True)
class RotationCoefficients:
    """beta_12, beta_13, beta_23 with their provenance.

    branch_note records why signed cross-source comparisons are not safe:
    the from_Wq values carry the principal-branch local parameters
    b_i = sqrt(2/wp''(sigma_i)), so individual signs are convention;
    squares and the product b12*b13*b23 (each b_i appears twice) are not.
    """

    b12: complex
    b13: complex
    b23: complex
    source: str
    branch_note: str = "compare squares and the triple product only"

    def squares(self):
        return (self.b12 ** 2, self.b13 ** 2, self.b23 ** 2)

    def triple_product(self):
        return self.b12 * self.b13 * self.b23


def _as_mu_value(m):
    return m.mu if isinstance(m, Modulus) else complex(m)


def _one_over_mu_plus_q(mu, q):
    if q is None:
        return 0.0 + 0.0j
    q = getattr(q, "q", q)  # unwrap a DeformationParam
    q = complex(q)
    if q == 0:
        raise DomainError("deformation parameter q must be nonzero")
    if mu + q == 0:
        raise DivisorError("Omega-triplet undefined at mu = -q")
    return 1.0 / (mu + q)


def omega_triplet(m, q):
    """The triplet at modulus m; q may be complex, a DeformationParam, or
    None for the q->infinity member (the 1/(mu+q) term dropped)."""
    mu = _as_mu_value(m)
    pole = _one_over_mu_plus_q(mu, q)
    th = {}
    dlog = {}
    for key, char in (("2", CHAR2), ("3", CHAR3), ("4", CHAR4)):
        val = theta_eval(char, 0.0, mu)
        th[key] = val
        dlog[key] = theta_mu_derivative(char, 0.0, mu) / val
    O1 = -(2.0 * dlog["4"] + pole) / (_PI * th["2"] ** 2 * th["3"] ** 2)
    O2 = -(2.0 * dlog["2"] + pole) / (_PI * th["3"] ** 2 * th["4"] ** 2)
    O3 = -(2.0 * dlog["3"] + pole) / (_PI * 1j * th["2"] ** 2 * th["4"] ** 2)
    return OmegaTriplet(O1, O2, O3, mu=mu, q=q)


def top_system_residual(cov, q, omega_fn=None, eps=1e-3):
    """max residual of the three ODEs dO_i/dx = (quadratic in the others).

    omega_fn(cov) -> (O1, O2, O3) may override the standard triplet (the
    negative-control hook); by default the triplet is evaluated at the
    modulus of the steered covering.
    """
    if omega_fn is None:
        def omega_fn(cov_t):
            return omega_triplet(cov_t.mu, q).as_tuple()

    x = cross_ratio(cov)
    if min(abs(x), abs(x - 1.0)) < 1e-12:
        raise DomainError("degenerate cross-ratio: x in {0, 1}")
    rd = ramification_data(cov)
    scale = rd.lam[1] - rd.lam[0]  # dx/dl3 = 1/(l2 - l1)

    O1, O2, O3 = omega_fn(cov)
    d_by_dl3 = [
        lambda_gradient(lambda c, k=k: omega_fn(c)[k], cov, eps=eps,
                        indices=(2,))[0]
        for k in range(3)
    ]
    dx = [scale * d for d in d_by_dl3]
    res = (
        abs(dx[0] - O2 * O3 / x),
        abs(dx[1] + O1 * O3 / (x - 1.0)),
        abs(dx[2] - O1 * O2 / (x * (x - 1.0))),
    )
    return max(res)


def rotation_from_omega(tr, lam1, lam2, lam3):
    """beta_12 = O3/(l1-l2), beta_23 = O1/(l2-l3), beta_13 = O2/(l3-l1)."""
    lams = (complex(lam1), complex(lam2), complex(lam3))
    if min(abs(lams[0] - lams[1]), abs(lams[0] - lams[2]),
           abs(lams[1] - lams[2])) == 0.0:
        raise DomainError("rotation coefficients need distinct branch points")
    return RotationCoefficients(
        b12=tr.O3 / (lams[0] - lams[1]),
        b13=tr.O2 / (lams[2] - lams[0]),
        b23=tr.O1 / (lams[1] - lams[2]),
        source="from_omega",
    )


def rotation_from_Wq(cov, q):
    """beta_ij = W_q(P_i, P_j)/2 at the ramification points (q=None -> W)."""
    kind = "W" if q is None else "Wq"
    half = lambda i, j: kernel_at_ramification(kind, i, j, cov, q) / 2.0
    return RotationCoefficients(
        b12=half(0, 1), b13=half(0, 2), b23=half(1, 2), source="from_Wq")


def _beta_wq_builder(cov, q):
    """beta_ij(cov_t) = W_q(P_i,P_j)/2 with local-parameter branches pinned
    to the base covering.

    The principal sqrt in b_i = sqrt(2/wp''(sigma_i)) is discontinuous when
    wp''(sigma_i) crosses the negative real axis -- which it sits on for
    rectangular-ish lattices -- so raw finite differences over coverings
    would differentiate a sign jump.  The Darboux-Egoroff and Euler
    identities are covariant under t-constant sign flips, so aligning each
    b_i(cov_t) to the nearest of +-b_i(cov) is all the continuity they need.
    """
    ref = ramification_data(cov).b

    def beta(cov_t, i, j):
        rd = ramification_data(cov_t)
        b = [bt if abs(bt - rb) <= abs(bt + rb) else -bt
             for bt, rb in zip(rd.b, ref)]
        if q is None:
            w = W_eval(rd.sigma[i], rd.sigma[j], cov_t)
        else:
            w = Wq_eval(rd.sigma[i], rd.sigma[j], cov_t, q)
        return 0.5 * w * b[i] * b[j]

    return beta


def rotation_euler_residual(cov, q, pair=(0, 1), source="from_omega", eps=1e-3):
    """|sum_k l_k d(beta_ij)/dl_k + beta_ij|: the coefficients have scaling
    degree -1 in the branch points (q held fixed)."""
    i, j = pair
    if source == "from_omega":
        def beta(cov_t):
            rd = ramification_data(cov_t)
            rot = rotation_from_omega(omega_triplet(cov_t.mu, q), *rd.lam)
            return getattr(rot, "b%d%d" % (min(i, j) + 1, max(i, j) + 1))
    elif source == "from_Wq":
        bij = _beta_wq_builder(cov, q)

        def beta(cov_t):
            return bij(cov_t, i, j)
    else:
        raise DomainError("unknown rotation-coefficient source %r" % (source,))

    grads = lambda_gradient(beta, cov, eps=eps)
    lam = ramification_data(cov).lam
    return abs(sum(l * g for l, g in zip(lam, grads)) + beta(cov))


def proposition_crosscheck(cov, q, labels=(0, 1, 2)):
    """(max |beta^2 difference|, |triple-product difference|) between the
    W_q-based and the Omega-based rotation coefficients.

    labels permutes the branch points fed to the Omega construction; the
    identity holds only for the labeling in which the ramification points
    sit at (w', w, w+w') in this order, so any permutation other than the
    identity must trip the mismatch guard (and does, loudly).
    """
    rd = ramification_data(cov)
    lam = [rd.lam[labels[0]], rd.lam[labels[1]], rd.lam[labels[2]]]
    rot_o = rotation_from_omega(omega_triplet(cov.mu, q), *lam)
    rot_w = rotation_from_Wq(cov, q)
    sq_res = max(abs(a - b) for a, b in zip(rot_w.squares(), rot_o.squares()))
    tp_res = abs(rot_w.triple_product() - rot_o.triple_product())
    # mismatch guard is per-pair relative: the squares span decades, and a
    # wrong labeling can leave the largest one nearly intact (full reversal
    # swaps Omega1/Omega3 over identical denominators) while being O(1)
    # wrong on the smaller ones and flipping the triple-product sign.
    rel = max(abs(a - b) / max(abs(a), 1e-30)
              for a, b in zip(rot_w.squares(), rot_o.squares()))
    rel = max(rel, tp_res / max(abs(rot_w.triple_product()), 1e-30))
    if rel > 0.1:
        raise DomainError(
            "rotation-coefficient labeling mismatch (relative %.3g): "
            "branch points must be ordered (wp, w, w+wp)" % (rel,))
    return (sq_res, tp_res)


def darboux_egoroff_residual(cov, q, perturb=None, eps=1e-3):
    """(max |d_lk beta_ij - beta_ik beta_kj|, max |sum_k d_lk beta_ij|).

    beta from W_q at the ramification points; perturb, if given, is added
    to beta_12 after evaluation (sensitivity control for the first system).
    """
    pairs = ((0, 1), (0, 2), (1, 2))
    bij = _beta_wq_builder(cov, q)

    def beta(cov_t, i, j):
        val = bij(cov_t, i, j)
        if perturb is not None and (i, j) == (0, 1):
            val += perturb
        return val

    grads = {p: lambda_gradient(lambda c, p=p: beta(c, *p), cov, eps=eps)
             for p in pairs}
    b0 = {p: beta(cov, *p) for p in pairs}
    b0.update({(j, i): v for (i, j), v in list(b0.items())})

    flat1 = 0.0
    for (i, j) in pairs:
        k = 3 - i - j  # the third index
        flat1 = max(flat1, abs(grads[(i, j)][k] - b0[(i, k)] * b0[(k, j)]))
    flat2 = max(abs(np.sum(grads[p])) for p in pairs)
    return (flat1, flat2)
