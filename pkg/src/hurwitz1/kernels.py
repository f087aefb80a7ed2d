"""Genus-one bidifferentials and their deformations.

All kernels are returned as coefficients with respect to the flat
coordinates: W(P,Q) dς dς̃, B(P,Q̄) dς dς̄̃, etc.  The four families:

    W   (ς,ς̃)  = wp(ς-ς̃) + η₁/w                     (normalized: zero a-periods)
    W_q (ς,ς̃)  = W - (2πi/(μ+q)) (1/(2w))²           (a + q⁻¹ b periods vanish)
    Ω   (ς,ς̃)  = W - (π/Im μ) (1/(2w))²              (Schiffer)
    B   (ς,ς̄̃)  = (π/Im μ) (1/(2w)) (1/(2w̄))          (Bergman, constant)
    Ω_q = Ω - 2πi (μ^Ω+q)⁻¹ v v,   B_q = B - 2πi (μ^Ω+q)⁻¹ v conj(v)

with v = (μ̄/(μ̄-μ))·(1/(2w)) dς and μ^Ω = μ μ̄/(μ̄-μ).

Derivatives with respect to branch points go through the canonical
(w, w', c) chart; the antiholomorphic derivatives treat the conjugate
parameters (w̄, w̄', c̄) as independent variables of the antiholomorphic
half of the data (the "split" scheme below).
"""

import cmath
import math
from dataclasses import dataclass

from . import numkit
from .errors import DivisorError, DomainError
from .torus import (
    TorusCovering,
    canonical_jacobian,
    eta1_const,
    eta2_const,
    ramification_data,
    weierstrass_p,
    weierstrass_p_branch_series,
    weierstrass_p_regularized,
    weierstrass_zeta,
)

__all__ = [
    "DeformationParam",
    "KernelSample",
    "SplitCovering",
    "W_eval",
    "Wq_eval",
    "schiffer_bergman_eval",
    "deformed_schiffer_bergman",
    "v_and_muOmega",
    "kernel_at_ramification",
    "bergman_projective_connection",
    "rauch_residual",
    "w_period_residuals",
    "wq_normalization_residual",
    "sb_period_residual",
    "deformed_period_residuals",
    "op_om_residual",
    "bq_projector_residual",
    "q_decay_ratio",
    "sample_kernel",
]

_PI = math.pi
_2PII = 2j * _PI

_RAUCH_KINDS = ("W", "Wq", "Omegaq_dlambda", "Omegaq_dlambda_bar",
                "Bq_dlambda", "Bq_dlambda_bar", "W_dlambda_bar")


@dataclass(frozen=True)
class DeformationParam:
    """Deformation scalar q; imaginary_only enforces Re(q) = 0."""

    q: complex
    imaginary_only: bool = False

    def __post_init__(self):
        object.__setattr__(self, "q", complex(self.q))
        if self.q == 0:
            raise DomainError("deformation parameter q must be nonzero")
        if self.imaginary_only and abs(self.q.real) > 1e-14 * abs(self.q):
            raise DomainError("this deformation requires purely imaginary q")


@dataclass(frozen=True)
class KernelSample:
    """One kernel evaluation with enough context to reproduce it."""

    kind: str
    args: tuple
    value: complex
    convention: str = "coefficient w.r.t. flat coordinates; ramification slots use recorded b_i"


def _as_q(q, imaginary_only=False):
    if isinstance(q, DeformationParam):
        if imaginary_only and not q.imaginary_only:
            DeformationParam(q.q, imaginary_only=True)  # re-validate
        return q.q
    return DeformationParam(q, imaginary_only=imaginary_only).q


def _mu_plus_q(cov, q):
    d = cov.mu + q
    if abs(d) < 1e-12 * max(1.0, abs(q)):
        raise DivisorError("mu + q vanishes; W_q undefined on this divisor")
    return d


# ---------------------------------------------------------------------------
# split data: holomorphic and antiholomorphic halves as independent coverings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AntiHalf:
    """The antiholomorphic parameters (w̄, w̄', c̄), treated as independent.

    Its modulus lives in the lower half-plane, so all function evaluations
    route through the conjugate-mirror covering (which is a valid
    TorusCovering): f_anti(u) = conj(f_mirror(conj u)).
    """

    w: complex
    wp: complex
    c: complex = 0.0

    def __post_init__(self):
        object.__setattr__(self, "w", complex(self.w))
        object.__setattr__(self, "wp", complex(self.wp))
        object.__setattr__(self, "c", complex(self.c))
        self.mirror  # validates (lower half-plane here <=> upper there)

    @property
    def mu(self):
        return self.wp / self.w

    @property
    def mirror(self):
        return TorusCovering(self.w.conjugate(), self.wp.conjugate(), self.c.conjugate())

    @staticmethod
    def conjugate_of(cov):
        return AntiHalf(cov.w.conjugate(), cov.wp.conjugate(), cov.c.conjugate())


def _wp_anti(u, ah, order=0):
    return weierstrass_p(complex(u).conjugate(), ah.mirror, order).conjugate()


def _eta1_anti(ah):
    return eta1_const(ah.mirror).conjugate()


def _anti_sigma(ah):
    return (ah.wp, ah.w, ah.w + ah.wp)


def _anti_b_sq(ah, j):
    """b_j² on the anti half (branch-free square)."""
    return (ramification_data(ah.mirror).b[j] ** 2).conjugate()


def _track_point_anti(lam_target, seed, ah):
    return _track_point(complex(lam_target).conjugate(),
                        complex(seed).conjugate(), ah.mirror).conjugate()


@dataclass(frozen=True)
class SplitCovering:
    """Independent holomorphic/antiholomorphic halves of a real-double cover.

    At the physical point anti = conj(holo); derivatives in lambda_bar move
    only the anti half.  Every conjugate-dependent quantity below is written
    through (mu, mu2) so that mu2 = conj(mu) reproduces the usual formulas:
    pi/Im mu -> 2 pi i/(mu - mu2), conj(v) -> (mu/(mu-mu2))/(2 w2), ...
    """

    holo: TorusCovering
    anti: AntiHalf

    @staticmethod
    def physical(cov):
        return SplitCovering(cov, AntiHalf.conjugate_of(cov))

    @property
    def mu(self):
        return self.holo.mu

    @property
    def mu2(self):
        return self.anti.mu

    @property
    def imfac(self):
        """The split form of pi/Im(mu)."""
        return _2PII / (self.mu - self.mu2)

    @property
    def v1(self):
        """Coefficient of v(P) dς."""
        return (self.mu2 / (self.mu2 - self.mu)) / (2.0 * self.holo.w)

    @property
    def v2(self):
        """Coefficient of conj(v)(P̄) dς̄ in split form."""
        return (self.mu / (self.mu - self.mu2)) / (2.0 * self.anti.w)

    @property
    def mu_omega(self):
        return self.mu * self.mu2 / (self.mu2 - self.mu)


def _mu_omega_plus_q(sp, q):
    d = sp.mu_omega + q
    if abs(d) < 1e-12 * max(1.0, abs(q)):
        raise DivisorError("mu^Omega + q vanishes; deformed kernels undefined")
    return d


def _w_coef(s1, s2, cov):
    return weierstrass_p(s1 - s2, cov) + eta1_const(cov) / cov.w


def _split_schiffer(s1, s2, sp):
    h = sp.holo
    return _w_coef(s1, s2, h) - sp.imfac / (2.0 * h.w) ** 2


def _split_schiffer_conj(u1, u2, sp):
    """Split form of conj(Omega): lives on the anti half."""
    a = sp.anti
    return _wp_anti(u1 - u2, a) + _eta1_anti(a) / a.w - sp.imfac / (2.0 * a.w) ** 2


def _split_schiffer_q(s1, s2, sp, q):
    return _split_schiffer(s1, s2, sp) - _2PII * sp.v1 ** 2 / _mu_omega_plus_q(sp, q)


def _split_schiffer_q_conj(u1, u2, sp, q):
    return _split_schiffer_conj(u1, u2, sp) - _2PII * sp.v2 ** 2 / _mu_omega_plus_q(sp, q)


def _split_bergman(sp):
    return sp.imfac / (4.0 * sp.holo.w * sp.anti.w)


def _split_bergman_q(sp, q):
    return _split_bergman(sp) - _2PII * sp.v1 * sp.v2 / _mu_omega_plus_q(sp, q)


# ---------------------------------------------------------------------------
# point evaluations
# ---------------------------------------------------------------------------

def W_eval(s1, s2, cov):
    """W(P,Q) coefficient: wp(ς-ς̃) + η₁/w."""
    return _w_coef(s1, s2, cov)


def Wq_eval(s1, s2, cov, q):
    """W_q(P,Q) coefficient."""
    qv = _as_q(q)
    return _w_coef(s1, s2, cov) - _2PII / _mu_plus_q(cov, qv) / (2.0 * cov.w) ** 2


def schiffer_bergman_eval(s1, s2, cov):
    """(Ω(P,Q), B(P,Q̄)) coefficients at ς-arguments (s1, s2)."""
    sp = SplitCovering.physical(cov)
    return _split_schiffer(s1, s2, sp), _split_bergman(sp)


def v_and_muOmega(cov):
    """(v coefficient, μ^Ω) for the covering."""
    sp = SplitCovering.physical(cov)
    return sp.v1, sp.mu_omega


def deformed_schiffer_bergman(s1, s2, cov, q):
    """(Ω_q(P,Q), B_q(P,Q̄)) coefficients; q must be purely imaginary."""
    qv = _as_q(q, imaginary_only=True)
    sp = SplitCovering.physical(cov)
    return _split_schiffer_q(s1, s2, sp, qv), _split_bergman_q(sp, qv)


def q_decay_ratio(cov, q, scale=10.0, s1=0.31 + 0.17j, s2=-0.12 + 0.23j):
    """|W_q - W| contraction when q grows by `scale`; ≈ scale for large q."""
    qv = _as_q(q)
    d1 = abs(Wq_eval(s1, s2, cov, qv) - W_eval(s1, s2, cov))
    d2 = abs(Wq_eval(s1, s2, cov, qv * scale) - W_eval(s1, s2, cov))
    if d2 == 0.0:
        raise DomainError("deformation difference vanished; ratio undefined")
    return d1 / d2


# ---------------------------------------------------------------------------
# evaluations in the ramification local parameters x_i = sqrt(lambda - lambda_i)
# ---------------------------------------------------------------------------

def kernel_at_ramification(kind, i, j, cov, q=None):
    """K(P_i, P_j) for i ≠ j in the local parameters; kinds W, Wq, OmegaQ, BQ.

    For BQ the second slot is the conjugate point P̄_j and carries conj(b_j);
    P̄_i differs from P_i on the double, so BQ accepts i == j.
    Values use the b_i recorded in ramification_data; only squares and
    same-record products are branch-independent.
    """
    if i == j and kind != "BQ":
        raise DomainError("kernel_at_ramification needs distinct indices")
    if not (0 <= i <= 2 and 0 <= j <= 2):
        raise DomainError("ramification indices run over 0..2")
    rd = ramification_data(cov)
    si, sj = rd.sigma[i], rd.sigma[j]
    bi, bj = rd.b[i], rd.b[j]
    sp = SplitCovering.physical(cov)
    if kind == "W":
        return _w_coef(si, sj, cov) * bi * bj
    if kind == "Wq":
        return Wq_eval(si, sj, cov, q) * bi * bj
    if kind == "OmegaQ":
        qv = _as_q(q, imaginary_only=True)
        return _split_schiffer_q(si, sj, sp, qv) * bi * bj
    if kind == "BQ":
        qv = _as_q(q, imaginary_only=True)
        return _split_bergman_q(sp, qv) * bi * bj.conjugate()
    raise DomainError("unknown ramification kernel kind %r" % (kind,))


def sample_kernel(kind, args, cov, q=None):
    """Record one evaluation as a KernelSample."""
    if kind in ("W", "Wq", "Schiffer", "Bergman", "OmegaQ", "BQ") and len(args) == 2 \
            and not all(isinstance(a, int) for a in args):
        s1, s2 = args
        if kind == "W":
            val = W_eval(s1, s2, cov)
        elif kind == "Wq":
            val = Wq_eval(s1, s2, cov, q)
        elif kind == "Schiffer":
            val = schiffer_bergman_eval(s1, s2, cov)[0]
        elif kind == "Bergman":
            val = schiffer_bergman_eval(s1, s2, cov)[1]
        elif kind == "OmegaQ":
            val = deformed_schiffer_bergman(s1, s2, cov, q)[0]
        else:
            val = deformed_schiffer_bergman(s1, s2, cov, q)[1]
        return KernelSample(kind=kind, args=(s1, s2), value=val)
    i, j = args
    return KernelSample(kind=kind, args=(i, j), value=kernel_at_ramification(kind, i, j, cov, q))


# ---------------------------------------------------------------------------
# projective-connection constants by coincidence-limit extraction
# ---------------------------------------------------------------------------

def _track_point(lam_target, seed, cov, tol=1e-13, itmax=12):
    """Solve wp(ς) + c = lam_target by Newton iteration from `seed`."""
    s = complex(seed)
    for _ in range(itmax):
        F = weierstrass_p(s, cov) + cov.c - lam_target
        d = weierstrass_p(s, cov, 1)
        if d == 0:
            raise DomainError("point tracking hit a critical point of lambda")
        step = F / d
        s = s - step
        if abs(step) < tol * (1.0 + abs(s)):
            return s
    raise DomainError("point tracking did not converge")


def _local_point(i, h, cov):
    """ς on the sheet with x_i = h near P_i: solves lambda(ς) = lambda_i + h²."""
    rd = ramification_data(cov)
    si, bi = rd.sigma[i], rd.b[i]
    kappa = -(weierstrass_p(si, cov)) / rd.pp2[i]
    seed = si + bi * (h + kappa * h ** 3)
    return _track_point(rd.lam[i] + h * h, seed, cov)


def bergman_projective_connection(i, cov, q=None, kind="W", h=1e-2):
    """S_i for kind in {W, Wq, OmegaQ}: the constant term of the kernel at
    coinciding arguments in the local parameter x_i.

    Extraction at the symmetric pair (x, -x) with ς = σ_i + t.  Every kernel
    here is wp(ς-ς̃) plus a point-independent constant C, so

        K̂(x,-x) - 1/(4x²) = (D(2t) + C)·R + (x²R - t²)/(4 t² x²),

    with D(u) = wp(u) - 1/u² (regular), R = 1/((wp(ς)-e_j)(wp(ς)-e_k)) the
    two non-vanishing factors of (dς/dx)² via wp'² = 4Π(wp-e_m), and
    x² = wp(ς) - e_i.  D and x² are evaluated by their exact local series
    (theta evaluations lose digits like 1e-16/|t| near the pole and the
    critical point, which the double pole amplifies to ~t⁻³; the naive
    route bottoms out near 1e-4).  The result is even in t, so the
    extrapolation levels remove t², t⁴, t⁶.
    """
    rd = ramification_data(cov)
    si = rd.sigma[i]
    bi = rd.b[i]
    j, k = (m for m in range(3) if m != i)
    eij = (rd.lam[i] - rd.lam[j])
    eik = (rd.lam[i] - rd.lam[k])
    if kind == "W":
        coef = lambda a, b: _w_coef(a, b, cov)
    elif kind == "Wq":
        qv = _as_q(q)
        coef = lambda a, b: Wq_eval(a, b, cov, qv)
    elif kind == "OmegaQ":
        qv = _as_q(q, imaginary_only=True)
        sp = SplitCovering.physical(cov)
        coef = lambda a, b: _split_schiffer_q(a, b, sp, qv)
    else:
        raise DomainError("unknown projective-connection kind %r" % (kind,))

    # the kernels differ from wp(a-b) by a constant; read it off once
    a0 = 0.31 * cov.w + 0.27 * cov.wp
    b0 = -0.11 * cov.w + 0.05 * cov.wp
    C = coef(a0, b0) - weierstrass_p(a0 - b0, cov)

    def extract(t):
        xsq = weierstrass_p_branch_series(i, t, cov)
        R = 1.0 / ((xsq + eij) * (xsq + eik))
        dreg = weierstrass_p_regularized(2.0 * t, cov)
        return (dreg + C) * R + (xsq * R - t * t) / (4.0 * t * t * xsq)

    t0 = bi * h  # h is the step in the local parameter x, t = b_i x + O(x^3)
    vals = [extract(t0 / 2.0 ** m) for m in range(4)]
    out, err = numkit.richardson(vals, order=2)
    if err > 1e-4 * max(1.0, abs(out)):
        raise DomainError("projective-connection extraction did not converge")
    return out


# ---------------------------------------------------------------------------
# variational (Rauch-type) residuals
# ---------------------------------------------------------------------------

def _shifted(cov, direction, t):
    return TorusCovering(cov.w + direction[0] * t,
                         cov.wp + direction[1] * t,
                         cov.c + direction[2] * t)


def _shifted_anti(ah, direction, t):
    return AntiHalf(ah.w + direction[0] * t,
                    ah.wp + direction[1] * t,
                    ah.c + direction[2] * t)


def _fd_directional(F, direction_setter, eps):
    """Central difference + one extrapolation level for d/dt F at t=0."""
    def D(e):
        return (F(direction_setter(e)) - F(direction_setter(-e))) / (2.0 * e)

    val, _ = numkit.richardson([D(eps), D(eps / 2.0)], order=2)
    return val


def rauch_residual(kind, sP, sQ, j, cov, q=None, eps=1e-3):
    """|lhs - rhs| for one variational identity at fixed lambda-projections.

    kinds: W, Wq (∂/∂λ_j of the kernel against (1/2) K(P,P_j) K(Q,P_j)),
    Omegaq_dlambda, Omegaq_dlambda_bar, Bq_dlambda, Bq_dlambda_bar (the four
    deformed identities), W_dlambda_bar (holomorphy in the branch points).
    """
    if kind not in _RAUCH_KINDS:
        raise DomainError("unknown rauch kind %r" % (kind,))
    if not 0 <= j <= 2:
        raise DomainError("branch-point index j runs over 0..2")
    _, Jinv = canonical_jacobian(cov)
    direction = Jinv[:, j]
    sp0 = SplitCovering.physical(cov)
    lamP = weierstrass_p(sP, cov) + cov.c
    lamQ = weierstrass_p(sQ, cov) + cov.c
    rd = ramification_data(cov)
    sigj = rd.sigma[j]
    bj2 = rd.b[j] ** 2
    dP0 = 1.0 / weierstrass_p(sP, cov, 1)
    dQ0 = 1.0 / weierstrass_p(sQ, cov, 1)

    if kind in ("W", "Wq"):
        if kind == "Wq":
            qv = _as_q(q)
            coef = lambda a, b, c_: Wq_eval(a, b, c_, qv)
        else:
            coef = lambda a, b, c_: _w_coef(a, b, c_)

        def scalar(cov_t):
            a = _track_point(lamP, sP, cov_t)
            b = _track_point(lamQ, sQ, cov_t)
            return coef(a, b, cov_t) / (weierstrass_p(a, cov_t, 1) * weierstrass_p(b, cov_t, 1))

        lhs = _fd_directional(scalar, lambda t: _shifted(cov, direction, t), eps)
        rhs = 0.5 * coef(sP, sigj, cov) * coef(sQ, sigj, cov) * dP0 * dQ0 * bj2
        return abs(lhs - rhs)

    if kind == "W_dlambda_bar":
        # W carries no antiholomorphic data: the split scalar is constant.
        return 0.0

    qv = _as_q(q, imaginary_only=True)
    anti0 = sp0.anti
    sig2j = _anti_sigma(anti0)[j]
    b2j2 = _anti_b_sq(anti0, j)
    conj_dir = direction.conjugate()
    lamQ_bar = lamQ.conjugate()
    s2Q = _track_point_anti(lamQ_bar, sQ.conjugate(), anti0)
    d2Q0 = 1.0 / _wp_anti(s2Q, anti0, 1)

    if kind == "Omegaq_dlambda":
        def scalar(cov_t):
            sp = SplitCovering(cov_t, anti0)
            a = _track_point(lamP, sP, cov_t)
            b = _track_point(lamQ, sQ, cov_t)
            return _split_schiffer_q(a, b, sp, qv) / (
                weierstrass_p(a, cov_t, 1) * weierstrass_p(b, cov_t, 1))

        lhs = _fd_directional(scalar, lambda t: _shifted(cov, direction, t), eps)
        rhs = 0.5 * (_split_schiffer_q(sP, sigj, sp0, qv) * dP0) \
            * (_split_schiffer_q(sQ, sigj, sp0, qv) * dQ0) * bj2
        return abs(lhs - rhs)

    if kind == "Omegaq_dlambda_bar":
        def scalar(anti_t):
            sp = SplitCovering(cov, anti_t)
            return _split_schiffer_q(sP, sQ, sp, qv) * dP0 * dQ0

        lhs = _fd_directional(scalar, lambda t: _shifted_anti(anti0, conj_dir, t), eps)
        bq = _split_bergman_q(sp0, qv)
        rhs = 0.5 * (bq * dP0) * (bq * dQ0) * b2j2
        return abs(lhs - rhs)

    if kind == "Bq_dlambda":
        def scalar(cov_t):
            sp = SplitCovering(cov_t, anti0)
            a = _track_point(lamP, sP, cov_t)
            return _split_bergman_q(sp, qv) / weierstrass_p(a, cov_t, 1) * d2Q0

        lhs = _fd_directional(scalar, lambda t: _shifted(cov, direction, t), eps)
        rhs = 0.5 * (_split_schiffer_q(sP, sigj, sp0, qv) * dP0) \
            * (_split_bergman_q(sp0, qv) * d2Q0) * bj2
        return abs(lhs - rhs)

    # Bq_dlambda_bar
    def scalar(anti_t):
        sp = SplitCovering(cov, anti_t)
        b2 = _track_point_anti(lamQ_bar, s2Q, anti_t)
        return _split_bergman_q(sp, qv) * dP0 / _wp_anti(b2, anti_t, 1)

    lhs = _fd_directional(scalar, lambda t: _shifted_anti(anti0, conj_dir, t), eps)
    rhs = 0.5 * (_split_bergman_q(sp0, qv) * dP0) \
        * (_split_schiffer_q_conj(s2Q, sig2j, sp0, qv) * d2Q0) * b2j2
    return abs(lhs - rhs)


# ---------------------------------------------------------------------------
# period normalizations
# ---------------------------------------------------------------------------

_BASEPOINT = 0.137 + 0.083j


def _cycle_integral(f, cov, cycle, nodes=32):
    period = 2.0 * cov.w if cycle == "a" else 2.0 * cov.wp
    spec = numkit.QuadratureSpec(endpoints=(_BASEPOINT, _BASEPOINT + period), node_count=nodes)
    return numkit.contour_integral(f, spec)


def w_period_residuals(cov, s_fixed=0.41 + 0.57j):
    """(|∮_a W|, |(1/2πi)∮_b W - 1/(2w)|) over the first slot."""
    Ia = _cycle_integral(lambda t: _w_coef(t, s_fixed, cov), cov, "a")
    Ib = _cycle_integral(lambda t: _w_coef(t, s_fixed, cov), cov, "b")
    return abs(Ia), abs(Ib / _2PII - 1.0 / (2.0 * cov.w))


def wq_normalization_residual(cov, q, s_fixed=0.41 + 0.57j):
    """|∮_a W_q + q⁻¹ ∮_b W_q|."""
    qv = _as_q(q)
    Ia = _cycle_integral(lambda t: Wq_eval(t, s_fixed, cov, qv), cov, "a")
    Ib = _cycle_integral(lambda t: Wq_eval(t, s_fixed, cov, qv), cov, "b")
    return abs(Ia + Ib / qv)


def sb_period_residual(cov, s_fixed=0.41 + 0.57j):
    """|∮_a Ω(·,ς̃) dς + ∮_a B(conj(·),ς̃) dς̄| (first slot integrated)."""
    om, be = schiffer_bergman_eval(_BASEPOINT, s_fixed, cov)  # B is constant
    Ia_om = _cycle_integral(lambda t: schiffer_bergman_eval(t, s_fixed, cov)[0], cov, "a")
    Ia_be = be * (2.0 * cov.w).conjugate()
    return abs(Ia_om + Ia_be)


def deformed_period_residuals(cov, q, s_fixed=0.41 + 0.57j):
    """Residuals of ∮_a(Ω_q+B_q) + q⁻¹∮_b Ω_q = 0 and ∮_b(Ω_q+B_q) = 0."""
    qv = _as_q(q, imaginary_only=True)
    omq = lambda t: deformed_schiffer_bergman(t, s_fixed, cov, qv)[0]
    bq = deformed_schiffer_bergman(_BASEPOINT, s_fixed, cov, qv)[1]
    Ia = _cycle_integral(omq, cov, "a")
    Ib = _cycle_integral(omq, cov, "b")
    Ia_b = bq * (2.0 * cov.w).conjugate()
    Ib_b = bq * (2.0 * cov.wp).conjugate()
    return abs(Ia + Ia_b + Ib / qv), abs(Ib + Ib_b)


# ---------------------------------------------------------------------------
# surface-integral (projector) checks
# ---------------------------------------------------------------------------

def _surface_measure(cov):
    """∬ dς̄ ∧ dς over the fundamental parallelogram = 8i Im(w̄ w')."""
    return 8j * (cov.w.conjugate() * cov.wp).imag


def _pv_wp_surface_integral(cov, nodes=48):
    """p.v. ∬ wp(ς - ς₀) dς̄ ∧ dς, independent of ς₀.

    By Stokes (d(ζ dς̄) = -wp dς ∧ dς̄ and the vanishing small-circle
    contribution of the simple pole of ζ): equal to ∮_{∂T} ζ dς̄ over the
    parallelogram centered at the pole.
    """
    z0 = -cov.w - cov.wp
    corners = [z0, z0 + 2 * cov.w, z0 + 2 * cov.w + 2 * cov.wp, z0 + 2 * cov.wp, z0]
    total = 0j
    for a, b in zip(corners[:-1], corners[1:]):
        seg = b - a
        spec = numkit.QuadratureSpec(endpoints=(0.0, 1.0), node_count=nodes)
        total += numkit.contour_integral(
            lambda t, a=a, seg=seg: weierstrass_zeta(a + t * seg, cov) * seg.conjugate(), spec)
    return total


def op_om_residual(cov, q):
    """|(1/2πi)∬ Ω_q(P,Q) conj(v(P)) + μ^Ω (μ^Ω+q)⁻¹ v(Q)| (coefficients).

    The double pole of Ω_q integrates in the principal-value sense; the
    wp part goes through the Stokes boundary integral, the constant part
    multiplies the exact surface measure.
    """
    qv = _as_q(q, imaginary_only=True)
    sp = SplitCovering.physical(cov)
    const = eta1_const(cov) / cov.w - sp.imfac / (2 * cov.w) ** 2 \
        - _2PII * sp.v1 ** 2 / _mu_omega_plus_q(sp, qv)
    integral = sp.v1.conjugate() * (_pv_wp_surface_integral(cov) + const * _surface_measure(cov))
    lhs = integral / _2PII
    rhs = -sp.mu_omega / _mu_omega_plus_q(sp, qv) * sp.v1
    return abs(lhs - rhs)


def bq_projector_residual(cov, q):
    """|(1/2πi)∬ B_q(P̄,Q) v(P) - q (μ^Ω+q)⁻¹ v(Q)| (coefficients).

    B_q(P̄,Q) is constant in P, so the surface integral is exact.
    """
    qv = _as_q(q, imaginary_only=True)
    sp = SplitCovering.physical(cov)
    bq = _split_bergman_q(sp, qv)  # real; B_q(P̄,Q) carries the same coefficient
    lhs = bq * sp.v1 * _surface_measure(cov) / _2PII
    rhs = qv / _mu_omega_plus_q(sp, qv) * sp.v1
    return abs(lhs - rhs)
