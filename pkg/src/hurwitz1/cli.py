"""Batch verification front end.

Two subcommands:

* ``verify <suite>`` runs a named residual suite over a deterministic
  parameter grid and writes one JSON object per check (fields: suite, name,
  params, residual, tolerance, pass, seed).  Exit status 0 iff every check
  passed, 1 on check failures (divisor hits included, with the offending
  entries listed), 2 on usage errors.
* ``sweep <suite> --param <name> --range <spec>`` tabulates one residual
  against a swept parameter as CSV (columns: parameter, check, residual).

Reports carry no timestamps; with a fixed ``--seed`` (and ``--stable-order``
to force sorted lines) the output is byte-identical across runs.
"""

import argparse
import cmath
import json
import math
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisorError, DomainError, QuadratureError
from .frobenius3 import (
    METRIC3,
    PrepotentialFamily3,
    euler_residual3,
    flat_coords3,
    g_function3,
    quasihomogeneity_residual3,
    third_derivatives3,
    wdvv_residual3,
)
from .isomono import (
    darboux_egoroff_residual,
    omega_triplet,
    proposition_crosscheck,
    rotation_euler_residual,
    top_system_residual,
)
from . import kernels as _kernels
from .kernels import (
    kernel_at_ramification,
    q_decay_ratio,
    rauch_residual,
    w_period_residuals,
    wq_normalization_residual,
)
from .numkit import CheckReport, QuadratureSpec, contour_integral
from .realdouble import (
    METRIC6,
    flat_coords6,
    g_assembly6,
    g_function6,
    quasihomogeneity_residual6,
    third_derivatives6,
    wdvv_residual6,
)
from .tau import (
    g_assembly,
    tau_i_relation_residual,
    tau_ode_residual,
    tau_omega_ode_residual,
)
from .theta import (
    CHAR1,
    CHAR2,
    ChazyFunction,
    chazy_residual,
    gamma_chazy,
    theta1_zero_derivatives,
    theta_constants,
    theta_eval,
    theta_mu_derivative,
)
from .torus import TorusCovering, ramification_data, thomae_residual, weierstrass_p, \
    weierstrass_p_difference

_PI = math.pi
_2PII = 2j * _PI

SUITES = ("theta", "torus", "kernels", "frobenius3", "isomono", "tau", "realdouble")

# default per-check tolerances; scaled by HURWITZ1_TOL_PROFILE, overridden
# wholesale by --tol
_TOL = {
    "theta.quasi_period_1": 1e-11,
    "theta.quasi_period_mu": 1e-11,
    "theta.odd": 1e-11,
    "theta.jacobi_quartic": 1e-11,
    "theta.derivative_identity": 1e-11,
    "theta.heat": 1e-11,
    "theta.chazy_gamma": 1e-7,
    "theta.chazy_sl2": 1e-7,
    "torus.lambda_sum": 1e-10,
    "torus.thomae": 1e-10,
    "torus.p_a_period": 1e-9,
    "torus.p_two_routes": 1e-10,
    "kernels.w_a_period": 1e-9,
    "kernels.w_b_period": 1e-8,
    "kernels.wq_normalization": 1e-8,
    "kernels.rauch_w": 1e-5,
    "kernels.rauch_wq": 1e-5,
    "kernels.q_decay": 2.0,
    "frobenius3.wdvv": 1e-7,
    "frobenius3.metric": 1e-12,
    "frobenius3.quasihomogeneity": 1e-9,
    "frobenius3.euler": 1e-9,
    "isomono.constraint": 1e-9,
    "isomono.top_system": 1e-5,
    "isomono.proposition": 1e-7,
    "isomono.darboux_egoroff": 1e-5,
    "isomono.rotation_euler": 1e-5,
    "tau.ode_w": 1e-5,
    "tau.ode_wq": 1e-5,
    "tau.isomonodromic_relation": 1e-5,
    "tau.g_variance": 1e-7,
    "realdouble.wdvv": 1e-5,
    "realdouble.metric": 1e-12,
    "realdouble.quasihomogeneity": 1e-8,
    "realdouble.g_crosscheck_variance": 1e-6,
    "realdouble.tau_omega_ode": 1e-4,
}

_PROFILES = {"strict": 0.5, "default": 1.0, "loose": 10.0}


# -- command-line value parsing ------------------------------------------------

def _part_value(text):
    """One real number; exact fractions like 1/2 are recognized exactly."""
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return float(text)
    except ValueError:
        raise DomainError("cannot parse number %r" % (text,))


def parse_complex(text):
    """Parse "a+bi" strings: "1/2", "2+1i", "-1.1i", "1e8", "i", "1/2+1/4i"."""
    s = text.strip().replace(" ", "")
    if not s:
        raise DomainError("empty complex literal")
    if s[-1] in "ij":
        body = s[:-1]
        # locate the sign separating real and imaginary parts (not an
        # exponent sign and not the leading sign)
        split = -1
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "eE+-":
                split = k
                break
        if split < 0:
            real_s, imag_s = "0", body
        else:
            real_s, imag_s = body[:split], body[split:]
        if imag_s in ("", "+"):
            imag_s = "1"
        elif imag_s == "-":
            imag_s = "-1"
        return complex(_part_value(real_s) if real_s else 0.0, _part_value(imag_s))
    return complex(_part_value(s), 0.0)


def format_complex(z):
    """Deterministic inverse of parse_complex (shortest round-trip floats)."""
    z = complex(z)
    re = repr(z.real)
    if z.imag == 0.0:
        return re
    im = repr(abs(z.imag)) + "i"
    if z.real == 0.0:
        return ("-" if z.imag < 0 else "") + im
    return re + ("-" if z.imag < 0 else "+") + im


def parse_range(spec):
    """"a..b:n" (linear), "log:a..b:n" (geometric) or a comma list."""
    if "," in spec:
        return [parse_complex(p) for p in spec.split(",")]
    geometric = spec.startswith("log:")
    if geometric:
        spec = spec[len("log:"):]
    body, _, count_s = spec.rpartition(":")
    if not body or ".." not in body:
        raise DomainError(
            "range must be 'a..b:n', 'log:a..b:n' or a comma-separated list")
    a_s, b_s = body.split("..", 1)
    a, b = parse_complex(a_s), parse_complex(b_s)
    try:
        n = int(count_s)
    except ValueError:
        raise DomainError("range count %r is not an integer" % (count_s,))
    if n < 1:
        raise DomainError("range count must be positive")
    if n == 1:
        return [a]
    if geometric:
        la, lb = cmath.log(a), cmath.log(b)
        vals = [cmath.exp(la + (lb - la) * k / (n - 1)) for k in range(n)]
    else:
        vals = [a + (b - a) * k / (n - 1) for k in range(n)]
    return [v if v.imag != 0 else complex(v.real, 0.0) for v in vals]


# -- suite specification --------------------------------------------------------

@dataclass(frozen=True)
class SuiteSpec:
    """One batch run: suite name, covering/q grid, tolerances, seed, output."""

    suite: str
    coverings: tuple
    q: complex
    tol_override: float
    seed: int
    out: str
    stable_order: bool

    def __post_init__(self):
        if self.suite not in SUITES:
            raise DomainError("unknown suite %r" % (self.suite,))
        if not self.coverings:
            raise DomainError("empty covering grid")
        if self.tol_override is not None and not self.tol_override > 0:
            raise DomainError("tolerances must be positive")

    def tolerance(self, key):
        if self.tol_override is not None:
            return float(self.tol_override)
        profile = os.environ.get("HURWITZ1_TOL_PROFILE", "default")
        if profile not in _PROFILES:
            raise DomainError(
                "HURWITZ1_TOL_PROFILE must be one of %s" % (sorted(_PROFILES),))
        return _TOL[key] * _PROFILES[profile]


def default_coverings(samples, seed, mu=None, c=None, w=None, wp=None):
    """Explicit covering from --w/--wp or --mu (w = 1/2), else a seeded grid."""
    if w is not None or wp is not None:
        if wp is None:
            raise DomainError("--w requires --wp")
        wv = w if w is not None else 0.5
        return (TorusCovering(wv, wp, c if c is not None else 0.0),)
    if mu is not None:
        return (TorusCovering(0.5, 0.5 * mu, c if c is not None else 0.0),)
    rng = random.Random("%d:coverings" % seed)
    covs = []
    for k in range(samples):
        m = complex(rng.uniform(0.1, 0.45), rng.uniform(0.7, 1.6))
        cc = c if c is not None else complex(rng.uniform(-0.4, 0.5),
                                             rng.uniform(-0.3, 0.3))
        if k % 3 == 2:
            wv = 0.4 - 0.1j
            covs.append(TorusCovering(wv, wv * m, cc))
        else:
            covs.append(TorusCovering(0.5, 0.5 * m, cc))
    return tuple(covs)


def _imaginary_of(q):
    """The imaginary-axis stand-in for suites that need Re(q) = 0."""
    q = complex(q)
    if q.real == 0.0:
        return q
    return 1j * abs(q)


def _cov_params(cov, **extra):
    p = {"w": format_complex(cov.w), "wp": format_complex(cov.wp),
         "c": format_complex(cov.c)}
    for k, v in extra.items():
        p[k] = format_complex(v) if isinstance(v, complex) else v
    return p


def _push(reports, spec, name, params, fn):
    tol = spec.tolerance("%s.%s" % (spec.suite, name))
    try:
        residual = float(fn())
    except (DivisorError, QuadratureError) as exc:
        bad = dict(params)
        bad["error"] = str(exc)
        reports.append(CheckReport(name, bad, math.inf, tol))
        return
    reports.append(CheckReport(name, params, residual, tol))


# -- the suites -----------------------------------------------------------------

def _suite_theta(spec, reports):
    rng = random.Random("%d:theta" % spec.seed)
    sl2 = ChazyFunction.gamma().sl2_of_gamma(2, 1, 1, 1)
    for cov in spec.coverings:
        mu = cov.mu
        z = complex(rng.uniform(-0.4, 0.4), rng.uniform(-0.3, 0.3))
        params = {"mu": format_complex(mu), "z": format_complex(z)}

        def scale():
            return max(1.0, abs(theta_eval(CHAR1, z, mu)))

        _push(reports, spec, "quasi_period_1", params,
              lambda: abs(theta_eval(CHAR1, z + 1.0, mu)
                          + theta_eval(CHAR1, z, mu)) / scale())
        _push(reports, spec, "quasi_period_mu", params,
              lambda: abs(theta_eval(CHAR1, z + mu, mu)
                          + cmath.exp(-1j * _PI * mu - _2PII * z)
                          * theta_eval(CHAR1, z, mu)) / scale())
        _push(reports, spec, "odd", params,
              lambda: abs(theta_eval(CHAR1, -z, mu) + theta_eval(CHAR1, z, mu)))

        def quartic():
            t2, t3, t4 = theta_constants(mu)
            return abs(t3 ** 4 - t2 ** 4 - t4 ** 4) / abs(t3) ** 4

        def deriv_identity():
            t2, t3, t4 = theta_constants(mu)
            return abs(theta1_zero_derivatives(mu, 1)[1] - _PI * t2 * t3 * t4)

        _push(reports, spec, "jacobi_quartic", params, quartic)
        _push(reports, spec, "derivative_identity", params, deriv_identity)
        _push(reports, spec, "heat", params,
              lambda: abs(theta_eval(CHAR2, z, mu, dz_order=2)
                          - 2.0 * _2PII * theta_mu_derivative(CHAR2, z, mu)))
        _push(reports, spec, "chazy_gamma", {"mu": params["mu"]},
              lambda: chazy_residual(ChazyFunction.gamma(), mu))
        _push(reports, spec, "chazy_sl2", {"mu": params["mu"]},
              lambda: chazy_residual(sl2, mu))


def _suite_torus(spec, reports):
    rng = random.Random("%d:torus" % spec.seed)
    for cov in spec.coverings:
        params = _cov_params(cov)
        rd = ramification_data(cov)
        _push(reports, spec, "lambda_sum", params,
              lambda: abs(sum(rd.lam) - 3.0 * cov.c))
        _push(reports, spec, "thomae", params, lambda: thomae_residual(cov))

        def a_period():
            # path at mid-cell height: maximal distance from both pole rows
            z0 = 0.13 * cov.w + cov.wp
            quad = QuadratureSpec((z0, z0 + 2.0 * cov.w), node_count=32)
            integral = contour_integral(lambda s: weierstrass_p(s, cov), quad)
            return abs(integral - 1j * _PI * gamma_chazy(cov.mu) / (2.0 * cov.w))

        _push(reports, spec, "p_a_period", params, a_period)

        s1 = (0.23 + 0.11 * rng.random()) * cov.w + 0.31 * cov.wp
        s2 = -0.17 * cov.w + (0.29 + 0.07 * rng.random()) * cov.wp

        def two_routes():
            direct = weierstrass_p(s1, cov) - weierstrass_p(s2, cov)
            return abs(weierstrass_p_difference(s1, s2, cov) - direct) \
                / max(1.0, abs(direct))

        _push(reports, spec, "p_two_routes", params, two_routes)


def _suite_kernels(spec, reports):
    q = spec.q
    for k, cov in enumerate(spec.coverings):
        params = _cov_params(cov, q=q)
        # second kernel slot half a period off the b-cycle path and a full
        # period off the a-cycle path, so the diagonal pole never sits on
        # the integration contour whatever the lattice shape
        s_fixed = _kernels._BASEPOINT + 0.5 * cov.w + cov.wp
        _push(reports, spec, "w_a_period", _cov_params(cov),
              lambda: w_period_residuals(cov, s_fixed)[0])
        _push(reports, spec, "w_b_period", _cov_params(cov),
              lambda: w_period_residuals(cov, s_fixed)[1])
        _push(reports, spec, "wq_normalization", params,
              lambda: wq_normalization_residual(cov, q, s_fixed))
        j = k % 3
        sP, sQ = 0.31 * cov.w + 0.27 * cov.wp, -0.19 * cov.w + 0.33 * cov.wp
        _push(reports, spec, "rauch_w", _cov_params(cov, j=j),
              lambda: rauch_residual("W", sP, sQ, j, cov))
        _push(reports, spec, "rauch_wq", _cov_params(cov, q=q, j=j),
              lambda: rauch_residual("Wq", sP, sQ, j, cov, q))
        _push(reports, spec, "q_decay", _cov_params(cov),
              lambda: abs(q_decay_ratio(cov, 10.0) - 10.0))


def _suite_frobenius3(spec, reports):
    q = spec.q
    fam = PrepotentialFamily3.deformed(q)
    for cov in spec.coverings:
        params = _cov_params(cov, q=q)
        _push(reports, spec, "wdvv", params,
              lambda: wdvv_residual3(fam, flat_coords3(cov, q)))

        def metric():
            T = third_derivatives3(fam, flat_coords3(cov, q))
            return float(max(abs(T[0][a][b] - METRIC3[a][b])
                             for a in range(3) for b in range(3)))

        _push(reports, spec, "metric", params, metric)
        _push(reports, spec, "quasihomogeneity", params,
              lambda: quasihomogeneity_residual3(fam, flat_coords3(cov, q), 2.0))
        _push(reports, spec, "euler", params,
              lambda: euler_residual3(fam, flat_coords3(cov, q)))


def _suite_isomono(spec, reports):
    q = spec.q
    for cov in spec.coverings:
        params = _cov_params(cov, q=q)
        _push(reports, spec, "constraint", {"mu": format_complex(cov.mu),
                                            "q": format_complex(q)},
              lambda: omega_triplet(cov.mu, q).constraint_residual())
        _push(reports, spec, "top_system", params,
              lambda: top_system_residual(cov, q))
        _push(reports, spec, "proposition", params,
              lambda: max(proposition_crosscheck(cov, q)))
        _push(reports, spec, "darboux_egoroff", params,
              lambda: max(darboux_egoroff_residual(cov, q)))
        _push(reports, spec, "rotation_euler", params,
              lambda: max(rotation_euler_residual(cov, q, pair=p, source=s)
                          for p in ((0, 1), (1, 2))
                          for s in ("from_omega", "from_Wq")))


def _suite_tau(spec, reports):
    q = spec.q
    for cov in spec.coverings:
        _push(reports, spec, "ode_w", _cov_params(cov),
              lambda: tau_ode_residual(cov, None, kind="W"))
        _push(reports, spec, "ode_wq", _cov_params(cov, q=q),
              lambda: tau_ode_residual(cov, q, kind="Wq"))
        _push(reports, spec, "isomonodromic_relation", _cov_params(cov, q=q),
              lambda: tau_i_relation_residual(cov, q))

    def g_variance():
        diffs = [g_assembly(cov) - g_function3(flat_coords3(cov, None), None)
                 for cov in spec.coverings]
        mean = sum(diffs) / len(diffs)
        return sum(abs(d - mean) ** 2 for d in diffs) / len(diffs)

    _push(reports, spec, "g_variance",
          {"coverings": len(spec.coverings)}, g_variance)


def _suite_realdouble(spec, reports):
    qim = _imaginary_of(spec.q)
    for cov in spec.coverings:
        params = _cov_params(cov, q=qim)
        _push(reports, spec, "wdvv", params,
              lambda: wdvv_residual6(flat_coords6(cov, qim), qim))

        def metric():
            T = third_derivatives6(flat_coords6(cov, qim), qim)
            return float(max(abs(T[0][a][b] - METRIC6[a][b])
                             for a in range(6) for b in range(6)))

        _push(reports, spec, "metric", params, metric)
        _push(reports, spec, "quasihomogeneity", params,
              lambda: quasihomogeneity_residual6(flat_coords6(cov, qim), qim, 2.0))
        _push(reports, spec, "tau_omega_ode", params,
              lambda: tau_omega_ode_residual(cov, qim))

    def crosscheck():
        # display and tau-assembly agree up to a constant once the deformed
        # modular arguments converge; compare in that regime
        qbig = 1e8j
        diffs = [g_function6(flat_coords6(cov, qbig), qbig) - g_assembly6(cov, qbig)
                 for cov in spec.coverings]
        mean = sum(diffs) / len(diffs)
        return sum(abs(d - mean) ** 2 for d in diffs) / len(diffs)

    _push(reports, spec, "g_crosscheck_variance",
          {"coverings": len(spec.coverings), "q": format_complex(1e8j)}, crosscheck)


_SUITE_RUNNERS = {
    "theta": _suite_theta,
    "torus": _suite_torus,
    "kernels": _suite_kernels,
    "frobenius3": _suite_frobenius3,
    "isomono": _suite_isomono,
    "tau": _suite_tau,
    "realdouble": _suite_realdouble,
}


def run_suite(spec):
    """All checks of one suite; returns (exit_status, reports)."""
    reports = []
    _SUITE_RUNNERS[spec.suite](spec, reports)
    status = 0 if all(r.passed for r in reports) else 1
    return status, reports


# -- sweeps ----------------------------------------------------------------------

def _sweep_theta_mu(values, cov, q, seed):
    gam = ChazyFunction.gamma()
    return [("chazy_gamma", v, chazy_residual(gam, v)) for v in values]


def _sweep_kernels_q(values, cov, q, seed):
    rows = []
    for v in values:
        shift = abs(kernel_at_ramification("Wq", 0, 1, cov, v)
                    - kernel_at_ramification("W", 0, 1, cov))
        rows.append(("wq_minus_w", v, shift))
    return rows


def _sweep_frobenius3_kappa(values, cov, q, seed):
    fam = PrepotentialFamily3.deformed(q)
    t = flat_coords3(cov, q)
    return [("quasihomogeneity", v, quasihomogeneity_residual3(fam, t, v))
            for v in values]


def _sweep_frobenius3_q(values, cov, q, seed):
    rows = []
    for v in values:
        fam = PrepotentialFamily3.deformed(v)
        rows.append(("wdvv", v, wdvv_residual3(fam, flat_coords3(cov, v))))
    return rows


_SWEEPS = {
    ("theta", "mu"): _sweep_theta_mu,
    ("kernels", "q"): _sweep_kernels_q,
    ("frobenius3", "kappa"): _sweep_frobenius3_kappa,
    ("frobenius3", "q"): _sweep_frobenius3_q,
}


# -- output ----------------------------------------------------------------------

def _write_text(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_text(pairs, seed, stable_order):
    lines = []
    for suite, r in pairs:
        d = r.as_dict(suite=suite, seed=seed)
        if not math.isfinite(d["residual"]):
            d["residual"] = None  # strict JSON has no Infinity
        lines.append(json.dumps(d, sort_keys=True))
    if stable_order:
        lines.sort()
    return "".join(line + "\n" for line in lines)


# -- argument handling -------------------------------------------------------------

def _complex_arg(text):
    try:
        return parse_complex(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _add_common(parser):
    parser.add_argument("--w", type=_complex_arg, default=None,
                        help="half-period w of an explicit covering")
    parser.add_argument("--wp", type=_complex_arg, default=None,
                        help="half-period w' of an explicit covering")
    parser.add_argument("--c", type=_complex_arg, default=None,
                        help="additive constant of the covering map")
    parser.add_argument("--mu", type=_complex_arg, default=None,
                        help="modulus; shorthand for --w 1/2 --wp mu/2")
    parser.add_argument("--q", type=_complex_arg, default=None,
                        help="deformation parameter (default 2+1i; 3i where "
                             "an imaginary value is required)")
    parser.add_argument("--samples", type=int, default=5,
                        help="grid size when no explicit covering is given")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--tol", type=float, default=None,
                        help="flat tolerance override for every check")
    parser.add_argument("--out", default=None, help="output path (default stdout)")
    parser.add_argument("--stable-order", action="store_true",
                        help="sort report lines before writing")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hurwitz1",
        description="residual verification suites for the deformed "
                    "genus-one Frobenius structures")
    sub = parser.add_subparsers(dest="command", required=True)
    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", choices=SUITES + ("all",))
    _add_common(pv)
    ps = sub.add_parser("sweep", help="tabulate a residual along a parameter")
    ps.add_argument("suite", choices=SUITES)
    ps.add_argument("--param", required=True, help="swept parameter name")
    ps.add_argument("--range", dest="range_spec", required=True,
                    help="'a..b:n', 'log:a..b:n' or comma list")
    _add_common(ps)
    return parser


def _spec_for(suite, args):
    q = args.q
    if q is None:
        q = 3j if suite == "realdouble" else 2.0 + 1.0j
    coverings = default_coverings(args.samples, args.seed, mu=args.mu,
                                  c=args.c, w=args.w, wp=args.wp)
    return SuiteSpec(suite=suite, coverings=coverings, q=q,
                     tol_override=args.tol, seed=args.seed, out=args.out,
                     stable_order=args.stable_order)


def _cmd_verify(args):
    suites = SUITES if args.suite == "all" else (args.suite,)
    pairs = []
    status = 0
    for suite in suites:
        st, reports = run_suite(_spec_for(suite, args))
        status = max(status, st)
        pairs.extend((suite, r) for r in reports)
    _write_text(_report_text(pairs, args.seed, args.stable_order), args.out)
    passed = sum(1 for _, r in pairs if r.passed)
    print("%d/%d checks passed" % (passed, len(pairs)), file=sys.stderr)
    if status:
        for suite, r in pairs:
            if not r.passed:
                print("FAIL %s.%s residual=%g tol=%g %s"
                      % (suite, r.name, r.residual, r.tolerance,
                         r.params.get("error", "")), file=sys.stderr)
    return status


def _cmd_sweep(args):
    key = (args.suite, args.param)
    if key not in _SWEEPS:
        raise DomainError(
            "no sweep for suite %r over parameter %r; available: %s"
            % (args.suite, args.param,
               ", ".join("%s/%s" % k for k in sorted(_SWEEPS))))
    values = parse_range(args.range_spec)
    q = args.q if args.q is not None else 2.0 + 1.0j
    cov = default_coverings(1, args.seed, mu=args.mu, c=args.c,
                            w=args.w, wp=args.wp)[0]
    rows = _SWEEPS[key](values, cov, q, args.seed)
    lines = ["parameter,check,residual"]
    lines += ["%s,%s,%r" % (format_complex(v), name, float(r))
              for name, v, r in rows]
    _write_text("".join(line + "\n" for line in lines), args.out)
    return 0


_VALUE_FLAGS = {"--w", "--wp", "--c", "--mu", "--q", "--tol", "--samples",
                "--seed", "--out", "--param", "--range"}


def _fuse_flag_values(argv):
    """Join "--q -1.1i" into "--q=-1.1i" so argparse does not read negative
    complex literals as option strings."""
    out = []
    k = 0
    while k < len(argv):
        if argv[k] in _VALUE_FLAGS and k + 1 < len(argv) \
                and argv[k + 1].startswith("-"):
            out.append(argv[k] + "=" + argv[k + 1])
            k += 2
        else:
            out.append(argv[k])
            k += 1
    return out


def main(argv=None):
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_fuse_flag_values(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_sweep(args)
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
