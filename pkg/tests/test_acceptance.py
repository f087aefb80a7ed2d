"""Acceptance gate: one test per acceptance criterion, each printing a
single PASS line with its worst residual and runtime.  Thresholds and
budgets are stated inline; every other test file drills into the details,
this one certifies the headline numbers end to end.
"""

import cmath
import math
import time

import numpy as np
import pytest

import oracles
from hurwitz1 import cli, numkit
from hurwitz1.frobenius3 import (
    METRIC3,
    PrepotentialFamily3,
    flat_coords3,
    g_function3,
    quasihomogeneity_residual3,
    third_derivatives3,
    wdvv_residual3,
)
from hurwitz1.isomono import (
    darboux_egoroff_residual,
    omega_triplet,
    proposition_crosscheck,
    rotation_euler_residual,
    top_system_residual,
)
from hurwitz1.kernels import (
    q_decay_ratio,
    rauch_residual,
    w_period_residuals,
    wq_normalization_residual,
)
from hurwitz1.numkit import DiffConfig, QuadratureSpec, contour_integral, nth_derivative
from hurwitz1.realdouble import (
    METRIC6,
    FlatChart6,
    flat_coords6,
    g_assembly6,
    g_function6,
    prepotential6,
    quasihomogeneity_residual6,
    third_derivatives6,
    wdvv_residual6,
)
from hurwitz1.tau import g_assembly, tau_i_relation_residual, tau_ode_residual
from hurwitz1.theta import (
    CHAR1,
    CHAR3,
    ChazyFunction,
    chazy_residual,
    gamma_chazy,
    theta1_zero_derivatives,
    theta_constants,
    theta_eval,
    theta_mu_derivative,
)
from hurwitz1.torus import TorusCovering, ramification_data, thomae_residual, weierstrass_p

_2PII = 2j * math.pi

TAU_POOL = [
    TorusCovering(0.5, 0.2 + 0.9j, 0.3 - 0.1j),
    TorusCovering(0.5, 0.15 + 1.1j, -0.2 + 0.4j),
    TorusCovering(0.5, 0.3 + 0.8j, 0.1 + 0.2j),
    TorusCovering(0.4 - 0.1j, (0.4 - 0.1j) * (0.25 + 1.3j), 0.5),
    TorusCovering(0.5, 0.1 + 0.7j, -0.4 - 0.3j),
]


class _Budget:
    def __init__(self, label, seconds):
        self.label = label
        self.seconds = seconds
        self.worst = 0.0

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def note(self, residual):
        self.worst = max(self.worst, float(residual))

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        status = "PASS" if exc_type is None else "FAIL"
        print("acceptance %-28s %s  worst=%.3e  t=%.2fs"
              % (self.label, status, self.worst, elapsed))
        if exc_type is None:
            assert elapsed < self.seconds, \
                "%s exceeded its %.0fs budget (%.1fs)" % (self.label, self.seconds, elapsed)


def _charts3(n, q, seed):
    rng = np.random.default_rng(seed)
    charts = []
    for mu in oracles.mu_box_samples(n, seed=seed + 1):
        m = mu if q is None else complex(q) * mu / (mu + complex(q))
        from hurwitz1.frobenius3 import FlatChart3
        charts.append(FlatChart3(
            complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            complex(rng.uniform(0.7, 1.6), rng.uniform(-0.4, 0.4)),
            m / _2PII))
    return charts


def _charts6(n, q, seed):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        u1 = complex(rng.uniform(-0.45, 0.45), rng.uniform(0.7, 1.6))
        u2 = complex(rng.uniform(-0.45, 0.45), rng.uniform(0.7, 1.6))
        wfac = 1.0 + u1 / q
        t6 = u2 * wfac / (_2PII * (u1 + u2 * wfac))
        t3 = u1 * t6 / wfac
        if min(abs(t6 - t3 / q), abs(_2PII * t6 - 1.0), abs(t3)) < 0.05:
            continue
        t = FlatChart6(
            complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            complex(rng.uniform(0.7, 1.6), rng.uniform(-0.4, 0.4)),
            t3,
            complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            complex(rng.uniform(0.7, 1.6), rng.uniform(-0.4, 0.4)),
            t6)
        if t.in_domain(q):
            out.append(t)
    return out


def test_criterion_1_theta_identities():
    rng = np.random.default_rng(1301)
    with _Budget("1 theta identities", 5.0) as b:
        for mu in oracles.mu_box_samples(20, seed=1301):
            z = complex(rng.uniform(-0.4, 0.4), rng.uniform(-0.35, 0.35))
            t1 = theta_eval(CHAR1, z, mu)
            scale = max(1.0, abs(t1))
            b.note(abs(theta_eval(CHAR1, z + 1.0, mu) + t1) / scale)
            b.note(abs(theta_eval(CHAR1, z + mu, mu)
                       + cmath.exp(-1j * math.pi * mu - _2PII * z) * t1) / scale)
            b.note(abs(theta_eval(CHAR1, -z, mu) + t1) / scale)
            t2c, t3c, t4c = theta_constants(mu)
            b.note(abs(t3c ** 4 - t2c ** 4 - t4c ** 4) / abs(t3c) ** 4)
            d1 = theta1_zero_derivatives(mu, 1)[1]
            b.note(abs(d1 - math.pi * t2c * t3c * t4c) / abs(d1))
            heat = abs(theta_eval(CHAR3, z, mu, dz_order=2)
                       - 2.0 * _2PII * theta_mu_derivative(CHAR3, z, mu))
            b.note(heat)
            assert b.worst < 1e-11
            # finite-difference route for the heat equation only
            fd, _ = nth_derivative(lambda m: theta_eval(CHAR3, z, m), mu, 1,
                                   DiffConfig(base_step=1e-3))
            assert abs(theta_eval(CHAR3, z, mu, dz_order=2)
                       - 2.0 * _2PII * fd) < 1e-8


def test_criterion_2_chazy():
    frames = ((2, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1))
    gam = ChazyFunction.gamma()
    sl2s = [gam.sl2_of_gamma(*f) for f in frames]
    ident = ChazyFunction.custom(lambda m: (m, 1.0, 0.0, 0.0), "f(mu)=mu")
    with _Budget("2 chazy", 5.0) as b:
        for mu in oracles.mu_box_samples(10, seed=1302):
            b.note(chazy_residual(gam, mu))
            for f in sl2s:
                b.note(chazy_residual(f, mu))
            assert b.worst < 1e-7
            assert abs(chazy_residual(ident, mu) - 9.0) < 1e-9


def test_criterion_3_torus():
    with _Budget("3 torus", 10.0) as b:
        for k, tup in enumerate(oracles.covering_pool(10, seed=1303)):
            cov = TorusCovering(*tup)
            s = 0.37 * cov.w + 0.29 * cov.wp
            lattice = oracles.wp_lattice(s, cov.w, cov.wp, N=60)
            direct = weierstrass_p(s, cov)
            assert abs(direct - lattice) / max(1.0, abs(direct)) < 1e-6
            rd = ramification_data(cov)
            b.note(abs(sum(rd.lam) - 3.0 * cov.c))
            b.note(thomae_residual(cov))
            assert b.worst < 1e-10
            z0 = 0.13 * cov.w + cov.wp  # mid-cell: far from both pole rows
            quad = QuadratureSpec((z0, z0 + 2.0 * cov.w), node_count=32)
            integral = contour_integral(lambda t: weierstrass_p(t, cov), quad)
            assert abs(integral - 1j * math.pi * gamma_chazy(cov.mu)
                       / (2.0 * cov.w)) < 1e-9


def test_criterion_4_kernels():
    q = 2.0 + 1.0j
    qim = 3j
    deformed_kinds = ("Omegaq_dlambda", "Omegaq_dlambda_bar",
                      "Bq_dlambda", "Bq_dlambda_bar")
    with _Budget("4 kernels", 60.0) as b:
        for k, tup in enumerate(oracles.covering_pool(2, seed=1304)):
            cov = TorusCovering(*tup)
            assert w_period_residuals(cov)[0] < 1e-9
            assert wq_normalization_residual(cov, q) < 1e-8
            sP = 0.31 * cov.w + 0.27 * cov.wp
            sQ = -0.19 * cov.w + 0.33 * cov.wp
            for j in range(3) if k == 0 else (0,):
                b.note(rauch_residual("W", sP, sQ, j, cov))
                b.note(rauch_residual("Wq", sP, sQ, j, cov, q))
                for kind in deformed_kinds:
                    b.note(rauch_residual(kind, sP, sQ, j, cov, qim))
            assert b.worst < 1e-5
            ratio = q_decay_ratio(cov, 10.0)
            assert 8.0 <= ratio <= 12.0


def test_criterion_5_wdvv3():
    qs = (1.0, 2.0 + 1.0j, 5.0j, 1e3)
    und = PrepotentialFamily3.undeformed()
    with _Budget("5 wdvv3", 30.0) as b:
        for k, q in enumerate(qs):
            fam = PrepotentialFamily3.deformed(q)
            for t in _charts3(5, q, seed=1500 + k):  # 5 x 4 = 20 charts
                b.note(wdvv_residual3(fam, t))
                assert b.worst < 1e-7
                T = third_derivatives3(fam, t)
                assert np.max(np.abs(T[0] - METRIC3)) < 1e-12
                assert quasihomogeneity_residual3(fam, t, 2.0) < 1e-9
        for q in (1.0, 0.5):  # 1/q in {1, 2}: SL(2,Z) frames
            fam = PrepotentialFamily3.deformed(q)
            for t in _charts3(2, q, seed=1583):
                gap = np.max(np.abs(third_derivatives3(fam, t)
                                    - third_derivatives3(und, t)))
                assert gap < 1e-7


def test_criterion_6_isomono():
    q = 2.0 + 1.0j
    with _Budget("6 isomono", 60.0) as b:
        for mu in oracles.mu_box_samples(10, seed=1306):
            assert omega_triplet(mu, q).constraint_residual() < 1e-9
        for tup in oracles.covering_pool(3, seed=1306):
            cov = TorusCovering(*tup)
            assert top_system_residual(cov, q) < 1e-5
            assert max(proposition_crosscheck(cov, q)) < 1e-7
            b.note(max(darboux_egoroff_residual(cov, q)))
            b.note(max(rotation_euler_residual(cov, q, pair=p, source=s)
                       for p in ((0, 1), (1, 2))
                       for s in ("from_omega", "from_Wq")))
            assert b.worst < 1e-5


def test_criterion_7_tau():
    q = 2.0 + 1.0j
    with _Budget("7 tau", 60.0) as b:
        for cov in TAU_POOL[:3]:
            b.note(tau_ode_residual(cov, None, kind="W"))
            b.note(tau_ode_residual(cov, q, kind="Wq"))
            b.note(tau_i_relation_residual(cov, q))
            assert b.worst < 1e-5
        diffs = [g_assembly(cov) - g_function3(flat_coords3(cov, None), None)
                 for cov in TAU_POOL]
        mean = sum(diffs) / len(diffs)
        assert sum(abs(d - mean) ** 2 for d in diffs) / len(diffs) < 1e-7


def test_criterion_8_realdouble():
    with _Budget("8 realdouble", 90.0) as b:
        for k, q in enumerate((1j, 3j, 1e3j)):
            for t in _charts6(20, q, seed=1800 + k):
                b.note(wdvv_residual6(t, q))
                assert b.worst < 1e-5
        q = 3j
        for t in _charts6(3, q, seed=1808):
            assert quasihomogeneity_residual6(t, q, 2.0) < 1e-8
            assert quasihomogeneity_residual6(t, q, 1j) < 1e-8
            T = third_derivatives6(t, q)
            assert np.max(np.abs(T[0] - METRIC6)) < 1e-12
        # G cross-check in the regime where display and assembly agree
        for qc in (1e3j, 1e8j):
            diffs = [g_function6(flat_coords6(cov, qc), qc) - g_assembly6(cov, qc)
                     for cov in TAU_POOL]
            mean = sum(diffs) / len(diffs)
            assert sum(abs(d - mean) ** 2 for d in diffs) / len(diffs) < 1e-6
        # q -> infinity coincidence with the undeformed double
        for t in _charts6(2, 1e8j, seed=1809):
            assert abs(prepotential6(t, 1e8j) - prepotential6(t, 1e12j)) < 1e-6


def test_criterion_9_cli_end_to_end(tmp_path):
    with _Budget("9 cli verify all", 300.0):
        texts = []
        for name in ("r1.json", "r2.json"):
            out = tmp_path / name
            rc = cli.main(["verify", "all", "--seed", "11", "--stable-order",
                           "--out", str(out)])
            assert rc == 0
            texts.append(out.read_bytes())
        assert texts[0] == texts[1]
