import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hurwitz1 import numkit
from hurwitz1.errors import DomainError
from hurwitz1.theta import (
    CHAR1,
    CHAR2,
    CHAR3,
    CHAR4,
    Modulus,
    dedekind_eta,
    gamma_chazy,
    theta1,
    theta1_zero_derivatives,
    theta_constants,
    theta_eval,
    theta_mu_derivative,
)

MU_GRID = oracles.mu_box_samples(8, seed=20240)

z_box = st.complex_numbers(min_magnitude=0.0, max_magnitude=0.9, allow_nan=False, allow_infinity=False)
mu_idx = st.integers(min_value=0, max_value=len(MU_GRID) - 1)


def test_theta3_at_i_against_gamma_quarter():
    val = theta_eval(CHAR3, 0.0, 1j)
    assert abs(val - oracles.THETA3_AT_I) < 1e-14
    assert abs(val.imag) < 1e-15


def test_agm_inverse_square_of_theta3():
    # Classical: AGM(1, th4^2/th3^2) = 1/th3^2 for purely imaginary modulus.
    for t in (0.8, 1.0, 1.7):
        t2, t3, t4 = theta_constants(1j * t)
        assert abs(oracles.agm(1.0, (t4 ** 2 / t3 ** 2).real) - (1.0 / t3 ** 2).real) < 1e-13
    assert abs(oracles.agm(1.0, 1 / math.sqrt(2)) - oracles.AGM_ONE_INVSQRT2) < 1e-15


def test_jacobi_quartic_identity():
    for mu in MU_GRID:
        t2, t3, t4 = theta_constants(mu)
        assert abs(t3 ** 4 - t2 ** 4 - t4 ** 4) < 1e-12 * abs(t3) ** 4


def test_theta1_prime_product_identity():
    for mu in MU_GRID:
        t2, t3, t4 = theta_constants(mu)
        u = theta1_zero_derivatives(mu, 1)
        assert abs(u[1] - math.pi * t2 * t3 * t4) < 1e-12 * abs(u[1])


@given(z_box, mu_idx)
@settings(max_examples=40, deadline=None)
def test_theta1_odd(z, k):
    mu = MU_GRID[k]
    assert abs(theta1(-z, mu) + theta1(z, mu)) < 1e-12 * max(1.0, abs(theta1(z, mu)))


@given(z_box, mu_idx)
@settings(max_examples=40, deadline=None)
def test_theta1_quasi_periodicity(z, k):
    mu = MU_GRID[k]
    base = theta1(z, mu)
    scale = max(1.0, abs(base))
    assert abs(theta1(z + 1.0, mu) + base) < 1e-11 * scale
    jump = -cmath.exp(-1j * math.pi * mu - 2j * math.pi * z)
    assert abs(theta1(z + mu, mu) - jump * base) < 1e-10 * max(scale, abs(jump * base))


def test_heat_equation_all_characteristics():
    # d^2/dz^2 theta = 4 pi i d/dmu theta, both sides independent series.
    pts = [0.13 + 0.21j, -0.4 + 0.05j, 0.0]
    for char in (CHAR1, CHAR2, CHAR3, CHAR4):
        for mu in MU_GRID[:5]:
            for z in pts:
                lhs = theta_eval(char, z, mu, dz_order=2)
                rhs = 4j * math.pi * theta_mu_derivative(char, z, mu)
                assert abs(lhs - rhs) < 1e-11 * max(1.0, abs(lhs))


def test_heat_equation_fd_in_mu():
    mu = 0.1 + 1.1j
    z = 0.23 - 0.11j
    h = 1e-3
    for char in (CHAR1, CHAR3):
        fd = (theta_eval(char, z, mu + h) - theta_eval(char, z, mu - h)) / (2 * h)
        fd += (theta_eval(char, z, mu + 1j * h) - theta_eval(char, z, mu - 1j * h)) / (2j * h)
        fd *= 0.5
        lhs = theta_eval(char, z, mu, dz_order=2)
        assert abs(lhs - 4j * math.pi * fd) < 1e-8 * max(1.0, abs(lhs))


def test_z_derivative_consistency_with_fd():
    mu = -0.2 + 0.9j
    z = 0.31 + 0.17j
    cfg = numkit.DiffConfig(base_step=5e-3)
    for order in (1, 2, 3):
        fd, _ = numkit.nth_derivative(lambda u: theta1(u, mu), z, order, cfg)
        assert abs(fd - theta1(z, mu, order)) < 1e-8 * max(1.0, abs(fd))


def test_dz_order_cap():
    with pytest.raises(DomainError):
        theta_eval(CHAR3, 0.0, 1j, dz_order=6)
    with pytest.raises(DomainError):
        theta_eval(CHAR3, 0.0, 1j, dz_order=-1)


def test_modulus_must_be_upper_half_plane():
    with pytest.raises(DomainError):
        theta_eval(CHAR3, 0.0, 0.5 - 0.2j)
    with pytest.raises(DomainError):
        Modulus(1.0 + 0j)


def test_theta1_zero_derivatives_structure():
    mu = 0.07 + 0.83j
    u = theta1_zero_derivatives(mu, 9)
    assert set(u) == {1, 3, 5, 7, 9}
    # Cross-check u3 by finite differences of the odd function theta1,
    # extrapolated once in h to kill the leading h^2 truncation term.
    def fd3(h):
        return (theta1(2 * h, mu) - 2 * theta1(h, mu) + 2 * theta1(-h, mu) - theta1(-2 * h, mu)) / (2 * h ** 3)

    val, _ = numkit.richardson([fd3(2e-2), fd3(1e-2), fd3(5e-3)], order=2)
    assert abs(val - u[3]) < 1e-9 * abs(u[3])


def test_dedekind_eta_frozen_value_and_series():
    assert abs(dedekind_eta(1j) - oracles.ETA_AT_I) < 1e-14
    for mu in MU_GRID:
        assert abs(dedekind_eta(mu) - oracles.eta_pentagonal(mu)) < 1e-13


def test_dedekind_eta_functional_equations():
    for mu in MU_GRID[:4]:
        lhs = dedekind_eta(mu + 1.0)
        assert abs(lhs - cmath.exp(1j * math.pi / 12) * dedekind_eta(mu)) < 1e-12
        lhs = dedekind_eta(-1.0 / mu)
        assert abs(lhs - cmath.sqrt(-1j * mu) * dedekind_eta(mu)) < 1e-12


def test_eta_cube_is_theta_product():
    for mu in MU_GRID:
        t2, t3, t4 = theta_constants(mu)
        assert abs(dedekind_eta(mu) ** 3 - 0.5 * t2 * t3 * t4) < 1e-12


def test_gamma_matches_eisenstein_series():
    # gamma = theta1'''(0)/(3 pi i theta1'(0)) agrees with (pi i/3) E2.
    for mu in MU_GRID:
        want = (1j * math.pi / 3.0) * oracles.eisenstein_E2(mu)
        assert abs(gamma_chazy(mu) - want) < 1e-13 * max(1.0, abs(want))


def test_gamma_at_i_is_i():
    assert abs(gamma_chazy(1j) - 1j) < 1e-13


def test_gamma_derivative_ladder_against_fd():
    mu = 0.11 + 0.93j
    h = 1e-3
    for order, tol in ((1, 1e-9), (2, 1e-7), (3, 1e-4)):
        stencil = {1: [(-2, 1 / 12), (-1, -2 / 3), (1, 2 / 3), (2, -1 / 12)],
                   2: [(-2, -1 / 12), (-1, 4 / 3), (0, -5 / 2), (1, 4 / 3), (2, -1 / 12)],
                   3: [(-2, -1 / 2), (-1, 1), (1, -1), (2, 1 / 2)]}[order]
        fd = sum(wgt * gamma_chazy(mu + k * h) for k, wgt in stencil) / h ** order
        assert abs(fd - gamma_chazy(mu, order)) < tol * max(1.0, abs(fd))
