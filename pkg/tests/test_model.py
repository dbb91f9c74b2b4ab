import math

import numpy as np
import pytest

from dipolepair import (
    AtomPairConfig,
    Couplings,
    build_effective_hamiltonian,
    build_hamiltonian,
    cross_decay,
    dipole_coupling,
    gamma_cross,
    hermitian_eig,
    k0r_for_tau,
    omega_dipole,
    tau_of_geometry,
)
from dipolepair.errors import InvalidGeometry
from dipolepair.model import TO_COUPLED

# ------------------------------------------------------- dipole coupling


def test_dipole_coupling_at_pi_perpendicular():
    got = dipole_coupling(math.pi, 0.0)
    expected = 0.75 * (1.0 / math.pi - 1.0 / math.pi**3)  # ~0.21454
    assert abs(got - expected) < 1e-14


def test_dipole_coupling_leading_divergence():
    # omega * x^3 -> 3/4 as x -> 0 for perpendicular dipoles
    for x in (1e-4, 1e-6):
        assert abs(dipole_coupling(x, 0.0) * x**3 - 0.75) < 1e-8


def test_dipole_coupling_magic_angle_leaves_first_term():
    mu = math.sqrt(1.0 / 3.0)
    for x in (0.5, 1.0, math.pi):
        expected = -0.75 * (2.0 / 3.0) * math.cos(x) / x
        assert abs(dipole_coupling(x, mu) - expected) < 1e-12


def test_dipole_coupling_rejects_bad_distance():
    with pytest.raises(InvalidGeometry):
        dipole_coupling(0.0)
    with pytest.raises(InvalidGeometry):
        dipole_coupling(-1.0)


# ------------------------------------------------------- cross decay


def test_cross_decay_short_distance_limit():
    assert abs(cross_decay(1e-6) - 1.0) < 1e-12


def test_cross_decay_reference_points():
    assert abs(cross_decay(math.pi) - 3.0 / math.pi**2) < 1e-14
    assert abs(cross_decay(2 * math.pi) + 3.0 / (4 * math.pi**2)) < 1e-14


def test_cross_decay_bounded_by_one():
    x = np.arange(1e-4, 100.0, 1e-3)
    g = cross_decay(x)
    assert np.abs(g).max() <= 1.0 + 1e-12


# ------------------------------------------------------- small-x series guard


def _omega_taylor6(x, mu):
    # hand-combined 6-term expansion of the coupling bracket
    a = 1.0 - mu**2
    b = 1.0 - 3.0 * mu**2
    bracket = (
        b / x**3
        + (b / 2.0 - a) / x
        + (a / 2.0 - b / 8.0) * x
        + (-a / 24.0 + b / 144.0) * x**3
        + (a / 720.0 - b / 5760.0) * x**5
        + (-a / 40320.0 + b / 403200.0) * x**7
    )
    return 0.75 * bracket


def _gamma_taylor6(x):
    return (
        1.0
        - x**2 / 10.0
        + x**4 / 280.0
        - x**6 / 15120.0
        + x**8 / 1330560.0
        - x**10 / 172972800.0
    )


def test_small_x_series_agreement():
    xs = np.logspace(-5, math.log10(9.9e-4), 25)
    for x in xs:
        g = cross_decay(float(x))
        assert abs(g - _gamma_taylor6(x)) <= 1e-10 * abs(g)
        for mu in (0.0, 0.3, 1.0):
            w = dipole_coupling(float(x), mu)
            ref = _omega_taylor6(x, mu)
            assert abs(w - ref) <= 1e-10 * max(abs(ref), 1e-300)


def test_coupling_branches_agree_at_series_switch():
    # both evaluation branches sit on the same Taylor oracle right at the
    # switch point (the direct branch carries ~1e-10 cancellation noise)
    x_lo = 1e-3 * (1 - 1e-9)   # series branch
    x_hi = 1e-3 * (1 + 1e-9)   # direct branch
    for x in (x_lo, x_hi):
        assert abs(cross_decay(x) - _gamma_taylor6(x)) <= 2e-10
        ref = _omega_taylor6(x, 0.0)
        assert abs(dipole_coupling(x, 0.0) - ref) <= 2e-10 * abs(ref)


# ------------------------------------------------------- Hamiltonian


def test_hamiltonian_spectrum_undriven_resonant():
    cfg = AtomPairConfig(delta=0.0, drive=0.0)
    for omega in (0.5, 2.0):
        w, _ = hermitian_eig(build_hamiltonian(cfg, omega))
        assert np.allclose(w, sorted([omega, 0.0, 0.0, -omega], reverse=True),
                           atol=1e-12)


def test_singlet_is_eigenstate_for_any_parameters():
    ket_a = np.array([0, 1, -1, 0], dtype=complex) / math.sqrt(2)
    for delta, drive, omega in ((0.7, 1.3, 2.0), (0.0, 5.0, -1.0), (-2.0, 0.1, 0.4)):
        h = build_hamiltonian(AtomPairConfig(delta=delta, drive=drive), omega)
        assert np.abs(h @ ket_a + omega * ket_a).max() < 1e-12


def test_resonant_bell_state_has_zero_energy():
    psi = np.zeros(4, dtype=complex)
    psi[0], psi[3] = 1.0, -1.0
    psi /= math.sqrt(2)
    h = build_hamiltonian(AtomPairConfig(delta=0.0, drive=1.7), 0.9)
    assert np.abs(h @ psi).max() < 1e-12


def test_hamiltonian_exactly_hermitian():
    h = build_hamiltonian(AtomPairConfig(delta=0.3, drive=0.9), 1.1)
    assert np.array_equal(h, h.conj().T)


# ------------------------------------------------------- effective Hamiltonian


def test_effective_hamiltonian_diagonal_at_zero_drive():
    cfg = AtomPairConfig(delta=0.4, drive=0.0)
    c = Couplings(omega=1.2, gamma12=0.3)
    heff = build_effective_hamiltonian(cfg, c)
    off = heff - np.diag(np.diag(heff))
    assert np.abs(off).max() == 0.0
    assert np.allclose(
        np.diag(heff),
        [0.4 - 1j, 1.2 - 0.5j * 1.3, -0.4, -1.2 - 0.5j * 0.7],
    )


def test_effective_hamiltonian_undamped_singlet_at_full_cross_decay():
    cfg = AtomPairConfig(delta=0.4, drive=2.0)
    heff = build_effective_hamiltonian(cfg, Couplings(omega=1.2, gamma12=1.0))
    assert heff[3, 3] == -1.2 + 0j


def test_effective_hamiltonian_hermitian_part_is_rotated_hamiltonian():
    # decay terms are purely imaginary on the diagonal, so the Hermitian
    # part must equal the coherent Hamiltonian rotated into the coupled basis
    cfg = AtomPairConfig(delta=0.8, drive=1.6)
    c = Couplings(omega=-0.7, gamma12=0.25)
    heff = build_effective_hamiltonian(cfg, c)
    herm = (heff + heff.conj().T) / 2
    rotated = TO_COUPLED @ build_hamiltonian(cfg, c.omega) @ TO_COUPLED.conj().T
    assert np.abs(herm - rotated).max() < 1e-12


def test_effective_hamiltonian_singlet_row_column_zero():
    rng = np.random.default_rng(5)
    for _ in range(10):
        cfg = AtomPairConfig(delta=float(rng.normal()), drive=float(rng.uniform(0, 3)))
        c = Couplings(omega=float(rng.normal()), gamma12=float(rng.uniform(-1, 1)))
        heff = build_effective_hamiltonian(cfg, c)
        assert np.abs(heff[3, :3]).max() == 0.0
        assert np.abs(heff[:3, 3]).max() == 0.0


# ------------------------------------------------------- tau and geometry


def test_tau_definitional_inversion():
    alpha = 1.0 / 137.0
    k0r = 1.7
    q = 3.0 / (4 * math.pi * alpha) / k0r**3  # so that q * nbar_v * k0r^3 hits 1
    assert abs(tau_of_geometry(k0r, q, 1.0) - 1.0) < 1e-12


def test_tau_reference_point():
    tau = tau_of_geometry(7.083e-3, 1e6, 10.0)
    assert abs(tau - 9.204076771136908) < 1e-9  # frozen direct evaluation
    assert abs(tau - 9.21) < 0.01


def test_tau_halves_when_photon_number_doubles():
    t1 = tau_of_geometry(0.01, 1e6, 10.0)
    t2 = tau_of_geometry(0.01, 1e6, 20.0)
    assert abs(t2 - t1 / 2) < 1e-12 * t1


def test_k0r_for_tau_round_trip():
    for tau, q, nv in ((9.21, 1e6, 10.0), (2.0, 1e5, 3.0), (50.0, 1e7, 123.0)):
        k = k0r_for_tau(tau, q, nv)
        assert abs(tau_of_geometry(k, q, nv) - tau) < 1e-12 * tau


def test_k0r_for_tau_reference_point():
    assert abs(k0r_for_tau(9.21, 1e6, 10.0) - 7.08e-3) < 1e-5


def test_k0r_cube_root_scaling():
    k1 = k0r_for_tau(9.21, 1e6, 10.0)
    k2 = k0r_for_tau(9.21, 1e6, 10000.0)
    assert abs(k2 - k1 / 10.0) < 1e-15


def test_geometry_helpers_reject_nonpositive():
    with pytest.raises(InvalidGeometry):
        tau_of_geometry(0.0, 1e6, 10.0)
    with pytest.raises(InvalidGeometry):
        k0r_for_tau(9.21, -1e6, 10.0)


# ------------------------------------------------------- config validation


def test_config_validation():
    with pytest.raises(ValueError):
        AtomPairConfig(drive=-0.1)
    with pytest.raises(InvalidGeometry):
        AtomPairConfig(k0r=0.0)
    with pytest.raises(ValueError):
        AtomPairConfig(mu_dot_rhat=1.5)
    with pytest.raises(ValueError):
        AtomPairConfig(gamma=2.0)


def test_config_derived_couplings():
    cfg = AtomPairConfig(delta=0.0, drive=1.0, k0r=math.pi, mu_dot_rhat=0.0)
    assert abs(omega_dipole(cfg) - 0.75 * (1 / math.pi - 1 / math.pi**3)) < 1e-14
    assert abs(gamma_cross(cfg) - 3.0 / math.pi**2) < 1e-14
