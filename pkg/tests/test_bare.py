import numpy as np
import pytest

from vatom.bare import bare_rhs_matrix, bare_steady_state, integrate_bare
from vatom.density import BARE, DensityMatrix
from vatom.integrate import StepControl
from vatom.params import SystemParams


def random_density(rng):
    a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    rho = a @ a.conj().T
    return rho / rho.trace()


def test_rhs_is_traceless_on_random_matrices():
    rng = np.random.default_rng(1)
    p = SystemParams(delta1=0.3, delta2=-0.7)
    for _ in range(100):
        m = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        d = bare_rhs_matrix(m, p)
        assert abs(d.trace()) <= 1e-12 * max(1.0, np.abs(m).max())


def test_rhs_preserves_hermiticity():
    rng = np.random.default_rng(2)
    p = SystemParams()
    for _ in range(20):
        rho = random_density(rng)
        d = bare_rhs_matrix(rho, p)
        assert np.abs(d - d.conj().T).max() <= 1e-12


def test_rhs_is_linear():
    rng = np.random.default_rng(3)
    p = SystemParams()
    m1 = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    m2 = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    lhs = bare_rhs_matrix(2.0 * m1 - 1.5j * m2, p)
    rhs = 2.0 * bare_rhs_matrix(m1, p) - 1.5j * bare_rhs_matrix(m2, p)
    assert np.abs(lhs - rhs).max() <= 1e-12


def test_trajectory_trace_and_hermiticity():
    rng = np.random.default_rng(4)
    p = SystemParams()
    traj = integrate_bare(DensityMatrix(BARE, random_density(rng)), p, 30.0)
    assert traj.trace_drift <= 1e-10
    for m in traj.states:
        assert np.abs(m - m.conj().T).max() <= 1e-12


def test_zero_field_pure_decay():
    # no fields, no pump: |b> decays at gamma_b straight to the ground state
    p = SystemParams(omega=0.0, g_probe=0.0, lambda_pump=0.0)
    rho0 = DensityMatrix.from_populations(BARE, (0.0, 1.0, 0.0))
    traj = integrate_bare(rho0, p, 5.0, n_samples=51)
    expected_bb = np.exp(-p.gamma_b * traj.times)
    assert np.abs(traj.states[:, 1, 1].real - expected_bb).max() <= 1e-8
    assert np.abs(traj.states[:, 0, 0].real - (1.0 - expected_bb)).max() <= 1e-8


def test_detuned_coherence_rotation():
    # field-free coherence decays at (lambda+gamma_b)/2 and rotates at delta1
    p = SystemParams(omega=0.0, g_probe=0.0, lambda_pump=0.5, delta1=2.0)
    rho0 = np.array([[0.5, 0.3, 0.0], [0.3, 0.5, 0.0], [0.0, 0.0, 0.0]], dtype=complex)
    traj = integrate_bare(DensityMatrix(BARE, rho0), p, 2.0, n_samples=41)
    expected = 0.3 * np.exp(-(0.5 * (0.5 + 2.0) + 1j * 2.0) * traj.times)
    assert np.abs(traj.element(0, 1) - expected).max() <= 1e-8


def test_steady_state_annihilates_generator():
    p = SystemParams()
    rho = bare_steady_state(p)
    assert abs(rho.matrix.trace() - 1.0) <= 1e-12
    assert np.abs(bare_rhs_matrix(rho.matrix, p)).max() <= 1e-9


def test_steady_state_matches_long_integration():
    p = SystemParams(delta1=0.2, delta2=-0.1)
    rho = bare_steady_state(p)
    traj = integrate_bare(DensityMatrix.ground_state(), p, 60.0)
    assert np.abs(traj.final_state.matrix - rho.matrix).max() <= 1e-7


def test_fixed_step_matches_adaptive():
    p = SystemParams()
    rho0 = DensityMatrix.ground_state()
    adaptive = integrate_bare(rho0, p, 2.0, n_samples=21)
    fixed = integrate_bare(rho0, p, 2.0, StepControl(fixed_dt=1e-3), n_samples=21)
    assert np.abs(adaptive.states - fixed.states).max() <= 1e-7
