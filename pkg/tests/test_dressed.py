import numpy as np
import pytest

from vatom.bare import bare_rhs_matrix, integrate_bare
from vatom.density import BARE, DRESSED, DensityMatrix
from vatom.dressed import (dressed_rhs_matrix, dressed_steady_state,
                           integrate_dressed)
from vatom.integrate import StepControl
from vatom.params import SystemParams, derive_rates
from vatom.transform import build_dressed_basis, to_dressed


def random_density(rng):
    a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    rho = a @ a.conj().T
    return rho / rho.trace()


def random_params(rng):
    return SystemParams(omega=rng.uniform(1.0, 40.0),
                        g_probe=rng.uniform(0.01, 3.0),
                        gamma_b=rng.uniform(0.1, 3.0),
                        lambda_pump=rng.uniform(0.0, 5.0))


def test_generator_is_rotated_bare_generator():
    # the defining property: for any matrix m, the dressed time derivative
    # equals the rotation of the bare derivative of the rotated-back matrix
    rng = np.random.default_rng(8)
    for _ in range(30):
        p = random_params(rng)
        rates = derive_rates(p)
        t = build_dressed_basis(p).t_matrix
        m = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        direct = dressed_rhs_matrix(m, rates)
        rotated = t @ bare_rhs_matrix(t.T @ m @ t, p) @ t.T
        scale = max(1.0, np.abs(rotated).max())
        assert np.abs(direct - rotated).max() <= 1e-11 * scale


def test_rhs_is_traceless_on_random_matrices():
    rng = np.random.default_rng(9)
    rates = derive_rates(SystemParams())
    for _ in range(100):
        m = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        d = dressed_rhs_matrix(m, rates)
        assert abs(d.trace()) <= 1e-12 * max(1.0, np.abs(m).max())


def test_trajectory_trace_and_hermiticity():
    rng = np.random.default_rng(10)
    p = SystemParams()
    rho0 = DensityMatrix(DRESSED, random_density(rng))
    traj = integrate_dressed(rho0, derive_rates(p), 30.0, params=p)
    assert traj.trace_drift <= 1e-10
    for m in traj.states:
        assert np.abs(m - m.conj().T).max() <= 1e-12


def test_basis_equivalence_of_trajectories():
    # integrating in either basis and rotating gives the same evolution
    rng = np.random.default_rng(11)
    p = SystemParams()
    basis = build_dressed_basis(p)
    ctrl = StepControl(atol=1e-12, rtol=1e-10)
    for _ in range(3):
        rho_b = DensityMatrix(BARE, random_density(rng))
        rho_d = to_dressed(rho_b, basis)
        tb = integrate_bare(rho_b, p, 30.0, ctrl, 121)
        td = integrate_dressed(rho_d, derive_rates(p), 30.0, ctrl, 121, params=p)
        t = basis.t_matrix
        rotated = np.einsum("ij,njk,lk->nil", t, tb.states, t)
        assert np.abs(rotated - td.states).max() <= 1e-6


def test_steady_state_annihilates_generator():
    rates = derive_rates(SystemParams())
    rho = dressed_steady_state(rates)
    assert abs(rho.matrix.trace() - 1.0) <= 1e-12
    assert np.abs(dressed_rhs_matrix(rho.matrix, rates)).max() <= 1e-9


def test_steady_state_matches_long_integration():
    p = SystemParams()
    rates = derive_rates(p)
    rho = dressed_steady_state(rates)
    rho0 = to_dressed(DensityMatrix.ground_state(), build_dressed_basis(p))
    traj = integrate_dressed(rho0, rates, 60.0, params=p)
    assert np.abs(traj.final_state.matrix - rho.matrix).max() <= 1e-7


def test_reference_steady_populations():
    # default operating point: diagonal close to (3/11, 4/11, 4/11)
    rho = dressed_steady_state(derive_rates(SystemParams()))
    pops = rho.populations
    assert pops[0] == pytest.approx(3.0 / 11.0, abs=0.01)
    assert pops[1] == pytest.approx(4.0 / 11.0, abs=0.01)
    assert pops[2] == pytest.approx(pops[1], abs=1e-9)
