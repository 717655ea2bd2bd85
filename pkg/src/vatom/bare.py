"""Bare-basis density-matrix dynamics of the driven V system.

Level order is (a, b, c): ground state |a>, coupling-laser excited state
|b>, probe/pump excited state |c>. Detunings are fully supported here.
"""
from __future__ import annotations

import numpy as np

from .density import BARE, DensityMatrix, Trajectory, require_basis
from .integrate import StepControl, integrate_generator, stationary_state
from .params import SystemParams

__all__ = ["bare_rhs", "bare_rhs_matrix", "integrate_bare", "bare_steady_state"]


def bare_rhs_matrix(m: np.ndarray, p: SystemParams) -> np.ndarray:
    """d(rho)/dt for an arbitrary 3x3 complex matrix in the bare basis.

    Upper and lower triangles carry independent (mutually conjugate)
    equations so the generator is linear on all of C^{3x3}, not just on
    Hermitian matrices.
    """
    o, g, lam = p.omega, p.g_probe, p.lambda_pump
    gb, gc = p.gamma_b, p.gamma_c
    d1, d2 = p.delta1, p.delta2
    raa, rab, rac = m[0, 0], m[0, 1], m[0, 2]
    rba, rbb, rbc = m[1, 0], m[1, 1], m[1, 2]
    rca, rcb, rcc = m[2, 0], m[2, 1], m[2, 2]

    daa = -lam * raa + (lam + gc) * rcc + gb * rbb + 1j * o * (rba - rab) + 1j * g * (rca - rac)
    dbb = -gb * rbb + 1j * o * (rab - rba)
    dcc = lam * raa - (lam + gc) * rcc + 1j * g * (rac - rca)
    dab = -(0.5 * (lam + gb) + 1j * d1) * rab + 1j * o * (rbb - raa) + 1j * g * rcb
    dac = -(0.5 * (lam + gc) + 1j * d2) * rac + 1j * g * (rcc - raa) + 1j * o * rbc
    dbc = -(0.5 * (lam + gb + gc) + 1j * (d2 - d1)) * rbc + 1j * o * rac - 1j * g * rba
    dba = -(0.5 * (lam + gb) - 1j * d1) * rba - 1j * o * (rbb - raa) - 1j * g * rbc
    dca = -(0.5 * (lam + gc) - 1j * d2) * rca - 1j * g * (rcc - raa) - 1j * o * rcb
    dcb = -(0.5 * (lam + gb + gc) - 1j * (d2 - d1)) * rcb - 1j * o * rca + 1j * g * rab

    return np.array([[daa, dab, dac],
                     [dba, dbb, dbc],
                     [dca, dcb, dcc]])


def bare_rhs(rho: DensityMatrix, p: SystemParams) -> np.ndarray:
    """Right-hand side of the bare-basis equations of motion."""
    require_basis(rho, BARE, "bare_rhs")
    return bare_rhs_matrix(rho.matrix, p)


def integrate_bare(rho0: DensityMatrix, p: SystemParams, t_end: float,
                   ctrl: StepControl = StepControl(), n_samples: int = 601) -> Trajectory:
    require_basis(rho0, BARE, "integrate_bare")
    rho0.validate()
    times, states = integrate_generator(lambda m: bare_rhs_matrix(m, p),
                                        rho0.matrix, t_end, ctrl, n_samples)
    meta = {"integrator": "rk4-fixed" if ctrl.fixed_dt else "dop853",
            "atol": ctrl.atol, "rtol": ctrl.rtol, "fixed_dt": ctrl.fixed_dt}
    return Trajectory(BARE, times, states, p, meta)


def bare_steady_state(p: SystemParams) -> DensityMatrix:
    """Exact stationary state, from the null space of the generator with
    the unit-trace constraint appended."""
    rho = stationary_state(lambda m: bare_rhs_matrix(m, p))
    return DensityMatrix(BARE, rho)
