"""Time integration and stationary-state solving for 3x3 linear generators."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import solve_ivp

__all__ = [
    "StepControl",
    "IntegrationError",
    "DegenerateSteadyStateError",
    "integrate_generator",
    "stationary_state",
]

MatrixRHS = Callable[[np.ndarray], np.ndarray]


class IntegrationError(RuntimeError):
    """Integrator failed to reach t_end."""


class DegenerateSteadyStateError(RuntimeError):
    """The generator has more than one stationary state."""

    def __init__(self, null_dim: int):
        super().__init__(f"stationary state is not unique: null-space dimension {null_dim}")
        self.null_dim = null_dim


@dataclass(frozen=True)
class StepControl:
    """Step-size control: adaptive tolerances, or a fixed step for
    bit-reproducible output when fixed_dt is set."""

    atol: float = 1e-10
    rtol: float = 1e-8
    fixed_dt: float | None = None


def _hermitize(states: np.ndarray) -> np.ndarray:
    return 0.5 * (states + states.conj().transpose(0, 2, 1))


def integrate_generator(rhs: MatrixRHS, rho0: np.ndarray, t_end: float,
                        ctrl: StepControl = StepControl(),
                        n_samples: int = 601) -> tuple[np.ndarray, np.ndarray]:
    """Integrate d(rho)/dt = rhs(rho) from t=0 to t_end.

    Returns (times, states) with n_samples evenly spaced samples including
    both endpoints. Hermiticity is restored by averaging rho with its
    adjoint at output; the trace is deliberately not renormalized so drift
    stays observable.
    """
    if t_end <= 0:
        raise ValueError("t_end must be positive")
    if n_samples < 2:
        raise ValueError("need at least two samples")
    t_eval = np.linspace(0.0, t_end, n_samples)
    rho0 = np.asarray(rho0, dtype=complex)

    if ctrl.fixed_dt is not None:
        return t_eval, _hermitize(_fixed_rk4(rhs, rho0, t_eval, ctrl.fixed_dt))

    def fun(_t, y):
        return rhs(y.reshape(3, 3)).ravel()

    sol = solve_ivp(fun, (0.0, t_end), rho0.ravel(), method="DOP853",
                    t_eval=t_eval, rtol=ctrl.rtol, atol=ctrl.atol)
    if not sol.success:
        reached = sol.t[-1] if sol.t.size else 0.0
        raise IntegrationError(f"integration failed at t = {reached:.6g}: {sol.message}")
    states = sol.y.T.reshape(-1, 3, 3)
    return t_eval, _hermitize(states)


def _fixed_rk4(rhs: MatrixRHS, rho0: np.ndarray, t_eval: np.ndarray, dt: float) -> np.ndarray:
    if dt <= 0:
        raise ValueError("fixed_dt must be positive")
    out = np.empty((t_eval.size, 3, 3), dtype=complex)
    out[0] = rho0
    rho = rho0
    t = 0.0
    for k in range(1, t_eval.size):
        target = t_eval[k]
        while t < target - 1e-12 * max(1.0, target):
            h = min(dt, target - t)
            k1 = rhs(rho)
            k2 = rhs(rho + 0.5 * h * k1)
            k3 = rhs(rho + 0.5 * h * k2)
            k4 = rhs(rho + h * k3)
            rho = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            t += h
        out[k] = rho
    return out


# Real 9-vector layout for Hermitian matrices:
# (rho_00, rho_11, rho_22, Re rho_01, Im rho_01, Re rho_02, Im rho_02, Re rho_12, Im rho_12)

def _vec_to_herm(v: np.ndarray) -> np.ndarray:
    m = np.zeros((3, 3), dtype=complex)
    m[0, 0], m[1, 1], m[2, 2] = v[0], v[1], v[2]
    m[0, 1] = v[3] + 1j * v[4]
    m[0, 2] = v[5] + 1j * v[6]
    m[1, 2] = v[7] + 1j * v[8]
    m[1, 0] = np.conj(m[0, 1])
    m[2, 0] = np.conj(m[0, 2])
    m[2, 1] = np.conj(m[1, 2])
    return m


def _herm_to_vec(m: np.ndarray) -> np.ndarray:
    return np.array([m[0, 0].real, m[1, 1].real, m[2, 2].real,
                     m[0, 1].real, m[0, 1].imag,
                     m[0, 2].real, m[0, 2].imag,
                     m[1, 2].real, m[1, 2].imag])


def stationary_state(rhs: MatrixRHS, null_tol: float = 1e-9) -> np.ndarray:
    """Unique unit-trace stationary matrix of a trace-free linear generator.

    The generator is assembled on the 8-parameter Hermitian representation
    (9 real components minus the trace constraint, which is appended as an
    extra row) and solved by least squares, avoiding the spurious null
    vector that the trace degeneracy would otherwise contribute.
    """
    gen = np.empty((9, 9))
    for k in range(9):
        e = np.zeros(9)
        e[k] = 1.0
        gen[:, k] = _herm_to_vec(rhs(_vec_to_herm(e)))

    sv = np.linalg.svd(gen, compute_uv=False)
    null_dim = int(np.sum(sv <= null_tol * max(sv[0], 1.0)))
    if null_dim != 1:
        raise DegenerateSteadyStateError(null_dim)

    trace_row = np.zeros(9)
    trace_row[:3] = 1.0
    system = np.vstack([gen, trace_row])
    target = np.zeros(10)
    target[9] = 1.0
    v, *_ = np.linalg.lstsq(system, target, rcond=None)
    return _vec_to_herm(v)
