"""Density matrices with a basis tag, and sampled trajectories."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .params import SystemParams

__all__ = [
    "BARE",
    "DRESSED",
    "BasisMismatchError",
    "StateValidationError",
    "DensityMatrix",
    "Trajectory",
]

BARE = "bare"
DRESSED = "dressed"

# Level labels in matrix index order, per basis.
LEVEL_LABELS = {BARE: ("a", "b", "c"), DRESSED: ("alpha", "beta", "gamma")}

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-10
DIAG_EPS = 1e-8


class BasisMismatchError(ValueError):
    """Operation received a density matrix in the wrong basis."""


class StateValidationError(ValueError):
    """Matrix is not a physically valid density matrix."""


@dataclass
class DensityMatrix:
    """3x3 complex Hermitian unit-trace matrix in a declared basis."""

    basis: str
    matrix: np.ndarray

    def __post_init__(self):
        if self.basis not in (BARE, DRESSED):
            raise ValueError(f"unknown basis tag {self.basis!r}")
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (3, 3):
            raise ValueError(f"expected 3x3 matrix, got shape {m.shape}")
        self.matrix = m.copy()

    @classmethod
    def from_populations(cls, basis: str, populations) -> "DensityMatrix":
        return cls(basis, np.diag(np.asarray(populations, dtype=complex)))

    @classmethod
    def ground_state(cls) -> "DensityMatrix":
        """Bare atom in |a>."""
        return cls.from_populations(BARE, (1.0, 0.0, 0.0))

    @classmethod
    def maximally_mixed(cls, basis: str) -> "DensityMatrix":
        return cls(basis, np.eye(3) / 3.0)

    @property
    def populations(self) -> np.ndarray:
        return self.matrix.diagonal().real.copy()

    def validate(self, hermiticity_tol: float = HERMITICITY_TOL,
                 trace_tol: float = TRACE_TOL, diag_eps: float = DIAG_EPS) -> "DensityMatrix":
        m = self.matrix
        herm_err = np.abs(m - m.conj().T).max()
        if herm_err > hermiticity_tol:
            raise StateValidationError(f"not Hermitian: max |rho - rho^dag| = {herm_err:.3e}")
        trace_err = abs(m.trace() - 1.0)
        if trace_err > trace_tol:
            raise StateValidationError(f"trace deviates from 1 by {trace_err:.3e}")
        diag = m.diagonal()
        if np.abs(diag.imag).max() > hermiticity_tol:
            raise StateValidationError("diagonal entries are not real")
        if diag.real.min() < -diag_eps or diag.real.max() > 1.0 + diag_eps:
            raise StateValidationError(f"populations outside [0, 1]: {diag.real}")
        return self

    def hermitized(self) -> "DensityMatrix":
        """Average away anti-Hermitian roundoff; trace is left untouched."""
        return DensityMatrix(self.basis, 0.5 * (self.matrix + self.matrix.conj().T))


def require_basis(rho: DensityMatrix, basis: str, what: str = "operation") -> None:
    if rho.basis != basis:
        raise BasisMismatchError(f"{what} expects a {basis}-basis matrix, got {rho.basis}")


def _csv_columns(basis: str) -> list[str]:
    la, lb, lc = LEVEL_LABELS[basis]
    if basis == BARE:
        coh = [f"{p}_{i}{j}" for (i, j) in (("a", "b"), ("a", "c"), ("b", "c")) for p in ("re", "im")]
        pops = [f"rho_{i}{i}" for i in (la, lb, lc)]
    else:
        pairs = ((la, lb), (la, lc), (lb, lc))
        coh = [f"{p}_{i}_{j}" for (i, j) in pairs for p in ("re", "im")]
        pops = [f"rho_{i}_{i}" for i in (la, lb, lc)]
    return ["t"] + coh + pops


@dataclass
class Trajectory:
    """Time-ordered density-matrix samples from one integration run."""

    basis: str
    times: np.ndarray
    states: np.ndarray  # shape (n, 3, 3), complex
    params: SystemParams
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        self.states = np.asarray(self.states, dtype=complex)
        if self.states.shape != (self.times.size, 3, 3):
            raise ValueError("states shape does not match times")
        if self.times.size > 1 and not np.all(np.diff(self.times) > 0):
            raise ValueError("sample times must be strictly increasing")

    def __len__(self) -> int:
        return self.times.size

    def state(self, k: int) -> DensityMatrix:
        return DensityMatrix(self.basis, self.states[k])

    @property
    def final_state(self) -> DensityMatrix:
        return self.state(-1)

    def element(self, i: int, j: int) -> np.ndarray:
        """Time series of one matrix element."""
        return self.states[:, i, j].copy()

    @property
    def trace_drift(self) -> float:
        return float(np.abs(self.states.trace(axis1=1, axis2=2) - 1.0).max())

    def to_csv(self, path: str | Path) -> None:
        cols = _csv_columns(self.basis)
        lines = ["# driven V-system trajectory; basis=%s; times in 1/gamma_c, rates in gamma_c" % self.basis,
                 ",".join(cols)]
        for k, t in enumerate(self.times):
            m = self.states[k]
            row = [t,
                   m[0, 1].real, m[0, 1].imag,
                   m[0, 2].real, m[0, 2].imag,
                   m[1, 2].real, m[1, 2].imag,
                   m[0, 0].real, m[1, 1].real, m[2, 2].real]
            lines.append(",".join(f"{x:.12e}" for x in row))
        Path(path).write_text("\n".join(lines) + "\n")
