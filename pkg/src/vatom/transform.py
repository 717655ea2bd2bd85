"""Dressed eigenbasis at exact two-photon resonance and basis transforms.

The dressed states (alpha, beta, gamma) diagonalize the resonant
interaction Hamiltonian with energies (0, +R, -R). Their bare-basis
components are fixed in closed form rather than taken from a numerical
eigensolver, which pins the sign and ordering conventions; a numerical
diagonalization is kept only as a test oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .density import BARE, DRESSED, DensityMatrix, require_basis
from .params import SystemParams

__all__ = [
    "DressedBasis",
    "interaction_hamiltonian",
    "build_dressed_basis",
    "to_dressed",
    "to_bare",
]


@dataclass(frozen=True)
class DressedBasis:
    """Orthogonal rotation from the bare to the dressed basis.

    t_matrix rows are <alpha|, <beta|, <gamma| in bare order (a, b, c);
    energies are (E_alpha, E_beta, E_gamma) = (0, +R, -R).
    """

    t_matrix: np.ndarray
    energies: tuple[float, float, float]

    @property
    def r(self) -> float:
        return self.energies[1]


def interaction_hamiltonian(p: SystemParams) -> np.ndarray:
    """Interaction-picture Hamiltonian in the bare basis (general detuning)."""
    return np.array([[0.0, -p.omega, -p.g_probe],
                     [-p.omega, -p.delta1, 0.0],
                     [-p.g_probe, 0.0, -p.delta2]])


def build_dressed_basis(p: SystemParams) -> DressedBasis:
    """Construct the rotation matrix T and dressed energies.

    Only defined at exact resonance (delta1 = delta2 = 0) and with at
    least one field on (R > 0).
    """
    if not p.on_resonance:
        raise ValueError(
            f"dressed basis requires delta1 = delta2 = 0, got ({p.delta1}, {p.delta2})")
    r = p.r
    if r == 0.0:
        raise ValueError("R = 0: no field present, dressed basis undefined")
    s2 = math.sqrt(2.0)
    t = np.array([
        [0.0, -p.g_probe / r, p.omega / r],
        [-1.0 / s2, p.omega / (s2 * r), p.g_probe / (s2 * r)],
        [1.0 / s2, p.omega / (s2 * r), p.g_probe / (s2 * r)],
    ])
    return DressedBasis(t_matrix=t, energies=(0.0, r, -r))


def to_dressed(rho: DensityMatrix, basis: DressedBasis) -> DensityMatrix:
    """rho_dressed = T rho_bare T^T (orthogonal similarity)."""
    require_basis(rho, BARE, "to_dressed")
    t = basis.t_matrix
    return DensityMatrix(DRESSED, t @ rho.matrix @ t.T)


def to_bare(rho: DensityMatrix, basis: DressedBasis) -> DensityMatrix:
    """Exact inverse of to_dressed."""
    require_basis(rho, DRESSED, "to_bare")
    t = basis.t_matrix
    return DensityMatrix(BARE, t.T @ rho.matrix @ t)
