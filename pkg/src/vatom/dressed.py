"""Dressed-basis density-matrix dynamics, including all nonsecular couplings.

Level order is (alpha, beta, gamma) with free frequencies 0, +R, -R. The
generator below is the exact orthogonal image of the bare-basis equations
at resonance; the basis-equivalence test in the suite is the arbiter of
every coefficient. The interference rates gamma_tilde / gamma_tilde_prime
couple populations to coherences and vanish with either field.
"""
from __future__ import annotations

import numpy as np

from .density import DRESSED, DensityMatrix, Trajectory, require_basis
from .integrate import StepControl, integrate_generator, stationary_state
from .params import DressedRates, SystemParams

__all__ = ["dressed_rhs", "dressed_rhs_matrix", "integrate_dressed", "dressed_steady_state"]


def dressed_rhs_matrix(m: np.ndarray, rates: DressedRates) -> np.ndarray:
    """d(rho)/dt for an arbitrary 3x3 complex matrix in the dressed basis.

    As in the bare module, upper and lower triangles carry mutually
    conjugate equations so the map is linear on all of C^{3x3} and the
    population closure holds for arbitrary (unphysical) inputs.
    """
    rr = rates.r
    ga = rates.gamma_alpha
    gb = rates.gamma_beta
    gab = rates.gamma_alpha_beta
    gbg = rates.gamma_beta_gamma
    gt = rates.gamma_tilde
    gtp = rates.gamma_tilde_prime
    lp = rates.lambda_prime
    lam = rates.lambda_pump

    aa, ab, ag = m[0, 0], m[0, 1], m[0, 2]
    ba, bb, bg = m[1, 0], m[1, 1], m[1, 2]
    ga_, gb_, gg = m[2, 0], m[2, 1], m[2, 2]

    d_aa = (-(ga + lp) * aa + gt * (ab + ba) + gt * (ag + ga_)
            + 0.5 * lp * bb - 0.5 * lp * (bg + gb_) + 0.5 * lp * gg)
    d_ab = (-(gab - 0.25 * lp - 1j * rr) * ab - gb * ag
            - 1.5 * gtp * bg + (gt - 0.5 * gtp) * gb_
            + gt * aa + (gt + 1.5 * gtp) * bb + 0.5 * gtp * gg)
    d_ag = (-(gab - 0.25 * lp + 1j * rr) * ag - gb * ab
            + (gt - 0.5 * gtp) * bg - 1.5 * gtp * gb_
            + gt * aa + 0.5 * gtp * bb + (gt + 1.5 * gtp) * gg)
    d_bb = (-(gb + 0.25 * lam + 0.25 * lp) * bb + (gb + 0.25 * lam - 0.25 * lp) * gg
            + 0.5 * (ga + lp) * aa
            + 0.5 * gtp * (ab + ba) - (gt + 0.5 * gtp) * (ag + ga_)
            + 0.25 * lp * (bg + gb_))
    d_bg = (-(gbg - 0.25 * (lam - lp) + 2j * rr) * bg - (gb + 0.75 * (lam - lp)) * gb_
            + (gt - 0.5 * gtp) * (ab + ga_) + (2.0 * gt + 0.5 * gtp) * (ba + ag)
            - 0.5 * (ga + lp) * aa - (2.0 * gb - 0.25 * lp) * (bb + gg))
    d_gg = (-(gb + 0.25 * lam + 0.25 * lp) * gg + (gb + 0.25 * lam - 0.25 * lp) * bb
            + 0.5 * (ga + lp) * aa
            - (gt + 0.5 * gtp) * (ab + ba) + 0.5 * gtp * (ag + ga_)
            + 0.25 * lp * (bg + gb_))
    # conjugate equations for the lower triangle
    d_ba = (-(gab - 0.25 * lp + 1j * rr) * ba - gb * ga_
            - 1.5 * gtp * gb_ + (gt - 0.5 * gtp) * bg
            + gt * aa + (gt + 1.5 * gtp) * bb + 0.5 * gtp * gg)
    d_ga = (-(gab - 0.25 * lp - 1j * rr) * ga_ - gb * ba
            + (gt - 0.5 * gtp) * gb_ - 1.5 * gtp * bg
            + gt * aa + 0.5 * gtp * bb + (gt + 1.5 * gtp) * gg)
    d_gb = (-(gbg - 0.25 * (lam - lp) - 2j * rr) * gb_ - (gb + 0.75 * (lam - lp)) * bg
            + (gt - 0.5 * gtp) * (ba + ag) + (2.0 * gt + 0.5 * gtp) * (ab + ga_)
            - 0.5 * (ga + lp) * aa - (2.0 * gb - 0.25 * lp) * (bb + gg))

    return np.array([[d_aa, d_ab, d_ag],
                     [d_ba, d_bb, d_bg],
                     [d_ga, d_gb, d_gg]])


def dressed_rhs(rho: DensityMatrix, rates: DressedRates) -> np.ndarray:
    """Right-hand side of the dressed-basis equations of motion."""
    require_basis(rho, DRESSED, "dressed_rhs")
    return dressed_rhs_matrix(rho.matrix, rates)


def integrate_dressed(rho0: DensityMatrix, rates: DressedRates, t_end: float,
                      ctrl: StepControl = StepControl(), n_samples: int = 601,
                      params: SystemParams | None = None) -> Trajectory:
    require_basis(rho0, DRESSED, "integrate_dressed")
    rho0.validate()
    times, states = integrate_generator(lambda m: dressed_rhs_matrix(m, rates),
                                        rho0.matrix, t_end, ctrl, n_samples)
    meta = {"integrator": "rk4-fixed" if ctrl.fixed_dt else "dop853",
            "atol": ctrl.atol, "rtol": ctrl.rtol, "fixed_dt": ctrl.fixed_dt}
    return Trajectory(DRESSED, times, states, params or SystemParams(), meta)


def dressed_steady_state(rates: DressedRates) -> DensityMatrix:
    """Exact stationary state of the full dressed equations."""
    rho = stationary_state(lambda m: dressed_rhs_matrix(m, rates))
    return DensityMatrix(DRESSED, rho)
