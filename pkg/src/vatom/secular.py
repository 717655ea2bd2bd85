"""Closed-form solutions in the secular approximation.

Valid when the dressed-level splitting R is large compared with every
relaxation rate, so population-coherence couplings can be dropped. All
functions here are pure scalar formulas, fully independent of the ODE
modules, so numeric cross-checks are genuinely two-route.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .density import BARE, DRESSED, DensityMatrix, require_basis
from .params import DressedRates, SystemParams, derive_rates
from .transform import build_dressed_basis, to_bare

__all__ = [
    "SecularModeConstants",
    "population_transient",
    "population_steady",
    "strong_field_population_steady",
    "fit_mode_constants",
    "coherence_transient",
    "coherence_steady",
    "strong_field_im_coherences",
    "improved_population_transient",
    "bare_strong_field_steady",
    "STRONG_FIELD_RATIO",
]

# omega/g_probe ratio below which the strong-field closed forms get a warning
STRONG_FIELD_RATIO = 10.0


class DegenerateRatesError(ValueError):
    """A closed-form denominator vanished for these rates."""


def _warn_if_not_strong_field(p: SystemParams, what: str) -> None:
    if p.omega < STRONG_FIELD_RATIO * p.g_probe:
        warnings.warn(
            f"{what}: omega = {p.omega} < {STRONG_FIELD_RATIO} * g_probe = "
            f"{STRONG_FIELD_RATIO * p.g_probe}; outside the strong-coupling regime",
            stacklevel=3)


# -- populations -------------------------------------------------------------

def population_steady(rates: DressedRates) -> tuple[float, float, float]:
    """Secular steady-state populations (rho_aa, rho_bb, rho_gg).

    The beta and gamma levels share one value; the three sum to 1.
    """
    denom = 2.0 * rates.gamma_alpha + 3.0 * rates.lambda_prime
    if denom <= 0.0:
        raise DegenerateRatesError("2*Gamma_alpha + 3*Lambda' must be positive")
    p_alpha = rates.lambda_prime / denom
    p_beta = (rates.gamma_alpha + rates.lambda_prime) / denom
    return p_alpha, p_beta, p_beta


def _population_decay_rates(rates: DressedRates) -> tuple[float, float]:
    """(alpha relaxation rate, beta/gamma difference relaxation rate)."""
    k1 = rates.gamma_alpha + 1.5 * rates.lambda_prime
    k2 = 2.0 * rates.gamma_beta + rates.lambda_pump - 0.5 * rates.lambda_prime
    return k1, k2


def population_transient(t, diag0, rates: DressedRates):
    """Secular population evolution from initial diagonals diag0.

    Returns (rho_aa(t), rho_bb(t), rho_gg(t)); the three sum to 1 at
    every time. Accepts scalar or array t.
    """
    t = np.asarray(t, dtype=float)
    p0a, p0b, p0g = (float(x) for x in diag0)
    sa, sb, sg = population_steady(rates)
    k1, k2 = _population_decay_rates(rates)
    e1 = np.exp(-k1 * t)
    e2 = np.exp(-k2 * t)
    da = p0a - sa
    db = p0b - sb
    p_a = sa + da * e1
    p_b = sb + (db + 0.5 * da) * e2 - 0.5 * da * e1
    p_g = sg - (db + 0.5 * da) * e2 - 0.5 * da * e1
    return p_a, p_b, p_g


def strong_field_population_steady(p: SystemParams) -> tuple[float, float, float]:
    """Steady populations in the strong-coupling limit omega >> g_probe."""
    _warn_if_not_strong_field(p, "strong_field_population_steady")
    denom = 2.0 * p.gamma_c + 3.0 * p.lambda_pump
    p_alpha = p.lambda_pump / denom
    p_beta = (p.gamma_c + p.lambda_pump) / denom
    return p_alpha, p_beta, p_beta


# -- coherences --------------------------------------------------------------

@dataclass(frozen=True)
class SecularModeConstants:
    """Complex amplitudes of the four coherence modes.

    a_const, b_const multiply the free alpha-beta / alpha-gamma modes at
    frequencies +R / -R; c_const, d_const multiply the two-photon modes at
    -2R / +2R.
    """

    a_const: complex
    b_const: complex
    c_const: complex
    d_const: complex


def _q(rates: DressedRates) -> float:
    """Conjugate-coupling strength in the two-photon coherence pair."""
    return rates.gamma_beta + 0.5 * rates.lambda_pump - 0.5 * rates.lambda_prime


def _mode_coefficients(rates: DressedRates):
    """Mode amplitudes entering the coherence transients.

    Returns (q, kc_ab, kd_ab, kc_ag, kd_ag): the alpha-beta and
    alpha-gamma responses to the two two-photon modes, normalized so the
    c-mode contributes 4iR/q and the d-mode iq/(4R) to rho_beta_gamma.
    """
    rr = rates.r
    q = _q(rates)
    if q == 0.0:
        raise DegenerateRatesError("Gamma_beta + Lambda/2 - Lambda'/2 vanished")
    gt = rates.gamma_tilde
    gtp = rates.gamma_tilde_prime
    dg = rates.gamma_beta_gamma - rates.gamma_alpha_beta
    # response of the +R free coherence to the c (frequency -2R) and
    # d (frequency +2R) two-photon modes
    kc_ab = ((gtp - gt) * q + 4j * gtp * rr) / (q * (dg + 3j * rr))
    kd_ab = ((gtp - gt) + 1j * gtp * q / (4.0 * rr)) / (dg - 1j * rr)
    # response of the -R free coherence
    kc_ag = (gtp * q - 4j * rr * (gt - gtp)) / (q * (dg + 1j * rr))
    kd_ag = (gtp - 1j * (gt - gtp) * q / (4.0 * rr)) / (dg - 3j * rr)
    return q, kc_ab, kd_ab, kc_ag, kd_ag


def fit_mode_constants(rho0: DensityMatrix, rates: DressedRates) -> SecularModeConstants:
    """Solve the mode amplitudes from the initial dressed coherences.

    c and d come from the 2x2 linear system pinning rho_beta_gamma(0) and
    rho_gamma_beta(0); a and b then absorb whatever is left of
    rho_alpha_beta(0) and rho_alpha_gamma(0).
    """
    require_basis(rho0, DRESSED, "fit_mode_constants")
    q, kc_ab, kd_ab, kc_ag, kd_ag = _mode_coefficients(rates)
    rr = rates.r
    m = np.array([[4j * rr / q, 1j * q / (4.0 * rr)],
                  [1.0, 1.0]], dtype=complex)
    if abs(np.linalg.det(m)) < 1e-14:
        raise DegenerateRatesError("two-photon mode matrix is singular")
    rhs = np.array([rho0.matrix[1, 2], rho0.matrix[2, 1]], dtype=complex)
    c, d = np.linalg.solve(m, rhs)
    a = rho0.matrix[0, 1] - c * kc_ab - d * kd_ab
    b = rho0.matrix[0, 2] - c * kc_ag - d * kd_ag
    return SecularModeConstants(a_const=complex(a), b_const=complex(b),
                                c_const=complex(c), d_const=complex(d))


def coherence_transient(t, constants: SecularModeConstants, rates: DressedRates):
    """Secular coherence evolution (rho_alpha_beta, rho_alpha_gamma,
    rho_beta_gamma)(t) from fitted mode constants.

    The two-photon coherence is a near-pure sinusoid at 2R; all three
    decay to zero, which is the known deficiency of dropping the
    population source terms.
    """
    t = np.asarray(t, dtype=float)
    q, kc_ab, kd_ab, kc_ag, kd_ag = _mode_coefficients(rates)
    rr = rates.r
    gab = rates.gamma_alpha_beta
    gbg = rates.gamma_beta_gamma
    e_free_p = np.exp(-(gab - 1j * rr) * t)
    e_free_m = np.exp(-(gab + 1j * rr) * t)
    e_c = np.exp(-(gbg + 2j * rr) * t)
    e_d = np.exp(-(gbg - 2j * rr) * t)
    c, d = constants.c_const, constants.d_const
    r_ab = constants.a_const * e_free_p + c * kc_ab * e_c + d * kd_ab * e_d
    r_ag = constants.b_const * e_free_m + c * kc_ag * e_c + d * kd_ag * e_d
    r_bg = c * (4j * rr / q) * e_c + d * (1j * q / (4.0 * rr)) * e_d
    return r_ab, r_ag, r_bg


def coherence_steady(rates: DressedRates, include_two_photon_feed: bool = True):
    """Steady-state coherences (rho_alpha_beta, rho_alpha_gamma,
    rho_beta_gamma); rho_alpha_gamma is exactly the conjugate of
    rho_alpha_beta.

    include_two_photon_feed=False keeps only the leading population-fed
    term of rho_alpha_beta, the piece the analytic gain conditions are
    built from (the dropped feed is smaller by one power of g_probe/R).
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

    pop_denom = 2.0 * ga + 3.0 * lp
    free_denom = gab * gab + rr * rr
    if pop_denom <= 0.0:
        raise DegenerateRatesError("2*Gamma_alpha + 3*Lambda' must be positive")
    if free_denom == 0.0:
        raise DegenerateRatesError("Gamma_alpha_beta^2 + R^2 vanished")
    q = _q(rates)
    m = 2.0 * gb + lam - 0.5 * lp
    two_photon_denom = gbg * gbg + 4.0 * rr * rr - q * q
    if two_photon_denom == 0.0:
        raise DegenerateRatesError("Gamma_beta_gamma^2 + 4R^2 - (Gamma_beta + Lambda/2 - Lambda'/2)^2 vanished")

    r_bg = (4.0 * gb * (ga + lp) / pop_denom) * (m - 2j * rr) / (q * q - (gbg * gbg + 4.0 * rr * rr))

    pole = (gab + 1j * rr) / free_denom
    r_ab = pole * (ga * gtp + (ga + 2.0 * lp) * (gt + gtp)) / pop_denom
    if include_two_photon_feed:
        r_ab += (4.0 * gb * pole * (ga + lp)
                 * ((2.0 * gtp - gt) * m - 2j * rr * gt)
                 / (pop_denom * two_photon_denom))
    return r_ab, np.conj(r_ab), r_bg


def strong_field_im_coherences(p: SystemParams) -> tuple[float, float, float]:
    """Strong-field imaginary parts (Im rho_alpha_beta, Im rho_gamma_alpha,
    Im rho_beta_gamma) in terms of the original atomic parameters."""
    _warn_if_not_strong_field(p, "strong_field_im_coherences")
    gb, gc, lam = p.gamma_b, p.gamma_c, p.lambda_pump
    denom = 2.0 * gc + 3.0 * lam
    im_ab = (p.g_probe * ((gc + 2.0 * lam) * (gb - gc) + gc * lam)
             / (2.0 * math.sqrt(2.0) * p.omega ** 2 * denom))
    im_bg = gb * (gc + lam) / (2.0 * p.omega * denom)
    return im_ab, im_ab, im_bg


# -- improved population transient -------------------------------------------

def _particular_population(t, rho_bg0: complex, rates: DressedRates):
    """Oscillating particular solution of the alpha population driven by
    the decaying two-photon coherence."""
    t = np.asarray(t, dtype=float)
    k1, _ = _population_decay_rates(rates)
    gbg = rates.gamma_beta_gamma
    rr = rates.r
    shift = (k1 - gbg) - 2j * rr
    if shift == 0:
        raise DegenerateRatesError("population/two-photon resonance (impossible for R > 0)")
    amp = -rates.lambda_prime * rho_bg0 / shift
    return (amp * np.exp(-(gbg + 2j * rr) * t)).real


def improved_population_transient(t, rho0: DensityMatrix, rates: DressedRates):
    """Population transient with the dominant two-photon coherence kept as
    a source term; reduces to the plain secular transient when
    rho_beta_gamma(0) = 0. Returns (rho_aa, rho_bb, rho_gg)(t)."""
    require_basis(rho0, DRESSED, "improved_population_transient")
    t = np.asarray(t, dtype=float)
    sa, sb, sg = population_steady(rates)
    k1, k2 = _population_decay_rates(rates)
    p0a = rho0.matrix[0, 0].real
    p0b = rho0.matrix[1, 1].real
    par0 = _particular_population(0.0, rho0.matrix[1, 2], rates)
    c1 = p0a - sa - par0
    c2 = p0b - sb + 0.5 * (p0a - sa)
    e1 = np.exp(-k1 * t)
    e2 = np.exp(-k2 * t)
    par = _particular_population(t, rho0.matrix[1, 2], rates)
    p_a = sa + c1 * e1 + par
    p_b = sb - 0.5 * c1 * e1 + c2 * e2 - 0.5 * par
    p_g = sg - 0.5 * c1 * e1 - c2 * e2 - 0.5 * par
    return p_a, p_b, p_g


# -- bare-basis strong-field steady state ------------------------------------

def bare_strong_field_steady(p: SystemParams) -> DensityMatrix:
    """Bare-basis steady state in the strong-coupling limit.

    Populations come from rotating the secular dressed steady state back
    to the bare basis, which keeps the trace exactly 1 (see
    PAPER_ERRATA.md for the discrepancy with the published closed form);
    the coherences use the strong-field closed forms directly.
    """
    _warn_if_not_strong_field(p, "bare_strong_field_steady")
    rates = derive_rates(p)
    basis = build_dressed_basis(p)
    sa, sb, sg = population_steady(rates)
    r_ab, r_ag, r_bg = coherence_steady(rates)
    dressed = np.array([[sa, r_ab, r_ag],
                        [np.conj(r_ab), sb, r_bg],
                        [np.conj(r_ag), np.conj(r_bg), sg]])
    pops = to_bare(DensityMatrix(DRESSED, dressed), basis).matrix.diagonal().real

    gb, gc, lam = p.gamma_b, p.gamma_c, p.lambda_pump
    denom = 2.0 * gc + 3.0 * lam
    rho_ab = -1j * gb * (gc + lam) / (2.0 * p.omega * denom)
    rho_ac = 1j * p.g_probe * (lam * (gb - gc) - gc * gc) / (2.0 * p.omega ** 2 * denom)
    rho_bc = p.g_probe * gc / (p.omega * denom)
    m = np.array([[pops[0], rho_ab, rho_ac],
                  [np.conj(rho_ab), pops[1], rho_bc],
                  [np.conj(rho_ac), np.conj(rho_bc), pops[2]]])
    return DensityMatrix(BARE, m)
