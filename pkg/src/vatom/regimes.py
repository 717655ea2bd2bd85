"""Gain/absorption classification of the optical transitions.

Convention: a transition emitting from upper level j to lower level i is
amplifying when Im rho_ij > 0 and absorbing when Im rho_ij < 0; it is
"inverted" when the upper level holds more population than the lower one.
Crossing those two binary facts gives the four regimes, with NEUTRAL for
interference-free points where the imaginary part is exactly zero.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path

import numpy as np

from .density import BARE, DRESSED, DensityMatrix, require_basis
from .dressed import dressed_steady_state
from .params import SystemParams, derive_rates
from .secular import (STRONG_FIELD_RATIO, bare_strong_field_steady,
                      coherence_steady, population_steady)
from .transform import build_dressed_basis, to_bare

__all__ = [
    "Regime",
    "TransitionReport",
    "RegimeMap",
    "GainCondition",
    "GainConditionReport",
    "classify_steady_state",
    "analytic_steady_states",
    "analytic_gain_conditions",
    "sweep_regimes",
    "CLASSIFY_TOL",
]

CLASSIFY_TOL = 1e-12


class Regime(str, Enum):
    GAIN_WITH_INVERSION = "GAIN_WITH_INVERSION"
    GAIN_WITHOUT_INVERSION = "GAIN_WITHOUT_INVERSION"
    ABSORPTION_WITH_INVERSION = "ABSORPTION_WITH_INVERSION"
    ABSORPTION_WITHOUT_INVERSION = "ABSORPTION_WITHOUT_INVERSION"
    NEUTRAL = "NEUTRAL"

    def __str__(self) -> str:  # plain label in reports and CSV
        return self.value


@dataclass(frozen=True)
class TransitionReport:
    """Classification of one emission line at a steady state."""

    transition: str      # "upper->lower" with level labels
    sideband: str        # carrier-relative frequency label
    im_coherence: float  # Im rho_{lower,upper}; > 0 means gain
    pop_difference: float  # rho_upper - rho_lower
    regime: Regime


# (transition, sideband, basis, (row, col) of the classifying coherence,
#  upper index, lower index). The coherence index pair is ordered
# (lower, upper) so a positive imaginary part means amplification.
_TRANSITIONS = (
    ("beta->alpha", "omega+R", DRESSED, (0, 1), 1, 0),
    ("alpha->gamma", "omega+R", DRESSED, (2, 0), 0, 2),
    ("gamma->alpha", "omega-R", DRESSED, (0, 2), 2, 0),
    ("beta->gamma", "omega+2R", DRESSED, (2, 1), 1, 2),
    ("gamma->beta", "omega-2R", DRESSED, (1, 2), 2, 1),
    ("b->a", "omega_L", BARE, (0, 1), 1, 0),
    ("c->a", "omega_p", BARE, (0, 2), 2, 0),
)


def _regime(im: float, pop_diff: float, tol: float) -> Regime:
    # the tolerance applies to the population difference as well, so that
    # symmetry-forced equal populations (equal to rounding) never read as
    # an inversion
    if im > tol:
        return Regime.GAIN_WITH_INVERSION if pop_diff > tol else Regime.GAIN_WITHOUT_INVERSION
    if im < -tol:
        return Regime.ABSORPTION_WITH_INVERSION if pop_diff > tol else Regime.ABSORPTION_WITHOUT_INVERSION
    return Regime.NEUTRAL


def classify_steady_state(rho_dressed: DensityMatrix, rho_bare: DensityMatrix,
                          tol: float = CLASSIFY_TOL) -> list[TransitionReport]:
    """Classify the five dressed sideband transitions and the two bare
    optical transitions from matched steady states."""
    require_basis(rho_dressed, DRESSED, "classify_steady_state")
    require_basis(rho_bare, BARE, "classify_steady_state")
    reports = []
    for name, sideband, basis, (i, j), upper, lower in _TRANSITIONS:
        m = rho_dressed.matrix if basis == DRESSED else rho_bare.matrix
        im = float(m[i, j].imag)
        pop_diff = float((m[upper, upper] - m[lower, lower]).real)
        reports.append(TransitionReport(name, sideband, im, pop_diff,
                                        _regime(im, pop_diff, tol)))
    return reports


def analytic_steady_states(p: SystemParams) -> tuple[DensityMatrix, DensityMatrix]:
    """(dressed, bare) steady states from the closed forms alone.

    The dressed matrix combines the secular populations with the
    steady coherences; the bare matrix is the strong-field closed form.
    Purely algebraic, no ODE solves, so regime sweeps built on this run in
    microseconds per cell.
    """
    rates = derive_rates(p)
    sa, sb, sg = population_steady(rates)
    r_ab, r_ag, r_bg = coherence_steady(rates)
    dressed = np.array([[sa, r_ab, r_ag],
                        [np.conj(r_ab), sb, r_bg],
                        [np.conj(r_ag), np.conj(r_bg), sg]])
    return DensityMatrix(DRESSED, dressed), bare_strong_field_steady(p)


# -- analytic gain conditions -------------------------------------------------

@dataclass(frozen=True)
class GainCondition:
    """One printed inequality for steady-state gain."""

    name: str
    transition: str
    applicable: bool
    satisfied: bool
    lambda_critical: float | None
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "transition": self.transition,
                "applicable": self.applicable, "satisfied": self.satisfied,
                "lambda_critical": self.lambda_critical, "detail": self.detail}


@dataclass(frozen=True)
class GainConditionReport:
    """Evaluated gain inequalities plus the regimes the closed forms predict."""

    params: SystemParams
    conditions: tuple[GainCondition, ...]
    predicted: dict[str, Regime] = field(default_factory=dict)

    def condition(self, name: str) -> GainCondition:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "params": {k: getattr(self.params, k) for k in
                       ("omega", "g_probe", "gamma_b", "gamma_c", "lambda_pump")},
            "conditions": [c.to_dict() for c in self.conditions],
            "predicted_regimes": {k: str(v) for k, v in self.predicted.items()},
        }

    def __str__(self) -> str:
        lines = [f"gain conditions at omega={self.params.omega}, g_probe={self.params.g_probe}, "
                 f"gamma_b={self.params.gamma_b}, gamma_c={self.params.gamma_c}, "
                 f"lambda_pump={self.params.lambda_pump}"]
        for c in self.conditions:
            if not c.applicable:
                status = "inapplicable"
            else:
                status = "satisfied" if c.satisfied else "not satisfied"
            extra = "" if c.lambda_critical is None else f" (lambda_critical = {c.lambda_critical:.6g})"
            lines.append(f"  {c.name} [{c.transition}]: {status}{extra} - {c.detail}")
        for name, regime in self.predicted.items():
            lines.append(f"  predicted {name}: {regime}")
        return "\n".join(lines)


def analytic_gain_conditions(p: SystemParams) -> GainConditionReport:
    """Evaluate the closed-form gain inequalities at one parameter point.

    Four conditions are checked: the unconditional dressed-gain criterion
    gamma_b > gamma_c; the pumped window below gamma_c with its critical
    pump rate; the strong-field form of that window; and the bare probe
    gain threshold. Strong-field entries are marked inapplicable when the
    coupling field is not dominant (omega < 10 g_probe).
    """
    gb, gc, lam = p.gamma_b, p.gamma_c, p.lambda_pump
    o2, r2 = p.omega ** 2, p.r ** 2
    rates = derive_rates(p)
    conditions = []

    conditions.append(GainCondition(
        name="dressed_gain_any_pump", transition="beta->alpha",
        applicable=True, satisfied=gb > gc, lambda_critical=None,
        detail="gamma_b > gamma_c gives dressed sideband gain for any pump rate"))

    window_low = gc * o2 / (o2 + r2)
    in_window = window_low < gb < gc
    if in_window:
        denom = rates.gamma_alpha - 2.0 * o2 * (gc - gb) / r2
        lam_crit = rates.gamma_alpha * (gc - gb) / denom
        satisfied = lam > lam_crit
    else:
        lam_crit = None
        satisfied = False
    conditions.append(GainCondition(
        name="dressed_gain_pumped", transition="beta->alpha",
        applicable=in_window, satisfied=satisfied, lambda_critical=lam_crit,
        detail="gamma_c omega^2/(omega^2+R^2) < gamma_b < gamma_c with pump above threshold"))

    strong = p.omega >= STRONG_FIELD_RATIO * p.g_probe
    in_sf_window = 0.5 * gc < gb < gc
    if strong and in_sf_window:
        sf_crit = gc * (gc - gb) / (2.0 * gb - gc)
        sf_satisfied = lam > sf_crit
    else:
        sf_crit = None
        sf_satisfied = False
    conditions.append(GainCondition(
        name="dressed_gain_strong_field", transition="beta->alpha",
        applicable=strong and in_sf_window, satisfied=sf_satisfied,
        lambda_critical=sf_crit,
        detail="strong-field limit of the pumped window, gamma_c/2 < gamma_b < gamma_c"))

    if gb > gc:
        probe_crit = gc * gc / (gb - gc)
        probe_satisfied = lam > probe_crit
    else:
        probe_crit = None
        probe_satisfied = False
    conditions.append(GainCondition(
        name="bare_probe_gain", transition="c->a",
        applicable=gb > gc, satisfied=probe_satisfied, lambda_critical=probe_crit,
        detail="probe amplification threshold on the pump rate"))

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rho_d, rho_b = analytic_steady_states(p)
    reports = classify_steady_state(rho_d, rho_b)
    wanted = ["beta->alpha", "alpha->gamma"]
    if strong:
        # the two-photon sidebands of the Autler-Townes doublet
        wanted += ["gamma->beta", "beta->gamma"]
    predicted = {r.transition: r.regime for r in reports if r.transition in wanted}
    return GainConditionReport(params=p, conditions=tuple(conditions), predicted=predicted)


# -- parameter sweeps ---------------------------------------------------------

@dataclass
class RegimeMap:
    """Regime classifications over a two-parameter grid.

    reports[(i, j)] is the full transition list at axis1_values[i],
    axis2_values[j]; cells whose evaluation raised are absent from
    reports and recorded in errors instead.
    """

    axis1_name: str
    axis1_values: np.ndarray
    axis2_name: str
    axis2_values: np.ndarray
    source: str
    reports: dict[tuple[int, int], list[TransitionReport]] = field(default_factory=dict)
    errors: dict[tuple[int, int], str] = field(default_factory=dict)

    def regime(self, i: int, j: int, transition: str) -> Regime:
        for r in self.reports[(i, j)]:
            if r.transition == transition:
                return r.regime
        raise KeyError(transition)

    def to_csv(self, path: str | Path) -> None:
        lines = [f"# regime map; source={self.source}; rates in gamma_c",
                 f"{self.axis1_name},{self.axis2_name},transition,regime,im_coherence,pop_difference"]
        for i, x1 in enumerate(self.axis1_values):
            for j, x2 in enumerate(self.axis2_values):
                key = (i, j)
                if key in self.errors:
                    lines.append(f"{x1:.12g},{x2:.12g},ERROR,{self.errors[key]},nan,nan")
                    continue
                for r in self.reports[key]:
                    lines.append(f"{x1:.12g},{x2:.12g},{r.transition},{r.regime},"
                                 f"{r.im_coherence:.12e},{r.pop_difference:.12e}")
        Path(path).write_text("\n".join(lines) + "\n")


def _cell_params(base: SystemParams, name1: str, v1: float, name2: str, v2: float) -> SystemParams:
    return replace(base, **{name1: float(v1), name2: float(v2)})


def sweep_regimes(base: SystemParams, axis1: tuple[str, np.ndarray],
                  axis2: tuple[str, np.ndarray], source: str = "numeric",
                  tol: float = CLASSIFY_TOL) -> RegimeMap:
    """Classify every grid point of a two-parameter sweep.

    source selects "numeric" (exact stationary state of the full dressed
    equations, rotated back for the bare lines) or "analytic" (closed
    forms only). Cells are independent pure computations; failures are
    recorded per cell and the sweep continues.
    """
    if source not in ("numeric", "analytic"):
        raise ValueError(f"source must be 'numeric' or 'analytic', got {source!r}")
    name1, values1 = axis1
    name2, values2 = axis2
    values1 = np.asarray(values1, dtype=float)
    values2 = np.asarray(values2, dtype=float)
    out = RegimeMap(name1, values1, name2, values2, source)
    for i, v1 in enumerate(values1):
        for j, v2 in enumerate(values2):
            try:
                p = _cell_params(base, name1, v1, name2, v2)
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    if source == "numeric":
                        rho_d = dressed_steady_state(derive_rates(p))
                        rho_b = to_bare(rho_d, build_dressed_basis(p))
                    else:
                        rho_d, rho_b = analytic_steady_states(p)
                out.reports[(i, j)] = classify_steady_state(rho_d, rho_b, tol)
            except Exception as exc:  # per-cell isolation by contract
                out.errors[(i, j)] = f"{type(exc).__name__}: {exc}"
    return out
