"""Simulator and analytic toolkit for a coherently driven three-level
V-type atom with an incoherent pump: exact density-matrix dynamics in the
bare and dressed bases, secular closed forms, steady states, and
gain/absorption regime classification."""

from .bare import bare_rhs, bare_steady_state, integrate_bare
from .density import (BARE, DRESSED, BasisMismatchError, DensityMatrix,
                      StateValidationError, Trajectory)
from .dressed import dressed_rhs, dressed_steady_state, integrate_dressed
from .integrate import (DegenerateSteadyStateError, IntegrationError,
                        StepControl, stationary_state)
from .params import (ConfigError, DressedRates, SystemParams, derive_rates,
                     params_from_config, read_config_file)
from .regimes import (GainConditionReport, Regime, RegimeMap, TransitionReport,
                      analytic_gain_conditions, classify_steady_state,
                      sweep_regimes)
from .secular import (SecularModeConstants, bare_strong_field_steady,
                      coherence_steady, coherence_transient,
                      fit_mode_constants, improved_population_transient,
                      population_steady, population_transient,
                      strong_field_im_coherences,
                      strong_field_population_steady)
from .spectral import dominant_angular_frequency
from .transform import (DressedBasis, build_dressed_basis,
                        interaction_hamiltonian, to_bare, to_dressed)

__version__ = "0.1.0"

__all__ = [
    "BARE", "DRESSED",
    "SystemParams", "DressedRates", "derive_rates",
    "ConfigError", "read_config_file", "params_from_config",
    "DensityMatrix", "Trajectory",
    "BasisMismatchError", "StateValidationError",
    "StepControl", "IntegrationError", "DegenerateSteadyStateError",
    "stationary_state",
    "bare_rhs", "integrate_bare", "bare_steady_state",
    "DressedBasis", "interaction_hamiltonian", "build_dressed_basis",
    "to_dressed", "to_bare",
    "dressed_rhs", "integrate_dressed", "dressed_steady_state",
    "population_steady", "population_transient",
    "strong_field_population_steady", "SecularModeConstants",
    "fit_mode_constants", "coherence_transient", "coherence_steady",
    "strong_field_im_coherences", "improved_population_transient",
    "bare_strong_field_steady",
    "Regime", "TransitionReport", "RegimeMap", "GainConditionReport",
    "classify_steady_state", "analytic_gain_conditions", "sweep_regimes",
    "dominant_angular_frequency",
    "__version__",
]
