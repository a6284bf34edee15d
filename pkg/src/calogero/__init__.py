"""Spectral toolkit for the rational Calogero-Moser system.

Lax pairs on both gauge slices, Sklyanin's spectral coordinates,
action-angle duality maps, exact flows of every commuting integral, and
a finite-difference Poisson-bracket engine that certifies the canonical
structure numerically.
"""

from .core import (
    DEFAULT_CONFIG,
    ActionAnglePoint,
    CalogeroError,
    DegenerateSpectrum,
    KOutOfRange,
    NonFinite,
    NumericConfig,
    NumericalError,
    OrderingViolation,
    PhaseSpacePoint,
    StepLeavesDomain,
    ValidationError,
    dump_state,
    parse_state,
    random_action_angle_point,
    random_phase_point,
    state_from_dict,
    state_to_dict,
    validate_phase_point,
)
from .duality import backward_map, forward_map
from .dynamics import evolve, evolve_projection, scattering_data
from .lax import (
    Gauge,
    LaxPair,
    build_dual,
    build_lax,
    hamiltonian,
    hamiltonian_direct,
    momentum_map_residual,
)
from .poisson import BracketReport, bracket, canonical_report, fd_gradient, verification_sweep
from .spectral import (
    SpectralCoordinates,
    SpectralData,
    adjugate_eval,
    adjugate_polynomial,
    angle_correction,
    coordinates_via_projectors,
    eval_A,
    eval_C,
    eval_D,
    residual_scale,
    sklyanin_coordinates,
    theorem_residual,
)

__version__ = "0.1.0"
