"""Entanglement and measurement-induced nonlocality for two-qubit
Heisenberg XYZ thermal states."""

from .decomp import FanoForm, fano_decompose, reconstruct
from .errors import (
    ConventionMismatch,
    DomainError,
    NotDiagonalCorrelation,
    NotHermitian,
    StateInvalid,
)
from .measures import (
    CriticalWindow,
    MeasureReport,
    concurrence,
    concurrence_thermal,
    critical_window,
    measure_report,
    min_fidelity,
    min_fidelity_thermal,
    min_hs,
    min_hs_thermal,
    min_trace,
    min_trace_thermal,
)
from .model import (
    DensityMatrix,
    ModelParams,
    SpectralDecomposition,
    ThermalElements,
    build_hamiltonian,
    closed_form_spectrum,
    thermal_elements,
    thermal_state,
)
from .oracle import (
    MeasurementAxis,
    OracleResult,
    fidelity_min_spectral,
    fidelity_wang,
    max_over_measurements,
    post_measurement_state,
    thermal_state_exp,
)

__version__ = "0.1.0"
