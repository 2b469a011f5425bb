"""Scattering and bound states of a 1D Dirac particle at a mass/velocity jump.

The junction carries a point interaction drawn from the U(2) family of
self-adjoint matching conditions; this package builds the matching
matrices, scatters plane waves on them, finds the bound states of the four
named interaction families, and ships the numerical cross-checks that
validate the analytic inputs.
"""

from .core import (
    ExtensionFamily,
    ExtensionParams,
    Junction,
    MatchingMatrix,
    Medium,
    NamedExtension,
    SpinorSample,
    UnitaryMatrix,
    deficiency_spinor,
    equally_mixed_params,
    matching_closed_form,
    matching_from_unitary,
    named_matrix,
    named_params,
    params_from_matching,
)
from .errors import (
    BelowThreshold,
    DegenerateExtension,
    DiracJunctionError,
    OutsideWindow,
    SingularBoundaryMatrix,
    SingularSystem,
    StrengthSignError,
    VelocityMismatch,
)
from .scattering import (
    FROM_LEFT,
    FROM_RIGHT,
    EnergyWindow,
    ReflectionZeros,
    ScatteringAmplitudes,
    TransmissionBound,
    amplitudes_closed,
    amplitudes_solve,
    find_reflection_zeros,
    flux_transmission,
    high_energy_transmission,
    scattering_window,
    zero_momentum_resonances,
)
from .spectral import (
    BoundState,
    SweepTable,
    equal_mass_energy,
    find_bound_states,
    general_bound_residual,
    residual_scale,
    spectral_residual,
    sweep_strength,
)
from .validation import (
    DeterminantAuditReport,
    ResidualReport,
    deficiency_indices,
    determinant_audit,
    eigen_residual,
)

__version__ = "0.1.0"

__all__ = [
    "BelowThreshold",
    "BoundState",
    "DegenerateExtension",
    "DeterminantAuditReport",
    "DiracJunctionError",
    "EnergyWindow",
    "ExtensionFamily",
    "ExtensionParams",
    "FROM_LEFT",
    "FROM_RIGHT",
    "Junction",
    "MatchingMatrix",
    "Medium",
    "NamedExtension",
    "OutsideWindow",
    "ReflectionZeros",
    "ResidualReport",
    "ScatteringAmplitudes",
    "SingularBoundaryMatrix",
    "SingularSystem",
    "SpinorSample",
    "StrengthSignError",
    "SweepTable",
    "TransmissionBound",
    "UnitaryMatrix",
    "VelocityMismatch",
    "amplitudes_closed",
    "amplitudes_solve",
    "deficiency_indices",
    "deficiency_spinor",
    "determinant_audit",
    "eigen_residual",
    "equal_mass_energy",
    "equally_mixed_params",
    "find_bound_states",
    "find_reflection_zeros",
    "flux_transmission",
    "general_bound_residual",
    "high_energy_transmission",
    "matching_closed_form",
    "matching_from_unitary",
    "named_matrix",
    "named_params",
    "params_from_matching",
    "residual_scale",
    "scattering_window",
    "spectral_residual",
    "sweep_strength",
    "zero_momentum_resonances",
]
