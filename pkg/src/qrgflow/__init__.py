"""Correlation measures along real-space block-renormalisation coupling flows.

Two spin-chain models (anisotropic Heisenberg and anisotropic XY) are reduced
three sites at a time; the package iterates the resulting coupling maps,
builds the closed-form two-site edge states, evaluates entanglement and
discord-type measures on them, and fits the finite-size scaling of measure
derivatives near the critical couplings.  Brute-force oracles (dense Jacobi
diagonalisation, measurement-grid searches) cross-check every closed form.
"""

from .errors import (
    DomainError,
    ExtremumAtBoundary,
    InvalidDistribution,
    NonPositiveValue,
    NonUniformGrid,
    NotDensityMatrix,
    NotSymmetric,
    NotXStructured,
    QrgError,
)
from .flow import (
    ITERATION_CAP,
    FlowStep,
    RGTrajectory,
    SweepTable,
    advance,
    effective_size,
    iterate,
    sweep,
)
from .measures import (
    MEASURE_FUNCS,
    MEASURE_NAMES,
    DiscordBreakdown,
    MeasureSet,
    binary_mix_entropy,
    chsh_max,
    concurrence,
    discord_optimal,
    discord_sigma_xy,
    discord_sigma_z,
    geometric_discord,
    measure_all,
    measure_set_values,
    mid,
    min_nonlocality,
    mutual_information,
    shannon_entropy,
)
from .models import (
    XXZ_FIXED_POINTS,
    XY_FIXED_POINTS,
    BlockState8,
    XXZParams,
    XYParams,
    block_hamiltonian,
    fixed_points,
    g_of_gamma,
    gamma_of_g,
    ground_energy,
    ground_states,
    q_of_delta,
    reduced_state,
    xxz_ground_states,
    xxz_rg_step,
    xxz_rho13,
    xy_ground_states,
    xy_rg_step,
    xy_rho13,
)
from .oracle import (
    EigenDecomposition,
    MeasurementDirection,
    brute_force_chsh,
    brute_force_discord,
    diag_symmetric,
    partial_trace_mid,
)
from .scaling import (
    CRITICAL_POINT,
    DerivativeCurve,
    ScalingFit,
    ScalingReport,
    ScalingRow,
    derivative_extremum,
    find_extremum,
    loglog_fit,
    numeric_derivative,
    scaling_report,
)
from .verify import CheckResult, run_all
from .xstate import (
    BlochX,
    QubitMarginal,
    XState,
    from_bloch,
    marginal_a,
    marginal_b,
    random_xstates,
    spectrum,
    to_bloch,
    xstate_from_matrix,
    xstate_to_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "QrgError",
    "DomainError",
    "ExtremumAtBoundary",
    "InvalidDistribution",
    "NonPositiveValue",
    "NonUniformGrid",
    "NotDensityMatrix",
    "NotSymmetric",
    "NotXStructured",
    "XState",
    "BlochX",
    "QubitMarginal",
    "xstate_from_matrix",
    "xstate_to_matrix",
    "to_bloch",
    "from_bloch",
    "spectrum",
    "marginal_a",
    "marginal_b",
    "random_xstates",
    "shannon_entropy",
    "binary_mix_entropy",
    "concurrence",
    "mutual_information",
    "discord_sigma_z",
    "discord_sigma_xy",
    "discord_optimal",
    "DiscordBreakdown",
    "mid",
    "geometric_discord",
    "min_nonlocality",
    "chsh_max",
    "MeasureSet",
    "MEASURE_FUNCS",
    "MEASURE_NAMES",
    "measure_all",
    "measure_set_values",
    "XXZParams",
    "XYParams",
    "BlockState8",
    "XXZ_FIXED_POINTS",
    "XY_FIXED_POINTS",
    "q_of_delta",
    "xxz_rg_step",
    "xy_rg_step",
    "xxz_ground_states",
    "xy_ground_states",
    "xxz_rho13",
    "xy_rho13",
    "g_of_gamma",
    "gamma_of_g",
    "fixed_points",
    "block_hamiltonian",
    "ground_energy",
    "ground_states",
    "reduced_state",
    "ITERATION_CAP",
    "effective_size",
    "advance",
    "iterate",
    "sweep",
    "FlowStep",
    "RGTrajectory",
    "SweepTable",
    "CRITICAL_POINT",
    "DerivativeCurve",
    "ScalingFit",
    "ScalingRow",
    "ScalingReport",
    "numeric_derivative",
    "find_extremum",
    "loglog_fit",
    "derivative_extremum",
    "scaling_report",
    "EigenDecomposition",
    "MeasurementDirection",
    "diag_symmetric",
    "partial_trace_mid",
    "brute_force_discord",
    "brute_force_chsh",
    "CheckResult",
    "run_all",
]
