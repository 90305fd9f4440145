"""Cooling dynamics on balanced two-letter words.

The package simulates the flip chain that removes adjacent equal pairs,
computes exact expected convergence times and inequality sweeps on small
instances, and checks the counting identities behind the flip-weighted
volume statistics.
"""

__version__ = "0.1.0"

from .dynamics import (
    CoolingRun,
    CoolingState,
    FlipClass,
    FlipMove,
    StepCapError,
    allowed_flips,
    apply_flip,
    classify_flip,
    cooling_step,
    enumerate_flips,
    melt_step,
    run_cooling,
)
from .experiments import (
    RunRecord,
    ScalingFit,
    fit_scaling,
    run_experiment,
    run_replicate,
    summarize,
)
from .oracle import (
    HittingTimeTable,
    enumerate_configurations,
    expected_convergence_exact,
    expected_variant_drift,
    verify_drift_bound,
    verify_hitting_bound,
    verify_variant_bounds,
    verify_variant_volume,
    worst_case_argmax,
)
from .samplers import (
    SamplerSpec,
    exact_natural_distribution,
    flip_weight,
    ground_state,
    sample_natural,
    sample_uniform,
    worst_case_config,
)
from .series import (
    flip_count_coefficient,
    flip_count_identity,
    flip_volume_coefficient,
    flip_volume_identity,
    natural_volume_asymptotic,
    natural_volume_ratio,
)
from .words import (
    Configuration,
    DyckFactor,
    Sign,
    VariantParams,
    dyck_decompose,
    energy,
    parse_configuration,
    path_profile,
    tuned_alpha,
    variant_bound,
    variant_phi,
    volume,
    volume_doubled,
)

__all__ = [
    "__version__",
    "Configuration",
    "CoolingRun",
    "CoolingState",
    "DyckFactor",
    "FlipClass",
    "FlipMove",
    "HittingTimeTable",
    "RunRecord",
    "SamplerSpec",
    "ScalingFit",
    "Sign",
    "StepCapError",
    "VariantParams",
    "allowed_flips",
    "apply_flip",
    "classify_flip",
    "cooling_step",
    "dyck_decompose",
    "energy",
    "enumerate_configurations",
    "enumerate_flips",
    "exact_natural_distribution",
    "expected_convergence_exact",
    "expected_variant_drift",
    "fit_scaling",
    "flip_count_coefficient",
    "flip_count_identity",
    "flip_volume_coefficient",
    "flip_volume_identity",
    "flip_weight",
    "ground_state",
    "melt_step",
    "natural_volume_asymptotic",
    "natural_volume_ratio",
    "parse_configuration",
    "path_profile",
    "run_cooling",
    "run_experiment",
    "run_replicate",
    "sample_natural",
    "sample_uniform",
    "summarize",
    "tuned_alpha",
    "variant_bound",
    "variant_phi",
    "verify_drift_bound",
    "verify_hitting_bound",
    "verify_variant_bounds",
    "verify_variant_volume",
    "volume",
    "volume_doubled",
    "worst_case_argmax",
    "worst_case_config",
]
