"""Generic-case analysis workbench for one-way-function candidates.

Thin wrapper over the C++ core: spherical density measurement, fuel-metered
inversion experiments, and the amplification / clipping / averaging
reductions, all seeded and reproducible.
"""

import json as _json

from ._core import (  # noqa: F401
    AchievementRatio,
    AggregateSuccess,
    Candidate,
    CapExceededError,
    ChernoffPlan,
    ConvergenceReport,
    DeltaEstimate,
    DensityProfile,
    DensityValue,
    DomainError,
    Inverter,
    RegistryError,
    RunOutcome,
    __version__,
    achievement_ratio,
    aggregate_success,
    amplified_success,
    amplify,
    amplify_repeat,
    averaging_split,
    candidate_names,
    chernoff_plan,
    classify_convergence,
    classify_points,
    clip,
    density_profile,
    estimate_delta,
    exact_delta,
    exact_density,
    inverter_names,
    make_candidate,
    make_inverter,
    mc_density,
    reference_set_names,
    repetitions_to_clear,
    run_inverter,
    set_thread_count,
    success_profile,
)
from ._core import definition_check_json as _definition_check_json
from ._core import sphere_size_str as _sphere_size_str


def sphere_size(n):
    """Exact cardinality of the sphere of radius n, as a Python int."""
    return int(_sphere_size_str(n))


def definition_check(inverter, candidate, radii, **kwargs):
    """Security sweep over the given radii; returns the report as a dict."""
    return _json.loads(_definition_check_json(inverter, candidate, list(radii), **kwargs))
