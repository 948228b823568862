"""Plan modeling: instance types, LP construction, scenario extraction,
and solver-independent assessment."""

from .assessment import (
    GJ_PER_MWH,
    assess,
    compute_emissions,
    compute_indicators,
    compute_pressures,
    compute_receptors,
)
from .build import build_lp
from .extract import extract_scenario
from .types import (
    BOUNDARY,
    INTERMEDIATE,
    KEY_TOTAL_COST,
    KEY_TOTAL_OUTCOME,
    MAX_HOURS_PER_YEAR,
    PREFIX_EMISSION,
    PREFIX_INDICATOR,
    PREFIX_RECEPTOR,
    PRIMARY,
    SECONDARY,
    Activity,
    AssessmentResult,
    BoilerType,
    ObjectiveSpec,
    PlanInstance,
    Scenario,
    UserConstraint,
    VariableMap,
    instance_warnings,
    validate_instance,
    with_activity_bounds,
)

__all__ = [
    "Activity",
    "BoilerType",
    "PlanInstance",
    "ObjectiveSpec",
    "UserConstraint",
    "Scenario",
    "VariableMap",
    "AssessmentResult",
    "PRIMARY",
    "SECONDARY",
    "BOUNDARY",
    "INTERMEDIATE",
    "GJ_PER_MWH",
    "MAX_HOURS_PER_YEAR",
    "KEY_TOTAL_COST",
    "KEY_TOTAL_OUTCOME",
    "PREFIX_RECEPTOR",
    "PREFIX_EMISSION",
    "PREFIX_INDICATOR",
    "validate_instance",
    "instance_warnings",
    "with_activity_bounds",
    "build_lp",
    "extract_scenario",
    "assess",
    "compute_pressures",
    "compute_receptors",
    "compute_emissions",
    "compute_indicators",
]
