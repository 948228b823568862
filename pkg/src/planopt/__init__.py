"""Regional energy plan optimization: modeling, solving, assessment, fronts."""

from .errors import (
    AssessmentError,
    DataIOError,
    DocumentParseError,
    DocumentSchemaError,
    ExtractionError,
    FileAccessError,
    FrontTimeoutError,
    InfeasiblePlanError,
    InstanceInvariantError,
    InvalidProgramError,
    IterationLimitError,
    PlanModelError,
    PlanoptError,
    UnboundedObjectiveError,
    UnknownQuantityError,
)
from .pareto import ParetoFront, ParetoRequest, nnc_front, pareto_filter, solve_plan
from .plan import (
    Activity,
    BoilerType,
    ObjectiveSpec,
    PlanInstance,
    Scenario,
    UserConstraint,
    assess,
    validate_instance,
    with_activity_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Activity",
    "BoilerType",
    "PlanInstance",
    "ObjectiveSpec",
    "UserConstraint",
    "Scenario",
    "ParetoRequest",
    "ParetoFront",
    "solve_plan",
    "nnc_front",
    "pareto_filter",
    "assess",
    "validate_instance",
    "with_activity_bounds",
    "PlanoptError",
    "InvalidProgramError",
    "IterationLimitError",
    "PlanModelError",
    "UnknownQuantityError",
    "ExtractionError",
    "AssessmentError",
    "InfeasiblePlanError",
    "UnboundedObjectiveError",
    "FrontTimeoutError",
    "DataIOError",
    "FileAccessError",
    "DocumentParseError",
    "DocumentSchemaError",
    "InstanceInvariantError",
]
