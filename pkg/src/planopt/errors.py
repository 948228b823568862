"""Exception hierarchy shared across the package."""

from __future__ import annotations


class PlanoptError(Exception):
    """Base class for all errors raised by this package."""


class InvalidProgramError(PlanoptError):
    """A LinearProgram failed validation; `violations` lists the reasons."""

    def __init__(self, violations: list[str]):
        super().__init__("invalid linear program: " + "; ".join(violations))
        self.violations = violations


class IterationLimitError(PlanoptError):
    """The simplex iteration budget was exhausted before termination."""


class PlanModelError(PlanoptError):
    """Problems turning a plan instance into a linear program."""


class UnknownQuantityError(PlanModelError):
    """An objective or constraint referenced a quantity key that does not resolve."""

    def __init__(self, key: str, context: str):
        super().__init__(f"{context} references unknown quantity {key!r}")
        self.key = key
        self.context = context


class ExtractionError(PlanModelError):
    """A solver result could not be turned into a consistent scenario."""


class AssessmentError(PlanoptError):
    """Invalid inputs to the assessment computations."""


class InfeasiblePlanError(PlanoptError):
    """A required solve has no feasible point."""

    def __init__(self, detail: str = ""):
        super().__init__("plan model is infeasible" + (f": {detail}" if detail else ""))
        self.detail = detail


class UnboundedObjectiveError(PlanoptError):
    """A single-objective solve is unbounded."""

    def __init__(self, label: str):
        super().__init__(f"objective {label!r} is unbounded over the feasible set")
        self.label = label


class FrontTimeoutError(PlanoptError):
    """Front generation exceeded its wall-clock budget."""


class DataIOError(PlanoptError):
    """Base class for document loading/saving failures."""


class FileAccessError(DataIOError):
    """The file could not be read or written at all (missing, permissions)."""


class DocumentParseError(DataIOError):
    """The file is not syntactically valid (bad JSON, bad table)."""


class DocumentSchemaError(DataIOError):
    """The document parsed but does not match the expected shape."""

    def __init__(self, violations: list[str]):
        super().__init__("schema violations: " + "; ".join(violations))
        self.violations = violations


class InstanceInvariantError(DataIOError):
    """The document matched the schema but the instance invariants fail."""

    def __init__(self, violations: list[str]):
        super().__init__("instance invariant violations: " + "; ".join(violations))
        self.violations = violations
