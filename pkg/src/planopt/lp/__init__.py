"""Linear and mixed binary-integer programming core.

Public surface: the model types (Variable, Constraint, Objective,
LinearProgram, Solution), validate/dump helpers, and solve(), which routes
to the plain simplex or to branch and bound when binaries are present.
"""

from __future__ import annotations

from ..errors import InvalidProgramError
from . import backend
from .model import (
    EQ,
    GE,
    INFEASIBLE,
    LE,
    MAXIMIZE,
    MINIMIZE,
    OPTIMAL,
    UNBOUNDED,
    Constraint,
    LinearProgram,
    Objective,
    Solution,
    Variable,
    dump,
    validate,
)
from .milp import INTEGRALITY_TOL, solve_binary
from .simplex import FEASIBILITY_TOL, OPTIMALITY_TOL, solve_continuous, solve_dense

KERNEL_NAME = backend.KERNEL_NAME

__all__ = [
    "Variable",
    "Constraint",
    "Objective",
    "LinearProgram",
    "Solution",
    "MINIMIZE",
    "MAXIMIZE",
    "LE",
    "EQ",
    "GE",
    "OPTIMAL",
    "INFEASIBLE",
    "UNBOUNDED",
    "FEASIBILITY_TOL",
    "OPTIMALITY_TOL",
    "INTEGRALITY_TOL",
    "KERNEL_NAME",
    "validate",
    "dump",
    "solve",
    "solve_dense",
]


def solve(lp: LinearProgram) -> Solution:
    """Validate and solve a linear program.

    Raises InvalidProgramError when validate() reports violations. Programs
    containing binary variables go through branch and bound; the rest go
    straight to the simplex driver.
    """
    violations = validate(lp)
    if violations:
        raise InvalidProgramError(violations)
    if any(v.binary for v in lp.variables):
        return solve_binary(lp)
    return solve_continuous(lp)
