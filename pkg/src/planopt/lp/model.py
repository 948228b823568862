"""Solver-facing linear program representation.

A LinearProgram is immutable after construction and safe to share between
threads; distinct solves never share mutable state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

MINIMIZE = "minimize"
MAXIMIZE = "maximize"

LE = "<="
EQ = "="
GE = ">="

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Variable:
    name: str
    lower: float = 0.0
    upper: float = math.inf
    binary: bool = False


@dataclass(frozen=True)
class Constraint:
    coeffs: Mapping[str, float]
    relation: str
    rhs: float
    name: str = ""


@dataclass(frozen=True)
class Objective:
    coeffs: Mapping[str, float]
    sense: str = MINIMIZE


@dataclass(frozen=True)
class LinearProgram:
    variables: tuple[Variable, ...]
    constraints: tuple[Constraint, ...]
    objective: Objective

    def variable_index(self) -> dict[str, int]:
        return {v.name: i for i, v in enumerate(self.variables)}


@dataclass(frozen=True)
class Solution:
    status: str
    values: dict[str, float] = field(default_factory=dict)
    objective_value: float | None = None
    iterations: int = 0


def validate(lp: LinearProgram) -> list[str]:
    """Check all LinearProgram invariants, returning one message per violation.

    Never raises: an empty list means the program is well formed.
    """
    out: list[str] = []
    seen: set[str] = set()
    for v in lp.variables:
        if v.name in seen:
            out.append(f"duplicate variable name {v.name}")
        seen.add(v.name)
        if math.isnan(v.lower) or math.isnan(v.upper):
            out.append(f"variable {v.name} has NaN bounds")
        elif v.lower > v.upper:
            out.append(f"variable {v.name}: lower {v.lower:g} > upper {v.upper:g}")
        if v.binary and not (v.lower >= 0.0 and v.upper <= 1.0):
            out.append(
                f"variable {v.name}: binary bounds [{v.lower:g}, {v.upper:g}] outside [0, 1]"
            )
    for i, con in enumerate(lp.constraints):
        if con.relation not in (LE, EQ, GE):
            out.append(f"constraint {i} has unknown relation {con.relation!r}")
        if not math.isfinite(con.rhs):
            out.append(f"constraint {i} has non-finite rhs {con.rhs!r}")
        for name, coef in con.coeffs.items():
            if name not in seen:
                out.append(f"constraint {i} references unknown variable {name}")
            if not math.isfinite(coef):
                out.append(f"constraint {i} has non-finite coefficient on {name}")
    if lp.objective.sense not in (MINIMIZE, MAXIMIZE):
        out.append(f"objective has unknown sense {lp.objective.sense!r}")
    for name, coef in lp.objective.coeffs.items():
        if name not in seen:
            out.append(f"objective references unknown variable {name}")
        if not math.isfinite(coef):
            out.append(f"objective has non-finite coefficient on {name}")
    return out


def _fmt_bound(value: float) -> str:
    if value == math.inf:
        return "+inf"
    if value == -math.inf:
        return "-inf"
    return f"{value:g}"


def _fmt_expr(coeffs: Mapping[str, float]) -> str:
    parts: list[str] = []
    for name, coef in coeffs.items():
        if not parts:
            parts.append(f"{coef:g} {name}" if coef != 1 else name)
        elif coef < 0:
            parts.append(f"- {-coef:g} {name}" if coef != -1 else f"- {name}")
        else:
            parts.append(f"+ {coef:g} {name}" if coef != 1 else f"+ {name}")
    return " ".join(parts) if parts else "0"


def dump(lp: LinearProgram) -> str:
    """Human-readable equation-per-line rendering, for diagnostics only."""
    lines = [f"{lp.objective.sense} {_fmt_expr(lp.objective.coeffs)}", "s.t."]
    for i, con in enumerate(lp.constraints):
        tag = con.name or f"c{i}"
        lines.append(f"  {tag}: {_fmt_expr(con.coeffs)} {con.relation} {con.rhs:g}")
    for v in lp.variables:
        kind = " binary" if v.binary else ""
        lines.append(f"  {v.name} in [{_fmt_bound(v.lower)}, {_fmt_bound(v.upper)}]{kind}")
    return "\n".join(lines)
