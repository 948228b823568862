"""Pareto front generation by the normalized normal constraint method.

Steps, for n objectives over one plan instance:
  1. anchors: solve each objective alone; anchor k is the plan minimizing
     objective k (maximizations are negated into a common minimize sense);
  2. normalization: utopia point from the anchors' own objectives,
     denominators from the worst anchor value per objective, mapping every
     objective into [0, 1] across the anchor set;
  3. reference points: convex combinations of the normalized anchors on the
     utopia hyperplane, evenly spread (simplex lattice);
  4. one subproblem per reference point: minimize the last normalized
     objective subject to normal constraints that cut off the half-space
     "worse than the reference point along the anchor directions";
  5. dominance filter over anchors plus subproblem optima.

Infeasible subproblems are a normal byproduct of the method off the convex
hull; they are counted in `dropped`, never fabricated.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb

from . import lp as lp_mod
from .errors import (
    FrontTimeoutError,
    InfeasiblePlanError,
    PlanModelError,
    UnboundedObjectiveError,
)
from .plan import (
    BOUNDARY,
    INTERMEDIATE,
    ObjectiveSpec,
    PlanInstance,
    Scenario,
    UserConstraint,
    build_lp,
    extract_scenario,
)

DOMINANCE_TOL = 1e-9


@dataclass
class ParetoRequest:
    objectives: list[ObjectiveSpec]
    points: int
    extra: list[UserConstraint] = field(default_factory=list)


@dataclass
class Normalization:
    utopia: list[float]  # minimize-sense utopia per objective
    denominators: list[float]
    constant: list[bool]  # denominator was degenerate, replaced by 1


@dataclass
class ParetoFront:
    scenarios: list[Scenario]
    utopia: list[float]  # user-sense
    nadir_estimate: list[float]  # user-sense
    dropped: int
    objective_labels: list[str]


def validate_request(request: ParetoRequest) -> list[str]:
    v = []
    if len(request.objectives) < 2:
        v.append("at least two objectives are required")
    if request.points < 2:
        v.append(f"points must be >= 2, got {request.points}")
    labels = [o.label for o in request.objectives]
    if len(set(labels)) != len(labels):
        v.append("objective labels must be unique")
    return v


def _min_sense_terms(spec: ObjectiveSpec) -> dict[str, float]:
    sign = 1.0 if spec.sense == "minimize" else -1.0
    return {k: sign * float(w) for k, w in spec.terms.items()}


def _min_sense_value(spec: ObjectiveSpec, scenario: Scenario) -> float:
    v = scenario.objective_values[spec.label]
    return v if spec.sense == "minimize" else -v


def _describe_extra(extra: list[UserConstraint]) -> str:
    if not extra:
        return ""
    parts = []
    for uc in extra:
        terms = " + ".join(f"{w:g}*{k}" for k, w in uc.terms.items())
        parts.append(f"{terms} {uc.relation} {uc.rhs:g}")
    return " (user constraints: " + "; ".join(parts) + ")"


def _solve_one(
    instance: PlanInstance,
    objective: ObjectiveSpec,
    extra: list[UserConstraint],
    all_objectives: list[ObjectiveSpec],
    kind: str,
):
    """Solve one single-objective problem; returns a Scenario or a status."""
    prog, varmap = build_lp(instance, objective, extra)
    sol = lp_mod.solve(prog)
    if sol.status != lp_mod.OPTIMAL:
        return sol.status, None
    return lp_mod.OPTIMAL, extract_scenario(instance, sol, varmap, all_objectives, kind)


def solve_plan(
    instance: PlanInstance,
    objective: ObjectiveSpec,
    extra: list[UserConstraint] | None = None,
) -> Scenario:
    """One single-objective solve; the CLI and service entry point."""
    extra = list(extra or [])
    status, scen = _solve_one(instance, objective, extra, [objective], INTERMEDIATE)
    if status == lp_mod.INFEASIBLE:
        raise InfeasiblePlanError(
            f"no feasible plan while optimizing {objective.label!r}"
            + _describe_extra(extra)
        )
    if status == lp_mod.UNBOUNDED:
        raise UnboundedObjectiveError(objective.label)
    return scen


def compute_anchors(instance: PlanInstance, request: ParetoRequest) -> list[Scenario]:
    """One boundary scenario per objective, each minimizing its own."""
    problems = validate_request(request)
    if problems:
        raise PlanModelError("; ".join(problems))
    anchors = []
    for spec in request.objectives:
        status, scen = _solve_one(
            instance, spec, request.extra, request.objectives, BOUNDARY
        )
        if status == lp_mod.INFEASIBLE:
            raise InfeasiblePlanError(
                f"no feasible plan while optimizing {spec.label!r}"
                + _describe_extra(request.extra)
            )
        if status == lp_mod.UNBOUNDED:
            raise UnboundedObjectiveError(spec.label)
        anchors.append(scen)
    return anchors


def normalize(anchor_values: list[list[float]]) -> Normalization:
    """Utopia and scaling denominators from the anchor objective matrix.

    anchor_values[k][j] is objective j (minimize sense) at anchor k.
    A constant column gets denominator 1 and a constant flag instead of a
    division by zero.
    """
    n = len(anchor_values)
    utopia = [anchor_values[j][j] for j in range(n)]
    denominators = []
    constant = []
    for j in range(n):
        worst = max(anchor_values[k][j] for k in range(n))
        den = worst - utopia[j]
        scale = max(1.0, abs(utopia[j]))
        if den <= 1e-12 * scale:
            denominators.append(1.0)
            constant.append(True)
        else:
            denominators.append(den)
            constant.append(False)
    return Normalization(utopia=utopia, denominators=denominators, constant=constant)


def reference_points(n: int, points: int) -> list[tuple[float, ...]]:
    """Evenly spread convex weights over n anchors.

    n=2 is the arithmetic progression from (1,0) to (0,1). For higher n the
    smallest simplex-lattice resolution with at least `points` vectors is
    enumerated in deterministic order.
    """
    if points < 2:
        raise ValueError("points must be >= 2")
    if n == 2:
        h = points - 1
        return [((h - k) / h, k / h) for k in range(points)]
    res = 1
    while comb(res + n - 1, n - 1) < points:
        res += 1
    out = []
    # Choose res slots among n coordinates, descending on earlier axes.
    for combo in combinations_with_replacement(range(n), res):
        counts = [0] * n
        for c in combo:
            counts[c] += 1
        out.append(tuple(c / res for c in counts))
    return out


def pareto_filter(
    scenarios: list[Scenario],
    objectives: list[ObjectiveSpec],
    *,
    active: list[bool] | None = None,
    activity_order: list[str] | None = None,
) -> list[Scenario]:
    """Keep the non-dominated scenarios; collapse duplicates to one.

    Dominance is strict (<= everywhere, < somewhere, minimize sense,
    tolerance 1e-9) over the objectives marked active. Among duplicates the
    lexicographically smallest activity-magnitude vector survives, earliest
    insertion on a full tie.
    """
    if active is None:
        active = [True] * len(objectives)
    act_specs = [o for o, a in zip(objectives, active) if a]
    for spec in act_specs:
        for s in scenarios:
            if spec.label not in s.objective_values:
                raise PlanModelError(
                    f"scenario missing objective value for {spec.label!r}"
                )
    vals = [
        [_min_sense_value(spec, s) for spec in act_specs] for s in scenarios
    ]

    def magvec(s: Scenario):
        if activity_order is None:
            return tuple(s.magnitudes[k] for k in sorted(s.magnitudes))
        return tuple(s.magnitudes[a] for a in activity_order)

    # Collapse duplicates first: groups share all objective values within
    # tolerance of their representative.
    reps: list[int] = []
    rep_of: dict[int, int] = {}
    for i in range(len(scenarios)):
        for r in reps:
            if all(abs(a - b) <= DOMINANCE_TOL for a, b in zip(vals[i], vals[r])):
                rep_of[i] = r
                break
        else:
            reps.append(i)
            rep_of[i] = i
    chosen: dict[int, int] = {}
    for i in range(len(scenarios)):
        r = rep_of[i]
        cur = chosen.get(r)
        if cur is None or magvec(scenarios[i]) < magvec(scenarios[cur]):
            chosen[r] = i

    def dominates(a: int, b: int) -> bool:
        return all(
            va <= vb + DOMINANCE_TOL for va, vb in zip(vals[a], vals[b])
        ) and any(va < vb - DOMINANCE_TOL for va, vb in zip(vals[a], vals[b]))

    survivors = []
    for r in reps:
        if any(other != r and dominates(other, r) for other in reps):
            continue
        survivors.append(scenarios[chosen[r]])
    return survivors


def nnc_front(
    instance: PlanInstance,
    request: ParetoRequest,
    *,
    timeout_seconds: float | None = None,
) -> ParetoFront:
    problems = validate_request(request)
    if problems:
        raise PlanModelError("; ".join(problems))
    t0 = time.monotonic()

    def check_deadline(stage: str):
        if timeout_seconds is not None and time.monotonic() - t0 > timeout_seconds:
            raise FrontTimeoutError(
                f"front computation exceeded {timeout_seconds:g} s ({stage})"
            )

    objectives = request.objectives
    n = len(objectives)
    anchors = compute_anchors(instance, request)
    check_deadline("anchors")

    M = [[_min_sense_value(spec, anc) for spec in objectives] for anc in anchors]
    norm = normalize(M)
    vbar = [
        [
            (M[k][j] - norm.utopia[j]) / norm.denominators[j]
            for j in range(n)
        ]
        for k in range(n)
    ]

    weights = reference_points(n, request.points)
    dropped = 0
    intermediates: list[Scenario] = []
    last = objectives[n - 1]
    last_terms_min = {spec.label: _min_sense_terms(spec) for spec in objectives}

    for w in weights:
        check_deadline("subproblems")
        xp = [
            sum(w[k] * vbar[k][j] for k in range(n)) for j in range(n)
        ]
        extra = list(request.extra)
        feasible = True
        for k in range(n - 1):
            dk = [vbar[n - 1][j] - vbar[k][j] for j in range(n)]
            terms: dict[str, float] = {}
            rhs = 0.0
            for j, spec in enumerate(objectives):
                cj = dk[j] / norm.denominators[j]
                if cj != 0.0:
                    for key, wgt in last_terms_min[spec.label].items():
                        terms[key] = terms.get(key, 0.0) + cj * wgt
                rhs += dk[j] * (xp[j] + norm.utopia[j] / norm.denominators[j])
            terms = {k2: v for k2, v in terms.items() if v != 0.0}
            if not terms:
                if rhs < -DOMINANCE_TOL:
                    feasible = False
                    break
                continue
            extra.append(UserConstraint(terms, "<=", rhs))
        if not feasible:
            dropped += 1
            continue
        status, scen = _solve_one(instance, last, extra, objectives, INTERMEDIATE)
        if status != lp_mod.OPTIMAL:
            dropped += 1
            continue
        intermediates.append(scen)

    union = anchors + intermediates
    activity_order = instance.activity_ids()
    active = [not c for c in norm.constant]
    if not any(active):
        active = None  # all objectives constant: duplicates collapse anyway
    kept = pareto_filter(
        union, objectives, active=active, activity_order=activity_order
    )

    first = objectives[0]
    kept.sort(key=lambda s: s.objective_values[first.label])

    def to_user(j: int, v: float) -> float:
        return v if objectives[j].sense == "minimize" else -v

    utopia_user = [to_user(j, norm.utopia[j]) for j in range(n)]
    nadir_user = [
        to_user(j, max(M[k][j] for k in range(n))) for j in range(n)
    ]
    return ParetoFront(
        scenarios=kept,
        utopia=utopia_user,
        nadir_estimate=nadir_user,
        dropped=dropped,
        objective_labels=[o.label for o in objectives],
    )
