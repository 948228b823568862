"""Translate a PlanInstance plus objective and user constraints into an LP.

Modeling scheme:
  - every activity magnitude is a bounded variable;
  - primary activities that may go negative (decommissioning) are split into
    positive and negative parts tied by a complementarity binary, so cost
    and pressures can act on the positive part only;
  - secondary magnitudes are equalities over primary parts (dependency
    matrices, one coefficient per direction);
  - boiler powers feed activity magnitudes and emission equalities;
  - every quantity a user can reference (pressures, receptors, emissions,
    indicators, totals) becomes an equality-defined auxiliary variable, so
    objectives and extra constraints are plain linear forms over names.

Variable and constraint order is fixed by instance order, which makes
rebuilding byte-deterministic.
"""

from __future__ import annotations

import numpy as np

from ..errors import InstanceInvariantError, PlanModelError, UnknownQuantityError
from ..lp import (
    EQ,
    GE,
    LE,
    MAXIMIZE,
    MINIMIZE,
    Constraint,
    LinearProgram,
    Objective,
    Variable,
)
from .assessment import GJ_PER_MWH
from .types import (
    PRIMARY,
    ObjectiveSpec,
    PlanInstance,
    UserConstraint,
    VariableMap,
    validate_instance,
)

_SENSES = {"minimize": MINIMIZE, "maximize": MAXIMIZE}
_RELATIONS = {LE, EQ, GE}


def _resolve_terms(varmap: VariableMap, terms, context: str) -> dict[str, float]:
    if not terms:
        raise PlanModelError(f"{context}: at least one term required")
    coeffs: dict[str, float] = {}
    for key, weight in terms.items():
        var = varmap.quantity_var(key)
        if var is None:
            raise UnknownQuantityError(key, context)
        w = float(weight)
        if w != 0.0:
            coeffs[var] = coeffs.get(var, 0.0) + w
    if not coeffs:
        # All weights zero: constant expression, almost surely a typo.
        raise PlanModelError(f"{context}: all term weights are zero")
    return coeffs


def build_lp(
    instance: PlanInstance,
    objective: ObjectiveSpec,
    extra: list[UserConstraint] | None = None,
) -> tuple[LinearProgram, VariableMap]:
    extra = list(extra or [])
    violations = validate_instance(instance)
    if violations:
        raise InstanceInvariantError(violations)
    if objective.sense not in _SENSES:
        raise PlanModelError(
            f"objective {objective.label!r}: unknown sense {objective.sense!r}"
        )
    for k, uc in enumerate(extra):
        if uc.relation not in _RELATIONS:
            raise PlanModelError(
                f"user constraint {k}: unknown relation {uc.relation!r}"
            )
        if not np.isfinite(uc.rhs):
            raise PlanModelError(f"user constraint {k}: non-finite rhs")

    variables: list[Variable] = []
    constraints: list[Constraint] = []

    n_act = len(instance.activities)
    att = (
        np.any(instance.moc != 0.0, axis=0)
        if instance.moc.size
        else np.zeros(len(instance.boilers), dtype=bool)
    )
    has_boiler_row = (
        np.any(instance.moc != 0.0, axis=1)
        if instance.moc.size
        else np.zeros(n_act, dtype=bool)
    )

    magnitude: dict[str, str] = {}
    positive: dict[str, str] = {}
    negative: dict[str, str] = {}
    binary: dict[str, str] = {}

    split = [a.kind == PRIMARY and a.lower < 0.0 for a in instance.activities]
    for i, a in enumerate(instance.activities):
        if has_boiler_row[i] and a.lower < 0.0:
            raise PlanModelError(
                f"activity {a.id}: boiler rows on an activity with negative "
                f"lower bound are not supported"
            )
        magnitude[a.id] = f"ope[{a.id}]"
        variables.append(Variable(magnitude[a.id], a.lower, a.upper))
        if split[i]:
            pmax = max(a.upper, 0.0)
            nmax = -a.lower
            positive[a.id] = f"pos[{a.id}]"
            negative[a.id] = f"neg[{a.id}]"
            binary[a.id] = f"dec[{a.id}]"
            variables.append(Variable(positive[a.id], 0.0, pmax))
            variables.append(Variable(negative[a.id], 0.0, nmax))
            variables.append(Variable(binary[a.id], 0.0, 1.0, binary=True))
        else:
            positive[a.id] = magnitude[a.id]

    boiler: dict[str, str] = {}
    for j, b in enumerate(instance.boilers):
        boiler[b.id] = f"blr[{b.id}]"
        hi = np.inf if att[j] else 0.0  # unreferenced boilers stay off
        variables.append(Variable(boiler[b.id], 0.0, hi))

    pressure = {n: f"pre[{n}]" for n in instance.pressure_names}
    receptor = {n: f"ric[{n}]" for n in instance.receptor_names}
    emission = {n: f"emi[{n}]" for n in instance.emission_names}
    indicator = {n: f"ind[{n}]" for n in instance.indicator_tables}
    for group in (pressure, receptor, emission, indicator):
        for name in group.values():
            variables.append(Variable(name, -np.inf, np.inf))
    variables.append(Variable("total_cost", -np.inf, np.inf))
    variables.append(Variable("total_outcome", -np.inf, np.inf))

    varmap = VariableMap(
        magnitude=magnitude,
        positive=positive,
        negative=negative,
        binary=binary,
        boiler=boiler,
        pressure=pressure,
        receptor=receptor,
        emission=emission,
        indicator=indicator,
        total_cost="total_cost",
        total_outcome="total_outcome",
    )

    # (a) positive-part split with complementarity binaries
    for i, a in enumerate(instance.activities):
        if not split[i]:
            continue
        pmax = max(a.upper, 0.0)
        nmax = -a.lower
        constraints.append(
            Constraint(
                {magnitude[a.id]: 1.0, positive[a.id]: -1.0, negative[a.id]: 1.0},
                EQ, 0.0, name=f"split[{a.id}]",
            )
        )
        constraints.append(
            Constraint(
                {positive[a.id]: 1.0, binary[a.id]: -pmax},
                LE, 0.0, name=f"cap_pos[{a.id}]",
            )
        )
        constraints.append(
            Constraint(
                {negative[a.id]: 1.0, binary[a.id]: nmax},
                LE, nmax, name=f"cap_neg[{a.id}]",
            )
        )

    # (b) secondary magnitudes from primary parts
    pri = instance.primary_indices()
    for sj, si in enumerate(instance.secondary_indices()):
        s = instance.activities[si]
        coeffs = {magnitude[s.id]: 1.0}
        for pj, pi in enumerate(pri):
            p = instance.activities[pi]
            dplus = float(instance.dep_plus[pj, sj])
            if dplus != 0.0:
                coeffs[positive[p.id]] = coeffs.get(positive[p.id], 0.0) - dplus
            dminus = float(instance.dep_minus[pj, sj])
            if dminus != 0.0 and p.id in negative:
                coeffs[negative[p.id]] = coeffs.get(negative[p.id], 0.0) - dminus
        constraints.append(Constraint(coeffs, EQ, 0.0, name=f"dep[{s.id}]"))

    # (e) boiler coupling: magnitude equals the summed boiler power
    for i, a in enumerate(instance.activities):
        if not has_boiler_row[i]:
            continue
        coeffs = {magnitude[a.id]: 1.0}
        for j, b in enumerate(instance.boilers):
            if instance.moc[i, j] != 0.0:
                coeffs[boiler[b.id]] = -float(instance.moc[i, j])
        constraints.append(Constraint(coeffs, EQ, 0.0, name=f"boil[{a.id}]"))

    # (f) quantity definitions
    for jp, name in enumerate(instance.pressure_names):
        coeffs = {pressure[name]: 1.0}
        for i, a in enumerate(instance.activities):
            w = float(instance.mop[i, jp])
            if w != 0.0:
                coeffs[positive[a.id]] = coeffs.get(positive[a.id], 0.0) - w
        constraints.append(Constraint(coeffs, EQ, 0.0, name=f"def_pre[{name}]"))

    for jr, name in enumerate(instance.receptor_names):
        coeffs = {receptor[name]: 1.0}
        for jp, pname in enumerate(instance.pressure_names):
            w = float(instance.mpr[jp, jr])
            if w != 0.0:
                coeffs[pressure[pname]] = -w
        constraints.append(Constraint(coeffs, EQ, 0.0, name=f"def_ric[{name}]"))

    fuel_scale = instance.hours_per_year / instance.efficiency * GJ_PER_MWH
    for je, name in enumerate(instance.emission_names):
        coeffs = {emission[name]: 1.0}
        for j, b in enumerate(instance.boilers):
            w = float(instance.mec[je, j]) * fuel_scale
            if w != 0.0:
                coeffs[boiler[b.id]] = -w
        constraints.append(Constraint(coeffs, EQ, 0.0, name=f"def_emi[{name}]"))

    for ind, rows in instance.indicator_tables.items():
        coeffs = {indicator[ind]: 1.0}
        for name in instance.emission_names:
            triple = rows.get(name)
            if triple is not None and float(triple[2]) != 0.0:
                coeffs[emission[name]] = -float(triple[2])
        constraints.append(Constraint(coeffs, EQ, 0.0, name=f"def_ind[{ind}]"))

    cost_coeffs = {"total_cost": 1.0}
    for a in instance.activities:
        if a.unit_cost != 0.0:
            coeffs_var = positive[a.id]
            cost_coeffs[coeffs_var] = cost_coeffs.get(coeffs_var, 0.0) - a.unit_cost
    constraints.append(Constraint(cost_coeffs, EQ, 0.0, name="def_total_cost"))

    out_coeffs = {"total_outcome": 1.0}
    for a in instance.activities:
        if a.unit_outcome != 0.0:
            v = magnitude[a.id]
            out_coeffs[v] = out_coeffs.get(v, 0.0) - a.unit_outcome
    constraints.append(Constraint(out_coeffs, EQ, 0.0, name="def_total_outcome"))

    # (c), (d) plan-level budget and outcome floors
    constraints.append(
        Constraint({"total_cost": 1.0}, LE, instance.budget, name="budget")
    )
    constraints.append(
        Constraint({"total_outcome": 1.0}, GE, instance.min_outcome, name="outcome")
    )

    # (g) user objective and constraints
    for k, uc in enumerate(extra):
        coeffs = _resolve_terms(varmap, uc.terms, f"user constraint {k}")
        constraints.append(
            Constraint(coeffs, uc.relation, float(uc.rhs), name=f"user[{k}]")
        )

    obj_coeffs = _resolve_terms(varmap, objective.terms, f"objective {objective.label!r}")
    lp = LinearProgram(
        variables=tuple(variables),
        constraints=tuple(constraints),
        objective=Objective(obj_coeffs, _SENSES[objective.sense]),
    )
    return lp, varmap
