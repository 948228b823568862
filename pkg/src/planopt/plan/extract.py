"""Turn an optimal LP solution back into a Scenario.

The solver's auxiliary quantity values are taken as the scenario's numbers,
then cross-checked against an independent recomputation by the assessment
module. A disagreement beyond tolerance means the LP encoding and the
assessment formulas have drifted apart, which is a bug worth failing loudly
for, not papering over.
"""

from __future__ import annotations

import numpy as np

from ..errors import ExtractionError
from ..lp import OPTIMAL, Solution
from . import assessment
from .types import ObjectiveSpec, PlanInstance, Scenario, VariableMap

CROSS_CHECK_TOL = 1e-6


def _close(a: float, b: float) -> bool:
    return abs(a - b) <= CROSS_CHECK_TOL


def extract_scenario(
    instance: PlanInstance,
    solution: Solution,
    varmap: VariableMap,
    objectives: list[ObjectiveSpec],
    kind: str,
) -> Scenario:
    if solution.status != OPTIMAL:
        raise ExtractionError(
            f"cannot extract a scenario from a {solution.status} solution"
        )
    vals = solution.values

    magnitudes = {aid: float(vals[v]) for aid, v in varmap.magnitude.items()}
    positive_parts = {aid: float(vals[v]) for aid, v in varmap.positive.items()}
    boiler_powers = {bid: float(vals[v]) for bid, v in varmap.boiler.items()}

    pressures = {n: float(vals[v]) for n, v in varmap.pressure.items()}
    receptors = {n: float(vals[v]) for n, v in varmap.receptor.items()}
    emissions = {n: float(vals[v]) for n, v in varmap.emission.items()}
    total_cost = float(vals[varmap.total_cost])
    total_outcome = float(vals[varmap.total_outcome])

    # Independent recomputation from magnitudes and boiler powers.
    result = assessment.assess(instance, magnitudes, boiler_powers)

    for i, name in enumerate(instance.pressure_names):
        if not _close(pressures[name], result.pressures[i]):
            raise ExtractionError(
                f"pressure {name}: solver {pressures[name]!r} vs "
                f"assessment {result.pressures[i]!r}"
            )
    for i, name in enumerate(instance.receptor_names):
        if not _close(receptors[name], result.receptors[i]):
            raise ExtractionError(
                f"receptor {name}: solver {receptors[name]!r} vs "
                f"assessment {result.receptors[i]!r}"
            )
    for i, name in enumerate(instance.emission_names):
        if not _close(emissions[name], result.emissions[i]):
            raise ExtractionError(
                f"emission {name}: solver {emissions[name]!r} vs "
                f"assessment {result.emissions[i]!r}"
            )

    # Indicator triples come from the assessment tables applied to the
    # solver's emission values; the worst case must agree with the LP's
    # worst-case variable.
    evec = np.array([emissions[n] for n in instance.emission_names])
    indicators = assessment.compute_indicators(instance, np.maximum(evec, 0.0))
    for name, var in varmap.indicator.items():
        lp_worst = float(vals[var])
        if not _close(lp_worst, indicators[name][2]):
            raise ExtractionError(
                f"indicator {name}: solver worst {lp_worst!r} vs "
                f"recomputed {indicators[name][2]!r}"
            )

    for aid in magnitudes:
        expect = max(magnitudes[aid], 0.0)
        if not _close(positive_parts[aid], expect):
            raise ExtractionError(
                f"activity {aid}: positive part {positive_parts[aid]!r} vs "
                f"max(magnitude, 0) = {expect!r}"
            )

    if total_cost > instance.budget + CROSS_CHECK_TOL:
        raise ExtractionError(
            f"total_cost {total_cost!r} exceeds budget {instance.budget!r}"
        )
    if total_outcome < instance.min_outcome - CROSS_CHECK_TOL:
        raise ExtractionError(
            f"total_outcome {total_outcome!r} below minimum {instance.min_outcome!r}"
        )

    objective_values: dict[str, float] = {}
    for spec in objectives:
        value = 0.0
        for key, weight in spec.terms.items():
            var = varmap.quantity_var(key)
            if var is None:
                raise ExtractionError(
                    f"objective {spec.label!r}: unresolvable key {key!r}"
                )
            value += float(weight) * float(vals[var])
        objective_values[spec.label] = value

    return Scenario(
        magnitudes=magnitudes,
        positive_parts=positive_parts,
        pressures=pressures,
        receptors=receptors,
        boiler_powers=boiler_powers,
        emissions=emissions,
        indicators=indicators,
        total_cost=total_cost,
        total_outcome=total_outcome,
        objective_values=objective_values,
        kind=kind,
    )
