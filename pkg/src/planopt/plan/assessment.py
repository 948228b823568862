"""Plan assessment independent of the solver.

Recomputes, from raw magnitudes and boiler powers, everything the optimizer
also encodes as auxiliary variables: pressures from positive activity parts,
receptors from pressures, yearly emissions from boiler fuel energy, and the
best/average/worst indicator triples. Used standalone (assess a plan given
from outside) and as the cross-check for solver-derived scenarios.
"""

from __future__ import annotations

from typing import Mapping

import numpy as np

from ..errors import AssessmentError
from .types import AssessmentResult, PlanInstance

GJ_PER_MWH = 3.6

_NEG_TOL = 1e-9


def _magnitude_vector(inst: PlanInstance, magnitudes: Mapping[str, float]) -> np.ndarray:
    ids = inst.activity_ids()
    unknown = sorted(set(magnitudes) - set(ids))
    if unknown:
        raise AssessmentError(f"unknown activity ids: {', '.join(unknown)}")
    missing = sorted(set(ids) - set(magnitudes))
    if missing:
        raise AssessmentError(f"missing magnitudes for: {', '.join(missing)}")
    return np.array([float(magnitudes[a]) for a in ids])


def _boiler_vector(inst: PlanInstance, boiler_powers: Mapping[str, float]) -> np.ndarray:
    ids = [b.id for b in inst.boilers]
    unknown = sorted(set(boiler_powers) - set(ids))
    if unknown:
        raise AssessmentError(f"unknown boiler ids: {', '.join(unknown)}")
    vec = np.array([float(boiler_powers.get(b, 0.0)) for b in ids])
    bad = [ids[j] for j in np.flatnonzero(vec < -_NEG_TOL)]
    if bad:
        raise AssessmentError(f"negative boiler powers: {', '.join(bad)}")
    return np.maximum(vec, 0.0)


def compute_pressures(inst: PlanInstance, magnitudes: Mapping[str, float]) -> np.ndarray:
    """Pressure vector: each pressure sums mop-weighted positive parts."""
    ope = _magnitude_vector(inst, magnitudes)
    pos = np.maximum(ope, 0.0)
    return inst.mop.T @ pos


def compute_receptors(inst: PlanInstance, pressures) -> np.ndarray:
    """Receptor vector: mpr-weighted sum of pressures."""
    pre = np.asarray(pressures, dtype=float)
    if pre.shape != (len(inst.pressure_names),):
        raise AssessmentError(
            f"pressure vector has {pre.shape}, instance has "
            f"{len(inst.pressure_names)} pressures"
        )
    return inst.mpr.T @ pre


def compute_emissions(inst: PlanInstance, boiler_powers: Mapping[str, float]) -> np.ndarray:
    """Yearly emissions in g: factors applied to each boiler's fuel energy.

    A boiler running b MW for hours_per_year at conversion efficiency eta
    consumes hours*b/eta MWh of fuel, converted to GJ to match the g/GJ
    factors.
    """
    if inst.efficiency <= 0.0:
        raise AssessmentError("efficiency must be positive")
    b = _boiler_vector(inst, boiler_powers)
    fuel_gj = (inst.hours_per_year * b / inst.efficiency) * GJ_PER_MWH
    return inst.mec @ fuel_gj


def compute_indicators(
    inst: PlanInstance, emissions
) -> dict[str, tuple[float, float, float]]:
    """Per-indicator (best, average, worst) weighted sums over emissions.

    Emissions without a factor row in a table contribute nothing there
    (flagged by instance_warnings, not an error here).
    """
    e = np.asarray(emissions, dtype=float)
    if e.shape != (len(inst.emission_names),):
        raise AssessmentError(
            f"emission vector has {e.shape}, instance has "
            f"{len(inst.emission_names)} emissions"
        )
    bad = [
        inst.emission_names[i] for i in np.flatnonzero(e < -_NEG_TOL)
    ]
    if bad:
        raise AssessmentError(f"negative emissions: {', '.join(bad)}")
    e = np.maximum(e, 0.0)

    out: dict[str, tuple[float, float, float]] = {}
    for ind, rows in inst.indicator_tables.items():
        best = avg = worst = 0.0
        for i, name in enumerate(inst.emission_names):
            triple = rows.get(name)
            if triple is None:
                continue
            best += triple[0] * e[i]
            avg += triple[1] * e[i]
            worst += triple[2] * e[i]
        out[ind] = (best, avg, worst)
    return out


def assess(
    inst: PlanInstance,
    magnitudes: Mapping[str, float],
    boiler_powers: Mapping[str, float],
) -> AssessmentResult:
    pressures = compute_pressures(inst, magnitudes)
    receptors = compute_receptors(inst, pressures)
    emissions = compute_emissions(inst, boiler_powers)
    indicators = compute_indicators(inst, emissions)
    return AssessmentResult(
        pressures=pressures,
        receptors=receptors,
        emissions=emissions,
        indicators=indicators,
    )
