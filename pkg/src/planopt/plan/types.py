"""Domain types for regional energy plans.

A PlanInstance bundles the activities, their economic coefficients, the
activity/pressure/receptor linkage matrices, the boiler catalog with its
emission factors, and the indicator factor tables. Instances are treated as
immutable once constructed; validation is a separate pass so loaders can
report every violation with a field path instead of dying on the first.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping

import numpy as np

PRIMARY = "primary"
SECONDARY = "secondary"

BOUNDARY = "boundary"
INTERMEDIATE = "intermediate"

# Quantity keys usable in objectives and user constraints. The key space is
# closed: anything else is a resolution error, never a silent zero.
KEY_TOTAL_COST = "total_cost"
KEY_TOTAL_OUTCOME = "total_outcome"
PREFIX_RECEPTOR = "receptor:"
PREFIX_EMISSION = "emission:"
PREFIX_INDICATOR = "indicator:"

MAX_HOURS_PER_YEAR = 8784.0


@dataclass
class Activity:
    id: str
    name: str
    kind: str  # primary | secondary
    lower: float
    upper: float
    unit_cost: float
    unit_outcome: float


@dataclass
class BoilerType:
    id: str
    name: str


@dataclass
class ObjectiveSpec:
    terms: dict[str, float]
    sense: str  # minimize | maximize
    label: str


@dataclass
class UserConstraint:
    terms: dict[str, float]
    relation: str  # <= | = | >=
    rhs: float


@dataclass
class PlanInstance:
    activities: list[Activity]
    budget: float
    min_outcome: float
    dep_plus: np.ndarray  # primary x secondary
    dep_minus: np.ndarray  # primary x secondary
    mop: np.ndarray  # activity x pressure
    mpr: np.ndarray  # pressure x receptor
    pressure_names: list[str]
    receptor_names: list[str]
    boilers: list[BoilerType]
    moc: np.ndarray  # activity x boiler, 0/1
    mec: np.ndarray  # emission x boiler, g per GJ
    emission_names: list[str]
    # indicator -> emission -> (best, average, worst)
    indicator_tables: dict[str, dict[str, tuple[float, float, float]]]
    hours_per_year: float
    efficiency: float
    # Optional display grouping for emissions (e.g. greenhouse gases);
    # consumed by the UI, never by the model.
    emission_groups: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        self.dep_plus = np.asarray(self.dep_plus, dtype=float)
        self.dep_minus = np.asarray(self.dep_minus, dtype=float)
        self.mop = np.asarray(self.mop, dtype=float)
        self.mpr = np.asarray(self.mpr, dtype=float)
        self.moc = np.asarray(self.moc, dtype=float)
        self.mec = np.asarray(self.mec, dtype=float)

    # -- index helpers -----------------------------------------------------

    def activity_ids(self) -> list[str]:
        return [a.id for a in self.activities]

    def activity_index(self) -> dict[str, int]:
        return {a.id: i for i, a in enumerate(self.activities)}

    def primary_indices(self) -> list[int]:
        return [i for i, a in enumerate(self.activities) if a.kind == PRIMARY]

    def secondary_indices(self) -> list[int]:
        return [i for i, a in enumerate(self.activities) if a.kind == SECONDARY]

    def indicator_names(self) -> list[str]:
        return list(self.indicator_tables.keys())


@dataclass
class AssessmentResult:
    pressures: np.ndarray
    receptors: np.ndarray
    emissions: np.ndarray
    indicators: dict[str, tuple[float, float, float]]


@dataclass
class Scenario:
    magnitudes: dict[str, float]
    positive_parts: dict[str, float]
    pressures: dict[str, float]
    receptors: dict[str, float]
    boiler_powers: dict[str, float]
    emissions: dict[str, float]
    indicators: dict[str, tuple[float, float, float]]
    total_cost: float
    total_outcome: float
    objective_values: dict[str, float]
    kind: str  # boundary | intermediate


@dataclass
class VariableMap:
    """Names of the LP variables generated for one PlanInstance build."""

    magnitude: dict[str, str]
    positive: dict[str, str]  # positive part; the magnitude var itself when unsplit
    negative: dict[str, str]  # split activities only
    binary: dict[str, str]  # split activities only
    boiler: dict[str, str]
    pressure: dict[str, str]
    receptor: dict[str, str]
    emission: dict[str, str]
    indicator: dict[str, str]  # worst-case linear form
    total_cost: str
    total_outcome: str

    def quantity_var(self, key: str):
        """Resolve a quantity key to its LP variable name, or None."""
        if key == KEY_TOTAL_COST:
            return self.total_cost
        if key == KEY_TOTAL_OUTCOME:
            return self.total_outcome
        if key.startswith(PREFIX_RECEPTOR):
            return self.receptor.get(key[len(PREFIX_RECEPTOR):])
        if key.startswith(PREFIX_EMISSION):
            return self.emission.get(key[len(PREFIX_EMISSION):])
        if key.startswith(PREFIX_INDICATOR):
            return self.indicator.get(key[len(PREFIX_INDICATOR):])
        return None


def _check_matrix(violations, name, mat, shape, lo=None, hi=None, zero_one=False):
    if mat.shape != shape:
        violations.append(f"{name}: expected shape {shape}, got {mat.shape}")
        return
    if not np.all(np.isfinite(mat)):
        violations.append(f"{name}: contains non-finite entries")
        return
    if zero_one:
        if not np.all((mat == 0.0) | (mat == 1.0)):
            violations.append(f"{name}: entries must be 0 or 1")
        return
    if lo is not None and np.any(mat < lo):
        violations.append(f"{name}: entries below {lo}")
    if hi is not None and np.any(mat > hi):
        violations.append(f"{name}: entries above {hi}")


def validate_instance(inst: PlanInstance) -> list[str]:
    """All invariant violations, each with the offending field path."""
    v: list[str] = []

    seen = set()
    for i, a in enumerate(inst.activities):
        path = f"activities[{i}]"
        if not a.id:
            v.append(f"{path}.id: empty")
        elif a.id in seen:
            v.append(f"{path}.id: duplicate id {a.id}")
        seen.add(a.id)
        if a.kind not in (PRIMARY, SECONDARY):
            v.append(f"{path}.kind: unknown kind {a.kind!r}")
        if not (np.isfinite(a.lower) and np.isfinite(a.upper)):
            v.append(f"{path}: bounds must be finite")
        elif a.lower > a.upper:
            v.append(f"{path}: lower {a.lower:g} > upper {a.upper:g}")
        elif a.kind == SECONDARY and a.lower < 0:
            v.append(f"{path}: secondary activity with negative lower bound")
        if not (np.isfinite(a.unit_cost) and np.isfinite(a.unit_outcome)):
            v.append(f"{path}: unit_cost/unit_outcome must be finite")

    n_pri = len(inst.primary_indices())
    n_sec = len(inst.secondary_indices())
    n_act = len(inst.activities)
    n_pre = len(inst.pressure_names)
    n_ric = len(inst.receptor_names)
    n_blr = len(inst.boilers)
    n_emi = len(inst.emission_names)

    _check_matrix(v, "dep_plus", inst.dep_plus, (n_pri, n_sec), lo=0.0)
    _check_matrix(v, "dep_minus", inst.dep_minus, (n_pri, n_sec), lo=0.0)
    _check_matrix(v, "mop", inst.mop, (n_act, n_pre), lo=0.0, hi=1.0)
    _check_matrix(v, "mpr", inst.mpr, (n_pre, n_ric), lo=0.0, hi=1.0)
    _check_matrix(v, "moc", inst.moc, (n_act, n_blr), zero_one=True)
    _check_matrix(v, "mec", inst.mec, (n_emi, n_blr), lo=0.0)

    for label, names in (
        ("pressure_names", inst.pressure_names),
        ("receptor_names", inst.receptor_names),
        ("emission_names", inst.emission_names),
    ):
        if len(set(names)) != len(names):
            v.append(f"{label}: duplicate names")
        if any(not n for n in names):
            v.append(f"{label}: empty name")

    ids = [b.id for b in inst.boilers]
    if len(set(ids)) != len(ids):
        v.append("boilers: duplicate ids")

    if not np.isfinite(inst.budget):
        v.append("budget: must be finite")
    if not np.isfinite(inst.min_outcome):
        v.append("min_outcome: must be finite")
    if not (0.0 < inst.efficiency <= 1.0):
        v.append(f"efficiency: {inst.efficiency:g} outside (0, 1]")
    if not (0.0 < inst.hours_per_year <= MAX_HOURS_PER_YEAR):
        v.append(
            f"hours_per_year: {inst.hours_per_year:g} outside (0, {MAX_HOURS_PER_YEAR:g}]"
        )

    emis = set(inst.emission_names)
    for ind, rows in inst.indicator_tables.items():
        for emission, triple in rows.items():
            path = f"indicator_tables[{ind}][{emission}]"
            if emission not in emis:
                v.append(f"{path}: unknown emission")
                continue
            if len(triple) != 3 or not all(np.isfinite(x) for x in triple):
                v.append(f"{path}: factor triple must be three finite reals")
                continue
            best, avg, worst = triple
            if not (best <= avg <= worst):
                v.append(f"{path}: best {best:g} <= average {avg:g} <= worst {worst:g} violated")

    grp_unknown = set(inst.emission_groups) - emis
    for name in sorted(grp_unknown):
        v.append(f"emission_groups[{name}]: unknown emission")

    return v


def instance_warnings(inst: PlanInstance) -> list[str]:
    """Non-fatal audit findings: emissions missing from an indicator table."""
    w = []
    for ind, rows in inst.indicator_tables.items():
        for emission in inst.emission_names:
            if emission not in rows:
                w.append(
                    f"indicator_tables[{ind}]: no factor row for emission "
                    f"{emission}; it contributes 0"
                )
    return w


def with_activity_bounds(
    inst: PlanInstance, bounds: Mapping[str, tuple[float, float]]
) -> PlanInstance:
    """Copy of the instance with some activities' bounds replaced.

    This is how magnitudes get pinned from outside: the quantity-key space
    deliberately has no per-activity magnitude key.
    """
    idx = inst.activity_index()
    unknown = [aid for aid in bounds if aid not in idx]
    if unknown:
        raise KeyError(f"unknown activity ids: {', '.join(sorted(unknown))}")
    acts = list(inst.activities)
    for aid, (lo, hi) in bounds.items():
        acts[idx[aid]] = replace(acts[idx[aid]], lower=float(lo), upper=float(hi))
    return replace(inst, activities=acts)
