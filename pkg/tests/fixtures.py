"""Shared plan instances for the test suite.

segment_instance is the analytic two-objective workhorse: two activities
x, y in [0,1] with an outcome floor x + y >= 1, total_cost = x and the
single receptor = y, so minimizing (cost, receptor) traces the segment
x + y = 1 exactly. region_instance mirrors the shipped richer sample.
"""

from __future__ import annotations

import numpy as np

from planopt.plan import Activity, BoilerType, PlanInstance


def toy_single() -> PlanInstance:
    # One primary activity, nothing else: minimal valid instance.
    return PlanInstance(
        activities=[
            Activity("gen", "Generic activity", "primary", 0.0, 10.0, 2.0, 1.0),
        ],
        budget=10.0,
        min_outcome=3.0,
        dep_plus=np.zeros((1, 0)),
        dep_minus=np.zeros((1, 0)),
        mop=np.zeros((1, 0)),
        mpr=np.zeros((0, 0)),
        pressure_names=[],
        receptor_names=[],
        boilers=[],
        moc=np.zeros((1, 0)),
        mec=np.zeros((0, 0)),
        emission_names=[],
        indicator_tables={},
        hours_per_year=7500.0,
        efficiency=0.39,
    )


def dep_instance() -> PlanInstance:
    # Primary a may decommission; secondary s follows both directions.
    return PlanInstance(
        activities=[
            Activity("a", "Plant A", "primary", -5.0, 5.0, 1.0, 1.0),
            Activity("s", "Support S", "secondary", 0.0, 10.0, 0.5, 0.0),
        ],
        budget=1000.0,
        min_outcome=-1000.0,
        dep_plus=np.array([[0.25]]),
        dep_minus=np.array([[0.5]]),
        mop=np.zeros((2, 0)),
        mpr=np.zeros((0, 0)),
        pressure_names=[],
        receptor_names=[],
        boilers=[],
        moc=np.zeros((2, 0)),
        mec=np.zeros((0, 0)),
        emission_names=[],
        indicator_tables={},
        hours_per_year=7500.0,
        efficiency=0.39,
    )


def segment_instance() -> PlanInstance:
    return PlanInstance(
        activities=[
            Activity("x", "Costly clean activity", "primary", 0.0, 1.0, 1.0, 1.0),
            Activity("y", "Cheap loading activity", "primary", 0.0, 1.0, 0.0, 1.0),
        ],
        budget=10.0,
        min_outcome=1.0,
        dep_plus=np.zeros((2, 0)),
        dep_minus=np.zeros((2, 0)),
        mop=np.array([[0.0], [1.0]]),
        mpr=np.array([[1.0]]),
        pressure_names=["load"],
        receptor_names=["air"],
        boilers=[],
        moc=np.zeros((2, 0)),
        mec=np.zeros((0, 0)),
        emission_names=[],
        indicator_tables={},
        hours_per_year=7500.0,
        efficiency=0.39,
    )


def boiler_instance(hours: float = 1000.0, mec_value: float = 2.0) -> PlanInstance:
    # Single gas activity driven by one boiler; used for emission arithmetic.
    return PlanInstance(
        activities=[
            Activity("gas", "Gas plant", "primary", 0.0, 10.0, 2.0, 1.0),
        ],
        budget=100.0,
        min_outcome=0.0,
        dep_plus=np.zeros((1, 0)),
        dep_minus=np.zeros((1, 0)),
        mop=np.zeros((1, 0)),
        mpr=np.zeros((0, 0)),
        pressure_names=[],
        receptor_names=[],
        boilers=[BoilerType("b1", "Gas boiler")],
        moc=np.array([[1.0]]),
        mec=np.array([[mec_value]]),
        emission_names=["CO2"],
        indicator_tables={"warming": {"CO2": (1.0, 1.0, 1.0)}},
        hours_per_year=hours,
        efficiency=0.39,
    )


def region_instance() -> PlanInstance:
    """Six activities, four pressures, three receptors; the shipped shape."""
    activities = [
        Activity("a_gas", "Gas power", "primary", 0.0, 18.0, 2.0, 3.0),
        Activity("a_bio", "Biomass power", "primary", 0.0, 12.0, 3.5, 2.0),
        Activity("a_coal", "Coal power", "primary", -10.0, 6.0, 4.0, 2.8),
        Activity("a_wind", "Wind power", "primary", 0.0, 15.0, 5.0, 1.5),
        Activity("s_grid", "Grid reinforcement", "secondary", 0.0, 40.0, 0.8, 0.0),
        Activity("s_jobs", "Workforce programs", "secondary", 0.0, 30.0, 0.2, 0.1),
    ]
    dep_plus = np.array(
        [
            [0.50, 0.10],
            [0.40, 0.30],
            [0.60, 0.20],
            [0.30, 0.25],
        ]
    )
    dep_minus = np.array(
        [
            [0.00, 0.00],
            [0.00, 0.00],
            [0.35, 0.15],
            [0.00, 0.00],
        ]
    )
    mop = np.array(
        [
            [0.8, 0.2, 0.3, 0.4],
            [0.5, 0.6, 0.2, 0.3],
            [1.0, 0.4, 0.5, 0.5],
            [0.0, 0.5, 0.0, 0.6],
            [0.1, 0.7, 0.0, 0.2],
            [0.0, 0.1, 0.1, 0.0],
        ]
    )
    mpr = np.array(
        [
            [1.0, 0.5, 0.6],
            [0.0, 0.8, 0.3],
            [0.2, 0.6, 0.2],
            [0.0, 0.1, 0.7],
        ]
    )
    moc = np.array(
        [
            [1.0, 0.0],
            [0.0, 1.0],
            [0.0, 0.0],
            [0.0, 0.0],
            [0.0, 0.0],
            [0.0, 0.0],
        ]
    )
    mec = np.array(
        [
            [56.0, 40.0],
            [0.12, 0.25],
            [0.05, 0.02],
        ]
    )
    indicator_tables = {
        "global_warming": {
            "CO2": (1.0, 1.0, 1.0),
            "NOx": (10.0, 15.0, 20.0),
        },
        "human_toxicity": {
            # NO / NO2 bracket relative to the reference substance.
            "NOx": (95.0, 197.5, 300.0),
            "SO2": (10.0, 20.0, 30.0),
        },
        "acidification": {
            "NOx": (0.5, 0.6, 0.7),
            "SO2": (1.0, 1.2, 1.4),
        },
    }
    return PlanInstance(
        activities=activities,
        budget=150.0,
        min_outcome=40.0,
        dep_plus=dep_plus,
        dep_minus=dep_minus,
        mop=mop,
        mpr=mpr,
        pressure_names=["air_load", "land_use", "water_use", "noise"],
        receptor_names=["air_quality", "ecosystems", "wellbeing"],
        boilers=[
            BoilerType("blr_gas", "Gas turbine"),
            BoilerType("blr_bio", "Biomass boiler"),
        ],
        moc=moc,
        mec=mec,
        emission_names=["CO2", "NOx", "SO2"],
        indicator_tables=indicator_tables,
        hours_per_year=7500.0,
        efficiency=0.39,
        emission_groups={
            "CO2": "Greenhouse gases",
            "NOx": "Other pollutants",
            "SO2": "Other pollutants",
        },
    )


def corpus() -> list[PlanInstance]:
    return [
        toy_single(),
        dep_instance(),
        segment_instance(),
        boiler_instance(),
        region_instance(),
    ]
