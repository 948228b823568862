"""Assessment math: worked examples and algebraic properties."""

from __future__ import annotations

import numpy as np
import pytest

from planopt.errors import AssessmentError
from planopt.plan import (
    Activity,
    BoilerType,
    PlanInstance,
    assess,
    compute_emissions,
    compute_indicators,
    compute_pressures,
    compute_receptors,
    instance_warnings,
    validate_instance,
)

from fixtures import boiler_instance, region_instance


def _matrix_instance(mop, mpr, n_act=None):
    mop = np.asarray(mop, dtype=float)
    mpr = np.asarray(mpr, dtype=float)
    n_act = mop.shape[0] if n_act is None else n_act
    acts = [
        Activity(f"a{i}", f"Activity {i}", "primary", -10.0, 10.0, 1.0, 1.0)
        for i in range(n_act)
    ]
    return PlanInstance(
        activities=acts,
        budget=1e6,
        min_outcome=-1e6,
        dep_plus=np.zeros((n_act, 0)),
        dep_minus=np.zeros((n_act, 0)),
        mop=mop,
        mpr=mpr,
        pressure_names=[f"p{j}" for j in range(mop.shape[1])],
        receptor_names=[f"r{j}" for j in range(mpr.shape[1])],
        boilers=[],
        moc=np.zeros((n_act, 0)),
        mec=np.zeros((0, 0)),
        emission_names=[],
        indicator_tables={},
        hours_per_year=7500.0,
        efficiency=0.39,
    )


# --- pressures ---


def test_pressures_zero_plan():
    inst = _matrix_instance([[1.0, 0.5, 0.0]], [[0.0], [0.0], [0.0]])
    out = compute_pressures(inst, {"a0": 0.0})
    assert np.array_equal(out, np.zeros(3))


def test_pressures_hand_case():
    inst = _matrix_instance([[1.0, 0.5, 0.0]], [[0.0], [0.0], [0.0]])
    out = compute_pressures(inst, {"a0": 2.0})
    assert out == pytest.approx([2.0, 1.0, 0.0])


def test_pressures_ignore_negative_magnitudes():
    inst = _matrix_instance([[1.0, 0.5, 0.9]], [[0.0], [0.0], [0.0]])
    out = compute_pressures(inst, {"a0": -3.0})
    assert np.array_equal(out, np.zeros(3))


def test_pressures_unknown_and_missing_ids():
    inst = _matrix_instance([[1.0]], [[1.0]])
    with pytest.raises(AssessmentError, match="unknown activity"):
        compute_pressures(inst, {"a0": 0.0, "zz": 1.0})
    with pytest.raises(AssessmentError, match="missing magnitudes"):
        compute_pressures(inst, {})


# --- receptors ---


def test_receptors_zero():
    inst = _matrix_instance([[1.0, 1.0]], [[0.3], [0.4]])
    assert np.array_equal(compute_receptors(inst, [0.0, 0.0]), np.zeros(1))


def test_receptors_identity():
    inst = _matrix_instance([[1.0, 1.0]], np.eye(2))
    out = compute_receptors(inst, [3.0, 7.0])
    assert out == pytest.approx([3.0, 7.0])


def test_receptors_hand_case():
    inst = _matrix_instance([[1.0, 1.0]], [[0.5], [0.25]])
    out = compute_receptors(inst, [1.0, 2.0])
    assert out == pytest.approx([1.0])


def test_receptors_dimension_mismatch():
    inst = _matrix_instance([[1.0, 1.0]], [[0.5], [0.25]])
    with pytest.raises(AssessmentError, match="pressure vector"):
        compute_receptors(inst, [1.0, 2.0, 3.0])


# --- emissions ---


def test_emissions_zero_powers():
    inst = boiler_instance()
    assert np.array_equal(compute_emissions(inst, {"b1": 0.0}), np.zeros(1))


def test_emissions_hand_case():
    # 1 MW for 1000 h at 39% efficiency burns 9230.77 GJ of fuel.
    inst = boiler_instance(hours=1000.0, mec_value=2.0)
    out = compute_emissions(inst, {"b1": 1.0})
    assert out[0] == pytest.approx(18461.54, abs=0.01)


def test_emissions_pure_unit_conversion():
    inst = boiler_instance(hours=1.0, mec_value=1.0)
    inst.efficiency = 1.0
    out = compute_emissions(inst, {"b1": 1.0})
    assert out[0] == pytest.approx(3.6, abs=1e-12)


def test_emissions_negative_power_rejected():
    inst = boiler_instance()
    with pytest.raises(AssessmentError, match="negative boiler"):
        compute_emissions(inst, {"b1": -1.0})


# --- indicators ---


def test_indicator_reference_substance_bracket():
    inst = boiler_instance()
    inst.emission_names = ["NOx"]
    inst.indicator_tables = {"human_toxicity": {"NOx": (95.0, 197.5, 300.0)}}
    out = compute_indicators(inst, [1.0])
    assert out["human_toxicity"] == pytest.approx((95.0, 197.5, 300.0))


def test_indicator_zero_emissions():
    inst = region_instance()
    out = compute_indicators(inst, np.zeros(3))
    for triple in out.values():
        assert triple == pytest.approx((0.0, 0.0, 0.0))


def test_indicator_linearity_two_rows():
    inst = boiler_instance()
    inst.emission_names = ["e1", "e2"]
    inst.mec = np.array([[0.0], [0.0]])
    inst.indicator_tables = {
        "ind": {"e1": (1.0, 1.0, 1.0), "e2": (2.0, 2.0, 2.0)}
    }
    out = compute_indicators(inst, [1.0, 1.0])
    assert out["ind"] == pytest.approx((3.0, 3.0, 3.0))


def test_indicator_missing_row_contributes_zero_with_warning():
    inst = region_instance()
    # human_toxicity has no CO2 row.
    out = compute_indicators(inst, [5.0, 0.0, 0.0])
    assert out["human_toxicity"] == pytest.approx((0.0, 0.0, 0.0))
    warns = instance_warnings(inst)
    assert any("human_toxicity" in w and "CO2" in w for w in warns)
    assert validate_instance(inst) == []


def test_indicator_ordering_on_random_nonnegative_emissions():
    inst = region_instance()
    rng = np.random.default_rng(5)
    for _ in range(200):
        e = rng.uniform(0.0, 1e4, size=3)
        for best, avg, worst in compute_indicators(inst, e).values():
            assert best <= avg + 1e-12
            assert avg <= worst + 1e-12


def test_indicator_negative_emissions_rejected():
    inst = region_instance()
    with pytest.raises(AssessmentError, match="negative emissions"):
        compute_indicators(inst, [-1.0, 0.0, 0.0])


# --- assess composition and properties ---


def test_assess_zero_plan_is_zero():
    inst = region_instance()
    zeros = {a.id: 0.0 for a in inst.activities}
    res = assess(inst, zeros, {b.id: 0.0 for b in inst.boilers})
    assert np.array_equal(res.pressures, np.zeros(4))
    assert np.array_equal(res.receptors, np.zeros(3))
    assert np.array_equal(res.emissions, np.zeros(3))
    for triple in res.indicators.values():
        assert triple == pytest.approx((0.0, 0.0, 0.0))


def test_assess_linearity():
    inst = region_instance()
    rng = np.random.default_rng(11)
    ids = [a.id for a in inst.activities]
    bids = [b.id for b in inst.boilers]
    for _ in range(20):
        m = {a: float(rng.uniform(-5, 10)) for a in ids}
        bp = {b: float(rng.uniform(0, 8)) for b in bids}
        alpha = float(rng.uniform(0, 3))
        base = assess(inst, m, bp)
        # Positive parts scale only when magnitudes keep their signs, which
        # multiplying by a nonnegative alpha preserves.
        scaled = assess(
            inst,
            {k: alpha * v for k, v in m.items()},
            {k: alpha * v for k, v in bp.items()},
        )
        assert scaled.pressures == pytest.approx(alpha * base.pressures, rel=1e-9, abs=1e-12)
        assert scaled.receptors == pytest.approx(alpha * base.receptors, rel=1e-9, abs=1e-12)
        assert scaled.emissions == pytest.approx(alpha * base.emissions, rel=1e-9, abs=1e-9)
        for name in base.indicators:
            assert scaled.indicators[name] == pytest.approx(
                tuple(alpha * x for x in base.indicators[name]), rel=1e-9, abs=1e-9
            )


def test_assess_monotone_in_positive_magnitudes():
    inst = region_instance()
    ids = [a.id for a in inst.activities]
    m = {a: 1.0 for a in ids}
    base = assess(inst, m, {b.id: 0.0 for b in inst.boilers})
    m2 = dict(m)
    m2["a_gas"] = 2.0
    bumped = assess(inst, m2, {b.id: 0.0 for b in inst.boilers})
    assert np.all(bumped.pressures >= base.pressures - 1e-12)
    assert np.all(bumped.receptors >= base.receptors - 1e-12)


def test_assess_invariant_to_negative_depth():
    inst = region_instance()
    ids = [a.id for a in inst.activities]
    m1 = {a: 3.0 for a in ids}
    m1["a_coal"] = -2.0
    m2 = dict(m1)
    m2["a_coal"] = -9.0
    bp = {b.id: 1.0 for b in inst.boilers}
    r1 = assess(inst, m1, bp)
    r2 = assess(inst, m2, bp)
    assert np.array_equal(r1.pressures, r2.pressures)
    assert np.array_equal(r1.receptors, r2.receptors)
    assert np.array_equal(r1.emissions, r2.emissions)
