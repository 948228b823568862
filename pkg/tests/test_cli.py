"""Command-line behavior: exit codes, spec parsing, document outputs."""

import json

import pytest

from planopt.cli import main, parse_constraint, parse_mapping, parse_objective
from planopt.cli import SpecSyntaxError
from planopt.data_io import (
    canonical_bytes,
    instance_to_document,
    read_front,
    write_instance,
)
from planopt.plan import ObjectiveSpec, UserConstraint

from fixtures import boiler_instance, region_instance, segment_instance


@pytest.fixture
def segment_path(tmp_path):
    path = tmp_path / "segment.json"
    write_instance(segment_instance(), path)
    return str(path)


@pytest.fixture
def region_path(tmp_path):
    path = tmp_path / "region.json"
    write_instance(region_instance(), path)
    return str(path)


class TestSpecParsing:
    def test_objective_minimize(self):
        spec = parse_objective("min 1*total_cost")
        assert spec == ObjectiveSpec(
            {"total_cost": 1.0}, "minimize", "min 1*total_cost"
        )

    def test_objective_multi_term(self):
        spec = parse_objective("max 2*total_outcome + -0.5*receptor:air")
        assert spec.terms == {"total_outcome": 2.0, "receptor:air": -0.5}
        assert spec.sense == "maximize"

    def test_objective_repeated_key_accumulates(self):
        spec = parse_objective("min 1*total_cost + 2*total_cost")
        assert spec.terms == {"total_cost": 3.0}

    def test_objective_label_is_canonical(self):
        a = parse_objective("min 1*total_cost   +  2*receptor:air")
        b = parse_objective("min 1*total_cost + 2*receptor:air")
        assert a.label == b.label

    def test_constraint_forms(self):
        uc = parse_constraint("1*total_cost <= 100")
        assert uc == UserConstraint({"total_cost": 1.0}, "<=", 100.0)
        assert parse_constraint("1*a >= -2").relation == ">="
        assert parse_constraint("1*a = 0.5").relation == "="

    def test_objective_missing_sense(self):
        with pytest.raises(SpecSyntaxError) as exc:
            parse_objective("1*total_cost")
        assert exc.value.pos == 0

    def test_objective_missing_star(self):
        with pytest.raises(SpecSyntaxError) as exc:
            parse_objective("min 1 total_cost")
        assert exc.value.pos == 6

    def test_caret_rendering_points_at_error(self):
        with pytest.raises(SpecSyntaxError) as exc:
            parse_objective("min foo*total_cost")
        lines = exc.value.render().splitlines()
        assert lines[1] == "  min foo*total_cost"
        assert lines[2] == "  " + " " * 4 + "^"

    def test_constraint_missing_relation(self):
        with pytest.raises(SpecSyntaxError):
            parse_constraint("1*total_cost 100")

    def test_unexpected_character(self):
        with pytest.raises(SpecSyntaxError):
            parse_objective("min 1*total_cost & 2*x")

    def test_mapping_parse(self):
        mapping = parse_mapping("high=0.9,low=0.2")
        assert mapping["high"] == 0.9
        assert mapping["low"] == 0.2
        assert mapping["medium"] == 0.5  # untouched default

    def test_mapping_bad_value(self):
        with pytest.raises(SpecSyntaxError):
            parse_mapping("high=tall")


class TestValidate:
    def test_valid_instance(self, segment_path, capfd):
        assert main(["validate", segment_path]) == 0
        assert capfd.readouterr().out.strip() == "OK"

    def test_invariant_violation_exits_2(self, tmp_path, capfd):
        doc = instance_to_document(segment_instance())
        doc["efficiency"] = 0.0
        path = tmp_path / "bad.json"
        path.write_bytes(canonical_bytes(doc))
        assert main(["validate", str(path)]) == 2
        assert "efficiency" in capfd.readouterr().err

    def test_missing_file_exits_3(self, tmp_path, capfd):
        assert main(["validate", str(tmp_path / "absent.json")]) == 3

    def test_truncated_file_exits_2(self, tmp_path, capfd):
        path = tmp_path / "trunc.json"
        good = canonical_bytes(instance_to_document(segment_instance()))
        path.write_bytes(good[:40])
        assert main(["validate", str(path)]) == 2


class TestSolve:
    def test_writes_scenario_document(self, segment_path, tmp_path):
        out = tmp_path / "scen.json"
        rc = main(
            [
                "solve", segment_path,
                "--objective", "min 1*total_cost",
                "--out", str(out),
            ]
        )
        assert rc == 0
        doc = json.loads(out.read_text())
        assert doc["objective_values"]["min 1*total_cost"] == pytest.approx(0.0)
        assert doc["magnitudes"]["y"] == pytest.approx(1.0)

    def test_budget_binds_when_maximizing_outcome(self, region_path, tmp_path):
        out = tmp_path / "scen.json"
        rc = main(
            [
                "solve", region_path,
                "--objective", "max 1*total_outcome",
                "--out", str(out),
            ]
        )
        assert rc == 0
        doc = json.loads(out.read_text())
        assert doc["total_cost"] == pytest.approx(
            region_instance().budget, abs=1e-6
        )

    def test_constraint_flag_enforced(self, segment_path, tmp_path):
        out = tmp_path / "scen.json"
        rc = main(
            [
                "solve", segment_path,
                "--objective", "min 1*receptor:air",
                "--constraint", "1*total_cost <= 0.25",
                "--out", str(out),
            ]
        )
        assert rc == 0
        doc = json.loads(out.read_text())
        assert doc["total_cost"] <= 0.25 + 1e-9
        assert doc["receptors"]["air"] == pytest.approx(0.75, abs=1e-6)

    def test_malformed_objective_exits_2_with_caret(self, segment_path, capfd):
        rc = main(["solve", segment_path, "--objective", "min total_cost"])
        assert rc == 2
        err = capfd.readouterr().err
        assert "^" in err and "min total_cost" in err

    def test_unknown_key_exits_2(self, segment_path, capfd):
        rc = main(["solve", segment_path, "--objective", "min 1*receptor:sea"])
        assert rc == 2

    def test_infeasible_exits_4(self, segment_path, capfd):
        rc = main(
            [
                "solve", segment_path,
                "--objective", "min 1*total_cost",
                "--constraint", "1*total_cost <= -5",
            ]
        )
        assert rc == 4

    def test_mapping_override_changes_result(self, tmp_path):
        doc = instance_to_document(segment_instance())
        doc["mop"] = [["null"], ["high"]]
        path = tmp_path / "qual.json"
        path.write_bytes(canonical_bytes(doc))
        out = tmp_path / "scen.json"
        rc = main(
            [
                "solve", str(path),
                "--mapping", "high=0.6",
                "--objective", "min 1*total_cost",
                "--out", str(out),
            ]
        )
        assert rc == 0
        scen = json.loads(out.read_text())
        assert scen["receptors"]["air"] == pytest.approx(0.6, abs=1e-9)


class TestPareto:
    def test_five_point_front_table_and_file(self, segment_path, tmp_path, capfd):
        out = tmp_path / "front.json"
        rc = main(
            [
                "pareto", segment_path,
                "--objectives", "min 1*total_cost; min 1*receptor:air",
                "--points", "5",
                "--out", str(out),
            ]
        )
        assert rc == 0
        lines = capfd.readouterr().out.strip().splitlines()
        assert len(lines) == 6  # header + 5 scenarios
        assert lines[0].startswith("kind")
        front = read_front(out)
        assert len(front.scenarios) == 5

    def test_single_point_exits_2(self, segment_path, capfd):
        rc = main(
            [
                "pareto", segment_path,
                "--objectives", "min 1*total_cost; min 1*receptor:air",
                "--points", "1",
            ]
        )
        assert rc == 2

    def test_duplicated_objective_collapses(self, segment_path, capfd):
        rc = main(
            [
                "pareto", segment_path,
                "--objectives", "min 1*total_cost; min 1*total_cost",
                "--points", "4",
            ]
        )
        assert rc == 0
        lines = capfd.readouterr().out.strip().splitlines()
        assert len(lines) == 2  # header + single collapsed scenario

    def test_table_columns_are_fixed_width(self, segment_path, capfd):
        rc = main(
            [
                "pareto", segment_path,
                "--objectives", "min 1*total_cost; min 1*receptor:air",
                "--points", "3",
            ]
        )
        assert rc == 0
        lines = capfd.readouterr().out.rstrip("\n").splitlines()
        assert len({len(line) for line in lines}) == 1


class TestAssess:
    def _plan_file(self, tmp_path, mags, powers=None):
        doc = {"magnitudes": mags}
        if powers is not None:
            doc["boiler_powers"] = powers
        path = tmp_path / "plan.json"
        path.write_text(json.dumps(doc))
        return str(path)

    def test_zero_plan_gives_zero_result(self, segment_path, tmp_path):
        plan = self._plan_file(tmp_path, {"x": 0.0, "y": 0.0})
        out = tmp_path / "result.json"
        rc = main(["assess", segment_path, "--magnitudes", plan, "--out", str(out)])
        assert rc == 0
        doc = json.loads(out.read_text())
        assert doc["pressures"] == {"load": 0.0}
        assert doc["receptors"] == {"air": 0.0}

    def test_boiler_emission_hand_value(self, tmp_path):
        inst_path = tmp_path / "boiler.json"
        write_instance(boiler_instance(hours=1000.0, mec_value=2.0), inst_path)
        plan = self._plan_file(
            tmp_path, {"gas": 1.0}, {"b1": 1.0}
        )
        out = tmp_path / "result.json"
        rc = main(
            ["assess", str(inst_path), "--magnitudes", plan, "--out", str(out)]
        )
        assert rc == 0
        doc = json.loads(out.read_text())
        # 2 g/GJ * (1000 h * 1 MW / 0.39) * 3.6 GJ/MWh
        assert doc["emissions"]["CO2"] == pytest.approx(18461.54, abs=0.01)

    def test_out_of_bounds_magnitude_exits_2(self, segment_path, tmp_path, capfd):
        plan = self._plan_file(tmp_path, {"x": 5.0, "y": 0.0})
        rc = main(["assess", segment_path, "--magnitudes", plan])
        assert rc == 2
        assert "outside" in capfd.readouterr().err

    def test_unknown_activity_exits_2(self, segment_path, tmp_path, capfd):
        plan = self._plan_file(tmp_path, {"x": 0.0, "y": 0.0, "zz": 1.0})
        rc = main(["assess", segment_path, "--magnitudes", plan])
        assert rc == 2

    def test_missing_plan_file_exits_3(self, segment_path, tmp_path):
        rc = main(
            ["assess", segment_path, "--magnitudes", str(tmp_path / "nope.json")]
        )
        assert rc == 3
