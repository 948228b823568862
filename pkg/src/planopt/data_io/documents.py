"""Canonical JSON documents for scenarios, fronts, objectives, constraints.

One serialization, used verbatim by files, the HTTP service, and the CLI.
`canonical_bytes` is deliberately deterministic (sorted keys, fixed layout)
so identical payloads are byte-identical wherever they are produced.
"""

from __future__ import annotations

import json
from typing import Any

from ..errors import DocumentParseError, DocumentSchemaError, FileAccessError
from ..pareto import ParetoFront
from ..plan import ObjectiveSpec, Scenario, UserConstraint

SCHEMA_VERSION = 1

_SENSES = ("minimize", "maximize")
_RELATIONS = ("<=", "=", ">=")
_KINDS = ("boundary", "intermediate")


def canonical_bytes(document: Any) -> bytes:
    """Byte-stable UTF-8 JSON; floats keep full round-trip precision."""
    text = json.dumps(
        document, indent=2, sort_keys=True, ensure_ascii=False, allow_nan=False
    )
    return (text + "\n").encode("utf-8")


def parse_json_bytes(data: bytes, origin: str = "document") -> Any:
    try:
        return json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise DocumentParseError(f"{origin}: {exc}") from None


def _is_real(v: Any) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def _need_dict(doc: Any, path: str, problems: list[str]) -> bool:
    if not isinstance(doc, dict):
        problems.append(f"{path}: expected an object")
        return False
    return True


def _check_keys(doc: dict, path: str, required, optional, problems) -> bool:
    ok = True
    for key in required:
        if key not in doc:
            problems.append(f"{path}{key}: missing")
            ok = False
    for key in doc:
        if key not in required and key not in optional:
            problems.append(f"{path}{key}: unknown field")
            ok = False
    return ok


def _real_map(doc: Any, path: str, problems: list[str]) -> dict[str, float]:
    out = {}
    if not _need_dict(doc, path, problems):
        return out
    for key, value in doc.items():
        if not isinstance(key, str):
            problems.append(f"{path}: keys must be strings")
        elif not _is_real(value):
            problems.append(f"{path}[{key!r}]: expected a number")
        else:
            out[key] = float(value)
    return out


def _triple(value: Any, path: str, problems: list[str]):
    if (
        not isinstance(value, list)
        or len(value) != 3
        or not all(_is_real(v) for v in value)
    ):
        problems.append(f"{path}: expected a list of three numbers")
        return (0.0, 0.0, 0.0)
    return (float(value[0]), float(value[1]), float(value[2]))


# ------------------------------------------------------------- scenarios


def scenario_to_document(scenario: Scenario) -> dict:
    return {
        "magnitudes": dict(scenario.magnitudes),
        "positive_parts": dict(scenario.positive_parts),
        "pressures": dict(scenario.pressures),
        "receptors": dict(scenario.receptors),
        "boiler_powers": dict(scenario.boiler_powers),
        "emissions": dict(scenario.emissions),
        "indicators": {k: list(v) for k, v in scenario.indicators.items()},
        "total_cost": scenario.total_cost,
        "total_outcome": scenario.total_outcome,
        "objective_values": dict(scenario.objective_values),
        "kind": scenario.kind,
    }


_SCENARIO_KEYS = (
    "magnitudes",
    "positive_parts",
    "pressures",
    "receptors",
    "boiler_powers",
    "emissions",
    "indicators",
    "total_cost",
    "total_outcome",
    "objective_values",
    "kind",
)


def _scenario_from(doc: Any, path: str, problems: list[str]) -> Scenario | None:
    if not _need_dict(doc, path, problems):
        return None
    if not _check_keys(doc, f"{path}.", _SCENARIO_KEYS, (), problems):
        return None
    indicators = {}
    ind_doc = doc["indicators"]
    if _need_dict(ind_doc, f"{path}.indicators", problems):
        for name, trip in ind_doc.items():
            indicators[name] = _triple(trip, f"{path}.indicators[{name!r}]", problems)
    for field in ("total_cost", "total_outcome"):
        if not _is_real(doc[field]):
            problems.append(f"{path}.{field}: expected a number")
    if doc["kind"] not in _KINDS:
        problems.append(f"{path}.kind: expected one of {list(_KINDS)}")
    scen = Scenario(
        magnitudes=_real_map(doc["magnitudes"], f"{path}.magnitudes", problems),
        positive_parts=_real_map(
            doc["positive_parts"], f"{path}.positive_parts", problems
        ),
        pressures=_real_map(doc["pressures"], f"{path}.pressures", problems),
        receptors=_real_map(doc["receptors"], f"{path}.receptors", problems),
        boiler_powers=_real_map(
            doc["boiler_powers"], f"{path}.boiler_powers", problems
        ),
        emissions=_real_map(doc["emissions"], f"{path}.emissions", problems),
        indicators=indicators,
        total_cost=float(doc["total_cost"]) if _is_real(doc["total_cost"]) else 0.0,
        total_outcome=(
            float(doc["total_outcome"]) if _is_real(doc["total_outcome"]) else 0.0
        ),
        objective_values=_real_map(
            doc["objective_values"], f"{path}.objective_values", problems
        ),
        kind=doc["kind"] if isinstance(doc["kind"], str) else "intermediate",
    )
    return scen


def document_to_scenario(doc: Any) -> Scenario:
    problems: list[str] = []
    scen = _scenario_from(doc, "scenario", problems)
    if problems:
        raise DocumentSchemaError(problems)
    assert scen is not None
    return scen


# ----------------------------------------------------------------- fronts


def front_to_document(front: ParetoFront) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "scenarios": [scenario_to_document(s) for s in front.scenarios],
        "utopia": list(front.utopia),
        "nadir_estimate": list(front.nadir_estimate),
        "dropped": front.dropped,
        "objective_labels": list(front.objective_labels),
    }


def document_to_front(doc: Any) -> ParetoFront:
    problems: list[str] = []
    if not _need_dict(doc, "front", problems):
        raise DocumentSchemaError(problems)
    required = ("schema_version", "scenarios", "utopia", "nadir_estimate", "dropped")
    _check_keys(doc, "", required, ("objective_labels",), problems)
    if problems:
        raise DocumentSchemaError(problems)
    if doc["schema_version"] != SCHEMA_VERSION:
        raise DocumentSchemaError(
            [f"schema_version: unsupported version {doc['schema_version']!r}"]
        )
    scenarios = []
    if isinstance(doc["scenarios"], list):
        for i, sdoc in enumerate(doc["scenarios"]):
            scen = _scenario_from(sdoc, f"scenarios[{i}]", problems)
            if scen is not None:
                scenarios.append(scen)
    else:
        problems.append("scenarios: expected a list")
    vectors = {}
    for field in ("utopia", "nadir_estimate"):
        value = doc[field]
        if not isinstance(value, list) or not all(_is_real(v) for v in value):
            problems.append(f"{field}: expected a list of numbers")
            vectors[field] = []
        else:
            vectors[field] = [float(v) for v in value]
    if not isinstance(doc["dropped"], int) or isinstance(doc["dropped"], bool):
        problems.append("dropped: expected an integer")
    labels = doc.get("objective_labels", [])
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        problems.append("objective_labels: expected a list of strings")
        labels = []
    if problems:
        raise DocumentSchemaError(problems)
    return ParetoFront(
        scenarios=scenarios,
        utopia=vectors["utopia"],
        nadir_estimate=vectors["nadir_estimate"],
        dropped=doc["dropped"],
        objective_labels=labels,
    )


def write_front(front: ParetoFront, path) -> None:
    data = canonical_bytes(front_to_document(front))
    with open(path, "wb") as fh:
        fh.write(data)


def read_front(path) -> ParetoFront:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise FileAccessError(f"{path}: {exc}") from None
    return document_to_front(parse_json_bytes(data, str(path)))


# -------------------------------------------------- assessment results


def assessment_to_document(instance, result) -> dict:
    """Name-keyed document for a fixed-plan assessment."""
    return {
        "schema_version": SCHEMA_VERSION,
        "pressures": {
            name: float(v)
            for name, v in zip(instance.pressure_names, result.pressures)
        },
        "receptors": {
            name: float(v)
            for name, v in zip(instance.receptor_names, result.receptors)
        },
        "emissions": {
            name: float(v)
            for name, v in zip(instance.emission_names, result.emissions)
        },
        "indicators": {k: list(v) for k, v in result.indicators.items()},
    }


# --------------------------------------------- objectives and constraints


def objective_to_document(spec: ObjectiveSpec) -> dict:
    return {"terms": dict(spec.terms), "sense": spec.sense, "label": spec.label}


def document_to_objective(doc: Any, path: str = "objective") -> ObjectiveSpec:
    problems: list[str] = []
    if not _need_dict(doc, path, problems):
        raise DocumentSchemaError(problems)
    _check_keys(doc, f"{path}.", ("terms", "sense", "label"), (), problems)
    if problems:
        raise DocumentSchemaError(problems)
    terms = _real_map(doc["terms"], f"{path}.terms", problems)
    if doc["sense"] not in _SENSES:
        problems.append(f"{path}.sense: expected one of {list(_SENSES)}")
    if not isinstance(doc["label"], str) or not doc["label"]:
        problems.append(f"{path}.label: expected a non-empty string")
    if problems:
        raise DocumentSchemaError(problems)
    return ObjectiveSpec(terms=terms, sense=doc["sense"], label=doc["label"])


def constraint_to_document(uc: UserConstraint) -> dict:
    return {"terms": dict(uc.terms), "relation": uc.relation, "rhs": uc.rhs}


def document_to_constraint(doc: Any, path: str = "constraint") -> UserConstraint:
    problems: list[str] = []
    if not _need_dict(doc, path, problems):
        raise DocumentSchemaError(problems)
    _check_keys(doc, f"{path}.", ("terms", "relation", "rhs"), (), problems)
    if problems:
        raise DocumentSchemaError(problems)
    terms = _real_map(doc["terms"], f"{path}.terms", problems)
    if doc["relation"] not in _RELATIONS:
        problems.append(f"{path}.relation: expected one of {list(_RELATIONS)}")
    if not _is_real(doc["rhs"]):
        problems.append(f"{path}.rhs: expected a number")
    if problems:
        raise DocumentSchemaError(problems)
    return UserConstraint(terms=terms, relation=doc["relation"], rhs=float(doc["rhs"]))
