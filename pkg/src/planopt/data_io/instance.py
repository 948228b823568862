"""Plan instance documents: JSON files mirroring PlanInstance field-for-field.

Matrix fields accept three spellings:
  * inline rows of numbers,
  * inline rows of qualitative labels (high/medium/low/null), converted
    through the qualitative mapping,
  * a string naming a delimited table file (relative to the document), with
    one header row of column names and one header column of row names.
A single matrix must stick to one cell kind; mixed files are rejected.
"""

from __future__ import annotations

import csv
import os
from typing import Any

import numpy as np

from ..errors import (
    DocumentParseError,
    DocumentSchemaError,
    FileAccessError,
    InstanceInvariantError,
)
from ..plan import Activity, BoilerType, PlanInstance, validate_instance
from .documents import SCHEMA_VERSION, _is_real, canonical_bytes, parse_json_bytes
from .qualitative import (
    DEFAULT_MAPPING,
    QUALITATIVE_LABELS,
    QualitativeMatrix,
    qualitative_to_coefficient,
)

_ACTIVITY_KEYS = ("id", "name", "kind", "lower", "upper", "unit_cost", "unit_outcome")
_BOILER_KEYS = ("id", "name")
_TOP_REQUIRED = (
    "schema_version",
    "activities",
    "budget",
    "min_outcome",
    "dep_plus",
    "dep_minus",
    "mop",
    "mpr",
    "pressure_names",
    "receptor_names",
    "boilers",
    "moc",
    "mec",
    "emission_names",
    "indicator_tables",
    "hours_per_year",
    "efficiency",
)
_TOP_OPTIONAL = ("emission_groups", "qualitative_mapping")


def _read_table(path: str, problems: list[str], field: str):
    """Delimited table -> (row_names, column_names, cells as strings)."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise FileAccessError(f"{field}: table {path!r}: {exc}") from None
    except csv.Error as exc:
        raise DocumentParseError(f"{field}: table {path!r}: {exc}") from None
    if not rows:
        problems.append(f"{field}: table {path!r} is empty")
        return None
    header = rows[0]
    if not header:
        problems.append(f"{field}: table {path!r} has an empty header row")
        return None
    col_names = [c.strip() for c in header[1:]]
    row_names = []
    cells = []
    for i, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            problems.append(
                f"{field}: table {path!r} line {i}: expected {len(header)} cells, "
                f"got {len(row)}"
            )
            return None
        row_names.append(row[0].strip())
        cells.append([c.strip() for c in row[1:]])
    return row_names, col_names, cells


def _table_cells_to_matrix(cells, field, mapping, problems) -> np.ndarray | None:
    flat = [c for row in cells for c in row]
    numeric = True
    for c in flat:
        try:
            float(c)
        except ValueError:
            numeric = False
            break
    if numeric:
        return np.array([[float(c) for c in row] for row in cells]).reshape(
            len(cells), len(cells[0]) if cells else 0
        )
    if all(c in QUALITATIVE_LABELS for c in flat):
        qm = QualitativeMatrix(
            row_names=[str(i) for i in range(len(cells))],
            column_names=[str(j) for j in range(len(cells[0]) if cells else 0)],
            cells=cells,
        )
        return qualitative_to_coefficient(qm, mapping)
    problems.append(f"{field}: mixed numeric and qualitative cells")
    return None


def _resolve_matrix(
    value: Any,
    field: str,
    row_names: list[str],
    col_names: list[str],
    base_dir: str | None,
    mapping: dict[str, float],
    problems: list[str],
) -> np.ndarray:
    rows, cols = len(row_names), len(col_names)
    fallback = np.zeros((rows, cols))

    if isinstance(value, str):
        if base_dir is None:
            problems.append(
                f"{field}: table references need a document file, got {value!r}"
            )
            return fallback
        got = _read_table(os.path.join(base_dir, value), problems, field)
        if got is None:
            return fallback
        t_rows, t_cols, cells = got
        if t_rows != row_names:
            problems.append(
                f"{field}: table row names {t_rows} do not match expected {row_names}"
            )
            return fallback
        if t_cols != col_names:
            problems.append(
                f"{field}: table column names {t_cols} do not match "
                f"expected {col_names}"
            )
            return fallback
        out = _table_cells_to_matrix(cells, field, mapping, problems)
        return fallback if out is None else out

    if not isinstance(value, list):
        problems.append(f"{field}: expected rows or a table path")
        return fallback
    if len(value) != rows:
        problems.append(f"{field}: expected {rows} rows, got {len(value)}")
        return fallback
    flat = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != cols:
            problems.append(f"{field}[{i}]: expected a row of {cols} cells")
            return fallback
        flat.extend(row)
    if all(_is_real(c) for c in flat):
        return np.array(
            [[float(c) for c in row] for row in value], dtype=float
        ).reshape(rows, cols)
    if all(isinstance(c, str) for c in flat):
        qm = QualitativeMatrix(
            row_names=row_names,
            column_names=col_names,
            cells=[[str(c) for c in row] for row in value],
        )
        try:
            return qualitative_to_coefficient(qm, mapping)
        except DocumentSchemaError as exc:
            problems.extend(f"{field}: {v}" for v in exc.violations)
            return fallback
    problems.append(f"{field}: mixed numeric and qualitative cells")
    return fallback


def _str_list(value: Any, field: str, problems: list[str]) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(s, str) for s in value):
        problems.append(f"{field}: expected a list of strings")
        return []
    return list(value)


def document_to_instance(
    doc: Any,
    *,
    base_dir: str | None = None,
    mapping: dict[str, float] | None = None,
) -> PlanInstance:
    problems: list[str] = []
    if not isinstance(doc, dict):
        raise DocumentSchemaError(["document: expected an object"])
    for key in _TOP_REQUIRED:
        if key not in doc:
            problems.append(f"{key}: missing")
    for key in doc:
        if key not in _TOP_REQUIRED and key not in _TOP_OPTIONAL:
            problems.append(f"{key}: unknown field")
    if problems:
        raise DocumentSchemaError(problems)
    version = doc["schema_version"]
    if not isinstance(version, int) or isinstance(version, bool):
        raise DocumentSchemaError(["schema_version: expected an integer"])
    if version != SCHEMA_VERSION:
        raise DocumentSchemaError([f"schema_version: unsupported version {version}"])

    if mapping is None:
        raw_map = doc.get("qualitative_mapping")
        if raw_map is not None:
            if not isinstance(raw_map, dict) or not all(
                isinstance(k, str) and _is_real(v) for k, v in raw_map.items()
            ):
                raise DocumentSchemaError(
                    ["qualitative_mapping: expected a label-to-number object"]
                )
            mapping = {k: float(v) for k, v in raw_map.items()}
        else:
            mapping = DEFAULT_MAPPING

    activities = []
    if isinstance(doc["activities"], list):
        for i, adoc in enumerate(doc["activities"]):
            path = f"activities[{i}]"
            if not isinstance(adoc, dict):
                problems.append(f"{path}: expected an object")
                continue
            bad = False
            for key in _ACTIVITY_KEYS:
                if key not in adoc:
                    problems.append(f"{path}.{key}: missing")
                    bad = True
            for key in adoc:
                if key not in _ACTIVITY_KEYS:
                    problems.append(f"{path}.{key}: unknown field")
                    bad = True
            if bad:
                continue
            for key in ("id", "name", "kind"):
                if not isinstance(adoc[key], str):
                    problems.append(f"{path}.{key}: expected a string")
                    bad = True
            for key in ("lower", "upper", "unit_cost", "unit_outcome"):
                if not _is_real(adoc[key]):
                    problems.append(f"{path}.{key}: expected a number")
                    bad = True
            if not bad:
                activities.append(
                    Activity(
                        id=adoc["id"],
                        name=adoc["name"],
                        kind=adoc["kind"],
                        lower=float(adoc["lower"]),
                        upper=float(adoc["upper"]),
                        unit_cost=float(adoc["unit_cost"]),
                        unit_outcome=float(adoc["unit_outcome"]),
                    )
                )
    else:
        problems.append("activities: expected a list")

    boilers = []
    if isinstance(doc["boilers"], list):
        for i, bdoc in enumerate(doc["boilers"]):
            path = f"boilers[{i}]"
            if not isinstance(bdoc, dict):
                problems.append(f"{path}: expected an object")
                continue
            ok = True
            for key in _BOILER_KEYS:
                if key not in bdoc or not isinstance(bdoc[key], str):
                    problems.append(f"{path}.{key}: expected a string")
                    ok = False
            for key in bdoc:
                if key not in _BOILER_KEYS:
                    problems.append(f"{path}.{key}: unknown field")
                    ok = False
            if ok:
                boilers.append(BoilerType(id=bdoc["id"], name=bdoc["name"]))
    else:
        problems.append("boilers: expected a list")

    for key in ("budget", "min_outcome", "hours_per_year", "efficiency"):
        if not _is_real(doc[key]):
            problems.append(f"{key}: expected a number")

    pressure_names = _str_list(doc["pressure_names"], "pressure_names", problems)
    receptor_names = _str_list(doc["receptor_names"], "receptor_names", problems)
    emission_names = _str_list(doc["emission_names"], "emission_names", problems)
    if problems:
        raise DocumentSchemaError(problems)

    activity_ids = [a.id for a in activities]
    primary_ids = [a.id for a in activities if a.kind == "primary"]
    secondary_ids = [a.id for a in activities if a.kind == "secondary"]
    boiler_ids = [b.id for b in boilers]

    dep_plus = _resolve_matrix(
        doc["dep_plus"], "dep_plus", primary_ids, secondary_ids,
        base_dir, mapping, problems,
    )
    dep_minus = _resolve_matrix(
        doc["dep_minus"], "dep_minus", primary_ids, secondary_ids,
        base_dir, mapping, problems,
    )
    mop = _resolve_matrix(
        doc["mop"], "mop", activity_ids, pressure_names, base_dir, mapping, problems
    )
    mpr = _resolve_matrix(
        doc["mpr"], "mpr", pressure_names, receptor_names,
        base_dir, mapping, problems,
    )
    moc = _resolve_matrix(
        doc["moc"], "moc", activity_ids, boiler_ids, base_dir, mapping, problems
    )
    mec = _resolve_matrix(
        doc["mec"], "mec", emission_names, boiler_ids, base_dir, mapping, problems
    )

    indicators: dict[str, dict[str, tuple[float, float, float]]] = {}
    ind_doc = doc["indicator_tables"]
    if isinstance(ind_doc, dict):
        for ind_name, table in ind_doc.items():
            path = f"indicator_tables[{ind_name!r}]"
            if not isinstance(ind_name, str):
                problems.append("indicator_tables: keys must be strings")
                continue
            if not isinstance(table, dict):
                problems.append(f"{path}: expected an object")
                continue
            rows = {}
            for emi, trip in table.items():
                if (
                    not isinstance(trip, list)
                    or len(trip) != 3
                    or not all(_is_real(v) for v in trip)
                ):
                    problems.append(
                        f"{path}[{emi!r}]: expected a list of three numbers"
                    )
                    continue
                rows[emi] = (float(trip[0]), float(trip[1]), float(trip[2]))
            indicators[ind_name] = rows
    else:
        problems.append("indicator_tables: expected an object")

    groups: dict[str, str] = {}
    raw_groups = doc.get("emission_groups", {})
    if isinstance(raw_groups, dict):
        for emi, gname in raw_groups.items():
            if not isinstance(emi, str) or not isinstance(gname, str):
                problems.append(
                    f"emission_groups[{emi!r}]: expected an emission-to-group "
                    "string entry"
                )
            else:
                groups[emi] = gname
    else:
        problems.append("emission_groups: expected an object")

    if problems:
        raise DocumentSchemaError(problems)

    instance = PlanInstance(
        activities=activities,
        budget=float(doc["budget"]),
        min_outcome=float(doc["min_outcome"]),
        dep_plus=dep_plus,
        dep_minus=dep_minus,
        mop=mop,
        mpr=mpr,
        pressure_names=pressure_names,
        receptor_names=receptor_names,
        boilers=boilers,
        moc=moc,
        mec=mec,
        emission_names=emission_names,
        indicator_tables=indicators,
        hours_per_year=float(doc["hours_per_year"]),
        efficiency=float(doc["efficiency"]),
        emission_groups=groups,
    )
    violations = validate_instance(instance)
    if violations:
        raise InstanceInvariantError(violations)
    return instance


def instance_to_document(instance: PlanInstance) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "activities": [
            {
                "id": a.id,
                "name": a.name,
                "kind": a.kind,
                "lower": a.lower,
                "upper": a.upper,
                "unit_cost": a.unit_cost,
                "unit_outcome": a.unit_outcome,
            }
            for a in instance.activities
        ],
        "budget": instance.budget,
        "min_outcome": instance.min_outcome,
        "dep_plus": instance.dep_plus.tolist(),
        "dep_minus": instance.dep_minus.tolist(),
        "mop": instance.mop.tolist(),
        "mpr": instance.mpr.tolist(),
        "pressure_names": list(instance.pressure_names),
        "receptor_names": list(instance.receptor_names),
        "boilers": [{"id": b.id, "name": b.name} for b in instance.boilers],
        "moc": instance.moc.tolist(),
        "mec": instance.mec.tolist(),
        "emission_names": list(instance.emission_names),
        "indicator_tables": {
            ind: {emi: list(trip) for emi, trip in table.items()}
            for ind, table in instance.indicator_tables.items()
        },
        "hours_per_year": instance.hours_per_year,
        "efficiency": instance.efficiency,
        "emission_groups": dict(instance.emission_groups),
    }


def load_instance(path, *, mapping: dict[str, float] | None = None) -> PlanInstance:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise FileAccessError(f"{path}: {exc}") from None
    doc = parse_json_bytes(data, str(path))
    return document_to_instance(
        doc, base_dir=os.path.dirname(os.path.abspath(path)), mapping=mapping
    )


def write_instance(instance: PlanInstance, path) -> None:
    data = canonical_bytes(instance_to_document(instance))
    with open(path, "wb") as fh:
        fh.write(data)
