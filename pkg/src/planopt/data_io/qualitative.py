"""Qualitative coaxial-matrix cells and their numeric coefficients."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DocumentSchemaError

QUALITATIVE_LABELS = ("high", "medium", "low", "null")

# Overridable per file; the vocabulary itself is fixed.
DEFAULT_MAPPING = {"high": 1.0, "medium": 0.5, "low": 0.25, "null": 0.0}


@dataclass
class QualitativeMatrix:
    row_names: list[str]
    column_names: list[str]
    cells: list[list[str]]


def check_mapping(mapping: dict[str, float]) -> None:
    problems = []
    for label in QUALITATIVE_LABELS:
        if label not in mapping:
            problems.append(f"mapping is missing label {label!r}")
    for label, value in mapping.items():
        if label not in QUALITATIVE_LABELS:
            problems.append(f"mapping has unknown label {label!r}")
        elif not isinstance(value, (int, float)) or not 0.0 <= float(value) <= 1.0:
            problems.append(f"mapping[{label!r}] = {value!r} is outside [0, 1]")
    if "null" in mapping and isinstance(mapping["null"], (int, float)):
        if float(mapping["null"]) != 0.0:
            problems.append("mapping['null'] must be 0")
    if problems:
        raise DocumentSchemaError(problems)


def qualitative_to_coefficient(
    matrix: QualitativeMatrix, mapping: dict[str, float] | None = None
) -> np.ndarray:
    """Substitute each label cell with its coefficient."""
    mapping = DEFAULT_MAPPING if mapping is None else mapping
    check_mapping(mapping)
    rows = len(matrix.row_names)
    cols = len(matrix.column_names)
    problems = []
    if len(matrix.cells) != rows:
        problems.append(f"expected {rows} cell rows, got {len(matrix.cells)}")
        raise DocumentSchemaError(problems)
    out = np.zeros((rows, cols))
    for i, row in enumerate(matrix.cells):
        if len(row) != cols:
            problems.append(f"row {i}: expected {cols} cells, got {len(row)}")
            continue
        for j, cell in enumerate(row):
            if cell not in mapping:
                problems.append(f"row {i}, column {j}: unknown label {cell!r}")
                continue
            out[i, j] = float(mapping[cell])
    if problems:
        raise DocumentSchemaError(problems)
    return out
