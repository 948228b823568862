"""Instance and result serialization: qualitative matrices, JSON documents."""

from .documents import (
    SCHEMA_VERSION,
    assessment_to_document,
    canonical_bytes,
    constraint_to_document,
    document_to_constraint,
    document_to_front,
    document_to_objective,
    document_to_scenario,
    front_to_document,
    objective_to_document,
    parse_json_bytes,
    read_front,
    scenario_to_document,
    write_front,
)
from .instance import (
    document_to_instance,
    instance_to_document,
    load_instance,
    write_instance,
)
from .qualitative import (
    DEFAULT_MAPPING,
    QUALITATIVE_LABELS,
    QualitativeMatrix,
    qualitative_to_coefficient,
)

__all__ = [
    "SCHEMA_VERSION",
    "DEFAULT_MAPPING",
    "QUALITATIVE_LABELS",
    "QualitativeMatrix",
    "qualitative_to_coefficient",
    "assessment_to_document",
    "canonical_bytes",
    "parse_json_bytes",
    "scenario_to_document",
    "document_to_scenario",
    "front_to_document",
    "document_to_front",
    "objective_to_document",
    "document_to_objective",
    "constraint_to_document",
    "document_to_constraint",
    "instance_to_document",
    "document_to_instance",
    "load_instance",
    "write_instance",
    "write_front",
    "read_front",
]
