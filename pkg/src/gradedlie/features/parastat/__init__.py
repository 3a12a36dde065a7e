"""Parafermion and paraboson generators and their triple relations."""

from .generators import (
    ANNIHILATION,
    CREATION,
    GeneratorFamily,
    GeneratorKind,
    build_parabosons,
    build_parafermions,
)
from .relations import (
    DISPLAYED_PATTERNS,
    RELATION_KINDS,
    RELATION_TEMPLATES,
    RelationTemplate,
    admissible_triples,
    bracket_pattern,
    left_hand_side,
    relation_template,
    right_hand_side,
    span_identities,
    verify_relations,
)

__all__ = [
    "ANNIHILATION",
    "CREATION",
    "DISPLAYED_PATTERNS",
    "GeneratorFamily",
    "GeneratorKind",
    "RELATION_KINDS",
    "RELATION_TEMPLATES",
    "RelationTemplate",
    "admissible_triples",
    "bracket_pattern",
    "build_parabosons",
    "build_parafermions",
    "left_hand_side",
    "relation_template",
    "right_hand_side",
    "span_identities",
    "verify_relations",
]
