from .model import (
    HUMAN_ROLES,
    PROVIDER_ROLES,
    ROLE_ORDER,
    Argument,
    ArgumentGraph,
    ArgumentStatus,
    CareOption,
    DegreeAssignment,
    EvidenceDoc,
    OptionCategory,
    PatientCase,
    Polarity,
    Relation,
    Role,
    SourceType,
    Stance,
    add_argument,
    add_relation,
    participation_summary,
    remove_argument,
)
from .graphio import (
    doc_to_graph,
    graph_hash,
    graph_to_doc,
    load_graph,
    save_graph,
)

__all__ = [
    "HUMAN_ROLES",
    "PROVIDER_ROLES",
    "ROLE_ORDER",
    "Argument",
    "ArgumentGraph",
    "ArgumentStatus",
    "CareOption",
    "DegreeAssignment",
    "EvidenceDoc",
    "OptionCategory",
    "PatientCase",
    "Polarity",
    "Relation",
    "Role",
    "SourceType",
    "Stance",
    "add_argument",
    "add_relation",
    "participation_summary",
    "remove_argument",
    "doc_to_graph",
    "graph_hash",
    "graph_to_doc",
    "load_graph",
    "save_graph",
]
