"""Linear Jaco graphs, exact Gutman and Wiener indices, and formula audits."""

from .edge_joint import (
    AnchorCheck,
    JointDelta,
    JointSpec,
    anchor_audit,
    closed_form_joint_gutman,
    edge_joint_graph,
    joint_check,
    joint_delta_report,
    joint_paper_rhs,
    missing_anchor_block,
)
from .graph_core import (
    UNREACHABLE,
    DisconnectedGraphError,
    DistanceMatrix,
    SimpleGraph,
    all_pairs_distances,
    degree,
    from_edges,
    gutman_index,
    induced_subgraph,
    is_connected,
    wiener_index,
)
from .jaco import (
    IDENTITY,
    JacoGraph,
    JaconianInfo,
    LinearFunction,
    PrefixFacts,
    PropertyReport,
    build_jaco,
    component_structure,
    hope_graph,
    jaco_from_arcs,
    jaconian_info,
    prefix_scan,
    verify_definition_fixed_point,
    verify_fundamental_properties,
)
from .recursion import (
    RecursionDelta,
    RecursionTerms,
    StructureAssumptionViolated,
    recursion_delta_report,
    recursion_exact_rhs,
    recursion_exact_terms,
    recursion_paper_rhs,
    recursion_paper_terms,
)
from .sequences import SEQUENCE_NAMES, SequenceTable, sequence_table

__all__ = [
    "AnchorCheck",
    "DisconnectedGraphError",
    "DistanceMatrix",
    "IDENTITY",
    "JacoGraph",
    "JaconianInfo",
    "JointDelta",
    "JointSpec",
    "LinearFunction",
    "PrefixFacts",
    "PropertyReport",
    "RecursionDelta",
    "RecursionTerms",
    "SEQUENCE_NAMES",
    "SequenceTable",
    "SimpleGraph",
    "StructureAssumptionViolated",
    "UNREACHABLE",
    "all_pairs_distances",
    "anchor_audit",
    "build_jaco",
    "closed_form_joint_gutman",
    "component_structure",
    "degree",
    "edge_joint_graph",
    "from_edges",
    "gutman_index",
    "hope_graph",
    "induced_subgraph",
    "is_connected",
    "jaco_from_arcs",
    "jaconian_info",
    "joint_check",
    "joint_delta_report",
    "joint_paper_rhs",
    "missing_anchor_block",
    "prefix_scan",
    "recursion_delta_report",
    "recursion_exact_rhs",
    "recursion_exact_terms",
    "recursion_paper_rhs",
    "recursion_paper_terms",
    "sequence_table",
    "verify_definition_fixed_point",
    "verify_fundamental_properties",
    "wiener_index",
]
