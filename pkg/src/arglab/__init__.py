"""Abstract-argumentation toolkit.

Plain, bipolar, and tripolar argument graphs; extension and labeling
semantics; walk-based indirect relations; derived-attack reductions and
dialogue-graph augmentation; a graph distance metric; epistemic belief
postulates; subgraph probability distributions with exact and sampled
acceptance probabilities; and a survey-response analysis pipeline.

Hot enumeration kernels use a compiled extension when available and fall
back to pure Python transparently; results are identical either way.
"""

from .bipolar import (
    ALL_KINDS,
    AttackKind,
    BipolarFramework,
    FlowOrder,
    augment_bipolar,
    augment_prudent,
    indirect_attacks,
    support_reachable,
    to_dung,
)
from .constellation import (
    DEFAULT_SUBGRAPH_CAP,
    SubgraphDistribution,
    SubgraphMode,
    enumerate_subgraphs,
    estimate_prob_argument,
    is_full_subgraph,
    is_spanning_subgraph,
    prob_argument_in,
    prob_extension,
)
from .core import (
    ArgLabError,
    ArgumentFramework,
    DomainError,
    IndirectRelation,
    Label,
    Labeling,
    Semantics,
    SizeError,
    attackers,
    check_labeling,
    defends,
    enumerate_extensions,
    enumerate_labelings,
    extension_to_labeling,
    grounded_extension,
    indirect_relation,
    is_controversial,
    is_extension,
    is_super_controversial,
    parity_reachability,
)
from .epistemic import (
    CATALOG,
    BeliefAssignment,
    MassDistribution,
    PostulateId,
    beliefs_from_mass,
    check_postulate,
    distinct_value_count,
    epistemic_labeling,
    is_congruent,
    satisfied_postulates,
)
from .formats import (
    ParseError,
    emit_beliefs,
    emit_bipolar,
    emit_distribution,
    emit_framework,
    emit_graph,
    emit_mass,
    emit_tripolar,
    parse_beliefs,
    parse_bipolar,
    parse_dialogue,
    parse_distribution,
    parse_framework,
    parse_graph_with_flow,
    parse_mass,
    parse_responses,
    parse_tripolar,
)
from .survey import (
    AgreementLevel,
    BeliefChangeSummary,
    CrossTab,
    DialogueSpec,
    Pooling,
    RelationAnswer,
    ResponseRecord,
    Statement,
    TableDirection,
    adherence_rates,
    attack_graph,
    belief_change_summary,
    common_graphs,
    core_sample,
    declared_graph,
    likert_to_belief,
    record_beliefs,
    relation_crosstab,
    relation_frequencies,
)
from .tripolar import (
    SubgraphKind,
    TripolarGraph,
    average_distances,
    distance,
    edge_diff,
    from_framework,
    is_clarified,
    is_subgraph,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "ArgLabError",
    "DomainError",
    "SizeError",
    "ParseError",
    # plain attack graphs
    "ArgumentFramework",
    "Label",
    "Labeling",
    "Semantics",
    "IndirectRelation",
    "attackers",
    "defends",
    "grounded_extension",
    "enumerate_extensions",
    "is_extension",
    "enumerate_labelings",
    "check_labeling",
    "extension_to_labeling",
    "parity_reachability",
    "indirect_relation",
    "is_controversial",
    "is_super_controversial",
    # bipolar graphs
    "BipolarFramework",
    "AttackKind",
    "ALL_KINDS",
    "FlowOrder",
    "support_reachable",
    "indirect_attacks",
    "to_dung",
    "augment_prudent",
    "augment_bipolar",
    # tripolar graphs
    "TripolarGraph",
    "SubgraphKind",
    "is_subgraph",
    "is_clarified",
    "edge_diff",
    "distance",
    "average_distances",
    "from_framework",
    # epistemic postulates
    "BeliefAssignment",
    "MassDistribution",
    "PostulateId",
    "CATALOG",
    "beliefs_from_mass",
    "check_postulate",
    "satisfied_postulates",
    "epistemic_labeling",
    "is_congruent",
    "distinct_value_count",
    # constellation distributions
    "SubgraphMode",
    "SubgraphDistribution",
    "DEFAULT_SUBGRAPH_CAP",
    "is_full_subgraph",
    "is_spanning_subgraph",
    "enumerate_subgraphs",
    "prob_extension",
    "prob_argument_in",
    "estimate_prob_argument",
    # survey analysis
    "AgreementLevel",
    "RelationAnswer",
    "Statement",
    "DialogueSpec",
    "ResponseRecord",
    "TableDirection",
    "Pooling",
    "CrossTab",
    "BeliefChangeSummary",
    "likert_to_belief",
    "record_beliefs",
    "attack_graph",
    "declared_graph",
    "common_graphs",
    "adherence_rates",
    "relation_crosstab",
    "belief_change_summary",
    "relation_frequencies",
    "core_sample",
    # formats
    "parse_framework",
    "parse_bipolar",
    "parse_tripolar",
    "parse_graph_with_flow",
    "parse_beliefs",
    "parse_mass",
    "parse_distribution",
    "parse_dialogue",
    "parse_responses",
    "emit_framework",
    "emit_bipolar",
    "emit_tripolar",
    "emit_graph",
    "emit_beliefs",
    "emit_mass",
    "emit_distribution",
]
