from ._core import (
    Graph,
    GraphError,
    apply_permutation,
    are_isomorphic,
    bipartite_adversarial_pair,
    enumerate,
    figure2_pair,
    graph_invariant,
    linear_extensions,
    normalize_dag,
    parse_graph,
    validate,
    verify,
)

__all__ = [
    "Graph",
    "GraphError",
    "apply_permutation",
    "are_isomorphic",
    "bipartite_adversarial_pair",
    "enumerate",
    "figure2_pair",
    "graph_invariant",
    "linear_extensions",
    "normalize_dag",
    "parse_graph",
    "validate",
    "verify",
]
