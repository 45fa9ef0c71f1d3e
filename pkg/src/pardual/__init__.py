"""Maximum partial-dual genus of planar graphs and its supporting invariants."""

from .checks import THEOREM_IDS, BoundCheck
from .errors import (CapacityError, DomainError, Graph6Error, GraphFormatError, HostMismatchError,
                     MapInvariantError, PardualError)
from .graph import (CliquePartition, EdgeSubset, Graph, betti, chromatic_number, clique_partition,
                    complement, components, degree_counts, edge_connectivity, encode_graph6,
                    is_connected, is_planar, parse_edgelist, parse_graph6, spanning_subgraph_minus)
from .ribbon import (CombinatorialMap, EmbeddingSpec, enumerate_partial_dual_genus, faces, genus,
                     geometric_dual, map_from_rotation, partial_dual, planar_embedding,
                     planar_embeddings)
from .subsets import (QuotientGraph, StructureReport, SubsetOptResult, check_optimal_structure,
                      lemma25_bound_check, max_partial_dual_genus, nebesky_deficiency,
                      quotient_graph, y_max, y_value)
from .trees import (SpanningTree, TreeOptResult, decay_number, enumerate_spanning_trees,
                    is_upper_embeddable, max_genus, xuong_deficiency)

__all__ = [
    "betti", "BoundCheck", "CapacityError", "check_optimal_structure", "chromatic_number",
    "clique_partition", "CliquePartition", "CombinatorialMap", "complement", "components",
    "decay_number", "degree_counts", "DomainError", "edge_connectivity", "EdgeSubset",
    "EmbeddingSpec", "encode_graph6", "enumerate_partial_dual_genus", "enumerate_spanning_trees",
    "faces", "genus", "geometric_dual", "Graph", "Graph6Error", "GraphFormatError",
    "HostMismatchError", "is_connected", "is_planar", "is_upper_embeddable", "lemma25_bound_check",
    "map_from_rotation", "MapInvariantError", "max_genus", "max_partial_dual_genus",
    "nebesky_deficiency", "PardualError", "parse_edgelist", "parse_graph6", "partial_dual",
    "planar_embedding", "planar_embeddings", "quotient_graph", "QuotientGraph",
    "spanning_subgraph_minus", "SpanningTree", "StructureReport", "SubsetOptResult", "THEOREM_IDS",
    "TreeOptResult", "xuong_deficiency", "y_max", "y_value",
]

__version__ = "0.1.0"
