"""Zero forcing numbers, cubic graph families, and maximum-nullity bounds."""

from .catalog import connected_cubic_graphs, small_graphs
from .families import (ColoredGraph, FamilySpec, apex_k1, build_family, compound,
                       counterexample16, enumerate_family, family_members,
                       heawood_graph, ladder_m, ladder_t, necklace,
                       permutation_prism)
from .forcing import (DerivedColoring, ZeroForcingResult, closure,
                      is_zero_forcing_set, zero_forcing_number)
from .graph6 import Graph6Error, iter_graph6, parse_graph6, write_graph6
from .graphs import (Graph, IsoWitness, are_isomorphic, canonical_certificate,
                     complete_bipartite, complete_graph, cycle_graph,
                     edge_connectivity, girth, path_graph)
from .recognition import RecognitionResult, recognize_z3
from .spanning import DegreeCensus, SpanningTree, degree_census, spanning_tree
from .spectral import (BoundsReport, EigenCluster, MinorModel, SpectralReport,
                       adjacency_matrix, bounds_report, eigen_decomposition,
                       find_clique_minor, max_multiplicity_bound,
                       minor_model_violation, twin_bound, twin_classes,
                       verify_minor_model)

__all__ = [name for name in dir() if not name.startswith("_")]
