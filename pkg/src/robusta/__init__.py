"""Robust graph parameter toolkit: exact solvers at desk scale, polynomial
constructions, treewidth dynamic programs and a reproducible CLI."""

from .graph import (Graph, VertexPartition, arboricity_gadget, blow_up,
                    complete, complete_multipartite, cycle, degeneracy_gadget,
                    disjoint_union, empty_graph, erdos_renyi, generate, join,
                    lex_product, line_graph, maximal_outerplanar,
                    maximal_planar, path, random_bipartite,
                    random_multipartite, star, structural_queries,
                    union_graphs, walecki_cycles)
from .graphio import (ParseError, parse_graph, to_dot, write_dimacs,
                      write_edgelist)
from .selection import (RemovedGraph, SSelection, apply_selection,
                        enumerate_removable_sets, is_quasi_unicyclic,
                        is_removable, selection_digraph,
                        selection_from_edge_set)
from .poly import (Decomposition, Orientation, RobustColoring,
                   degeneracy_greedy, degeneracy_order, edge_color_reduction,
                   edge_coloring_upper, max_degree_partition,
                   min_outdegree_orientation,
                   quasi_unicyclic_edge_decomposition)
from .exact import (CapExceeded, ParameterResult, SolverCaps, canonical_form,
                    classical_parameter, iota, oracle_robust,
                    robust_chromatic, robust_parameter, robust_via_maximal)
from .filters import (ExplorationReport, FilterReport, exactness_filters,
                      explore_exact_conjecture, nonisomorphic_graphs)
from .treewidth import (NiceTreeDecomposition, TreeDecomposition, dp_all,
                        dp_robust, heuristic_decomposition, make_nice,
                        read_td, validate_decomposition, write_td)

__version__ = "0.1.0"
