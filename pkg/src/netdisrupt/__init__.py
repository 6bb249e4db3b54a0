"""Centrality metrics and node-removal attack simulation on small social networks."""
from ._jit import NUMBA_ENABLED
from .centrality import (CentralityScores, KatzDivergenceError, Metric, betweenness_centrality,
                         collective_influence, degree_centrality, katz_centrality, rank_nodes,
                         spectral_bound, spectral_radius)
from .dataset_io import (EdgeListError, NetworkStats, common_nodes, compute_stats, export_run,
                         load_edge_list, load_run_json, parse_edge_list, weight_distribution)
from .disruption import (ComparisonTable, DisruptionError, DisruptionRun, IterationRecord, Strategy,
                         compare_runs, rho, run_disruption)
from .graph import ComponentPartition, Graph, GraphError, WeightMode

__version__ = "0.1.0"
