"""Strongly connected components from one DFS pass over a level-augmented union-find."""

from .bench import GeneratorSpec, InvalidSpec, generate_graph, run_benchmark
from .counters import OpCounters
from .dsu import AugmentedDisjointSet, make_sets
from .graph import DirectedGraph, OutOfRange, add_edge, neighbors, new_graph
from .oracle import reachability_partition, tarjan_scc
from .solver import DfsFrame, SccPartition, assemble_partition, dfs_visit, solve
from .textio import (
    EdgeCountMismatch,
    EndpointOutOfRange,
    MalformedHeader,
    ParseError,
    TokenNotInteger,
    format_edge_list,
    format_partition,
    parse_edge_list,
)

__all__ = [
    "AugmentedDisjointSet", "DfsFrame", "DirectedGraph", "EdgeCountMismatch",
    "EndpointOutOfRange", "GeneratorSpec", "InvalidSpec", "MalformedHeader",
    "OpCounters", "OutOfRange", "ParseError", "SccPartition", "TokenNotInteger",
    "add_edge", "assemble_partition", "dfs_visit", "format_edge_list",
    "format_partition", "generate_graph", "make_sets", "neighbors", "new_graph",
    "parse_edge_list", "reachability_partition", "run_benchmark", "solve",
    "tarjan_scc",
]
