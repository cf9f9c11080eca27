"""Cops and an unbounded-speed robber: exact solving, bounds, strategies and generators."""

__version__ = "0.1.0"

from .arena import Outcome, Transcript, play
from .bounds import BoundReport, compose, hypercube_bracket
from .decomposition import TreeDecomposition, is_chordal, treewidth_exact
from .errors import (CapabilityError, ConfigurationError, ConstructionError, CopsRobberError, InputError,
                     InternalError, PolicyError)
from .game import cop_number_exact, solve_fixed_k, solve_restricted
from .graph import Graph, parse_graph, read_graph
from .helicopter import helicopter_min_cops
from .interval import IntervalRepresentation, compute_w, intersection_graph
from .wide import is_k_wide, max_wide_subgraph

__all__ = [
    "BoundReport", "CapabilityError", "ConfigurationError", "ConstructionError", "CopsRobberError", "Graph",
    "InputError", "InternalError", "IntervalRepresentation", "Outcome", "PolicyError", "Transcript",
    "TreeDecomposition", "compose", "compute_w", "cop_number_exact", "helicopter_min_cops", "hypercube_bracket",
    "intersection_graph", "is_chordal", "is_k_wide", "max_wide_subgraph", "parse_graph", "play", "read_graph",
    "solve_fixed_k", "solve_restricted", "treewidth_exact",
]
