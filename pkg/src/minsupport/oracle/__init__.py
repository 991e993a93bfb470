"""Brute-force machinery that checks the constructions without relying on them."""

from .census import (
    CensusProfile,
    CensusStatistics,
    ExtremalCensus,
    census_profile,
    census_statistics,
    enumerate_extremal,
    min_support_bruteforce,
    random_vertex,
)
from .equivalence import are_equivalent, canonical_form, canonical_key
from .flow import FlowNetwork, feasible_support, max_flow
from .forest import forest_supports_bruteforce, is_acyclic, solve_forest

__all__ = [
    "CensusProfile",
    "CensusStatistics",
    "ExtremalCensus",
    "FlowNetwork",
    "are_equivalent",
    "canonical_form",
    "canonical_key",
    "census_profile",
    "census_statistics",
    "enumerate_extremal",
    "feasible_support",
    "forest_supports_bruteforce",
    "is_acyclic",
    "max_flow",
    "min_support_bruteforce",
    "random_vertex",
    "solve_forest",
]
