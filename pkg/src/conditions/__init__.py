"""
Conditions Package
Height-1 conditions: construction, triviality, combination and files
"""
from .model import HeightOneCondition, Identity, Symbol, Term
from .builders import (
    S_PATTERN,
    T_PATTERN,
    edge_symbol,
    siggers,
    sigma_of_graph,
    sigma_qnu,
    vertex_symbol,
)
from .triviality import ProjectionWitness, is_trivial, verify_projection_witness
from .combine import combine, implies_via_hom, pair_symbol
from .io import condition_from_dict, condition_to_dict, read_condition, write_condition

__all__ = [
    "HeightOneCondition",
    "Identity",
    "Symbol",
    "Term",
    "S_PATTERN",
    "T_PATTERN",
    "edge_symbol",
    "siggers",
    "sigma_of_graph",
    "sigma_qnu",
    "vertex_symbol",
    "ProjectionWitness",
    "is_trivial",
    "verify_projection_witness",
    "combine",
    "implies_via_hom",
    "pair_symbol",
    "condition_from_dict",
    "condition_to_dict",
    "read_condition",
    "write_condition",
]
