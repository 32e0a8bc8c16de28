"""
Indicator Package
Polymorphism witnesses for height-1 conditions, F-graphs and quotient checks
"""
from .tables import FunctionTable
from .polymorphisms import (
    EDGE_SWAP,
    IndicatorInstance,
    SatisfactionResult,
    extract_homomorphism,
    indicator_instance,
    is_polymorphism,
    satisfies,
    transfer_witness,
    verify_tables,
)
from .fgraph import FGraph, build_f_graph, edge_witness, minion_hom_to_p, ternary_polymorphisms, verify_f_edge
from .quotient_check import QuotientVerdict, qnu_quotient_check

__all__ = [
    "FunctionTable",
    "EDGE_SWAP",
    "IndicatorInstance",
    "SatisfactionResult",
    "extract_homomorphism",
    "indicator_instance",
    "is_polymorphism",
    "satisfies",
    "transfer_witness",
    "verify_tables",
    "FGraph",
    "build_f_graph",
    "edge_witness",
    "minion_hom_to_p",
    "ternary_polymorphisms",
    "verify_f_edge",
    "QuotientVerdict",
    "qnu_quotient_check",
]
