"""
Chains Package
Tensor and glued chains, gadgets, critical edges, membership and growth schedules
"""
from .patterns import (
    P1,
    P2,
    P3,
    PATTERNS,
    all_sigma_permutations,
    pattern_function,
    permuted_edge_table,
    sigma_permutation,
)
from .critical import find_critical
from .tensor import ChainStep, factor_sequence, tensor_chain
from .gadget import (
    Gadget,
    GadgetReport,
    SearchOutcome,
    boundary_maps,
    read_gadget,
    search_gadget,
    verify_gadget,
    write_gadget,
)
from .glue import GlueResult, glue, glue_chain, lift_through_glue
from .css import CssVerdict, css_decide
from .growth import GrowthSchedule, ceil_sqrt, growth_g, growth_inequality_holds

__all__ = [
    "P1",
    "P2",
    "P3",
    "PATTERNS",
    "all_sigma_permutations",
    "pattern_function",
    "permuted_edge_table",
    "sigma_permutation",
    "find_critical",
    "ChainStep",
    "factor_sequence",
    "tensor_chain",
    "Gadget",
    "GadgetReport",
    "SearchOutcome",
    "boundary_maps",
    "read_gadget",
    "search_gadget",
    "verify_gadget",
    "write_gadget",
    "GlueResult",
    "glue",
    "glue_chain",
    "lift_through_glue",
    "CssVerdict",
    "css_decide",
    "GrowthSchedule",
    "ceil_sqrt",
    "growth_g",
    "growth_inequality_holds",
]
