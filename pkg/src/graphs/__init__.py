"""
Graphs Package
Finite graphs and relational structures, products, quotients, encodings and files
"""
from .model import (
    Edge,
    Graph,
    Relation,
    RelStructure,
    ClassMap,
    canonical_edge,
    canonical_form,
    are_isomorphic,
    complete_graph,
    cycle_graph,
    empty_graph,
    loop_graph,
    petersen_graph,
    disjoint_union,
    make_relation,
    graph_template,
    one_element_template,
    nae_template,
    ordered_template,
)
from .products import (
    tensor_product,
    power,
    product_of,
    projection_map,
    swap_map,
    tuple_index,
    index_tuple,
    all_tuples,
)
from .quotient import qnu_quotient, qnu_classes, almost_constant_tuples
from .encoding import (
    blowup_encode,
    loop_like_patterns,
    pattern_structure,
    set_partitions,
    is_loop_like,
)
from .enumerate import enumerate_non_3col, three_core
from .io import read_graph, write_graph, read_struct, write_struct, load_text

__all__ = [
    "Edge",
    "Graph",
    "Relation",
    "RelStructure",
    "ClassMap",
    "canonical_edge",
    "canonical_form",
    "are_isomorphic",
    "complete_graph",
    "cycle_graph",
    "empty_graph",
    "loop_graph",
    "petersen_graph",
    "disjoint_union",
    "make_relation",
    "graph_template",
    "one_element_template",
    "nae_template",
    "ordered_template",
    "tensor_product",
    "power",
    "product_of",
    "projection_map",
    "swap_map",
    "tuple_index",
    "index_tuple",
    "all_tuples",
    "qnu_quotient",
    "qnu_classes",
    "almost_constant_tuples",
    "blowup_encode",
    "loop_like_patterns",
    "pattern_structure",
    "set_partitions",
    "is_loop_like",
    "enumerate_non_3col",
    "three_core",
    "read_graph",
    "write_graph",
    "read_struct",
    "write_struct",
    "load_text",
]
