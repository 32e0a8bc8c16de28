"""
Tensor Chains
Prefix products of non-3-colorable graphs with their certificates
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

from ..config import settings
from ..errors import InputError, guard
from ..graphs.enumerate import enumerate_non_3col
from ..graphs.model import Edge, Graph
from ..graphs.products import projection_map, tensor_product
from ..solver.csp import Certificate
from ..solver.homomorphism import three_color_certificate

logger = logging.getLogger(__name__)


@dataclass
class ChainStep:
    graph: Graph
    non_colorable: Certificate
    projection: Optional[List[int]] = None
    edge: Optional[Edge] = None
    critical_coloring: Optional[Certificate] = None


def factor_sequence(k: int, max_n: int) -> List[Graph]:
    """The first k enumerated graphs, cycling when fewer exist"""
    if k < 1:
        raise InputError(f"chain length must be >= 1, got {k}")
    found = list(enumerate_non_3col(max_n, limit=k))
    if not found:
        raise InputError(f"no non-3-colorable connected graph on at most {max_n} vertices")
    return [found[i % len(found)] for i in range(k)]


def tensor_chain(k: int, max_n: int, max_vertices: Optional[int] = None) -> List[ChainStep]:
    """H_1 = G_1 and H_{n+1} = H_n x G_{n+1}, each shown non-3-colorable"""
    cap = settings.cap("max_vertices", max_vertices)
    factors = factor_sequence(k, max_n)
    size = 1
    for f in factors:
        size *= f.n
    guard("tensor chain vertices", size, cap)

    steps: List[ChainStep] = []
    current = factors[0]
    steps.append(ChainStep(current, three_color_certificate(current)))
    for factor in factors[1:]:
        product = tensor_product(current, factor, max_vertices=cap)
        projection = projection_map(current, factor, 0)
        steps.append(ChainStep(product, three_color_certificate(product), projection))
        current = product
        logger.debug("tensor chain step %d: %d vertices", len(steps), current.n)
    return steps
