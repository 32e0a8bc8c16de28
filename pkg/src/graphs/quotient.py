"""
Quasi-Near-Unanimity Quotient
Factors the n-th tensor power by the closure of the almost-constant identifications
"""
import logging
from typing import Dict, List, Optional, Tuple

from networkx.utils import UnionFind

from ..config import settings
from ..errors import InputError, guard
from .model import ClassMap, Graph, Row, canonical_edge
from .products import all_tuples, neighbors_in_power, tuple_index

logger = logging.getLogger(__name__)


def almost_constant_tuples(x: int, y: int, n: int) -> List[Row]:
    """(y,x,...,x), (x,y,x,...,x), ..., (x,...,x,y) and (x,...,x)"""
    rows = []
    for i in range(n):
        row = [x] * n
        row[i] = y
        rows.append(tuple(row))
    rows.append((x,) * n)
    return rows


def qnu_classes(base: int, n: int) -> ClassMap:
    """Union-find closure of the generating identifications over all x, y"""
    if n < 1:
        raise InputError(f"quotient arity must be >= 1, got {n}")
    size = base ** n
    uf = UnionFind(range(size))
    if n >= 2:
        for x in range(base):
            for y in range(base):
                idxs = [tuple_index(r, base) for r in almost_constant_tuples(x, y, n)]
                uf.union(*idxs)

    # Number classes by first appearance in mixed-radix order
    root_to_class: Dict[int, int] = {}
    class_of: List[int] = []
    first_member: List[int] = []
    for idx in range(size):
        root = uf[idx]
        if root not in root_to_class:
            root_to_class[root] = len(first_member)
            first_member.append(idx)
        class_of.append(root_to_class[root])

    tuples = list(all_tuples(base, n))
    reps: List[Row] = [tuples[idx] for idx in first_member]
    # Constant tuples win; the smallest constant of a class is kept
    for x in reversed(range(base)):
        const_idx = tuple_index((x,) * n, base)
        reps[class_of[const_idx]] = (x,) * n

    return ClassMap(base=base, arity=n, class_of=tuple(class_of), representatives=tuple(reps))


def qnu_quotient(
    h: Graph, n: int, max_vertices: Optional[int] = None
) -> Tuple[Graph, ClassMap]:
    """
    Quotient of the n-th power of h by the qnu equivalence
    Classes A, B are adjacent iff some members are componentwise adjacent
    """
    if n < 1:
        raise InputError(f"quotient arity must be >= 1, got {n}")
    cap = settings.cap("max_vertices", max_vertices)
    guard("quotient source tuples", h.n ** n, cap)
    class_map = qnu_classes(h.n, n)
    edges = set()
    for row in all_tuples(h.n, n):
        a = class_map.class_of[tuple_index(row, h.n)]
        for other in neighbors_in_power(h, row):
            b = class_map.class_of[tuple_index(other, h.n)]
            edges.add(canonical_edge(a, b))
    quotient = Graph(class_map.class_count, frozenset(edges))
    logger.debug(
        "qnu quotient of %d-vertex graph at n=%d: %d classes, %d edges",
        h.n, n, quotient.n, quotient.edge_count,
    )
    return quotient, class_map
