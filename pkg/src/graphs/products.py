"""
Graph Products
Tensor (categorical) products and powers with mixed-radix vertex numbering
"""
import itertools
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..config import settings
from ..errors import InputError, guard
from .model import Graph, Row, canonical_edge


def tuple_index(row: Sequence[int], base: int) -> int:
    """Mixed-radix index of a tuple, first coordinate most significant"""
    idx = 0
    for a in row:
        idx = idx * base + a
    return idx


def index_tuple(idx: int, base: int, arity: int) -> Row:
    if arity == 0:
        return ()
    return tuple(int(a) for a in np.unravel_index(idx, (base,) * arity))


def all_tuples(base: int, arity: int) -> Iterator[Row]:
    """Every tuple in mixed-radix order"""
    return itertools.product(range(base), repeat=arity)


def tensor_product(g: Graph, h: Graph, max_vertices: Optional[int] = None) -> Graph:
    """
    Vertex (a, b) is numbered a * |V(h)| + b
    {(a,b),(c,d)} is an edge iff {a,c} is an edge of g and {b,d} of h
    """
    cap = settings.cap("max_vertices", max_vertices)
    guard("tensor product vertices", g.n * h.n, cap)
    edges = set()
    for a, c in g.directed_pairs:
        for b, d in h.directed_pairs:
            edges.add(canonical_edge(a * h.n + b, c * h.n + d))
    return Graph(g.n * h.n, frozenset(edges))


def power(g: Graph, n: int, max_vertices: Optional[int] = None) -> Graph:
    """n-fold tensor power; vertex i is the tuple index_tuple(i, |V(g)|, n)"""
    if n < 1:
        raise InputError(f"power needs n >= 1, got {n}")
    cap = settings.cap("max_vertices", max_vertices)
    guard("tensor power vertices", g.n ** n, cap)
    result = g
    for _ in range(n - 1):
        result = tensor_product(result, g, max_vertices=cap)
    return result


def product_of(graphs: Sequence[Graph], max_vertices: Optional[int] = None) -> Graph:
    """Left-nested product G1 x G2 x ... x Gk"""
    if not graphs:
        raise InputError("product of an empty list of graphs")
    result = graphs[0]
    for g in graphs[1:]:
        result = tensor_product(result, g, max_vertices=max_vertices)
    return result


def projection_map(g: Graph, h: Graph, coordinate: int) -> List[int]:
    """Coordinate projection from tensor_product(g, h) onto g (0) or h (1)"""
    if coordinate == 0:
        return [v // h.n for v in range(g.n * h.n)]
    if coordinate == 1:
        return [v % h.n for v in range(g.n * h.n)]
    raise InputError(f"coordinate must be 0 or 1, got {coordinate}")


def swap_map(g: Graph, h: Graph) -> List[int]:
    """Isomorphism tensor_product(g, h) -> tensor_product(h, g)"""
    return [(v % h.n) * g.n + v // h.n for v in range(g.n * h.n)]


def componentwise_adjacent(g: Graph, s: Row, t: Row) -> bool:
    return all(g.has_edge(a, b) for a, b in zip(s, t))


def neighbors_in_power(g: Graph, row: Row) -> Iterator[Tuple[int, ...]]:
    """All tuples componentwise adjacent to row"""
    choices = [sorted(g.neighbors(a)) for a in row]
    return itertools.product(*choices)
