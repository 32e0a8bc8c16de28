"""
Non-3-Colorable Graph Enumeration
Connected loopless graphs up to isomorphism that admit no 3-coloring
"""
import itertools
import logging
from typing import Iterator, List, Optional, Set, Tuple

from ..config import settings
from ..errors import InputError, guard
from .model import Edge, Graph, canonical_form

logger = logging.getLogger(__name__)


def _graphs_on(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        # Non-3-colorable graphs have at least six edges
        if len(edges) < 6:
            continue
        yield Graph.from_edges(n, edges)


def three_core(g: Graph) -> List[int]:
    """Vertices surviving repeated removal of vertices of degree < 3"""
    alive = set(range(g.n))
    degree = {v: len(g.neighbors(v) - {v}) for v in alive}
    stack = [v for v in alive if degree[v] < 3]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                degree[w] -= 1
                if degree[w] < 3:
                    stack.append(w)
    return sorted(alive)


def non_3col_on(n: int) -> List[Graph]:
    """Canonical representatives on exactly n vertices, sorted by edge list"""
    from ..solver.homomorphism import three_color

    seen: Set[Tuple[Edge, ...]] = set()
    found: List[Tuple[Edge, ...]] = []
    for g in _graphs_on(n):
        # A graph is 3-colorable iff its 3-core is
        core = three_core(g)
        if not core:
            continue
        if three_color(g.induced_subgraph(core)[0]) is not None:
            continue
        if not g.is_connected():
            continue
        _, canon = canonical_form(g)
        if canon not in seen:
            seen.add(canon)
            found.append(canon)
    found.sort()
    logger.debug("%d non-3-colorable connected graphs on %d vertices", len(found), n)
    return [Graph.from_edges(n, edges) for edges in found]


def enumerate_non_3col(max_n: int, limit: Optional[int] = None) -> Iterator[Graph]:
    """
    Stream by vertex count, then canonical edge-set order
    Isomorphism rejection is brute force, so max_n is capped by settings
    """
    if max_n < 1:
        raise InputError(f"max_n must be >= 1, got {max_n}")
    guard("enumeration vertex bound", max_n, settings.enumeration_max_n)
    emitted = 0
    for n in range(1, max_n + 1):
        for g in non_3col_on(n):
            yield g
            emitted += 1
            if limit is not None and emitted >= limit:
                return
