"""
Critical Edges
Reduce a non-3-colorable graph until some edge becomes critical
"""
import logging
from typing import Optional, Tuple

from ..graphs.model import Edge, Graph
from ..solver.homomorphism import three_color

logger = logging.getLogger(__name__)


def find_critical(g: Graph) -> Optional[Tuple[Graph, Edge]]:
    """
    Walk the edges in lexicographic order, dropping each one whose removal
    keeps the graph non-3-colorable. The first edge that cannot be dropped
    is critical in what remains. None iff g is 3-colorable.
    """
    if three_color(g) is not None:
        return None
    current = g
    for e in g.sorted_edges:
        trial = current.remove_edge(*e)
        if three_color(trial) is None:
            current = trial
            continue
        logger.debug("critical edge %s after dropping %d edges", e, g.edge_count - current.edge_count)
        return current, e
    # Removing every edge leaves a 3-colorable graph, so the loop always returns
    raise RuntimeError("no critical edge found")
