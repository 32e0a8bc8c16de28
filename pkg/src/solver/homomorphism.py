"""
Graph Homomorphism Search
Homomorphisms and 3-colorings encoded as CSP instances
"""
import logging
from typing import Dict, Optional, Tuple

from ..graphs.model import Graph, complete_graph
from .csp import Certificate, CertificateKind, Constraint, CspInstance, solve

logger = logging.getLogger(__name__)

Pins = Dict[int, int]


def hom_instance(g: Graph, h: Graph, pins: Optional[Pins] = None) -> CspInstance:
    """One variable per vertex of g over the vertices of h"""
    arcs = h.directed_pairs
    loops = frozenset((w,) for w in h.loops)
    constraints = []
    for u, v in g.sorted_edges:
        if u == v:
            constraints.append(Constraint((u,), loops))
        else:
            constraints.append(Constraint((u, v), arcs))
    for v, w in sorted((pins or {}).items()):
        constraints.append(Constraint((v,), frozenset({(w,)})))
    return CspInstance(g.n, h.n, tuple(constraints))


def find_hom_certificate(
    g: Graph,
    h: Graph,
    pins: Optional[Pins] = None,
    kind: CertificateKind = CertificateKind.HOMOMORPHISM,
) -> Certificate:
    return solve(hom_instance(g, h, pins)).relabel(kind)


def find_hom(g: Graph, h: Graph, pins: Optional[Pins] = None) -> Optional[Tuple[int, ...]]:
    """A homomorphism g -> h as a vertex map, or None after exhaustive search"""
    cert = find_hom_certificate(g, h, pins)
    logger.debug("hom %d -> %d vertices: %s", g.n, h.n, cert.kind.value)
    return cert.payload


def three_color_certificate(g: Graph, pins: Optional[Pins] = None) -> Certificate:
    return find_hom_certificate(g, complete_graph(3), pins, CertificateKind.COLORING)


def three_color(g: Graph, pins: Optional[Pins] = None) -> Optional[Tuple[int, ...]]:
    return three_color_certificate(g, pins).payload


def is_3colorable(g: Graph) -> bool:
    return three_color(g) is not None
