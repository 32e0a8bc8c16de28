"""
Gadget Glueing
Join two graphs along critical edges through a verified gadget
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..config import settings
from ..conditions.builders import edge_symbol, vertex_symbol
from ..errors import InputError, guard
from ..graphs.model import Edge, Graph, canonical_edge
from ..indicator.polymorphisms import Tables
from ..solver.homomorphism import three_color, three_color_certificate
from .critical import find_critical
from .gadget import Gadget
from .patterns import pattern_function, permuted_edge_table
from .tensor import ChainStep, factor_sequence

logger = logging.getLogger(__name__)


@dataclass
class GlueResult:
    """
    The glued graph W and its marked edge d
    g keeps its vertex numbers; h_map and n_map give the positions of h and
    gadget vertices inside W
    """
    graph: Graph
    d: Edge
    g_size: int
    e: Edge
    f: Edge
    h_map: List[int]
    n_map: List[int]


def glue(g: Graph, e: Edge, h: Graph, f: Edge, gadget: Gadget) -> GlueResult:
    """
    Disjoint union of g - e, h - f and the gadget with e's endpoints
    identified with (x, x') and f's endpoints with (y, y')
    """
    e = canonical_edge(*e)
    f = canonical_edge(*f)
    g_cut = g.remove_edge(*e)
    h_cut = h.remove_edge(*f)
    x, x2, y, y2 = gadget.marks
    if gadget.graph.has_edge(x, x2) or gadget.graph.has_edge(y, y2):
        raise InputError("gadget must not join x with x' or y with y'")

    h_map = [g.n + w for w in range(h.n)]
    n_map: List[Optional[int]] = [None] * gadget.graph.n
    n_map[x], n_map[x2] = e
    n_map[y], n_map[y2] = h_map[f[0]], h_map[f[1]]
    nxt = g.n + h.n
    for v in range(gadget.graph.n):
        if n_map[v] is None:
            n_map[v] = nxt
            nxt += 1

    edges = set(g_cut.edges)
    edges.update(canonical_edge(h_map[u], h_map[v]) for u, v in h_cut.edges)
    edges.update(canonical_edge(n_map[u], n_map[v]) for u, v in gadget.graph.edges)
    w = Graph(nxt, frozenset(edges))
    d = canonical_edge(n_map[gadget.d[0]], n_map[gadget.d[1]])
    logger.debug("glued graph: %d vertices, %d edges, d=%s", w.n, w.edge_count, d)
    return GlueResult(w, d, g.n, e, f, h_map, n_map)


def lift_through_glue(glued: GlueResult, tables: Tables) -> Tables:
    """
    Tables for the condition of W from tables for the condition of g.
    Vertices of g keep their tables; every other vertex v takes f_{c(v)+1}
    of g_e for a 3-coloring c of the rest with c(x) = 0, c(x') = 1, and every
    other edge (u, v) takes g_e permuted by σ(c(u)+1, c(v)+1).
    """
    w = glued.graph
    e0, e1 = glued.e
    outside = [v for v in range(w.n) if v >= glued.g_size or v in (e0, e1)]
    rest, order = w.induced_subgraph(outside)
    position = {v: i for i, v in enumerate(order)}
    coloring = three_color(rest, {position[e0]: 0, position[e1]: 1})
    if coloring is None:
        raise InputError("the gadget side of the glued graph admits no suitable 3-coloring")
    color: Dict[int, int] = {v: coloring[position[v]] for v in order}

    g_e = tables[edge_symbol(e0, e1)]
    lifted: Tables = {}
    for v in range(w.n):
        if v < glued.g_size:
            lifted[vertex_symbol(v)] = tables[vertex_symbol(v)]
        else:
            lifted[vertex_symbol(v)] = pattern_function(g_e, color[v] + 1)
    for u, v in w.sorted_edges:
        if u < glued.g_size and v < glued.g_size:
            lifted[edge_symbol(u, v)] = tables[edge_symbol(u, v)]
        else:
            lifted[edge_symbol(u, v)] = permuted_edge_table(g_e, color[u] + 1, color[v] + 1)
    return lifted


def glue_chain(
    k: int, gadget: Gadget, max_n: int, max_vertices: Optional[int] = None
) -> List[ChainStep]:
    """
    W_1 is the critical reduction of the first enumerated graph;
    W_{n+1} = glue(W_n, d_n, G'', e, gadget) for the critical reduction
    (G'', e) of the next one
    """
    cap = settings.cap("max_vertices", max_vertices)
    reductions: List[Tuple[Graph, Edge]] = []
    for factor in factor_sequence(k, max_n):
        reduced = find_critical(factor)
        if reduced is None:
            raise InputError("enumerated graph turned out 3-colorable")
        reductions.append(reduced)
    guard(
        "glue chain vertices",
        sum(r.n for r, _ in reductions) + (k - 1) * (gadget.graph.n - 4),
        cap,
    )

    w, d = reductions[0]
    steps = [_certified(w, d)]
    for reduced, e in reductions[1:]:
        glued = glue(w, d, reduced, e, gadget)
        w, d = glued.graph, glued.d
        steps.append(_certified(w, d))
        logger.debug("glue chain step %d: %d vertices", len(steps), w.n)
    return steps


def _certified(w: Graph, d: Edge) -> ChainStep:
    return ChainStep(
        graph=w,
        non_colorable=three_color_certificate(w),
        edge=d,
        critical_coloring=three_color_certificate(w.remove_edge(*d)),
    )
