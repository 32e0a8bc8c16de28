"""
F-Graph Construction
Ternary polymorphisms joined by 6-ary witnesses of both Siggers diagonals
"""
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ..config import settings
from ..errors import guard
from ..conditions.builders import S_PATTERN, T_PATTERN
from ..graphs.model import Graph, RelStructure
from ..graphs.products import all_tuples, tuple_index
from ..solver.csp import Constraint, CspInstance, solve
from ..solver.homomorphism import three_color
from .polymorphisms import EDGE_SWAP, is_polymorphism, polymorphism_constraints
from .tables import FunctionTable

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass
class FGraph:
    """Vertices are ternary polymorphisms; edges (i <= j) carry a 6-ary witness"""
    template: RelStructure
    vertices: List[FunctionTable]
    edges: Dict[Pair, FunctionTable] = field(default_factory=dict)

    @property
    def graph(self) -> Graph:
        return Graph.from_edges(len(self.vertices), self.edges.keys())

    def witness(self, i: int, j: int) -> Optional[FunctionTable]:
        """Witness for the ordered pair (i, j); reverse pairs use the swapped table"""
        if i <= j:
            return self.edges.get((i, j))
        stored = self.edges.get((j, i))
        return stored.minor(EDGE_SWAP, 6) if stored is not None else None


def ternary_polymorphisms(b: RelStructure, domain_cap: Optional[int] = None) -> List[FunctionTable]:
    """All ternary polymorphisms, in mixed-radix order of their value lists"""
    d = b.domain_size
    guard("F-graph template domain size", d, settings.cap("fgraph_domain_cap", domain_cap))
    found = []
    for values in itertools.product(range(d), repeat=d ** 3):
        table = FunctionTable(d, 3, values)
        if is_polymorphism(table, b):
            found.append(table)
    logger.debug("%d ternary polymorphisms on a %d-element domain", len(found), d)
    return found


@lru_cache(maxsize=8)
def _sextic_constraints(b: RelStructure) -> Tuple[Constraint, ...]:
    return tuple(polymorphism_constraints(b, 0, 6))


def edge_witness(b: RelStructure, f1: FunctionTable, f2: FunctionTable) -> Optional[FunctionTable]:
    """
    A 6-ary polymorphism g with g(x,y,x,z,y,z) = f1 and g(y,x,z,x,z,y) = f2,
    solved over the d^6 cells of g
    """
    d = b.domain_size
    pins: Dict[int, int] = {}
    for row in all_tuples(d, 3):
        for pattern, f in ((T_PATTERN, f1), (S_PATTERN, f2)):
            cell = tuple_index(tuple(row[p] for p in pattern), d)
            value = f(*row)
            # The diagonals only meet on constant triples
            if pins.setdefault(cell, value) != value:
                return None
    constraints = list(_sextic_constraints(b))
    constraints.extend(Constraint((cell,), frozenset({(value,)})) for cell, value in sorted(pins.items()))
    cert = solve(CspInstance(d ** 6, d, tuple(constraints)))
    if not cert.satisfiable:
        return None
    return FunctionTable(d, 6, cert.payload)


def _edge_task(args: Tuple[RelStructure, FunctionTable, FunctionTable]) -> Optional[FunctionTable]:
    return edge_witness(*args)


def build_f_graph(
    b: RelStructure,
    domain_cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> FGraph:
    """Every pair i <= j (loops included) is tested; results are kept in pair order"""
    vertices = ternary_polymorphisms(b, domain_cap=domain_cap)
    pairs = [(i, j) for i in range(len(vertices)) for j in range(i, len(vertices))]
    tasks = [(b, vertices[i], vertices[j]) for i, j in pairs]
    pool_size = settings.fgraph_workers if workers is None else workers
    if pool_size > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=pool_size) as pool:
            results = list(pool.map(_edge_task, tasks))
    else:
        results = [_edge_task(t) for t in tasks]

    fgraph = FGraph(b, vertices)
    for pair, witness in zip(pairs, results):
        if witness is not None:
            fgraph.edges[pair] = witness
    logger.debug("F-graph: %d vertices, %d edges", len(vertices), len(fgraph.edges))
    return fgraph


def verify_f_edge(fgraph: FGraph, i: int, j: int) -> bool:
    """Replay the witness of (i, j) against both diagonals and the template"""
    g = fgraph.witness(i, j)
    if g is None or not is_polymorphism(g, fgraph.template):
        return False
    return g.minor(T_PATTERN, 3) == fgraph.vertices[i] and g.minor(S_PATTERN, 3) == fgraph.vertices[j]


def minion_hom_to_p(
    b: RelStructure,
    domain_cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> Tuple[FGraph, Optional[Tuple[int, ...]]]:
    """A 3-coloring of the F-graph, certifying a minion homomorphism to projections"""
    fgraph = build_f_graph(b, domain_cap=domain_cap, workers=workers)
    coloring = three_color(fgraph.graph)
    logger.debug("minion homomorphism to projections: %s", "yes" if coloring is not None else "no")
    return fgraph, coloring
