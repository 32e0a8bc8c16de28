"""
Gadget Verification and Search
Four-terminal graphs whose 3-colorings separate exactly one of two marked pairs
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from ..config import settings
from ..errors import InputError, ParseError
from ..graphs.io import content_lines, parse_graph_lines, parse_vertex, write_graph
from ..graphs.model import Edge, Graph, canonical_edge
from ..solver.homomorphism import three_color

logger = logging.getLogger(__name__)

Marks = Tuple[int, int, int, int]
Boundary = Tuple[int, int, int, int]


@dataclass(frozen=True)
class Gadget:
    """graph with marks (x, x', y, y') and a distinguished edge d"""
    graph: Graph
    marks: Marks
    d: Edge

    def __post_init__(self):
        if len(self.marks) != 4 or len(set(self.marks)) != 4:
            raise InputError(f"gadget needs four distinct marks, got {self.marks}")
        for m in self.marks:
            if not 0 <= m < self.graph.n:
                raise InputError(f"mark {m} is not a vertex")
        if not self.graph.has_edge(*self.d):
            raise InputError(f"marked edge {self.d} is not in the gadget")


@dataclass
class GadgetReport:
    """Outcome of verify_gadget; the counterexample is a coloring (P1) or a boundary map"""
    passed: bool
    failed_property: Optional[str] = None
    counterexample: Optional[Tuple[int, ...]] = None


def boundary_maps() -> Iterator[Boundary]:
    """All 81 colorings of (x, x', y, y')"""
    return itertools.product(range(3), repeat=4)


def separated_pairs(b: Boundary) -> int:
    return int(b[0] != b[1]) + int(b[2] != b[3])


def _extends(graph: Graph, marks: Marks, b: Boundary) -> Optional[Tuple[int, ...]]:
    return three_color(graph, dict(zip(marks, b)))


def check_boundary(gadget: Gadget, b: Boundary) -> Optional[GadgetReport]:
    """The property this boundary map is responsible for, if it fails"""
    split = separated_pairs(b)
    if split == 1:
        if _extends(gadget.graph, gadget.marks, b) is None:
            return GadgetReport(False, "P2", b)
        return None
    coloring = _extends(gadget.graph, gadget.marks, b)
    if coloring is not None:
        return GadgetReport(False, "P1", coloring)
    if split == 0 and _extends(gadget.graph.remove_edge(*gadget.d), gadget.marks, b) is None:
        return GadgetReport(False, "P3", b)
    return None


def verify_gadget(gadget: Gadget) -> GadgetReport:
    """
    P1: no 3-coloring has both pairs equal or both separated
    P2: every boundary map separating exactly one pair extends
    P3: every boundary map with both pairs equal extends once d is removed
    """
    first: Dict[str, GadgetReport] = {}
    for b in boundary_maps():
        report = check_boundary(gadget, b)
        if report is not None:
            first.setdefault(report.failed_property, report)
    for prop in ("P1", "P2", "P3"):
        if prop in first:
            logger.debug("gadget fails %s at %s", prop, first[prop].counterexample)
            return first[prop]
    return GadgetReport(True)


def _non_mark_pairs(n: int) -> List[Edge]:
    return [
        (u, v)
        for u, v in itertools.combinations(range(n), 2)
        if not (u < 4 and v < 4)
    ]


@dataclass
class SearchOutcome:
    gadget: Optional[Gadget]
    evaluations: int


def search_gadget(max_vertices: int, budget: Optional[int] = None) -> SearchOutcome:
    """
    Marks are vertices 0..3; candidates are visited by vertex count, then by
    edge mask over pairs not joining two marks, then by choice of d. Boundary
    maps that refuted earlier candidates are replayed first; only candidates
    surviving them count against the budget.
    """
    if max_vertices < 5:
        raise InputError(f"gadget search needs max_vertices >= 5, got {max_vertices}")
    remaining = settings.cap("gadget_budget", budget)
    marks: Marks = (0, 1, 2, 3)
    pool: List[Boundary] = []
    evaluations = 0

    for n in range(max(5, settings.gadget_min_vertices), max_vertices + 1):
        pairs = _non_mark_pairs(n)
        for mask in range(1, 1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            graph = Graph.from_edges(n, edges)
            probe = Gadget(graph, marks, graph.sorted_edges[0])
            if any(_refutes_graph(probe, b) for b in pool):
                continue
            if remaining <= 0:
                logger.info("gadget search budget exhausted after %d evaluations", evaluations)
                return SearchOutcome(None, evaluations)
            remaining -= 1
            evaluations += 1
            report = _verify_p1_p2(probe)
            if report is not None:
                pool.insert(0, _boundary_of(report, marks))
                continue
            for d in graph.sorted_edges:
                candidate = Gadget(graph, marks, d)
                if verify_gadget(candidate).passed:
                    logger.info("gadget found on %d vertices after %d evaluations", n, evaluations)
                    return SearchOutcome(candidate, evaluations)
    return SearchOutcome(None, evaluations)


def _refutes_graph(probe: Gadget, b: Boundary) -> bool:
    report = check_boundary(probe, b)
    return report is not None and report.failed_property in ("P1", "P2")


def _verify_p1_p2(probe: Gadget) -> Optional[GadgetReport]:
    for b in boundary_maps():
        report = check_boundary(probe, b)
        if report is not None and report.failed_property in ("P1", "P2"):
            return report
    return None


def _boundary_of(report: GadgetReport, marks: Marks) -> Boundary:
    if report.failed_property == "P1":
        return tuple(report.counterexample[m] for m in marks)
    return report.counterexample


def read_gadget(text: str) -> Gadget:
    """Graph file followed by 'm x x' y y'' and 'd u v' (1-based)"""
    graph, trailer = parse_graph_lines(list(content_lines(text)))
    marks = None
    d = None
    for lineno, tokens, raw in trailer:
        if tokens[0] == "m" and len(tokens) == 5:
            marks = tuple(parse_vertex(t, graph.n, lineno, raw) for t in tokens[1:])
        elif tokens[0] == "d" and len(tokens) == 3:
            d = canonical_edge(*(parse_vertex(t, graph.n, lineno, raw) for t in tokens[1:]))
        else:
            raise ParseError("expected 'm x x2 y y2' or 'd u v'", lineno, raw)
    if marks is None or d is None:
        raise ParseError("gadget file needs both an 'm' and a 'd' line")
    try:
        return Gadget(graph, marks, d)
    except InputError as e:
        raise ParseError(str(e))


def write_gadget(gadget: Gadget) -> str:
    x, x2, y, y2 = (m + 1 for m in gadget.marks)
    u, v = (w + 1 for w in gadget.d)
    return write_graph(gadget.graph) + f"m {x} {x2} {y} {y2}\nd {u} {v}\n"
