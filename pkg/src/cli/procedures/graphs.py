"""
Graph Procedures
hom, color3, css and critical
"""
from typing import Any, Dict, List, Tuple

from ...chains.critical import find_critical
from ...chains.css import css_decide
from ...graphs.model import Graph
from ...solver.checker import check_coloring, check_homomorphism
from ...solver.homomorphism import find_hom, three_color
from ..envelope import as_map, graph_from_dict, graph_to_dict
from .base import BaseProcedure, Outcome


class HomProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "hom"

    @property
    def description(self) -> str:
        return "Homomorphism between two graphs"

    @property
    def input_kinds(self) -> Tuple[str, ...]:
        return ("graph", "graph")

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        hom = find_hom(inputs[0], inputs[1])
        return Outcome("no") if hom is None else Outcome("yes", {"map": as_map(hom)})

    def verify(self, inputs: List[Any], params: Dict[str, Any], outcome: Outcome) -> List[str]:
        if outcome.answer == "yes":
            return check_homomorphism(inputs[0], inputs[1], outcome.witness["map"])
        return [] if find_hom(inputs[0], inputs[1]) is None else ["a homomorphism exists"]


class Color3Procedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "color3"

    @property
    def description(self) -> str:
        return "3-coloring of a graph"

    @property
    def input_kinds(self) -> Tuple[str, ...]:
        return ("graph",)

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        coloring = three_color(inputs[0])
        return Outcome("no") if coloring is None else Outcome("yes", {"coloring": as_map(coloring)})

    def verify(self, inputs: List[Any], params: Dict[str, Any], outcome: Outcome) -> List[str]:
        if outcome.answer == "yes":
            return check_coloring(inputs[0], outcome.witness["coloring"])
        return [] if three_color(inputs[0]) is None else ["the graph is 3-colorable"]


class CssProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "css"

    @property
    def description(self) -> str:
        return "Membership of an input graph in the class forbidding images of a pattern"

    @property
    def input_kinds(self) -> Tuple[str, ...]:
        return ("graph", "graph")

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        graph, pattern = inputs
        verdict = css_decide(pattern, graph)
        if verdict.accept:
            return Outcome("accept")
        return Outcome("reject", {"map": as_map(verdict.hom)})

    def verify(self, inputs: List[Any], params: Dict[str, Any], outcome: Outcome) -> List[str]:
        graph, pattern = inputs
        if outcome.answer == "reject":
            return check_homomorphism(pattern, graph, outcome.witness["map"])
        return [] if find_hom(pattern, graph) is None else ["the input contains an image of the pattern"]


class CriticalProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "critical"

    @property
    def description(self) -> str:
        return "Non-3-colorable subgraph with a critical edge"

    @property
    def input_kinds(self) -> Tuple[str, ...]:
        return ("graph",)

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        found = find_critical(inputs[0])
        if found is None:
            return Outcome("no", {"coloring": as_map(three_color(inputs[0]))})
        sub, e = found
        return Outcome("yes", {
            "subgraph": graph_to_dict(sub),
            "edge": list(e),
            "coloring": as_map(three_color(sub.remove_edge(*e))),
        })

    def verify(self, inputs: List[Any], params: Dict[str, Any], outcome: Outcome) -> List[str]:
        g: Graph = inputs[0]
        if outcome.answer == "no":
            return check_coloring(g, outcome.witness["coloring"])
        sub = graph_from_dict(outcome.witness["subgraph"])
        e = tuple(outcome.witness["edge"])
        problems = []
        if sub.n != g.n or not sub.edges <= g.edges:
            problems.append("reported subgraph is not a subgraph of the input")
        if not sub.has_edge(*e):
            problems.append(f"edge {e} is not in the subgraph")
            return problems
        problems.extend(check_coloring(sub.remove_edge(*e), outcome.witness["coloring"]))
        if three_color(sub) is not None:
            problems.append("subgraph is 3-colorable")
        return problems
