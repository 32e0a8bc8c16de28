"""
Indicator Procedures
satisfies, fgraph, minion-p and qnu-check
"""
from typing import Any, Dict, List, Tuple

from ...conditions.model import HeightOneCondition
from ...graphs.model import Graph, RelStructure
from ...graphs.quotient import qnu_quotient
from ...indicator.fgraph import FGraph, build_f_graph, minion_hom_to_p, ternary_polymorphisms, verify_f_edge
from ...indicator.polymorphisms import satisfies, verify_tables
from ...indicator.quotient_check import qnu_quotient_check
from ...indicator.tables import FunctionTable
from ...solver.checker import check_coloring, check_homomorphism
from ..envelope import as_map
from .base import BaseProcedure, Outcome


def fgraph_to_dict(fgraph: FGraph) -> Dict[str, Any]:
    return {
        "vertices": [t.to_list() for t in fgraph.vertices],
        "edges": [[i, j, w.to_list()] for (i, j), w in sorted(fgraph.edges.items())],
    }


def fgraph_from_dict(b: RelStructure, data: Dict[str, Any]) -> FGraph:
    d = b.domain_size
    fgraph = FGraph(b, [FunctionTable(d, 3, tuple(v)) for v in data["vertices"]])
    for i, j, values in data["edges"]:
        fgraph.edges[(i, j)] = FunctionTable(d, 6, tuple(values))
    return fgraph


def fgraph_problems(b: RelStructure, fgraph: FGraph, params: Dict[str, Any]) -> List[str]:
    problems = []
    if fgraph.vertices != ternary_polymorphisms(b, domain_cap=params.get("domain_cap")):
        problems.append("vertex list is not the set of ternary polymorphisms")
    for i, j in sorted(fgraph.edges):
        if not verify_f_edge(fgraph, i, j):
            problems.append(f"edge witness ({i}, {j}) does not replay")
    return problems


class SatisfiesProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "satisfies"

    @property
    def description(self) -> str:
        return "Polymorphisms of a template witnessing a condition"

    @property
    def input_kinds(self) -> Tuple[str, ...]:
        return ("struct", "condition")

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        result = satisfies(
            inputs[0], inputs[1],
            max_vars=params.get("max_vars"),
            domain_cap=params.get("domain_cap"),
        )
        if not result.satisfied:
            return Outcome("no", {"digest": result.certificate.digest})
        tables = {name: t.to_list() for name, t in sorted(result.tables.items())}
        return Outcome("yes", {"domain_size": inputs[0].domain_size, "tables": tables})

    def verify(self, inputs: List[Any], params: Dict[str, Any], outcome: Outcome) -> List[str]:
        b: RelStructure = inputs[0]
        c: HeightOneCondition = inputs[1]
        if outcome.answer == "yes":
            tables = {
                name: FunctionTable(b.domain_size, c.arity(name), tuple(values))
                for name, values in outcome.witness["tables"].items()
                if name in c.arities
            }
            return verify_tables(b, c, tables)
        fresh = self.execute(inputs, params)
        return [] if fresh.answer == "no" else ["the template satisfies the condition"]


class FGraphProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "fgraph"

    @property
    def description(self) -> str:
        return "Graph of ternary polymorphisms linked by 6-ary witnesses"

    @property
    def input_kinds(self) -> Tuple[str, ...]:
        return ("struct",)

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        fgraph = build_f_graph(inputs[0], domain_cap=params.get("domain_cap"))
        return Outcome("value", fgraph_to_dict(fgraph))

    def verify(self, inputs: List[Any], params: Dict[str, Any], outcome: Outcome) -> List[str]:
        return fgraph_problems(inputs[0], fgraph_from_dict(inputs[0], outcome.witness), params)


class MinionProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "minion-p"

    @property
    def description(self) -> str:
        return "Minion homomorphism from the polymorphisms of a template to projections"

    @property
    def input_kinds(self) -> Tuple[str, ...]:
        return ("struct",)

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        fgraph, coloring = minion_hom_to_p(inputs[0], domain_cap=params.get("domain_cap"))
        if coloring is None:
            return Outcome("no", {"vertices": len(fgraph.vertices), "edges": len(fgraph.edges)})
        return Outcome("yes", {"fgraph": fgraph_to_dict(fgraph), "coloring": as_map(coloring)})

    def verify(self, inputs: List[Any], params: Dict[str, Any], outcome: Outcome) -> List[str]:
        if outcome.answer == "no":
            fresh = self.execute(inputs, params)
            return [] if fresh.answer == "no" else ["the F-graph is 3-colorable"]
        fgraph = fgraph_from_dict(inputs[0], outcome.witness["fgraph"])
        problems = fgraph_problems(inputs[0], fgraph, params)
        problems.extend(check_coloring(fgraph.graph, outcome.witness["coloring"]))
        return problems


class QnuCheckProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "qnu-check"

    @property
    def description(self) -> str:
        return "Homomorphism into the quasi near-unanimity quotient of a power"

    @property
    def input_kinds(self) -> Tuple[str, ...]:
        return ("graph", "graph")

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        verdict = qnu_quotient_check(inputs[0], inputs[1], params["n"], max_vertices=params.get("max_vertices"))
        if not verdict.has_hom:
            return Outcome("no-hom", {"classes": verdict.quotient.n})
        reps = [list(verdict.classes.representative(c)) for c in verdict.hom]
        return Outcome("hom", {"map": as_map(verdict.hom), "representatives": reps})

    def verify(self, inputs: List[Any], params: Dict[str, Any], outcome: Outcome) -> List[str]:
        g: Graph = inputs[0]
        if outcome.answer == "hom":
            quotient, _ = qnu_quotient(inputs[1], params["n"], max_vertices=params.get("max_vertices"))
            return check_homomorphism(g, quotient, outcome.witness["map"])
        fresh = self.execute(inputs, params)
        return [] if fresh.answer == "no-hom" else ["a homomorphism into the quotient exists"]
