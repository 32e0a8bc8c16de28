"""
Chain Procedures
chain-tensor, chain-glue, gadget-verify, gadget-search, glue, sigma-perm and growth
"""
import json
from pathlib import Path
from typing import Any, Dict, List, Tuple

from ...chains.gadget import Gadget, GadgetReport, check_boundary, read_gadget, search_gadget, verify_gadget, write_gadget
from ...chains.glue import glue, glue_chain
from ...chains.growth import growth_g, growth_inequality_holds
from ...chains.patterns import sigma_permutation
from ...chains.tensor import ChainStep, tensor_chain
from ...graphs.io import write_graph
from ...graphs.model import canonical_edge
from ...solver.checker import check_coloring, check_homomorphism
from ...solver.homomorphism import three_color
from ..envelope import as_map, graph_from_dict, graph_to_dict
from .base import BaseProcedure, Outcome


def step_to_dict(step: ChainStep) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "graph": graph_to_dict(step.graph),
        "non_colorable": step.non_colorable.to_dict(),
    }
    if step.projection is not None:
        data["projection"] = list(step.projection)
    if step.edge is not None:
        data["edge"] = list(step.edge)
        data["critical_coloring"] = as_map(step.critical_coloring.payload)
    return data


def step_problems(index: int, data: Dict[str, Any], previous: Dict[str, Any]) -> List[str]:
    """Replay one chain step; non-colorability is confirmed by searching again"""
    graph = graph_from_dict(data["graph"])
    problems = []
    if three_color(graph) is not None:
        problems.append(f"step {index}: graph is 3-colorable")
    if "projection" in data:
        before = graph_from_dict(previous["graph"])
        problems.extend(f"step {index}: {p}" for p in check_homomorphism(graph, before, data["projection"]))
    if "edge" in data:
        edge = tuple(data["edge"])
        if not graph.has_edge(*edge):
            problems.append(f"step {index}: edge {edge} missing")
        else:
            coloring = data.get("critical_coloring") or []
            problems.extend(f"step {index}: {p}" for p in check_coloring(graph.remove_edge(*edge), coloring))
    return problems


def write_steps(out_dir: str, steps: List[Dict[str, Any]]) -> None:
    """step_<n>.graph and step_<n>.json for every step"""
    target = Path(out_dir)
    target.mkdir(parents=True, exist_ok=True)
    for n, data in enumerate(steps, start=1):
        (target / f"step_{n}.graph").write_text(write_graph(graph_from_dict(data["graph"])), encoding="utf-8")
        (target / f"step_{n}.json").write_text(json.dumps(data, sort_keys=True) + "\n", encoding="utf-8")


class _ChainProcedure(BaseProcedure):
    """Shared replay and artifact output for chains"""

    def verify(self, inputs: List[Any], params: Dict[str, Any], outcome: Outcome) -> List[str]:
        steps = outcome.witness["steps"]
        problems = []
        for index, data in enumerate(steps, start=1):
            problems.extend(step_problems(index, data, steps[index - 2] if index > 1 else {}))
        return problems

    def finish(self, steps: List[ChainStep], params: Dict[str, Any]) -> Outcome:
        encoded = [step_to_dict(s) for s in steps]
        if params.get("out_dir"):
            write_steps(params["out_dir"], encoded)
        return Outcome("value", {"steps": encoded})


class ChainTensorProcedure(_ChainProcedure):

    @property
    def name(self) -> str:
        return "chain-tensor"

    @property
    def description(self) -> str:
        return "Prefix tensor products of non-3-colorable graphs"

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        steps = tensor_chain(params["k"], params["max_n"], max_vertices=params.get("max_vertices"))
        return self.finish(steps, params)


class ChainGlueProcedure(_ChainProcedure):

    @property
    def name(self) -> str:
        return "chain-glue"

    @property
    def description(self) -> str:
        return "Glued chain of critical reductions through a gadget"

    @property
    def input_kinds(self) -> Tuple[str, ...]:
        return ("gadget",)

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        steps = glue_chain(params["k"], inputs[0], params["max_n"], max_vertices=params.get("max_vertices"))
        return self.finish(steps, params)


def report_to_dict(report: GadgetReport) -> Dict[str, Any]:
    return {"property": report.failed_property, "counterexample": as_map(report.counterexample)}


class GadgetVerifyProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "gadget-verify"

    @property
    def description(self) -> str:
        return "Exhaustive check of the three gadget properties"

    @property
    def input_kinds(self) -> Tuple[str, ...]:
        return ("gadget",)

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        report = verify_gadget(inputs[0])
        return Outcome("yes") if report.passed else Outcome("no", report_to_dict(report))

    def verify(self, inputs: List[Any], params: Dict[str, Any], outcome: Outcome) -> List[str]:
        gadget: Gadget = inputs[0]
        if outcome.answer == "yes":
            return [] if verify_gadget(gadget).passed else ["gadget fails on replay"]
        prop = outcome.witness["property"]
        example = tuple(outcome.witness["counterexample"])
        if prop == "P1":
            boundary = tuple(example[m] for m in gadget.marks)
            problems = check_coloring(gadget.graph, example)
            if (boundary[0] != boundary[1]) != (boundary[2] != boundary[3]):
                problems.append("coloring separates exactly one pair")
            return problems
        report = check_boundary(gadget, example)
        if report is None or report.failed_property != prop:
            return [f"boundary map {example} does not refute {prop}"]
        return []


class GadgetSearchProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "gadget-search"

    @property
    def description(self) -> str:
        return "Counterexample-guided gadget synthesis"

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        outcome = search_gadget(params["max_vertices_search"], budget=params.get("budget"))
        if outcome.gadget is None:
            return Outcome("no", {"evaluations": outcome.evaluations})
        return Outcome("yes", {"gadget": write_gadget(outcome.gadget), "evaluations": outcome.evaluations})

    def verify(self, inputs: List[Any], params: Dict[str, Any], outcome: Outcome) -> List[str]:
        if outcome.answer == "yes":
            gadget = read_gadget(outcome.witness["gadget"])
            return [] if verify_gadget(gadget).passed else ["found gadget fails on replay"]
        fresh = self.execute(inputs, params)
        return [] if fresh.answer == "no" else ["search finds a gadget"]


class GlueProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "glue"

    @property
    def description(self) -> str:
        return "Glue two graphs along edges through a gadget"

    @property
    def input_kinds(self) -> Tuple[str, ...]:
        return ("graph", "graph", "gadget")

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        # Edge endpoints arrive 1-based, like the file formats
        e = canonical_edge(params["e"][0] - 1, params["e"][1] - 1)
        f = canonical_edge(params["f"][0] - 1, params["f"][1] - 1)
        result = glue(inputs[0], e, inputs[1], f, inputs[2])
        return Outcome("value", {"graph": graph_to_dict(result.graph), "d": list(result.d)})


class SigmaPermProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "sigma-perm"

    @property
    def description(self) -> str:
        return "Permutation realizing a pair of diagonal patterns"

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        return Outcome("value", {"permutation": list(sigma_permutation(params["i"], params["j"]))})


class GrowthProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "growth"

    @property
    def description(self) -> str:
        return "Growth schedule for a list of graph sizes"

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        schedule = growth_g(params["sizes"], k_max=params.get("k_max"))
        return Outcome("value", {"g": schedule.g, "k": schedule.k})

    def verify(self, inputs: List[Any], params: Dict[str, Any], outcome: Outcome) -> List[str]:
        g, k = outcome.witness["g"], outcome.witness["k"]
        sizes = params["sizes"]
        problems = []
        if not g or g[0] != 1:
            problems.append("g(1) must be 1")
        if any(a >= b for a, b in zip(g, g[1:])):
            problems.append("g is not strictly increasing")
        for n, k_n in enumerate(k, start=1):
            exponents = [g[i] * sizes[i] for i in range(n)]
            if not growth_inequality_holds(k_n, exponents):
                problems.append(f"inequality fails at k_{n} = {k_n}")
        return problems
