"""
Condition Procedures
sigma, qnu, trivial and combine
"""
from typing import Any, Dict, List, Tuple

from ...conditions.builders import sigma_of_graph, sigma_qnu
from ...conditions.combine import combine
from ...conditions.io import condition_to_dict
from ...conditions.triviality import ProjectionWitness, is_trivial, verify_projection_witness
from .base import BaseProcedure, Outcome


class SigmaProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "sigma"

    @property
    def description(self) -> str:
        return "Height-1 condition of a graph"

    @property
    def input_kinds(self) -> Tuple[str, ...]:
        return ("graph",)

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        return Outcome("value", condition_to_dict(sigma_of_graph(inputs[0])))


class QnuProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "qnu"

    @property
    def description(self) -> str:
        return "Quasi near-unanimity condition of a given arity"

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        return Outcome("value", condition_to_dict(sigma_qnu(params["n"])))


class TrivialProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "trivial"

    @property
    def description(self) -> str:
        return "Projection interpretation of a condition"

    @property
    def input_kinds(self) -> Tuple[str, ...]:
        return ("condition",)

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        witness = is_trivial(inputs[0])
        if witness is None:
            return Outcome("no")
        return Outcome("yes", {"choice": witness.as_dict()})

    def verify(self, inputs: List[Any], params: Dict[str, Any], outcome: Outcome) -> List[str]:
        if outcome.answer == "yes":
            witness = ProjectionWitness.of(outcome.witness["choice"])
            return verify_projection_witness(inputs[0], witness)
        if is_trivial(inputs[0]) is not None:
            return ["condition is trivial after all"]
        return []


class CombineProcedure(BaseProcedure):

    @property
    def name(self) -> str:
        return "combine"

    @property
    def description(self) -> str:
        return "Pairwise combination of two conditions"

    @property
    def input_kinds(self) -> Tuple[str, ...]:
        return ("condition", "condition")

    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        return Outcome("value", condition_to_dict(combine(inputs[0], inputs[1])))
