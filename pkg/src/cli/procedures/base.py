"""
Procedure Registry
Named decision procedures with replayable outcomes
"""
import json
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

from ...chains.gadget import read_gadget
from ...conditions.io import read_condition
from ...errors import InputError
from ...graphs.io import read_graph, read_struct

# Parsers for each kind of file argument
LOADERS: Dict[str, Callable[[str], Any]] = {
    "graph": read_graph,
    "struct": read_struct,
    "condition": read_condition,
    "gadget": read_gadget,
}


@dataclass
class Outcome:
    """answer is yes/no/value/accept/reject/hom/no-hom/pass/fail"""
    answer: str
    witness: Any = None


class BaseProcedure(ABC):
    """Base class for command-line decision procedures"""

    @property
    @abstractmethod
    def name(self) -> str:
        """Subcommand name"""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        pass

    @property
    def input_kinds(self) -> Tuple[str, ...]:
        """Kinds of the file arguments, in order"""
        return ()

    @abstractmethod
    def execute(self, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        """Run the procedure on parsed inputs"""
        pass

    def verify(self, inputs: List[Any], params: Dict[str, Any], outcome: Outcome) -> List[str]:
        """
        Problems with a recorded outcome; empty means it replays
        The default re-runs a deterministic construction and compares
        """
        fresh = self.execute(inputs, params)
        witness = json.loads(json.dumps(fresh.witness))
        if (fresh.answer, witness) != (outcome.answer, outcome.witness):
            return [f"{self.name} does not reproduce the recorded {outcome.answer!r} answer"]
        return []

    def load(self, texts: List[str]) -> List[Any]:
        if len(texts) != len(self.input_kinds):
            raise InputError(f"{self.name} takes {len(self.input_kinds)} input files, got {len(texts)}")
        return [LOADERS[kind](text) for kind, text in zip(self.input_kinds, texts)]


class ProcedureRegistry:
    """Registry for command-line procedures"""

    def __init__(self):
        self._procedures: Dict[str, BaseProcedure] = {}

    def register(self, procedure: BaseProcedure):
        self._procedures[procedure.name] = procedure

    def get(self, name: str) -> Optional[BaseProcedure]:
        return self._procedures.get(name)

    def list_procedures(self) -> List[str]:
        return list(self._procedures.keys())

    def execute(self, name: str, inputs: List[Any], params: Dict[str, Any]) -> Outcome:
        procedure = self.get(name)
        if not procedure:
            raise InputError(f"unknown procedure: {name}")
        return procedure.execute(inputs, params)
