"""
Certificate Envelopes
The JSON record every command prints, plus the codecs for its witnesses
"""
import hashlib
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel, Field, ValidationError

from ..errors import ParseError
from ..graphs.model import Graph
from ..indicator.tables import FunctionTable


class InputDigest(BaseModel):
    """A file argument and the SHA-256 of its bytes"""
    path: str
    sha256: str


class CertificateEnvelope(BaseModel):
    command: str
    inputs: List[InputDigest] = Field(default_factory=list)
    params: Dict[str, Any] = Field(default_factory=dict)
    answer: str
    witness: Any = None
    version: str

    def to_json(self) -> str:
        return json.dumps(self.model_dump(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "CertificateEnvelope":
        try:
            return cls.model_validate(json.loads(text))
        except json.JSONDecodeError as e:
            raise ParseError(f"envelope is not JSON: {e.msg}", e.lineno)
        except ValidationError as e:
            raise ParseError(f"invalid envelope: {e.errors()[0]['msg']}")


def file_digest(path: str) -> InputDigest:
    data = Path(path).read_bytes()
    return InputDigest(path=path, sha256=hashlib.sha256(data).hexdigest())


def graph_to_dict(g: Graph) -> Dict[str, Any]:
    """0-based vertices"""
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges]}


def graph_from_dict(data: Dict[str, Any]) -> Graph:
    try:
        return Graph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed graph in witness: {e}")


def table_to_dict(t: FunctionTable) -> Dict[str, Any]:
    return {"arity": t.arity, "values": t.to_list()}


def table_from_dict(data: Dict[str, Any], domain_size: int) -> FunctionTable:
    try:
        return FunctionTable(domain_size, int(data["arity"]), tuple(int(v) for v in data["values"]))
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed function table in witness: {e}")


def as_map(values: Optional[Sequence[int]]) -> Optional[List[int]]:
    return None if values is None else [int(v) for v in values]
