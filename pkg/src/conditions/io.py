"""
Condition Files
JSON format for height-1 conditions, validated with pydantic models
"""
import json
from typing import List

from pydantic import BaseModel, Field, ValidationError

from ..errors import InputError, ParseError
from .model import HeightOneCondition, Identity, Symbol, Term


class SymbolModel(BaseModel):
    name: str
    arity: int = Field(ge=1)


class TermModel(BaseModel):
    symbol: str
    args: List[int]


class IdentityModel(BaseModel):
    vars: int = Field(ge=1)
    lhs: TermModel
    rhs: TermModel


class ConditionModel(BaseModel):
    symbols: List[SymbolModel]
    identities: List[IdentityModel] = []

    def to_condition(self) -> HeightOneCondition:
        return HeightOneCondition.build(
            [Symbol(s.name, s.arity) for s in self.symbols],
            [
                Identity(
                    i.vars,
                    Term(i.lhs.symbol, tuple(i.lhs.args)),
                    Term(i.rhs.symbol, tuple(i.rhs.args)),
                )
                for i in self.identities
            ],
        )

    @classmethod
    def from_condition(cls, c: HeightOneCondition) -> "ConditionModel":
        return cls(
            symbols=[SymbolModel(name=s.name, arity=s.arity) for s in c.symbols],
            identities=[
                IdentityModel(
                    vars=i.var_count,
                    lhs=TermModel(symbol=i.lhs.symbol, args=list(i.lhs.args)),
                    rhs=TermModel(symbol=i.rhs.symbol, args=list(i.rhs.args)),
                )
                for i in c.identities
            ],
        )


def condition_to_dict(c: HeightOneCondition) -> dict:
    return ConditionModel.from_condition(c).model_dump()


def condition_from_dict(data: dict) -> HeightOneCondition:
    try:
        model = ConditionModel.model_validate(data)
    except ValidationError as e:
        raise ParseError(f"invalid condition: {e.errors()[0]['msg']}")
    try:
        return model.to_condition()
    except InputError as e:
        raise ParseError(f"invalid condition: {e}")


def read_condition(text: str) -> HeightOneCondition:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"condition is not JSON: {e.msg}", e.lineno)
    return condition_from_dict(data)


def write_condition(c: HeightOneCondition) -> str:
    return json.dumps(condition_to_dict(c), sort_keys=True) + "\n"
