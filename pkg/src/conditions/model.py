"""
Height-1 Condition Model
Symbols, terms, identities and normalized conditions
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Tuple

from ..errors import InputError


@dataclass(frozen=True, order=True)
class Symbol:
    name: str
    arity: int


@dataclass(frozen=True, order=True)
class Term:
    """A symbol applied to variables given by index"""
    symbol: str
    args: Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Identity:
    """lhs ≈ rhs over variables 0..var_count-1"""
    var_count: int
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class HeightOneCondition:
    """
    A finite set of height-1 identities over declared symbols

    Use build() for the normal form: symbols sorted by name, identities
    sorted and deduplicated. Two conditions are equal iff their normal
    forms are.
    """
    symbols: Tuple[Symbol, ...]
    identities: Tuple[Identity, ...] = ()

    def __post_init__(self):
        seen = set()
        for sym in self.symbols:
            if sym.name in seen:
                raise InputError(f"symbol {sym.name!r} declared twice")
            if sym.arity < 1:
                raise InputError(f"symbol {sym.name!r} must have arity >= 1")
            seen.add(sym.name)
        arities = {s.name: s.arity for s in self.symbols}
        for ident in self.identities:
            if ident.var_count < 1:
                raise InputError("identity needs at least one variable")
            for term in (ident.lhs, ident.rhs):
                if term.symbol not in arities:
                    raise InputError(f"identity uses undeclared symbol {term.symbol!r}")
                if len(term.args) != arities[term.symbol]:
                    raise InputError(
                        f"{term.symbol!r} has arity {arities[term.symbol]}, "
                        f"applied to {len(term.args)} arguments"
                    )
                for a in term.args:
                    if not 0 <= a < ident.var_count:
                        raise InputError(
                            f"argument {a} outside 0..{ident.var_count - 1} in {term.symbol!r}"
                        )

    @classmethod
    def build(cls, symbols: Iterable[Symbol], identities: Iterable[Identity]) -> "HeightOneCondition":
        return cls(tuple(sorted(symbols)), tuple(sorted(set(identities))))

    @cached_property
    def arities(self) -> Dict[str, int]:
        return {s.name: s.arity for s in self.symbols}

    @cached_property
    def symbol_index(self) -> Dict[str, int]:
        return {s.name: i for i, s in enumerate(self.symbols)}

    @property
    def symbol_names(self) -> List[str]:
        return [s.name for s in self.symbols]

    def arity(self, name: str) -> int:
        return self.arities[name]

    def normalized(self) -> "HeightOneCondition":
        return HeightOneCondition.build(self.symbols, self.identities)
