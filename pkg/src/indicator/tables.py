"""
Function Tables
Total operations on a finite domain stored as flat value lists
"""
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

import numpy as np

from ..errors import InputError
from ..graphs.products import all_tuples, tuple_index


@dataclass(frozen=True)
class FunctionTable:
    """
    An operation of the given arity on 0..domain_size-1
    values[i] is the output on index_tuple(i), first argument most significant
    """
    domain_size: int
    arity: int
    values: Tuple[int, ...]

    def __post_init__(self):
        expected = self.domain_size ** self.arity
        if len(self.values) != expected:
            raise InputError(
                f"table of arity {self.arity} over {self.domain_size} elements needs "
                f"{expected} values, got {len(self.values)}"
            )
        if any(not 0 <= a < self.domain_size for a in self.values):
            raise InputError("table value outside the domain")

    @classmethod
    def from_function(cls, domain_size: int, arity: int, fn: Callable[..., int]) -> "FunctionTable":
        return cls(domain_size, arity, tuple(int(fn(*row)) for row in all_tuples(domain_size, arity)))

    @classmethod
    def projection(cls, domain_size: int, arity: int, coordinate: int) -> "FunctionTable":
        return cls.from_function(domain_size, arity, lambda *row: row[coordinate])

    def __call__(self, *args: int) -> int:
        return self.values[tuple_index(args, self.domain_size)]

    def array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.int64)

    def minor(self, pattern: Sequence[int], arity: int) -> "FunctionTable":
        """h(x_0, .., x_{arity-1}) = self(x_{pattern[0]}, x_{pattern[1]}, ..)"""
        if len(pattern) != self.arity:
            raise InputError(f"minor pattern has {len(pattern)} entries for arity {self.arity}")
        return FunctionTable(
            self.domain_size,
            arity,
            tuple(self(*(row[p] for p in pattern)) for row in all_tuples(self.domain_size, arity)),
        )

    def to_list(self) -> List[int]:
        return list(self.values)
