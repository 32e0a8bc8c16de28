"""
Tuple Encodings
Blow-up of a graph onto n-tuples and the loop-like one-tuple obstructions
"""
from typing import Iterator, List, Tuple

from ..errors import InputError
from .model import Graph, RelStructure, make_relation

Partition = Tuple[Tuple[int, ...], ...]


def blowup_vertex(v: int, n: int) -> Tuple[int, ...]:
    """The n distinct elements replacing vertex v"""
    return tuple(v * n + i for i in range(n))


def blowup_encode(g: Graph, n: int) -> RelStructure:
    """
    Replace every vertex x by a tuple x-bar of n new elements
    R(x-bar, y-bar) and R(y-bar, x-bar) hold for every edge {x, y}
    """
    if n < 1:
        raise InputError(f"blow-up arity must be >= 1, got {n}")
    if not g.is_loopless():
        raise InputError(f"blow-up requires a loopless graph; loops at {g.loops}")
    rows = []
    for u, v in g.sorted_edges:
        ub, vb = blowup_vertex(u, n), blowup_vertex(v, n)
        rows.append(ub + vb)
        rows.append(vb + ub)
    return RelStructure(n * g.n, (make_relation("R", 2 * n, rows),))


def _restricted_growth(size: int) -> Iterator[List[int]]:
    """Restricted growth strings of the given length, in lexicographic order"""
    if size == 0:
        yield []
        return
    word = [0] * size

    def extend(pos: int, top: int) -> Iterator[List[int]]:
        if pos == size:
            yield list(word)
            return
        for b in range(top + 2):
            word[pos] = b
            yield from extend(pos + 1, max(top, b))

    word[0] = 0
    yield from extend(1, 0)


def set_partitions(size: int) -> Iterator[Partition]:
    """All partitions of {1..size}; blocks sorted, listed by first element"""
    for word in _restricted_growth(size):
        blocks: List[List[int]] = [[] for _ in range(max(word) + 1 if word else 0)]
        for position, block in enumerate(word):
            blocks[block].append(position + 1)
        yield tuple(tuple(b) for b in blocks)


def loop_like_patterns(n: int) -> List[Partition]:
    """Partitions of the 2n coordinates of one R-tuple into fewer than 2n blocks"""
    if n < 1:
        raise InputError(f"pattern arity must be >= 1, got {n}")
    return [p for p in set_partitions(2 * n) if len(p) < 2 * n]


def pattern_structure(partition: Partition, n: int) -> RelStructure:
    """The connected one-tuple structure a partition stands for"""
    if sorted(i for block in partition for i in block) != list(range(1, 2 * n + 1)):
        raise InputError(f"{partition} is not a partition of 1..{2 * n}")
    element = {}
    for b, block in enumerate(partition):
        for i in block:
            element[i] = b
    row = tuple(element[i] for i in range(1, 2 * n + 1))
    return RelStructure(len(partition), (make_relation("R", 2 * n, [row]),))


def is_loop_like(row: Tuple[int, ...]) -> bool:
    """A single tuple is loop-like when it repeats an entry"""
    return len(set(row)) < len(row)
