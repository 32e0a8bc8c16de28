"""
Triviality Check
Label cover search for a projection interpretation of a height-1 condition
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from .model import HeightOneCondition

logger = logging.getLogger(__name__)

# (lhs symbol index, rhs symbol index, allowed (lhs coordinate, rhs coordinate) pairs)
_Link = Tuple[int, int, FrozenSet[Tuple[int, int]]]


@dataclass(frozen=True)
class ProjectionWitness:
    """Each symbol interpreted as the projection onto one coordinate"""
    choice: Tuple[Tuple[str, int], ...]

    @classmethod
    def of(cls, mapping: Dict[str, int]) -> "ProjectionWitness":
        return cls(tuple(sorted(mapping.items())))

    def as_dict(self) -> Dict[str, int]:
        return dict(self.choice)


def _links(c: HeightOneCondition) -> List[_Link]:
    index = c.symbol_index
    links = []
    for ident in c.identities:
        pairs = frozenset(
            (i, j)
            for i, a in enumerate(ident.lhs.args)
            for j, b in enumerate(ident.rhs.args)
            if a == b
        )
        links.append((index[ident.lhs.symbol], index[ident.rhs.symbol], pairs))
    return links


def _assign(
    doms: List[Set[int]], links_of: List[List[_Link]], s: int, i: int
) -> Optional[List[Set[int]]]:
    """Fix symbol s to coordinate i and prune its neighbours"""
    nd = list(doms)
    nd[s] = {i}
    for a, b, pairs in links_of[s]:
        if a == s:
            keep = {j for j in nd[b] if (i, j) in pairs}
            other = b
        else:
            keep = {j for j in nd[a] if (j, i) in pairs}
            other = a
        if not keep:
            return None
        nd[other] = keep
    return nd


def is_trivial(c: HeightOneCondition) -> Optional[ProjectionWitness]:
    """
    Search symbol-to-coordinate choices in declaration order with forward
    checking; None means no projection interpretation exists
    """
    k = len(c.symbols)
    doms: List[Set[int]] = [set(range(s.arity)) for s in c.symbols]
    links_of: List[List[_Link]] = [[] for _ in range(k)]
    for a, b, pairs in _links(c):
        if a == b:
            doms[a] &= {i for i in doms[a] if (i, i) in pairs}
            continue
        links_of[a].append((a, b, pairs))
        links_of[b].append((a, b, pairs))
    if any(not d for d in doms):
        return None

    nodes = 0
    # Each frame: (domains before assigning, symbol, candidates, next index)
    stack: List[Tuple[List[Set[int]], int, List[int], int]] = []
    depth = 0
    while True:
        if depth == k:
            choice = {c.symbols[s].name: min(doms[s]) for s in range(k)}
            logger.debug("projection witness after %d nodes", nodes)
            return ProjectionWitness.of(choice)
        stack.append((doms, depth, sorted(doms[depth]), 0))
        advanced = False
        while stack:
            saved, s, candidates, pos = stack.pop()
            if pos >= len(candidates):
                continue
            stack.append((saved, s, candidates, pos + 1))
            nodes += 1
            trial = _assign(saved, links_of, s, candidates[pos])
            if trial is not None:
                doms, depth, advanced = trial, s + 1, True
                break
        if not advanced:
            logger.debug("no projection witness after %d nodes", nodes)
            return None


def verify_projection_witness(c: HeightOneCondition, witness: ProjectionWitness) -> List[str]:
    """Violations of the witness; empty means every identity holds in projections"""
    choice = witness.as_dict()
    problems = []
    for sym in c.symbols:
        if sym.name not in choice:
            problems.append(f"symbol {sym.name!r} has no coordinate")
        elif not 0 <= choice[sym.name] < sym.arity:
            problems.append(f"coordinate {choice[sym.name]} outside arity of {sym.name!r}")
    if problems:
        return problems
    for ident in c.identities:
        left = ident.lhs.args[choice[ident.lhs.symbol]]
        right = ident.rhs.args[choice[ident.rhs.symbol]]
        if left != right:
            problems.append(
                f"{ident.lhs.symbol} ≈ {ident.rhs.symbol} selects variables {left} and {right}"
            )
    return problems
