"""
Constraint Satisfaction Engine
Backtracking search with generalized arc consistency over finite domains
"""
import hashlib
import json
import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Deque, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from networkx.utils import UnionFind

from ..config import settings
from ..errors import InputError

logger = logging.getLogger(__name__)

Row = Tuple[int, ...]


class CertificateKind(str, Enum):
    """What a certificate witnesses"""
    ASSIGNMENT = "assignment"
    HOMOMORPHISM = "homomorphism"
    COLORING = "coloring"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class Constraint:
    """The variables in scope must jointly take one of the allowed rows"""
    scope: Tuple[int, ...]
    allowed: FrozenSet[Row]

    @classmethod
    def of(cls, scope: Sequence[int], allowed) -> "Constraint":
        return cls(tuple(int(v) for v in scope), frozenset(tuple(r) for r in allowed))


@dataclass(frozen=True)
class CspInstance:
    """Finite-domain CSP with table constraints and variable equalities"""
    var_count: int
    domain_size: int
    constraints: Tuple[Constraint, ...] = ()
    equalities: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        for c in self.constraints:
            for v in c.scope:
                if v < 0 or v >= self.var_count:
                    raise InputError(f"scope variable {v} out of range")
            for row in c.allowed:
                if len(row) != len(c.scope):
                    raise InputError(
                        f"allowed row {row} does not match scope length {len(c.scope)}"
                    )
        for a, b in self.equalities:
            if not (0 <= a < self.var_count and 0 <= b < self.var_count):
                raise InputError(f"equality ({a}, {b}) out of range")

    def to_dict(self) -> Dict:
        return {
            "var_count": self.var_count,
            "domain_size": self.domain_size,
            "constraints": sorted(
                [list(c.scope), sorted(list(r) for r in c.allowed)]
                for c in self.constraints
            ),
            "equalities": sorted(list(e) for e in self.equalities),
        }

    def digest(self) -> str:
        """SHA-256 of the canonical JSON form"""
        text = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class Certificate:
    """A solver verdict: a total assignment, or exhaustion of a named instance"""
    kind: CertificateKind
    payload: Optional[Tuple[int, ...]] = None
    digest: Optional[str] = None

    @property
    def satisfiable(self) -> bool:
        return self.kind != CertificateKind.EXHAUSTED

    def relabel(self, kind: CertificateKind) -> "Certificate":
        if not self.satisfiable:
            return self
        return Certificate(kind, self.payload, self.digest)

    def to_dict(self) -> Dict:
        return {
            "kind": self.kind.value,
            "payload": list(self.payload) if self.payload is not None else None,
            "digest": self.digest,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "Certificate":
        payload = data.get("payload")
        return cls(
            CertificateKind(data["kind"]),
            tuple(payload) if payload is not None else None,
            data.get("digest"),
        )


@dataclass
class _Prepared:
    """Instance after equality elimination and constraint merging"""
    size: int
    rep: List[int]
    constraints: List[Tuple[Tuple[int, ...], FrozenSet[Row]]] = field(default_factory=list)
    contradiction: bool = False


# Per binary constraint: value of the first variable -> supported values of
# the second, and value of the second -> supported values of the first
_Supports = Tuple[Dict[int, int], Dict[int, int]]


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _lowest_value(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _binary_supports(rows: FrozenSet[Row]) -> _Supports:
    forward: Dict[int, int] = {}
    backward: Dict[int, int] = {}
    for a, b in rows:
        forward[a] = forward.get(a, 0) | 1 << b
        backward[b] = backward.get(b, 0) | 1 << a
    return forward, backward


def _sweep(mine: int, other: int, table: Dict[int, int]) -> Tuple[int, int]:
    """Values of mine with a partner in other, and the partners they reach"""
    kept = reach = 0
    for a in _bits(mine):
        partners = table.get(a, 0) & other
        if partners:
            kept |= 1 << a
            reach |= partners
    return kept, reach


def _project(c: Constraint, scope: List[int], unique: List[int]) -> FrozenSet[Row]:
    """Rows of c re-indexed onto the sorted distinct variables of its scope"""
    if len(unique) == len(scope):
        if scope == unique:
            return frozenset(c.allowed)
        order = [scope.index(u) for u in unique]
        return frozenset(tuple(row[i] for i in order) for row in c.allowed)
    positions = {u: [i for i, s in enumerate(scope) if s == u] for u in unique}
    rows = set()
    for row in c.allowed:
        if all(len({row[i] for i in positions[u]}) == 1 for u in unique):
            rows.add(tuple(row[positions[u][0]] for u in unique))
    return frozenset(rows)


class BacktrackingSolver:
    """
    GAC propagation, minimum-remaining-values branching with index
    tie-break, values tried in increasing order
    """

    def __init__(self, equality_merging: Optional[bool] = None):
        self.equality_merging = (
            settings.equality_merging if equality_merging is None else equality_merging
        )
        self.nodes = 0

    def solve(self, instance: CspInstance) -> Certificate:
        self.nodes = 0
        digest = instance.digest()
        prepared = self._prepare(instance)
        values = None if prepared.contradiction else self._search(prepared, instance.domain_size)
        if values is None:
            logger.debug("exhausted after %d nodes (%s)", self.nodes, digest[:12])
            return Certificate(CertificateKind.EXHAUSTED, None, digest)
        assignment = tuple(values[prepared.rep[v]] for v in range(instance.var_count))
        logger.debug("solution after %d nodes", self.nodes)
        return Certificate(CertificateKind.ASSIGNMENT, assignment, digest)

    def _prepare(self, instance: CspInstance) -> _Prepared:
        n = instance.var_count
        if n > 0 and instance.domain_size == 0:
            return _Prepared(0, [], contradiction=True)

        extra: List[Constraint] = []
        if self.equality_merging:
            uf = UnionFind(range(n))
            for a, b in instance.equalities:
                uf.union(a, b)
            smallest: Dict[int, int] = {}
            for v in range(n):
                smallest.setdefault(uf[v], v)
            owners = [smallest[uf[v]] for v in range(n)]
        else:
            owners = list(range(n))
            diag = frozenset((a, a) for a in range(instance.domain_size))
            extra = [Constraint((a, b), diag) for a, b in instance.equalities]

        # Compress representatives in order of their smallest member
        compress: Dict[int, int] = {}
        for v in range(n):
            if owners[v] not in compress:
                compress[owners[v]] = len(compress)
        rep = [compress[owners[v]] for v in range(n)]
        prepared = _Prepared(len(compress), rep)

        merged: Dict[Tuple[int, ...], FrozenSet[Row]] = {}
        for c in list(instance.constraints) + extra:
            scope = [rep[v] for v in c.scope]
            unique = sorted(set(scope))
            rows = _project(c, scope, unique)
            key = tuple(unique)
            merged[key] = merged[key] & rows if key in merged else rows
            if not merged[key]:
                prepared.contradiction = True
                return prepared

        prepared.constraints = sorted(merged.items(), key=lambda item: item[0])
        return prepared

    def _search(self, prepared: _Prepared, domain_size: int) -> Optional[List[int]]:
        size = prepared.size
        cons = prepared.constraints
        watch: List[List[int]] = [[] for _ in range(size)]
        for ci, (scope, _) in enumerate(cons):
            for v in scope:
                watch[v].append(ci)
        constrained = [bool(w) for w in watch]

        # Identical row sets share one support table
        tables: Dict[FrozenSet[Row], _Supports] = {}
        supports: List[Optional[_Supports]] = []
        for scope, rows in cons:
            if len(scope) == 2:
                if rows not in tables:
                    tables[rows] = _binary_supports(rows)
                supports.append(tables[rows])
            else:
                supports.append(None)

        full = (1 << domain_size) - 1
        dom = [full] * size
        if not self._propagate(dom, cons, supports, watch, list(range(len(cons)))):
            return None

        # Each frame: (domains before branching, variable, candidate values, next index)
        stack: List[Tuple[List[int], int, List[int], int]] = []
        while True:
            var = self._select(dom, constrained)
            if var is None:
                return [_lowest_value(mask) for mask in dom]
            candidates = list(_bits(dom[var]))
            stack.append((dom, var, candidates, 0))

            dom = None
            while stack:
                saved, var, candidates, i = stack.pop()
                if i >= len(candidates):
                    continue
                stack.append((saved, var, candidates, i + 1))
                trial = list(saved)
                trial[var] = 1 << candidates[i]
                self.nodes += 1
                if self._propagate(trial, cons, supports, watch, list(watch[var])):
                    dom = trial
                    break
            if dom is None:
                return None

    @staticmethod
    def _select(dom: List[int], constrained: List[bool]) -> Optional[int]:
        best, best_size = None, 0
        for v, mask in enumerate(dom):
            if not constrained[v]:
                continue
            size = _popcount(mask)
            if size > 1 and (best is None or size < best_size):
                best, best_size = v, size
                if size == 2:
                    break
        return best

    @staticmethod
    def _revise_binary(dom: List[int], scope: Tuple[int, ...], support: _Supports) -> List[int]:
        """Sweep the smaller domain only"""
        forward, backward = support
        first, second = dom[scope[0]], dom[scope[1]]
        if _popcount(first) <= _popcount(second):
            kept, reach = _sweep(first, second, forward)
            return [kept, second & reach]
        kept, reach = _sweep(second, first, backward)
        return [first & reach, kept]

    @staticmethod
    def _revise_table(dom: List[int], scope: Tuple[int, ...], allowed: FrozenSet[Row]) -> List[int]:
        doms = [dom[v] for v in scope]
        support = [0] * len(scope)
        for row in allowed:
            for p, a in enumerate(row):
                if not doms[p] >> a & 1:
                    break
            else:
                for p, a in enumerate(row):
                    support[p] |= 1 << a
        return [d & s for d, s in zip(doms, support)]

    @classmethod
    def _propagate(
        cls,
        dom: List[int],
        cons: List[Tuple[Tuple[int, ...], FrozenSet[Row]]],
        supports: List[Optional[_Supports]],
        watch: List[List[int]],
        initial: List[int],
    ) -> bool:
        queue: Deque[int] = deque(initial)
        queued = set(initial)
        while queue:
            ci = queue.popleft()
            queued.discard(ci)
            scope, allowed = cons[ci]
            if supports[ci] is not None:
                narrowed_all = cls._revise_binary(dom, scope, supports[ci])
            else:
                narrowed_all = cls._revise_table(dom, scope, allowed)
            for v, narrowed in zip(scope, narrowed_all):
                if narrowed == dom[v]:
                    continue
                if narrowed == 0:
                    return False
                dom[v] = narrowed
                for cj in watch[v]:
                    if cj != ci and cj not in queued:
                        queue.append(cj)
                        queued.add(cj)
        return True


def solve(instance: CspInstance, equality_merging: Optional[bool] = None) -> Certificate:
    """Solve with a fresh deterministic solver"""
    return BacktrackingSolver(equality_merging=equality_merging).solve(instance)
