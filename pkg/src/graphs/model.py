"""
Graph Model
Finite undirected graphs (loops allowed), relational structures and class maps
"""
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..errors import InputError

Edge = Tuple[int, int]
Row = Tuple[int, ...]


def canonical_edge(u: int, v: int) -> Edge:
    """Store {u, v} as (min, max)"""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    Undirected graph on vertices 0..n-1
    Edges are canonical (u, v) pairs with u <= v; (v, v) is a loop
    """
    n: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        for u, v in self.edges:
            if u > v:
                raise InputError(f"edge ({u}, {v}) is not canonical")
            if u < 0 or v >= self.n:
                raise InputError(f"edge ({u}, {v}) out of range for {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from arbitrary (u, v) pairs"""
        return cls(n, frozenset(canonical_edge(int(u), int(v)) for u, v in edges))

    @cached_property
    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        nbrs: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def directed_pairs(self) -> FrozenSet[Edge]:
        """Both orientations of every edge"""
        pairs = set()
        for u, v in self.edges:
            pairs.add((u, v))
            pairs.add((v, u))
        return frozenset(pairs)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def loops(self) -> List[int]:
        return sorted(u for u, v in self.edges if u == v)

    def is_loopless(self) -> bool:
        return not self.loops

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = canonical_edge(u, v)
        if e not in self.edges:
            raise InputError(f"edge ({u}, {v}) is not in the graph")
        return Graph(self.n, self.edges - {e})

    def add_edges(self, edges: Iterable[Sequence[int]]) -> "Graph":
        extra = {canonical_edge(int(u), int(v)) for u, v in edges}
        return Graph(self.n, self.edges | extra)

    def induced_subgraph(self, vertices: Sequence[int]) -> Tuple["Graph", List[int]]:
        """Subgraph on the given vertices, relabelled in the given order"""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph.from_edges(len(vertices), edges), list(vertices)

    def relabel(self, mapping: Sequence[int], n: Optional[int] = None) -> "Graph":
        """Image of the edge set under a vertex map"""
        size = self.n if n is None else n
        return Graph.from_edges(size, ((mapping[u], mapping[v]) for u, v in self.edges))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in g.edges()))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return nx.is_connected(self.to_networkx())


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, itertools.combinations(range(k), 2))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {k}")
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def empty_graph(k: int) -> Graph:
    return Graph(k)


def loop_graph() -> Graph:
    """One vertex carrying a loop"""
    return Graph(1, frozenset({(0, 0)}))


def petersen_graph() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g on 0..|g|-1 followed by h shifted by |g|"""
    shifted = ((u + g.n, v + g.n) for u, v in h.edges)
    return Graph(g.n + h.n, g.edges | frozenset(shifted))


def canonical_form(g: Graph) -> Tuple[int, Tuple[Edge, ...]]:
    """
    Lexicographically smallest sorted edge list over all vertex permutations
    Brute force; intended for graphs with at most eight vertices
    """
    best: Optional[Tuple[Edge, ...]] = None
    for perm in itertools.permutations(range(g.n)):
        image = tuple(sorted(canonical_edge(perm[u], perm[v]) for u, v in g.edges))
        if best is None or image < best:
            best = image
    return g.n, best if best is not None else ()


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return canonical_form(g) == canonical_form(h)


@dataclass(frozen=True)
class Relation:
    """A named relation: arity plus a set of tuples"""
    name: str
    arity: int
    tuples: FrozenSet[Row]

    @cached_property
    def sorted_tuples(self) -> List[Row]:
        return sorted(self.tuples)


@dataclass(frozen=True)
class RelStructure:
    """Finite relational structure on domain 0..domain_size-1"""
    domain_size: int
    relations: Tuple[Relation, ...] = ()

    def __post_init__(self):
        if self.domain_size < 0:
            raise InputError("domain size must be non-negative")
        names = set()
        for rel in self.relations:
            if rel.name in names:
                raise InputError(f"duplicate relation name {rel.name!r}")
            names.add(rel.name)
            for row in rel.tuples:
                if len(row) != rel.arity:
                    raise InputError(
                        f"tuple {row} of relation {rel.name!r} has length "
                        f"{len(row)}, expected {rel.arity}"
                    )
                for a in row:
                    if a < 0 or a >= self.domain_size:
                        raise InputError(
                            f"tuple {row} of relation {rel.name!r} leaves the domain"
                        )

    def relation(self, name: str) -> Relation:
        for rel in self.relations:
            if rel.name == name:
                return rel
        raise KeyError(name)

    @property
    def max_arity(self) -> int:
        return max((rel.arity for rel in self.relations), default=0)


def make_relation(name: str, arity: int, tuples: Iterable[Sequence[int]]) -> Relation:
    return Relation(name, arity, frozenset(tuple(int(a) for a in t) for t in tuples))


def graph_template(g: Graph) -> RelStructure:
    """A graph as a template: one binary relation with both orientations"""
    return RelStructure(g.n, (make_relation("E", 2, g.directed_pairs),))


def one_element_template() -> RelStructure:
    return graph_template(loop_graph())


def nae_template() -> RelStructure:
    """({0,1}; ternary not-all-equal)"""
    rows = [t for t in itertools.product((0, 1), repeat=3) if len(set(t)) > 1]
    return RelStructure(2, (make_relation("NAE", 3, rows),))


def ordered_template() -> RelStructure:
    """({0,1}; <=, {0}, {1})"""
    return RelStructure(2, (
        make_relation("LE", 2, [(0, 0), (0, 1), (1, 1)]),
        make_relation("ZERO", 1, [(0,)]),
        make_relation("ONE", 1, [(1,)]),
    ))


@dataclass(frozen=True)
class ClassMap:
    """
    Factor map from n-tuples over a base set onto equivalence classes
    Tuples are indexed in mixed radix, first coordinate most significant
    """
    base: int
    arity: int
    class_of: Tuple[int, ...]
    representatives: Tuple[Row, ...]

    @property
    def source_size(self) -> int:
        return len(self.class_of)

    @property
    def class_count(self) -> int:
        return len(self.representatives)

    def representative(self, cls: int) -> Row:
        return self.representatives[cls]

    def classes(self) -> Dict[int, List[int]]:
        members: Dict[int, List[int]] = {}
        for idx, cls in enumerate(self.class_of):
            members.setdefault(cls, []).append(idx)
        return members
