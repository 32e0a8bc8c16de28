"""
Indicator Instances
Deciding whether a template's polymorphisms satisfy a height-1 condition
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import settings
from ..errors import InputError, guard
from ..conditions.builders import edge_symbol, vertex_symbol
from ..conditions.model import HeightOneCondition
from ..graphs.model import Graph, Relation, RelStructure
from ..solver.csp import Certificate, Constraint, CspInstance, solve
from .tables import FunctionTable

logger = logging.getLogger(__name__)

Tables = Dict[str, FunctionTable]

# (x1 x2)(x3 x4)(x5 x6): exchanges the two diagonals of a 6-ary edge symbol
EDGE_SWAP: Tuple[int, ...] = (1, 0, 3, 2, 5, 4)


def _weights(base: int, arity: int) -> np.ndarray:
    return base ** np.arange(arity - 1, -1, -1, dtype=np.int64)


@lru_cache(maxsize=64)
def relation_scopes(rel: Relation, arity: int, domain_size: int) -> np.ndarray:
    """
    For every choice of `arity` rows of rel, the input indices of the rel.arity
    columns; shape (len(rel)^arity, rel.arity)
    """
    rows = np.array(rel.sorted_tuples, dtype=np.int64).reshape(-1, rel.arity)
    choice = np.indices((len(rows),) * arity).reshape(arity, -1).T
    columns = rows[choice]
    scopes = np.einsum("cnk,n->ck", columns, _weights(domain_size, arity))
    scopes.setflags(write=False)
    return scopes


def scope_rows(b: RelStructure, arity: int) -> int:
    """Rows relation_scopes would build for one symbol of this arity"""
    return sum(len(rel.tuples) ** arity for rel in b.relations if rel.tuples)


def _encoded(rel: Relation, domain_size: int) -> np.ndarray:
    rows = np.array(rel.sorted_tuples, dtype=np.int64).reshape(-1, rel.arity)
    return rows @ _weights(domain_size, rel.arity)


def is_polymorphism(table: FunctionTable, b: RelStructure) -> bool:
    """Applied coordinatewise to tuples of every relation, table stays inside it"""
    if table.domain_size != b.domain_size:
        return False
    guard("polymorphism check rows", scope_rows(b, table.arity), settings.max_constraints)
    values = table.array()
    for rel in b.relations:
        if not rel.tuples:
            continue
        out = values[relation_scopes(rel, table.arity, b.domain_size)]
        encoded = out @ _weights(b.domain_size, rel.arity)
        if not np.isin(encoded, _encoded(rel, b.domain_size)).all():
            return False
    return True


def identity_violations(c: HeightOneCondition, tables: Tables, domain_size: int) -> List[str]:
    problems = []
    for ident in c.identities:
        assignments = np.indices((domain_size,) * ident.var_count).reshape(ident.var_count, -1).T
        left_idx = assignments[:, list(ident.lhs.args)] @ _weights(domain_size, len(ident.lhs.args))
        right_idx = assignments[:, list(ident.rhs.args)] @ _weights(domain_size, len(ident.rhs.args))
        left = tables[ident.lhs.symbol].array()[left_idx]
        right = tables[ident.rhs.symbol].array()[right_idx]
        if not np.array_equal(left, right):
            problems.append(f"identity {ident.lhs.symbol} ≈ {ident.rhs.symbol} fails pointwise")
    return problems


def verify_tables(b: RelStructure, c: HeightOneCondition, tables: Tables) -> List[str]:
    """Violations of a witness family; empty means it replays"""
    problems = []
    for sym in c.symbols:
        table = tables.get(sym.name)
        if table is None:
            problems.append(f"no table for symbol {sym.name!r}")
        elif table.arity != sym.arity or table.domain_size != b.domain_size:
            problems.append(f"table for {sym.name!r} has the wrong shape")
        elif not is_polymorphism(table, b):
            problems.append(f"table for {sym.name!r} is not a polymorphism")
    if problems:
        return problems
    return identity_violations(c, tables, b.domain_size)


def polymorphism_constraints(b: RelStructure, offset: int, arity: int) -> List[Constraint]:
    """Relation constraints making the block at offset a polymorphism"""
    constraints = []
    for rel in b.relations:
        allowed = rel.tuples
        # Nothing to choose from an empty relation
        if not allowed:
            continue
        scopes = np.unique(relation_scopes(rel, arity, b.domain_size), axis=0) + offset
        constraints.extend(Constraint(tuple(s), allowed) for s in scopes.tolist())
    return constraints


@dataclass
class IndicatorInstance:
    """The CSP plus where each symbol's table starts"""
    instance: CspInstance
    offsets: Dict[str, int]
    condition: HeightOneCondition
    domain_size: int

    def tables(self, assignment: Sequence[int]) -> Tables:
        d = self.domain_size
        return {
            sym.name: FunctionTable(
                d,
                sym.arity,
                tuple(assignment[self.offsets[sym.name]:self.offsets[sym.name] + d ** sym.arity]),
            )
            for sym in self.condition.symbols
        }


def indicator_instance(
    b: RelStructure,
    c: HeightOneCondition,
    max_vars: Optional[int] = None,
    domain_cap: Optional[int] = None,
    max_constraints: Optional[int] = None,
) -> IndicatorInstance:
    """
    One variable per (symbol, input tuple); equalities from every identity
    under every assignment of its variables; relation constraints per symbol
    """
    d = b.domain_size
    if d < 1:
        raise InputError("template domain must be non-empty")
    if any(s.arity >= 6 for s in c.symbols):
        guard("template domain size", d, settings.cap("satisfies_domain_cap", domain_cap))
    var_count = sum(d ** s.arity for s in c.symbols)
    guard("indicator variables", var_count, settings.cap("max_vars", max_vars))
    rows = sum(scope_rows(b, s.arity) for s in c.symbols)
    guard("indicator constraints", rows, settings.cap("max_constraints", max_constraints))

    offsets: Dict[str, int] = {}
    position = 0
    for sym in c.symbols:
        offsets[sym.name] = position
        position += d ** sym.arity

    equalities = []
    for ident in c.identities:
        assignments = np.indices((d,) * ident.var_count).reshape(ident.var_count, -1).T
        left = assignments[:, list(ident.lhs.args)] @ _weights(d, len(ident.lhs.args))
        right = assignments[:, list(ident.rhs.args)] @ _weights(d, len(ident.rhs.args))
        left = left + offsets[ident.lhs.symbol]
        right = right + offsets[ident.rhs.symbol]
        equalities.extend((u, v) for u, v in zip(left.tolist(), right.tolist()) if u != v)

    constraints = []
    for sym in c.symbols:
        constraints.extend(polymorphism_constraints(b, offsets[sym.name], sym.arity))

    logger.debug(
        "indicator instance: %d variables, %d equalities, %d constraints",
        var_count, len(equalities), len(constraints),
    )
    instance = CspInstance(var_count, d, tuple(constraints), tuple(sorted(set(equalities))))
    return IndicatorInstance(instance, offsets, c, d)


@dataclass
class SatisfactionResult:
    certificate: Certificate
    tables: Optional[Tables] = None

    @property
    def satisfied(self) -> bool:
        return self.tables is not None


def satisfies(
    b: RelStructure,
    c: HeightOneCondition,
    max_vars: Optional[int] = None,
    domain_cap: Optional[int] = None,
    max_constraints: Optional[int] = None,
) -> SatisfactionResult:
    """Witness tables for c among the polymorphisms of b, or exhaustion"""
    built = indicator_instance(
        b, c, max_vars=max_vars, domain_cap=domain_cap, max_constraints=max_constraints
    )
    cert = solve(built.instance)
    if not cert.satisfiable:
        logger.debug("condition not satisfied by polymorphisms of %d-element template", b.domain_size)
        return SatisfactionResult(cert)
    return SatisfactionResult(cert, built.tables(cert.payload))


def transfer_witness(g: Graph, h: Graph, hom: Sequence[int], tables: Tables) -> Tables:
    """Tables for the condition of g from tables for the condition of h"""
    result: Tables = {}
    for v in range(g.n):
        result[vertex_symbol(v)] = tables[vertex_symbol(hom[v])]
    for u, v in g.sorted_edges:
        a, b = hom[u], hom[v]
        if a <= b:
            result[edge_symbol(u, v)] = tables[edge_symbol(a, b)]
        else:
            result[edge_symbol(u, v)] = tables[edge_symbol(b, a)].minor(EDGE_SWAP, 6)
    return result


def extract_homomorphism(g: Graph, tables: Tables, triangle: Tuple[int, int, int]) -> Tuple[int, ...]:
    """v -> f_v(v1, v2, v3) for a triangle (v1, v2, v3) of the host"""
    return tuple(tables[vertex_symbol(v)](*triangle) for v in range(g.n))
