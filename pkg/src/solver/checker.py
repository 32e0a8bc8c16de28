"""
Certificate Checker
Replays assignments, homomorphisms and colorings without touching the search engine
"""
import itertools
import logging
from typing import List, Optional, Sequence, Tuple

from ..errors import CertificateError
from ..graphs.model import Graph, complete_graph
from .csp import Certificate, CertificateKind, CspInstance

logger = logging.getLogger(__name__)


def check_assignment(instance: CspInstance, values: Sequence[int]) -> List[str]:
    """Violations of a total assignment; empty means it satisfies the instance"""
    problems: List[str] = []
    if len(values) != instance.var_count:
        return [f"assignment has {len(values)} values for {instance.var_count} variables"]
    for v, a in enumerate(values):
        if not 0 <= a < instance.domain_size:
            problems.append(f"variable {v} takes {a} outside the domain")
    for c in instance.constraints:
        row = tuple(values[v] for v in c.scope)
        if row not in c.allowed:
            problems.append(f"constraint on {c.scope} rejects {row}")
    for a, b in instance.equalities:
        if values[a] != values[b]:
            problems.append(f"equality {a} = {b} broken ({values[a]} != {values[b]})")
    return problems


def check_homomorphism(g: Graph, h: Graph, mapping: Sequence[int]) -> List[str]:
    """Violations of a vertex map g -> h; loops must land on loops"""
    if len(mapping) != g.n:
        return [f"map has {len(mapping)} entries for {g.n} vertices"]
    problems = [
        f"vertex {v} maps to {w}, not a vertex of the target"
        for v, w in enumerate(mapping)
        if not 0 <= w < h.n
    ]
    if problems:
        return problems
    for u, v in g.sorted_edges:
        if not h.has_edge(mapping[u], mapping[v]):
            problems.append(f"edge ({u}, {v}) maps to non-edge ({mapping[u]}, {mapping[v]})")
    return problems


def check_coloring(g: Graph, coloring: Sequence[int]) -> List[str]:
    return check_homomorphism(g, complete_graph(3), coloring)


def brute_force_solve(instance: CspInstance) -> Optional[Tuple[int, ...]]:
    """First satisfying assignment in lexicographic order, by full enumeration"""
    for values in itertools.product(range(instance.domain_size), repeat=instance.var_count):
        if not check_assignment(instance, values):
            return values
    return None


def verify_certificate(instance: CspInstance, certificate: Certificate, rerun: bool = True) -> None:
    """
    Raise CertificateError unless the certificate holds for the instance
    Exhaustion can only be confirmed by searching again
    """
    if certificate.kind == CertificateKind.EXHAUSTED:
        if certificate.digest != instance.digest():
            raise CertificateError("exhaustion digest does not name this instance", certificate.kind.value)
        if rerun:
            from .csp import solve

            if solve(instance).satisfiable:
                raise CertificateError("instance is satisfiable after all", certificate.kind.value)
        return
    if certificate.payload is None:
        raise CertificateError("satisfying certificate has no payload", certificate.kind.value)
    problems = check_assignment(instance, certificate.payload)
    if problems:
        logger.warning("certificate replay failed: %s", problems[0])
        raise CertificateError(problems[0], certificate.kind.value)
