"""
Quotient Homomorphism Check
Search for a homomorphism into the qnu quotient of a power of the host
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ..errors import CertificateError, InputError
from ..graphs.model import ClassMap, Graph
from ..graphs.quotient import qnu_quotient
from ..solver.homomorphism import find_hom

logger = logging.getLogger(__name__)


@dataclass
class QuotientVerdict:
    quotient: Graph
    classes: ClassMap
    hom: Optional[Tuple[int, ...]] = None

    @property
    def has_hom(self) -> bool:
        return self.hom is not None


def qnu_quotient_check(
    g: Graph, h: Graph, n: int, max_vertices: Optional[int] = None
) -> QuotientVerdict:
    """
    find_hom(g, qnu_quotient(h, n)); when g has no homomorphism to h and
    n exceeds the edge count of g, the answer is always no-hom
    """
    if not g.is_loopless():
        raise InputError("pattern graph must be loopless")
    if not g.is_connected():
        raise InputError("pattern graph must be connected")
    quotient, classes = qnu_quotient(h, n, max_vertices=max_vertices)
    hom = find_hom(g, quotient)
    if hom is not None and n > g.edge_count and find_hom(g, h) is None:
        raise CertificateError(
            f"homomorphism into the quotient at n={n} > {g.edge_count} edges although none into the host"
        )
    logger.debug("quotient with %d classes: %s", quotient.n, "hom" if hom is not None else "no-hom")
    return QuotientVerdict(quotient, classes, hom)
