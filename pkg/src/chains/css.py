"""
Forbidden-Image Membership
Accept inputs that contain no homomorphic image of a fixed pattern graph
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ..graphs.model import Graph
from ..solver.homomorphism import find_hom, three_color

logger = logging.getLogger(__name__)


@dataclass
class CssVerdict:
    accept: bool
    hom: Optional[Tuple[int, ...]] = None


def css_decide(g: Graph, target: Graph) -> CssVerdict:
    """Reject with a homomorphism g -> target when one exists, accept otherwise"""
    if not g.is_loopless() or not g.is_connected():
        logger.warning("pattern graph should be connected and loopless")
    elif three_color(g) is not None:
        logger.warning("pattern graph is 3-colorable")
    hom = find_hom(g, target)
    return CssVerdict(hom is None, hom)
