"""
Condition Algebra
Pairwise combination of conditions and implication through homomorphisms
"""
from typing import Optional, Tuple

from ..graphs.model import Graph
from ..solver.homomorphism import find_hom
from .model import HeightOneCondition, Identity, Symbol, Term


def pair_symbol(f: str, g: str) -> str:
    return f"{f}|{g}"


def combine(a: HeightOneCondition, b: HeightOneCondition) -> HeightOneCondition:
    """
    Symbols are pairs (f, g) of arity ar(f) + ar(g). Identities of a are
    padded with a fresh block for g's arguments; identities of b are padded
    with a fresh block for f's arguments.
    """
    symbols = [
        Symbol(pair_symbol(f.name, g.name), f.arity + g.arity)
        for f in a.symbols
        for g in b.symbols
    ]
    identities = []
    for ident in a.identities:
        r = ident.var_count
        for g in b.symbols:
            pad = tuple(range(r, r + g.arity))
            identities.append(Identity(
                r + g.arity,
                Term(pair_symbol(ident.lhs.symbol, g.name), ident.lhs.args + pad),
                Term(pair_symbol(ident.rhs.symbol, g.name), ident.rhs.args + pad),
            ))
    for ident in b.identities:
        r = ident.var_count
        for f in a.symbols:
            pad = tuple(range(f.arity))
            lhs = tuple(x + f.arity for x in ident.lhs.args)
            rhs = tuple(x + f.arity for x in ident.rhs.args)
            identities.append(Identity(
                f.arity + r,
                Term(pair_symbol(f.name, ident.lhs.symbol), pad + lhs),
                Term(pair_symbol(f.name, ident.rhs.symbol), pad + rhs),
            ))
    return HeightOneCondition.build(symbols, identities)


def implies_via_hom(g: Graph, h: Graph) -> Optional[Tuple[int, ...]]:
    """
    A homomorphism g -> h certifies that the condition of h implies that
    of g; None only means this sufficient test failed
    """
    return find_hom(g, h)
