"""
Condition Builders
Graph conditions, the Siggers condition and quasi near-unanimity chains
"""
from typing import List, Tuple

from ..errors import InputError
from ..graphs.model import Graph
from .model import HeightOneCondition, Identity, Symbol, Term

X, Y, Z = 0, 1, 2
IDENTITY_ARGS = (X, Y, Z)
# The two diagonals of a 6-ary edge symbol
T_PATTERN: Tuple[int, ...] = (X, Y, X, Z, Y, Z)
S_PATTERN: Tuple[int, ...] = (Y, X, Z, X, Z, Y)


def vertex_symbol(v: int) -> str:
    return f"f{v}"


def edge_symbol(u: int, v: int) -> str:
    return f"g{u}_{v}"


def sigma_of_graph(g: Graph) -> HeightOneCondition:
    """
    One ternary symbol per vertex, one 6-ary symbol per edge (u <= v), with
    f_u(x,y,z) ≈ g_e(x,y,x,z,y,z) and f_v(x,y,z) ≈ g_e(y,x,z,x,z,y)
    """
    symbols = [Symbol(vertex_symbol(v), 3) for v in range(g.n)]
    identities: List[Identity] = []
    for u, v in g.sorted_edges:
        name = edge_symbol(u, v)
        symbols.append(Symbol(name, 6))
        identities.append(Identity(3, Term(vertex_symbol(u), IDENTITY_ARGS), Term(name, T_PATTERN)))
        identities.append(Identity(3, Term(vertex_symbol(v), IDENTITY_ARGS), Term(name, S_PATTERN)))
    return HeightOneCondition.build(symbols, identities)


def siggers() -> HeightOneCondition:
    """s(x,y,x,z,y,z) ≈ s(y,x,z,x,z,y)"""
    return HeightOneCondition.build(
        [Symbol("s", 6)],
        [Identity(3, Term("s", T_PATTERN), Term("s", S_PATTERN))],
    )


def sigma_qnu(n: int) -> HeightOneCondition:
    """f(y,x,..,x) ≈ f(x,y,x,..,x) ≈ .. ≈ f(x,..,x,y) ≈ f(x,..,x)"""
    if n < 2:
        raise InputError(f"quasi near-unanimity needs arity >= 2, got {n}")
    terms = [Term("f", tuple(Y if j == i else X for j in range(n))) for i in range(n)]
    terms.append(Term("f", (X,) * n))
    identities = [Identity(2, terms[i], terms[i + 1]) for i in range(n)]
    return HeightOneCondition.build([Symbol("f", n)], identities)
