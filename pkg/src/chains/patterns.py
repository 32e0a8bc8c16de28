"""
Diagonal Patterns
The three 6-slot variable patterns of an edge symbol and the permutations between them
"""
from typing import Dict, Tuple

from ..conditions.builders import S_PATTERN, T_PATTERN, X, Y, Z
from ..errors import InputError
from ..indicator.tables import FunctionTable

Pattern = Tuple[int, ...]

P1: Pattern = (X, Y, X, Z, Y, Z)
P2: Pattern = (Y, X, Z, X, Z, Y)
P3: Pattern = (Z, Z, Y, Y, X, X)

# Indexed 1..3
PATTERNS: Dict[int, Pattern] = {1: P1, 2: P2, 3: P3}


def _pattern(i: int) -> Pattern:
    if i not in PATTERNS:
        raise InputError(f"pattern index must be 1, 2 or 3, got {i}")
    return PATTERNS[i]


def sigma_permutation(i: int, j: int) -> Tuple[int, ...]:
    """
    One-line permutation σ of 1..6 with (t[σ(k)], s[σ(k)]) = (P_i[k], P_j[k])
    where t, s are the two diagonals of an edge symbol
    """
    pi, pj = _pattern(i), _pattern(j)
    if i == j:
        raise InputError("adjacent vertices take different patterns")
    columns = {(a, b): k for k, (a, b) in enumerate(zip(T_PATTERN, S_PATTERN))}
    sigma = []
    for a, b in zip(pi, pj):
        sigma.append(columns[(a, b)] + 1)
    if len(set(sigma)) != 6:
        raise InputError(f"patterns {i} and {j} repeat a column pair")
    return tuple(sigma)


def all_sigma_permutations() -> Dict[Tuple[int, int], Tuple[int, ...]]:
    return {(i, j): sigma_permutation(i, j) for i in PATTERNS for j in PATTERNS if i != j}


def pattern_function(g: FunctionTable, i: int) -> FunctionTable:
    """f_i(x, y, z) := g(P_i(x, y, z))"""
    return g.minor(_pattern(i), 3)


def permuted_edge_table(g: FunctionTable, i: int, j: int) -> FunctionTable:
    """x -> g(x_σ(1), .., x_σ(6)), whose diagonals are f_i and f_j"""
    return g.minor(tuple(k - 1 for k in sigma_permutation(i, j)), 6)
