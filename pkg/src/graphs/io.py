"""
Graph and Structure Files
DIMACS-style text formats with 1-based vertices
"""
from pathlib import Path
from typing import Iterator, List, Tuple, Union

from ..errors import InputError, ParseError
from .model import Graph, RelStructure, Relation, canonical_edge

Line = Tuple[int, List[str], str]


def content_lines(text: str) -> Iterator[Line]:
    """(line number, tokens, raw) for every non-blank, non-comment line"""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        yield lineno, tokens, raw


def parse_int(token: str, lineno: int, raw: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno, raw)


def parse_vertex(token: str, n: int, lineno: int, raw: str) -> int:
    v = parse_int(token, lineno, raw)
    if v < 1 or v > n:
        raise ParseError(f"vertex {v} out of range 1..{n}", lineno, raw)
    return v - 1


def parse_graph_lines(lines: List[Line]) -> Tuple[Graph, List[Line]]:
    """Parse header and edge lines; return the graph and the unconsumed trailer"""
    if not lines:
        raise ParseError("missing header 'p graph <n> <m>'", 1, "")
    lineno, tokens, raw = lines[0]
    if len(tokens) != 4 or tokens[0] != "p" or tokens[1] != "graph":
        raise ParseError("malformed header, expected 'p graph <n> <m>'", lineno, raw)
    n = parse_int(tokens[2], lineno, raw)
    m = parse_int(tokens[3], lineno, raw)
    if n < 0 or m < 0:
        raise ParseError("negative count in header", lineno, raw)

    edges = set()
    rest = lines[1:]
    consumed = 0
    for lineno, tokens, raw in rest:
        if tokens[0] != "e":
            break
        if len(tokens) != 3:
            raise ParseError("edge line must be 'e <u> <v>'", lineno, raw)
        u = parse_vertex(tokens[1], n, lineno, raw)
        v = parse_vertex(tokens[2], n, lineno, raw)
        e = canonical_edge(u, v)
        if e in edges:
            raise ParseError(f"duplicate edge {u + 1} {v + 1}", lineno, raw)
        edges.add(e)
        consumed += 1
    if consumed != m:
        where = rest[consumed][0] if consumed < len(rest) else lines[0][0]
        raise ParseError(f"header announces {m} edges, found {consumed}", where)
    return Graph(n, frozenset(edges)), rest[consumed:]


def read_graph(text: str) -> Graph:
    graph, trailer = parse_graph_lines(list(content_lines(text)))
    if trailer:
        lineno, _, raw = trailer[0]
        raise ParseError("unexpected line after edge list", lineno, raw)
    return graph


def write_graph(g: Graph) -> str:
    lines = [f"p graph {g.n} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"


def read_struct(text: str) -> RelStructure:
    lines = list(content_lines(text))
    if not lines:
        raise ParseError("missing header 'p struct <domain> <k>'", 1, "")
    lineno, tokens, raw = lines[0]
    if len(tokens) != 4 or tokens[0] != "p" or tokens[1] != "struct":
        raise ParseError("malformed header, expected 'p struct <domain> <k>'", lineno, raw)
    domain = parse_int(tokens[2], lineno, raw)
    k = parse_int(tokens[3], lineno, raw)

    relations = []
    pos = 1
    for _ in range(k):
        if pos >= len(lines):
            raise ParseError(f"header announces {k} relations, found {len(relations)}", lineno)
        lineno, tokens, raw = lines[pos]
        if len(tokens) != 4 or tokens[0] != "r":
            raise ParseError("relation line must be 'r <name> <arity> <count>'", lineno, raw)
        name = tokens[1]
        arity = parse_int(tokens[2], lineno, raw)
        count = parse_int(tokens[3], lineno, raw)
        rows = set()
        for _ in range(count):
            pos += 1
            if pos >= len(lines):
                raise ParseError(f"relation {name!r} announces {count} tuples", lineno, raw)
            tlineno, ttokens, traw = lines[pos]
            if ttokens[0] != "t" or len(ttokens) != arity + 1:
                raise ParseError(f"tuple line must be 't' followed by {arity} entries", tlineno, traw)
            row = tuple(parse_vertex(tok, domain, tlineno, traw) for tok in ttokens[1:])
            if row in rows:
                raise ParseError(f"duplicate tuple in relation {name!r}", tlineno, traw)
            rows.add(row)
        relations.append(Relation(name, arity, frozenset(rows)))
        pos += 1
    if pos < len(lines):
        lineno, _, raw = lines[pos]
        raise ParseError("unexpected line after last relation", lineno, raw)
    return RelStructure(domain, tuple(relations))


def write_struct(s: RelStructure) -> str:
    lines = [f"p struct {s.domain_size} {len(s.relations)}"]
    for rel in s.relations:
        lines.append(f"r {rel.name} {rel.arity} {len(rel.tuples)}")
        for row in rel.sorted_tuples:
            lines.append("t " + " ".join(str(a + 1) for a in row))
    return "\n".join(lines) + "\n"


def load_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}")
