"""Instance files: similarity matrices and weighted edge lists.

Matrix format::

    # comment
    5                      <- dimension, alone on the first content line
    labels a b c d e       <- optional
    5 2 2 1 1              <- n rows of n entries: 3, 7/2, 3.25 or *
    ...

Edge-list format: one ``u v w`` triple per line; a single token declares an
isolated vertex. ``#`` starts a comment anywhere on a line.

A file whose first content line is a lone nonnegative integer is read as a
matrix; anything else is read as an edge list.
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .core import SimilarityMatrix, WeightedGraph

MATRIX = "matrix"
EDGES = "edges"

_NUMBER = re.compile(r"^(\d+(/\d+)?|\d*\.\d+|\d+\.\d*)$")
_SIGNED = re.compile(r"^[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.\d*)$")


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)

    def as_dict(self):
        return {"error": self.message, "line": self.line, "column": self.column}


@dataclass(frozen=True)
class InstanceFile:
    graph: WeightedGraph
    matrix: Optional[SimilarityMatrix]
    format: str
    source: str = "<string>"

    @property
    def labels(self):
        return self.graph.labels


Token = Tuple[str, int, int]  # text, line, column


def _tokenize(text: str) -> List[List[Token]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = [(m.group(), lineno, m.start() + 1) for m in re.finditer(r"\S+", body)]
        if toks:
            lines.append(toks)
    return lines


def parse_weight(tok: Token) -> Fraction:
    text, line, col = tok
    if not _SIGNED.match(text):
        raise ParseError(f"malformed number {text!r}", line, col)
    value = Fraction(text)
    if value <= 0:
        raise ParseError(f"weight must be positive, got {text}", line, col)
    return value


def parse_text(text: str, source: str = "<string>") -> InstanceFile:
    lines = _tokenize(text)
    if not lines:
        raise ParseError("empty instance")
    first = lines[0]
    if len(first) == 1 and first[0][0].isdigit():
        return _parse_matrix(lines, source)
    return _parse_edges(lines, source)


def _parse_matrix(lines, source) -> InstanceFile:
    n = int(lines[0][0][0])
    rows = lines[1:]
    labels: Tuple[str, ...] = ()
    if rows and rows[0][0][0] == "labels":
        label_toks = rows[0][1:]
        if len(label_toks) != n:
            _, line, col = rows[0][0]
            raise ParseError(f"expected {n} labels, got {len(label_toks)}", line, col)
        labels = tuple(t[0] for t in label_toks)
        if len(set(labels)) != n:
            raise ParseError("labels must be distinct", rows[0][0][1], rows[0][0][2])
        rows = rows[1:]
    if len(rows) != n:
        where = rows[n] if len(rows) > n else (rows[-1] if rows else lines[0])
        raise ParseError(f"expected {n} matrix rows, got {len(rows)}", where[0][1], where[0][2])

    entries: List[List[Optional[Fraction]]] = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ParseError(f"row {i + 1} has {len(row)} entries, expected {n}", row[0][1], row[0][2])
        entries.append([None if t[0] == "*" else parse_weight(t) for t in row])

    for i in range(n):
        for j in range(i + 1, n):
            if entries[i][j] != entries[j][i]:
                _, line, col = rows[j][i]
                raise ParseError(
                    f"asymmetric matrix: entry ({i + 1},{j + 1}) is {_show(entries[i][j])} "
                    f"but ({j + 1},{i + 1}) is {_show(entries[j][i])}", line, col)

    off = [x for i in range(n) for j in range(n) if i != j and (x := entries[i][j]) is not None]
    diag = max(off) if off else Fraction(1)
    for i in range(n):
        if entries[i][i] is not None and entries[i][i] != diag:
            _, line, col = rows[i][i]
            raise ParseError(f"diagonal entry must be * or the maximum weight {diag}", line, col)

    matrix = SimilarityMatrix.from_rows(entries, labels)
    return InstanceFile(matrix.to_graph(), matrix, MATRIX, source)


def _show(x):
    return "*" if x is None else str(x)


def _parse_edges(lines, source) -> InstanceFile:
    order: List[str] = []
    index = {}
    triples = []
    seen = {}

    def vertex(label):
        if label not in index:
            index[label] = len(order)
            order.append(label)
        return index[label]

    for toks in lines:
        if len(toks) == 1:
            vertex(toks[0][0])
            continue
        if len(toks) != 3:
            raise ParseError(f"expected 'u v w', got {len(toks)} tokens", toks[0][1], toks[0][2])
        (a, line, col), (b, _, _), wtok = toks
        if a == b:
            raise ParseError(f"self-loop on {a!r}", line, col)
        w = parse_weight(wtok)
        key = frozenset((a, b))
        if key in seen:
            raise ParseError(f"duplicate edge {a} {b} (first given on line {seen[key]})", line, col)
        seen[key] = line
        triples.append((vertex(a), vertex(b), w))
    graph = WeightedGraph(len(order), tuple(triples), tuple(order))
    return InstanceFile(graph, None, EDGES, source)


def parse_instance(path: Union[str, None]) -> InstanceFile:
    """Read an instance from ``path``; ``None`` or ``"-"`` reads stdin."""
    if path in (None, "-"):
        return parse_text(sys.stdin.read(), "<stdin>")
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_text(text, str(path))


def format_matrix(m: SimilarityMatrix, labels: bool = True) -> str:
    out = [str(m.n)]
    if labels:
        out.append("labels " + " ".join(m.labels))
    out.extend(" ".join(_show(x) for x in row) for row in m.entries)
    return "\n".join(out) + "\n"


def format_edges(g: WeightedGraph) -> str:
    used = {v for u, w, _ in g.edges for v in (u, w)}
    out = [g.labels[v] for v in range(g.n) if v not in used]
    out.extend(f"{g.labels[u]} {g.labels[v]} {w}" for u, v, w in g.edges)
    return "\n".join(out) + "\n"
