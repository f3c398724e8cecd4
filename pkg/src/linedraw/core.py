"""Weighted graphs, similarity matrices, orderings and line drawings.

Everything here is immutable and works on vertex indices; labels ride along
only so that the CLI can print names.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Tuple

Entry = Optional[Fraction]


def as_fraction(value) -> Fraction:
    """Exact rational from an int, Fraction or string such as ``"7/2"`` or ``"3.25"``.

    Floats are refused: they would smuggle rounding into the decision path.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}; pass int, Fraction or str")
    return Fraction(value)


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    edges: Tuple[Tuple[int, int, Fraction], ...]
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        labels = tuple(self.labels) or tuple(str(i) for i in range(self.n))
        if len(labels) != self.n or len(set(labels)) != self.n:
            raise ValueError("need exactly n distinct labels")
        object.__setattr__(self, "labels", labels)

        seen = set()
        normalized = []
        for u, v, w in self.edges:
            w = as_fraction(w)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if w <= 0:
                raise ValueError(f"weight of edge ({u}, {v}) must be positive, got {w}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"parallel edge {key}")
            seen.add(key)
            normalized.append((key[0], key[1], w))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @classmethod
    def from_labeled_edges(cls, edges: Iterable[Tuple[str, str, object]],
                           vertices: Sequence[str] = ()) -> "WeightedGraph":
        labels = list(vertices)
        index = {lab: i for i, lab in enumerate(labels)}
        triples = []
        for a, b, w in edges:
            for lab in (a, b):
                if lab not in index:
                    index[lab] = len(labels)
                    labels.append(lab)
            triples.append((index[a], index[b], as_fraction(w)))
        return cls(len(labels), tuple(triples), tuple(labels))

    @property
    def m(self) -> int:
        return len(self.edges)

    def weight(self, u: int, v: int) -> Entry:
        return self._weights.get((min(u, v), max(u, v)))

    @property
    def _weights(self):
        cache = self.__dict__.get("_wcache")
        if cache is None:
            cache = {(u, v): w for u, v, w in self.edges}
            object.__setattr__(self, "_wcache", cache)
        return cache

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2


@dataclass(frozen=True)
class SimilarityMatrix:
    """Symmetric matrix of optional positive rationals; ``None`` plays the role of ``*``."""

    entries: Tuple[Tuple[Entry, ...], ...]
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(None if x is None else as_fraction(x) for x in row)
                     for row in self.entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("similarity matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"asymmetric entries at ({i}, {j})")
                if rows[i][j] is not None and rows[i][j] <= 0:
                    raise ValueError(f"entry ({i}, {j}) must be positive")
        diag = _diagonal_value(rows)
        for i in range(n):
            if rows[i][i] != diag:
                raise ValueError(f"diagonal entry {i} must equal {diag}")
        labels = tuple(self.labels) or tuple(str(i) for i in range(n))
        if len(labels) != n or len(set(labels)) != n:
            raise ValueError("need exactly n distinct labels")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], labels: Sequence[str] = ()) -> "SimilarityMatrix":
        """Build from rows where ``None`` or ``"*"`` marks a missing entry.

        Diagonal entries may be left missing; they are filled with the maximum
        off-diagonal weight.
        """
        parsed = [[None if (x is None or x == "*") else as_fraction(x) for x in row] for row in rows]
        n = len(parsed)
        for i in range(n):
            parsed[i][i] = None
        diag = _diagonal_value(parsed)
        for i in range(n):
            parsed[i][i] = diag
        return cls(tuple(tuple(r) for r in parsed), tuple(labels))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: Tuple[int, int]) -> Entry:
        i, j = ij
        return self.entries[i][j]

    def complete(self) -> bool:
        return all(x is not None for row in self.entries for x in row)

    def to_graph(self) -> WeightedGraph:
        edges = tuple((i, j, self.entries[i][j]) for i in range(self.n)
                      for j in range(i + 1, self.n) if self.entries[i][j] is not None)
        return WeightedGraph(self.n, edges, self.labels)

    def __str__(self):
        return "\n".join(" ".join("*" if x is None else str(x) for x in row) for row in self.entries)


def _diagonal_value(rows) -> Fraction:
    off = [x for i, row in enumerate(rows) for j, x in enumerate(row) if i != j and x is not None]
    return max(off) if off else Fraction(1)


@dataclass(frozen=True)
class Ordering:
    perm: Tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"{perm} is not a permutation of 0..{len(perm) - 1}")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.perm)

    def inverse(self) -> "Ordering":
        inv = [0] * self.n
        for pos, v in enumerate(self.perm):
            inv[v] = pos
        return Ordering(tuple(inv))

    def reversed(self) -> "Ordering":
        return Ordering(self.perm[::-1])

    def __iter__(self):
        return iter(self.perm)

    def __len__(self):
        return self.n

    def __getitem__(self, i):
        return self.perm[i]


@dataclass(frozen=True)
class Drawing:
    """Injective map from vertex index to a rational point on the line."""

    coords: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        coords = {int(v): as_fraction(x) for v, x in dict(self.coords).items()}
        if len(set(coords.values())) != len(coords):
            raise ValueError("drawing is not injective")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_sequence(cls, xs: Sequence[object]) -> "Drawing":
        return cls({i: x for i, x in enumerate(xs)})

    def __getitem__(self, v: int) -> Fraction:
        return self.coords[v]

    def __len__(self):
        return len(self.coords)

    def shifted(self, offset) -> "Drawing":
        offset = as_fraction(offset)
        return Drawing({v: x + offset for v, x in self.coords.items()})

    def scaled(self, c) -> "Drawing":
        c = as_fraction(c)
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return Drawing({v: x * c for v, x in self.coords.items()})


def matrix_from_graph(g: WeightedGraph) -> SimilarityMatrix:
    rows = [[None] * g.n for _ in range(g.n)]
    for u, v, w in g.edges:
        rows[u][v] = rows[v][u] = w
    return SimilarityMatrix.from_rows(rows, g.labels)


def permute(a: SimilarityMatrix, pi: Ordering) -> SimilarityMatrix:
    """Reorder rows and columns together: ``result[i][j] = a[pi[i]][pi[j]]``."""
    if pi.n != a.n:
        raise ValueError(f"ordering of length {pi.n} does not fit a {a.n}x{a.n} matrix")
    p = pi.perm
    rows = tuple(tuple(a.entries[p[i]][p[j]] for j in range(a.n)) for i in range(a.n))
    return SimilarityMatrix(rows, tuple(a.labels[v] for v in p))


def induced_ordering(d: Drawing) -> Ordering:
    return Ordering(tuple(sorted(d.coords, key=d.coords.__getitem__)))
