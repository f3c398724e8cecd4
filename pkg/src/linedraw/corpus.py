"""Random instance generators shared by the test suite and the experiment scripts."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .core import Drawing, Ordering, SimilarityMatrix, WeightedGraph, permute


@dataclass(frozen=True)
class CorpusConfig:
    size: int = 1000
    min_n: int = 2
    max_n: int = 8
    alphabet_sizes: Tuple[int, ...] = (2, 3, 4, 5)
    # chance that an instance keeps every edge
    complete_share: float = 0.5
    # per-edge deletion probability for incomplete instances
    drop_probability: float = 0.3
    seed: int = 20240517


@dataclass(frozen=True)
class Instance:
    graph: WeightedGraph
    kind: str                          # uniform | from-drawing | robinson
    fixture: Optional[Drawing] = None  # a valid drawing known by construction


def _alphabet(k: int) -> List[Fraction]:
    return [Fraction(i) for i in range(1, k + 1)]


def _drop(rng: random.Random, edges, p: float):
    return [e for e in edges if rng.random() >= p]


def uniform_graph(rng: random.Random, n: int, k: int, drop: float = 0.0) -> WeightedGraph:
    alphabet = _alphabet(k)
    edges = [(u, v, rng.choice(alphabet)) for u, v in itertools.combinations(range(n), 2)]
    return WeightedGraph(n, tuple(_drop(rng, edges, drop)))


def graph_from_drawing(rng: random.Random, n: int, k: int, drop: float = 0.0) -> Tuple[WeightedGraph, Drawing]:
    """Graph whose weights are a nonincreasing step function of drawn distance.

    The drawing it was built from is valid for it by construction.
    """
    xs = rng.sample(range(4 * n * n), n)
    coords = {v: Fraction(x, rng.choice((1, 2, 3))) for v, x in enumerate(xs)}
    if len(set(coords.values())) < n:
        coords = {v: Fraction(x) for v, x in enumerate(xs)}
    dists = sorted({abs(coords[u] - coords[v]) for u, v in itertools.combinations(range(n), 2)})
    cuts = sorted(rng.sample(dists, min(k - 1, len(dists))))
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        d = abs(coords[u] - coords[v])
        edges.append((u, v, Fraction(k - sum(1 for c in cuts if c < d))))
    return WeightedGraph(n, tuple(_drop(rng, edges, drop))), Drawing(coords)


def random_robinson_matrix(rng: random.Random, n: int, k: int, drop: float = 0.0,
                           tie_bias: float = 0.4,
                           seed_block: Optional[SimilarityMatrix] = None) -> SimilarityMatrix:
    """Robinson matrix over ``1..k`` built diagonal by diagonal, then entries blanked at random.

    Each entry copies its upper bound with probability ``tie_bias`` and is
    otherwise uniform below it. A complete Robinson ``seed_block`` with weights
    in ``1..k`` is kept verbatim as the leading principal block.
    """
    top = Fraction(k)
    rows: List[List[Optional[Fraction]]] = [[top] * n for _ in range(n)]
    fixed = 0
    if seed_block is not None:
        fixed = seed_block.n
        if fixed > n or not seed_block.complete():
            raise ValueError("seed block must be complete and fit inside the matrix")
        for i, l in itertools.combinations(range(fixed), 2):
            if seed_block[i, l] > top:
                raise ValueError("seed block weight exceeds the alphabet")
            rows[i][l] = rows[l][i] = seed_block[i, l]
    for gap in range(1, n):
        for i in range(n - gap):
            l = i + gap
            if l < fixed:
                continue
            bound = min(rows[i][l - 1], rows[i + 1][l])
            choices = [w for w in _alphabet(k) if w <= bound]
            w = bound if rng.random() < tie_bias else rng.choice(choices)
            rows[i][l] = rows[l][i] = w
    for i, l in itertools.combinations(range(n), 2):
        if rng.random() < drop:
            rows[i][l] = rows[l][i] = None
    return SimilarityMatrix.from_rows(rows)


def shuffled(rng: random.Random, a: SimilarityMatrix) -> SimilarityMatrix:
    perm = list(range(a.n))
    rng.shuffle(perm)
    out = permute(a, Ordering(tuple(perm)))
    return SimilarityMatrix(out.entries)


def robinson_graph(rng: random.Random, n: int, k: int, drop: float = 0.0,
                   tie_bias: float = 0.4) -> WeightedGraph:
    return shuffled(rng, random_robinson_matrix(rng, n, k, drop, tie_bias)).to_graph()


def fuzz_corpus(cfg: CorpusConfig = CorpusConfig()) -> Iterator[Instance]:
    """Deterministic stream of ``cfg.size`` instances cycling through four generators.

    The ``seeded`` kind grows a random Robinson matrix around the 5x5
    undrawable block (falling back to ``robinson`` when ``n < 5``), so the
    corpus also contains Robinsonian graphs without a drawing.
    """
    rng = random.Random(cfg.seed)
    kinds = ("uniform", "from-drawing", "robinson", "seeded")
    for idx in range(cfg.size):
        n = rng.randint(cfg.min_n, cfg.max_n)
        k = rng.choice(cfg.alphabet_sizes)
        drop = 0.0 if rng.random() < cfg.complete_share else cfg.drop_probability
        kind = kinds[idx % len(kinds)]
        if kind == "seeded" and n < 5:
            kind = "robinson"
        if kind == "uniform":
            yield Instance(uniform_graph(rng, n, k, drop), kind)
        elif kind == "from-drawing":
            g, d = graph_from_drawing(rng, n, k, drop)
            yield Instance(g, kind, d)
        elif kind == "robinson":
            yield Instance(robinson_graph(rng, n, k, drop), kind)
        else:
            m = random_robinson_matrix(rng, n, max(k, 5), drop, seed_block=a5_matrix())
            yield Instance(shuffled(rng, m).to_graph(), kind)


def complete_matrices(n: int, alphabet: Sequence[object]) -> Iterator[SimilarityMatrix]:
    """Every complete ``n x n`` matrix with off-diagonal entries from ``alphabet``."""
    pairs = list(itertools.combinations(range(n), 2))
    for values in itertools.product(alphabet, repeat=len(pairs)):
        rows: List[List[object]] = [[None] * n for _ in range(n)]
        for (i, j), w in zip(pairs, values):
            rows[i][j] = rows[j][i] = w
        yield SimilarityMatrix.from_rows(rows)


def a5_matrix() -> SimilarityMatrix:
    """Complete 5x5 Robinson matrix on vertices a..e that admits no valid drawing."""
    return SimilarityMatrix.from_rows(
        [[5, 2, 2, 1, 1],
         [2, 5, 3, 2, 1],
         [2, 3, 5, 4, 1],
         [1, 2, 4, 5, 5],
         [1, 1, 1, 5, 5]],
        ("a", "b", "c", "d", "e"))
