"""Robinson checks and Robinson-ordering recognition.

Two recognition routes are provided:

* ``find_robinson_ordering``: exact search over vertex subsets. A subset ``S``
  extends by ``u`` when ``u`` is *good* for ``S``; Robinson orderings are
  exactly the chains from the empty set to the full set. Exponential, so it
  is capped.
* ``find_robinson_ordering_complete``: multisweep similarity-first search for
  complete matrices, polynomial, with its output re-checked by ``is_robinson``.

``brute_force_*`` helpers enumerate permutations directly and serve as test
oracles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Optional

from .core import Ordering, SimilarityMatrix, permute

DEFAULT_CAP = 22
COMPLETE_POLY = "complete-poly"
SUBSET_DP = "subset-dp"
BRUTE_FORCE = "brute-force"


class InstanceTooLarge(ValueError):
    """Raised when an exponential routine is asked to handle more vertices than its cap."""


@dataclass(frozen=True)
class RecognitionResult:
    ordering: Optional[Ordering]
    method: str
    # set when the polynomial route failed validation and the subset search answered instead
    fell_back: bool = False

    @property
    def found(self) -> bool:
        return self.ordering is not None


@dataclass
class Enumeration:
    orderings: List[Ordering] = field(default_factory=list)
    exhaustive: bool = True

    @property
    def budget_exhausted(self) -> bool:
        return not self.exhaustive

    def __iter__(self):
        return iter(self.orderings)

    def __len__(self):
        return len(self.orderings)


def is_robinson(a: SimilarityMatrix) -> bool:
    """True iff every specified ``A[i][l]`` (i < l) is at most every specified
    entry between it and the diagonal in its row and in its column."""
    e = a.entries
    n = a.n
    for i in range(n):
        row = e[i]
        for l in range(i + 1, n):
            ail = row[l]
            if ail is None:
                continue
            for j in range(i + 1, l):
                aij = row[j]
                if aij is not None and ail > aij:
                    return False
                akl = e[j][l]
                if akl is not None and ail > akl:
                    return False
    return True


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class GoodTable:
    """Bitmask tables answering "which unplaced vertices are good for S?".

    For a candidate ``u`` and another vertex ``v`` let ``bad[u][v]`` be the set
    of ``x`` (distinct from ``u`` and ``v``) with ``A[v][x] > A[v][u]``, both
    specified. Then ``u`` is good for ``S`` iff no placed ``v`` has a bad
    witness still unplaced and no unplaced ``v`` has a bad witness already
    placed. Unions of ``bad[u][v]`` over a vertex set are looked up from two
    half-width tables, so a query costs O(n) word operations.
    """

    def __init__(self, a: SimilarityMatrix):
        n = a.n
        e = a.entries
        self.n = n
        self.full = (1 << n) - 1
        bad = [[0] * n for _ in range(n)]
        for u in range(n):
            for v in range(n):
                if v == u or e[v][u] is None:
                    continue
                avu = e[v][u]
                m = 0
                for x in range(n):
                    if x != u and x != v and e[v][x] is not None and e[v][x] > avu:
                        m |= 1 << x
                bad[u][v] = m
        self.bad = bad
        self.lo_bits = n // 2
        self.lo_mask = (1 << self.lo_bits) - 1
        self.lo = [self._union_table(bad[u][: self.lo_bits]) for u in range(n)]
        self.hi = [self._union_table(bad[u][self.lo_bits:]) for u in range(n)]

    @staticmethod
    def _union_table(masks):
        table = [0] * (1 << len(masks))
        for s in range(1, len(table)):
            low = s & -s
            table[s] = table[s ^ low] | masks[low.bit_length() - 1]
        return table

    def _union(self, u: int, s: int) -> int:
        return self.lo[u][s & self.lo_mask] | self.hi[u][s >> self.lo_bits]

    def good(self, placed: int) -> int:
        unplaced = self.full & ~placed
        out = 0
        for u in _bits(unplaced):
            if self._union(u, placed) & unplaced:
                continue
            if self._union(u, unplaced) & placed:
                continue
            out |= 1 << u
        return out


def good_elements(a: SimilarityMatrix, placed: Iterable[int]) -> FrozenSet[int]:
    """Unplaced vertices that may come right after ``placed`` in a Robinson ordering."""
    placed = frozenset(placed)
    if any(not 0 <= v < a.n for v in placed):
        raise ValueError("placed vertices out of range")
    return frozenset(_bits(GoodTable(a).good(_mask(placed))))


def _check_cap(n: int, cap: Optional[int]):
    if cap is not None and n > cap:
        raise InstanceTooLarge(f"{n} vertices exceeds the exponential-search cap of {cap}")


def _first_chain(table: GoodTable) -> Optional[List[int]]:
    # depth-first over subsets, smallest vertex first; dead subsets are never revisited
    full = table.full
    dead = set()
    path: List[int] = []
    stack = [(0, iter(_bits(table.good(0))))]
    while stack:
        s, it = stack[-1]
        if s == full:
            return path
        for u in it:
            t = s | (1 << u)
            if t not in dead:
                path.append(u)
                stack.append((t, iter(_bits(table.good(t)))))
                break
        else:
            dead.add(s)
            stack.pop()
            if path:
                path.pop()
    return None


def find_robinson_ordering(a: SimilarityMatrix, cap: Optional[int] = DEFAULT_CAP) -> RecognitionResult:
    """Exact recognition by subset search; works on incomplete matrices.

    Returns the lexicographically smallest Robinson ordering, or none.
    """
    _check_cap(a.n, cap)
    chain = _first_chain(GoodTable(a))
    ordering = None if chain is None else Ordering(tuple(chain))
    return RecognitionResult(ordering, SUBSET_DP)


def iter_robinson_orderings(a: SimilarityMatrix, cap: Optional[int] = DEFAULT_CAP) -> Iterator[Ordering]:
    """Lazily yield every Robinson ordering in lexicographic order."""
    _check_cap(a.n, cap)
    table = GoodTable(a)
    full = table.full
    good_cache = {}
    live = {}

    def good(s):
        g = good_cache.get(s)
        if g is None:
            g = good_cache[s] = table.good(s)
        return g

    def alive(s):
        # True iff some chain from s reaches the full set
        r = live.get(s)
        if r is None:
            r = s == full or any(alive(s | (1 << u)) for u in _bits(good(s)))
            live[s] = r
        return r

    if not alive(0):
        return
    path: List[int] = []

    def walk(s):
        if s == full:
            yield Ordering(tuple(path))
            return
        for u in _bits(good(s)):
            t = s | (1 << u)
            if alive(t):
                path.append(u)
                yield from walk(t)
                path.pop()

    yield from walk(0)


def enumerate_robinson_orderings(a: SimilarityMatrix, budget: Optional[int] = None,
                                 cap: Optional[int] = DEFAULT_CAP) -> Enumeration:
    """All Robinson orderings up to ``budget``; ``exhaustive`` is False when the budget cut it short."""
    if budget is None and a.n > 12:
        raise ValueError("an explicit budget is required above 12 vertices")
    out = Enumeration()
    for pi in iter_robinson_orderings(a, cap):
        if budget is not None and len(out.orderings) >= budget:
            out.exhaustive = False
            break
        out.orderings.append(pi)
    return out


# --- complete matrices -------------------------------------------------------

def similarity_first_search(a: SimilarityMatrix, previous: Optional[Ordering] = None) -> Ordering:
    """One sweep of similarity-first search over a complete matrix.

    Unvisited vertices live in an ordered partition; the next vertex comes from
    the first class, and every class is then split by decreasing similarity to
    it. With ``previous`` given, ties inside the first class go to the vertex
    appearing last in ``previous``; without it, to the smallest index.
    """
    n = a.n
    e = a.entries
    rank = previous.inverse().perm if previous is not None else None
    classes = [list(range(n))]
    order = []
    while classes:
        head = classes[0]
        p = max(head, key=rank.__getitem__) if rank is not None else head[0]
        order.append(p)
        row = e[p]
        refined = []
        for cls in classes:
            rest = [v for v in cls if v != p]
            if not rest:
                continue
            groups = {}
            for v in rest:
                groups.setdefault(row[v], []).append(v)
            specified = sorted((w for w in groups if w is not None), reverse=True)
            refined.extend(groups[w] for w in specified)
            if None in groups:
                refined.append(groups[None])
        classes = refined
    return Ordering(tuple(order))


def multisweep_sfs(a: SimilarityMatrix, max_sweeps: Optional[int] = None) -> Optional[Ordering]:
    """Repeat similarity-first sweeps, each tie-broken by the one before, until one is Robinson.

    Returns ``None`` if no sweep within ``max_sweeps`` (default ``n``) gives a
    Robinson ordering.
    """
    n = a.n
    if n <= 2:
        return Ordering.identity(n)
    sweeps = n if max_sweeps is None else max_sweeps
    sigma = similarity_first_search(a)
    seen = set()
    for _ in range(sweeps):
        if is_robinson(permute(a, sigma)):
            return sigma
        if sigma.perm in seen:
            break
        seen.add(sigma.perm)
        sigma = similarity_first_search(a, sigma)
    return None


def find_robinson_ordering_complete(a: SimilarityMatrix, cap: Optional[int] = DEFAULT_CAP) -> RecognitionResult:
    """Polynomial recognition for complete matrices.

    A sweep result is always re-checked; when no sweep passes and the instance
    is within ``cap``, the subset search settles the question instead.
    """
    if not a.complete():
        raise ValueError("find_robinson_ordering_complete needs a complete matrix")
    if a.n <= 2:
        return RecognitionResult(Ordering.identity(a.n), COMPLETE_POLY)
    sigma = multisweep_sfs(a)
    if sigma is not None:
        return RecognitionResult(sigma, COMPLETE_POLY)
    if cap is not None and a.n > cap:
        return RecognitionResult(None, COMPLETE_POLY)
    exact = find_robinson_ordering(a, cap)
    return RecognitionResult(exact.ordering, SUBSET_DP, fell_back=exact.found)


def recognize(a: SimilarityMatrix, cap: Optional[int] = DEFAULT_CAP) -> RecognitionResult:
    if a.complete():
        return find_robinson_ordering_complete(a, cap)
    return find_robinson_ordering(a, cap)


# --- brute-force oracles -----------------------------------------------------

def brute_force_orderings(a: SimilarityMatrix) -> List[Ordering]:
    """Every permutation whose reordered matrix is Robinson, by direct trial."""
    return [Ordering(p) for p in itertools.permutations(range(a.n))
            if is_robinson(permute(a, Ordering(p)))]


def brute_force_find(a: SimilarityMatrix) -> RecognitionResult:
    """Exhaustive permutation search that stops at the first Robinson ordering.

    Prefixes are pruned as soon as the reordered leading block is not Robinson,
    which is sound because a Robinson matrix keeps the property on every
    leading principal block.
    """
    n = a.n
    e = a.entries
    prefix: List[int] = []
    used = [False] * n

    def extends(v):
        # triples whose right end is the new last position
        l = len(prefix)
        for i in range(l):
            ail = e[prefix[i]][v]
            if ail is None:
                continue
            for j in range(i + 1, l):
                aij = e[prefix[i]][prefix[j]]
                if aij is not None and ail > aij:
                    return False
                akl = e[prefix[j]][v]
                if akl is not None and ail > akl:
                    return False
        return True

    def search():
        if len(prefix) == n:
            return True
        for v in range(n):
            if not used[v] and extends(v):
                used[v] = True
                prefix.append(v)
                if search():
                    return True
                prefix.pop()
                used[v] = False
        return False

    found = search()
    return RecognitionResult(Ordering(tuple(prefix)) if found else None, BRUTE_FORCE)
