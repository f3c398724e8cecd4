"""Linear restriction systems ``M x <= b`` for a Robinson-ordered similarity matrix.

Variable ``x_i`` is the line position of the vertex in row ``i``. Every row of
``M`` has zero coefficient sum and right-hand side ``-epsilon``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .core import Drawing, SimilarityMatrix, as_fraction
from .robinson import is_robinson

ORDERING = "ordering"
RIGHT_WRT_LEFT = "right-wrt-left"
LEFT_WRT_RIGHT = "left-wrt-right"


class NotRobinson(ValueError):
    pass


@dataclass(frozen=True)
class Constraint:
    kind: str
    support: Tuple[Tuple[int, int], ...]  # (variable, coefficient), sorted by variable

    def __post_init__(self):
        if sum(c for _, c in self.support) != 0:
            raise ValueError(f"coefficients of {self.support} do not sum to zero")

    def row(self, n: int) -> List[int]:
        r = [0] * n
        for v, c in self.support:
            r[v] = c
        return r

    def lhs(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * x[v] for v, c in self.support), Fraction(0))

    def format(self, epsilon: Fraction = Fraction(1)) -> str:
        terms = " ".join(f"{c}*x{v}" for v, c in self.support)
        return f"{terms} <= {-epsilon} ; kind={self.kind}"


def ordering_constraint(i: int) -> Constraint:
    return Constraint(ORDERING, ((i, 1), (i + 1, -1)))


def right_wrt_left(i: int, j: int, k: int) -> Constraint:
    """``x_i - 2 x_j + x_k <= -eps``: k must sit closer to j than i does."""
    return Constraint(RIGHT_WRT_LEFT, ((i, 1), (j, -2), (k, 1)))


def left_wrt_right(i: int, j: int, k: int) -> Constraint:
    """``-x_i + 2 x_j - x_k <= -eps``: i must sit closer to j than k does."""
    return Constraint(LEFT_WRT_RIGHT, ((i, -1), (j, 2), (k, -1)))


@dataclass(frozen=True)
class ConstraintSystem:
    n: int
    constraints: Tuple[Constraint, ...]
    epsilon: Fraction = Fraction(1)

    @property
    def h(self) -> int:
        return len(self.constraints)

    def matrix(self) -> List[List[int]]:
        return [c.row(self.n) for c in self.constraints]

    def rhs(self) -> List[Fraction]:
        return [-self.epsilon] * self.h

    def satisfied_by(self, x) -> bool:
        x = _as_vector(x, self.n)
        return all(c.lhs(x) <= -self.epsilon for c in self.constraints)

    def violated(self, x) -> List[Constraint]:
        x = _as_vector(x, self.n)
        return [c for c in self.constraints if c.lhs(x) > -self.epsilon]

    def dump(self) -> str:
        return "\n".join(c.format(self.epsilon) for c in self.constraints)


def _as_vector(x, n):
    if isinstance(x, Drawing):
        x = [x[i] for i in range(n)]
    if len(x) != n:
        raise ValueError(f"expected {n} coordinates, got {len(x)}")
    return [as_fraction(v) for v in x]


def build_constraints(a: SimilarityMatrix, epsilon=1) -> ConstraintSystem:
    """Restriction system of a matrix that is Robinson in its current order.

    Per row ``j``: for each ``k > j`` the nearest ``i < j`` with a strictly
    smaller specified entry yields a right-wrt-left row; for each ``i < j`` the
    nearest ``k > j`` with a strictly smaller specified entry yields a
    left-wrt-right row. Missing entries never act as witnesses.
    """
    if not is_robinson(a):
        raise NotRobinson("matrix is not Robinson in the given order; reorder it first")
    n = a.n
    e = a.entries
    out: List[Constraint] = [ordering_constraint(i) for i in range(n - 1)]
    seen = set(out)
    for j in range(1, n - 1):
        row = e[j]
        for k in range(j + 1, n):
            ajk = row[k]
            if ajk is None:
                continue
            for i in range(j - 1, -1, -1):
                if row[i] is not None and row[i] < ajk:
                    c = right_wrt_left(i, j, k)
                    if c not in seen:
                        seen.add(c)
                        out.append(c)
                    break
        for i in range(j):
            aji = row[i]
            if aji is None:
                continue
            for k in range(j + 1, n):
                if row[k] is not None and aji > row[k]:
                    c = left_wrt_right(i, j, k)
                    if c not in seen:
                        seen.add(c)
                        out.append(c)
                    break
    return ConstraintSystem(n, tuple(out), as_fraction(epsilon))


def scale_system(s: ConstraintSystem, c) -> ConstraintSystem:
    c = as_fraction(c)
    if c <= 0:
        raise ValueError("scale factor must be positive")
    return replace(s, epsilon=s.epsilon * c)


def parse_dump(text: str) -> ConstraintSystem:
    """Inverse of ``ConstraintSystem.dump``; ``#`` lines are skipped."""
    rows: List[Constraint] = []
    eps = None
    n = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            body, tag = line.split(";")
            lhs, rhs = body.split("<=")
            kind = tag.strip().removeprefix("kind=")
            support: Dict[int, int] = {}
            for term in lhs.split():
                coef, var = term.split("*x")
                support[int(var)] = int(coef)
            value = -Fraction(rhs.strip())
        except ValueError as exc:
            raise ValueError(f"line {lineno}: cannot parse constraint {line!r}") from exc
        if eps is not None and value != eps:
            raise ValueError(f"line {lineno}: mixed right-hand sides")
        eps = value
        n = max(n, max(support) + 1)
        rows.append(Constraint(kind, tuple(sorted(support.items()))))
    return ConstraintSystem(n, tuple(rows), eps if eps is not None else Fraction(1))
