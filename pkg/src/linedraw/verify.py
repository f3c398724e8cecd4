"""Check drawings against the valid-distance rule and run the full solve pipeline."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .core import Drawing, Ordering, WeightedGraph, matrix_from_graph, permute
from .lp import FarkasCertificate, FeasibilityResult, solve_feasibility
from .polyhedron import ConstraintSystem, build_constraints
from .robinson import DEFAULT_CAP, RecognitionResult, iter_robinson_orderings, recognize

DRAWABLE = "drawable"
NOT_DRAWABLE = "not-drawable"
INCONCLUSIVE = "inconclusive"

FIRST = "first"
EXHAUSTIVE = "exhaustive"
DEFAULT_BUDGET = 10_000


@dataclass(frozen=True)
class Violation:
    center: int
    nearer: int     # heavier edge: should be drawn shorter
    farther: int
    heavier: Fraction
    lighter: Fraction
    near_distance: Fraction
    far_distance: Fraction

    def describe(self, labels=None) -> str:
        name = (lambda v: labels[v]) if labels else str
        t, u, v = name(self.center), name(self.nearer), name(self.farther)
        return (f"center {t}: w({t},{u})={self.heavier} > w({t},{v})={self.lighter} "
                f"but d({t},{u})={self.near_distance} >= d({t},{v})={self.far_distance}")


def is_valid_drawing(g: WeightedGraph, d: Drawing) -> List[Violation]:
    """Every incident pair ``{t,u}``, ``{t,v}`` with ``w(t,u) > w(t,v)`` but ``|tu| >= |tv|``.

    An empty list means the drawing is valid.
    """
    missing = [v for v in range(g.n) if v not in d.coords]
    if missing:
        raise ValueError(f"drawing has no coordinate for vertices {missing}")
    adj: List[List[Tuple[int, Fraction]]] = [[] for _ in range(g.n)]
    for u, v, w in g.edges:
        adj[u].append((v, w))
        adj[v].append((u, w))
    out = []
    for t in range(g.n):
        xt = d[t]
        for u, wu in adj[t]:
            du = abs(d[u] - xt)
            for v, wv in adj[t]:
                if wu > wv and du >= abs(d[v] - xt):
                    out.append(Violation(t, u, v, wu, wv, du, abs(d[v] - xt)))
    return out


@dataclass
class Attempt:
    ordering: Ordering
    system: ConstraintSystem
    result: FeasibilityResult


@dataclass
class SolveReport:
    verdict: str
    attempts: List[Attempt] = field(default_factory=list)
    drawing: Optional[Drawing] = None
    recognition: Optional[RecognitionResult] = None
    exhaustive: bool = False
    reason: str = ""

    @property
    def ordering(self) -> Optional[Ordering]:
        if self.drawing is not None:
            return self.attempts[-1].ordering
        return self.attempts[0].ordering if self.attempts else None

    @property
    def certificate(self) -> Optional[FarkasCertificate]:
        for a in self.attempts:
            if a.result.certificate is not None:
                return a.result.certificate
        return None


def solve_ordering(g: WeightedGraph, pi: Ordering) -> Attempt:
    """Build and solve the restriction system for one Robinson ordering.

    A feasible point comes back as a drawing indexed by original vertices.
    """
    a = permute(matrix_from_graph(g), pi)
    system = build_constraints(a)
    res = solve_feasibility(system)
    if res.feasible:
        res = FeasibilityResult(point=Drawing({pi[pos]: x for pos, x in res.point.coords.items()}))
    return Attempt(pi, system, res)


def _accept(g, attempt):
    violations = is_valid_drawing(g, attempt.result.point)
    if violations:
        raise AssertionError(f"solver drawing fails verification: {violations[0]}")


def solve_scfe(g: WeightedGraph, mode: Optional[str] = None, budget: int = DEFAULT_BUDGET,
               cap: Optional[int] = DEFAULT_CAP) -> SolveReport:
    """Decide whether ``g`` has a valid drawing on the line.

    Complete graphs need a single Robinson ordering: either every Robinson
    ordering has a drawing or none has. Incomplete graphs default to trying
    orderings in enumeration order (a reversed ordering is skipped, its system
    being a mirror image) until one is feasible or ``budget`` orderings have
    been enumerated; running out of budget gives an inconclusive verdict.
    """
    a = matrix_from_graph(g)
    complete = a.complete()
    if mode is None:
        mode = FIRST if complete else EXHAUSTIVE
    if mode not in (FIRST, EXHAUSTIVE):
        raise ValueError(f"unknown mode {mode!r}")

    rec = recognize(a, cap)
    report = SolveReport(NOT_DRAWABLE, recognition=rec, exhaustive=(mode == EXHAUSTIVE))
    if not rec.found:
        report.reason = "no Robinson ordering exists"
        return report

    if complete or mode == FIRST:
        attempt = solve_ordering(g, rec.ordering)
        report.attempts.append(attempt)
        if attempt.result.feasible:
            _accept(g, attempt)
            report.verdict, report.drawing = DRAWABLE, attempt.result.point
        elif complete:
            report.reason = "restriction system infeasible; one Robinson ordering decides a complete graph"
        else:
            report.verdict = INCONCLUSIVE
            report.reason = "first Robinson ordering infeasible; other orderings were not tried"
        return report

    tried = set()
    seen = 0
    for pi in iter_robinson_orderings(a, cap):
        if seen >= budget:
            report.verdict = INCONCLUSIVE
            report.reason = f"budget of {budget} orderings exhausted"
            return report
        seen += 1
        if pi.perm[::-1] in tried:
            continue
        tried.add(pi.perm)
        attempt = solve_ordering(g, pi)
        report.attempts.append(attempt)
        if attempt.result.feasible:
            _accept(g, attempt)
            report.verdict, report.drawing = DRAWABLE, attempt.result.point
            return report
    report.reason = f"all {seen} Robinson orderings infeasible"
    return report
