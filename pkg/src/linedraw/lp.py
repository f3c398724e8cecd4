"""Exact rational feasibility of ``M x <= b`` with a point or a Farkas certificate.

The solver runs phase 1 of the simplex method, with Bland's rule, on the Farkas
alternative

    y >= 0,   M^T y = 0,   (-b)^T y = 1.

If phase 1 reaches zero, ``y`` proves ``M x <= b`` empty. Otherwise the optimal
phase-1 duals ``(pi_x, pi_last)`` satisfy ``M pi_x <= pi_last * b`` with
``pi_last > 0``, so ``pi_x / pi_last`` is a feasible point. The alternative has
only ``n + 1`` rows, which keeps the tableau small.

``fourier_motzkin`` decides the same question by variable elimination and is
kept as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .core import Drawing
from .polyhedron import ConstraintSystem


@dataclass(frozen=True)
class FarkasCertificate:
    multipliers: Tuple[Fraction, ...]

    def support(self) -> List[Tuple[int, Fraction]]:
        return [(r, y) for r, y in enumerate(self.multipliers) if y != 0]


@dataclass(frozen=True)
class FeasibilityResult:
    point: Optional[Drawing] = None
    certificate: Optional[FarkasCertificate] = None

    def __post_init__(self):
        if (self.point is None) == (self.certificate is None):
            raise ValueError("exactly one of point and certificate must be set")

    @property
    def feasible(self) -> bool:
        return self.point is not None


def check_certificate(s: ConstraintSystem, cert: FarkasCertificate) -> bool:
    """True iff the multipliers are nonnegative, cancel every variable and combine to ``0 <= negative``."""
    y = cert.multipliers
    if len(y) != s.h:
        raise ValueError(f"certificate has {len(y)} multipliers for {s.h} constraints")
    if any(v < 0 for v in y):
        return False
    combo = [Fraction(0)] * s.n
    for yr, c in zip(y, s.constraints):
        if yr:
            for v, coef in c.support:
                combo[v] += yr * coef
    if any(combo):
        return False
    return sum((yr * br for yr, br in zip(y, s.rhs())), Fraction(0)) < 0


def _pivot(tab: List[List[Fraction]], cost: List[Fraction], r: int, c: int):
    prow = tab[r]
    p = prow[c]
    if p != 1:
        prow[:] = [x / p for x in prow]
    nz = [j for j, x in enumerate(prow) if x]
    for i, row in enumerate(tab):
        f = row[c]
        if i != r and f:
            for j in nz:
                row[j] -= f * prow[j]
    f = cost[c]
    if f:
        for j in nz:
            cost[j] -= f * prow[j]


def _phase_one(columns: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Minimise the sum of artificials for ``A z = rhs, z >= 0`` (``rhs >= 0``).

    ``columns`` lists the columns of ``A``. Returns the optimal value, the
    values of the structural variables and the row duals.
    """
    m = len(rhs)
    k = len(columns)
    width = k + m + 1  # structural, artificial, right-hand side
    tab = []
    for i in range(m):
        row = [Fraction(col[i]) for col in columns] + [Fraction(0)] * m + [Fraction(rhs[i])]
        row[k + i] = Fraction(1)
        tab.append(row)
    # reduced costs; last slot holds minus the objective value
    cost = [Fraction(0)] * width
    for row in tab:
        for j in range(k):
            cost[j] -= row[j]
        cost[-1] -= row[-1]
    basis = [k + i for i in range(m)]

    while True:
        enter = next((j for j in range(k + m) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i, row in enumerate(tab):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        # phase 1 is bounded below by zero, so some row always qualifies
        _pivot(tab, cost, leave, enter)
        basis[leave] = enter

    value = -cost[-1]
    z = [Fraction(0)] * k
    for i, var in enumerate(basis):
        if var < k:
            z[var] = tab[i][-1]
    duals = [1 - cost[k + i] for i in range(m)]
    return value, z, duals


def solve_feasibility(s: ConstraintSystem) -> FeasibilityResult:
    """Point with ``x_0 = 0`` if ``M x <= b`` is nonempty, otherwise a Farkas certificate."""
    n, h = s.n, s.h
    b = s.rhs()
    if h == 0:
        return FeasibilityResult(point=Drawing.from_sequence(range(n)))
    columns = []
    for c, br in zip(s.constraints, b):
        col = [Fraction(v) for v in c.row(n)]
        col.append(-br)
        columns.append(col)
    rhs = [Fraction(0)] * n + [Fraction(1)]
    value, y, duals = _phase_one(columns, rhs)

    if value == 0:
        cert = FarkasCertificate(tuple(y))
        if not check_certificate(s, cert):
            raise AssertionError("internal error: phase 1 produced an invalid certificate")
        return FeasibilityResult(certificate=cert)

    scale = duals[-1]
    x = [d / scale for d in duals[:n]]
    x = [v - x[0] for v in x]
    if not s.satisfied_by(x):
        raise AssertionError("internal error: phase 1 duals are not a feasible point")
    return FeasibilityResult(point=Drawing.from_sequence(x))


def fourier_motzkin(s: ConstraintSystem) -> Tuple[bool, Optional[FarkasCertificate]]:
    """Decide feasibility by eliminating every variable.

    Each derived row remembers the nonnegative combination of original rows that
    produced it, so an infeasible outcome comes with a certificate. Rows with
    identical left-hand side keep only the tightest right-hand side.
    """
    n, h = s.n, s.h
    b = s.rhs()
    # row: (coefficients, rhs, multipliers)
    rows = []
    for r, (c, br) in enumerate(zip(s.constraints, b)):
        mult = [Fraction(0)] * h
        mult[r] = Fraction(1)
        rows.append(([Fraction(v) for v in c.row(n)], br, mult))

    def normalized(rows):
        best: Dict[tuple, tuple] = {}
        for coef, rhs, mult in rows:
            lead = next((abs(v) for v in coef if v), None)
            if lead is None:
                if rhs < 0:
                    return None, (coef, rhs, mult)
                continue
            coef = [v / lead for v in coef]
            rhs = rhs / lead
            mult = [m / lead for m in mult]
            key = tuple(coef)
            if key not in best or rhs < best[key][1]:
                best[key] = (coef, rhs, mult)
        return list(best.values()), None

    rows, bad = normalized(rows)
    for var in range(n):
        if bad is not None:
            break
        pos = [r for r in rows if r[0][var] > 0]
        neg = [r for r in rows if r[0][var] < 0]
        keep = [r for r in rows if r[0][var] == 0]
        for cp, bp, mp in pos:
            for cn, bn, mn in neg:
                fp, fn = -cn[var], cp[var]
                coef = [fp * u + fn * v for u, v in zip(cp, cn)]
                coef[var] = Fraction(0)
                keep.append((coef, fp * bp + fn * bn, [fp * u + fn * v for u, v in zip(mp, mn)]))
        rows, bad = normalized(keep)

    if bad is None:
        return True, None
    return False, FarkasCertificate(tuple(bad[2]))
