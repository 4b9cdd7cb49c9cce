"""Exact rational max-slack feasibility LP.

Problem form::

    maximize t
    subject to  E x = b,   x_i >= t  (all i),   t <= 1

with rational ``E`` and ``b``.  The substitution ``x = y + t*1`` and
``t = 1 - s`` gives a standard-form problem in ``(y, s) >= 0`` that is solved
with a two-phase tableau simplex using Bland's least-index rule, so it always
terminates and always visits the same bases for the same input.

Feasibility of the max-slack problem is the same as solvability of ``E x = b``
(``t`` may be as negative as needed), and the objective is bounded by the
``t <= 1`` guard, so the outcome is either ``OPTIMAL`` or ``INFEASIBLE``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .matrix import DimensionError

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LPStatus(enum.Enum):
    INFEASIBLE = "Infeasible"
    OPTIMAL = "Optimal"


@dataclass(frozen=True)
class LinearFeasibilityProblem:
    """Equality rows over variables ``x_1..x_N`` plus the shared slack ``t``."""

    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    num_vars: int

    @classmethod
    def build(cls, rows: Sequence[Sequence], rhs: Sequence, num_vars: Optional[int] = None):
        rows_t = tuple(tuple(Fraction(c) for c in r) for r in rows)
        rhs_t = tuple(Fraction(b) for b in rhs)
        if num_vars is None:
            if not rows_t:
                raise DimensionError("num_vars is required when there are no rows")
            num_vars = len(rows_t[0])
        if num_vars < 1:
            raise DimensionError("at least one variable is required")
        if len(rows_t) != len(rhs_t):
            raise DimensionError(f"{len(rows_t)} rows but {len(rhs_t)} right-hand sides")
        for k, r in enumerate(rows_t):
            if len(r) != num_vars:
                raise DimensionError(f"row {k} has {len(r)} coefficients, expected {num_vars}")
        return cls(rows_t, rhs_t, num_vars)


@dataclass(frozen=True)
class LPOutcome:
    status: LPStatus
    optimal_t: Optional[Fraction] = None
    witness: Optional[tuple[Fraction, ...]] = None
    basis: Optional[tuple[int, ...]] = None
    farkas: Optional[tuple[Fraction, ...]] = None

    @property
    def optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL

    def interior(self) -> bool:
        """Strict feasibility: optimum ``t > 0``."""
        return self.optimal and self.optimal_t > 0

    def closed(self) -> bool:
        """Closed feasibility: optimum ``t >= 0``."""
        return self.optimal and self.optimal_t >= 0


class CertificateError(AssertionError):
    """An internal certificate failed exact re-verification (a solver bug)."""


def _pivot(tab: list[list[Fraction]], obj: list[Fraction], r: int, c: int) -> None:
    row = tab[r]
    p = row[c]
    if p != 1:
        row[:] = [x / p for x in row]
    for i, other in enumerate(tab):
        if i != r:
            f = other[c]
            if f:
                other[:] = [x - f * y for x, y in zip(other, row)]
    f = obj[c]
    if f:
        obj[:] = [x - f * y for x, y in zip(obj, row)]


def _run_simplex(tab, obj, basis, allowed) -> None:
    """Minimise with reduced costs in ``obj`` (last entry is minus the objective).

    Bland's rule: entering column is the least index with negative reduced
    cost; ties in the ratio test go to the least basic variable index.
    """
    ncols = len(obj) - 1
    while True:
        enter = next((j for j in range(ncols) if allowed[j] and obj[j] < 0), None)
        if enter is None:
            return
        best = None
        for i, row in enumerate(tab):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise CertificateError("unbounded direction in a bounded problem")
        _pivot(tab, obj, best[1], enter)
        basis[best[1]] = enter


def solve_max_slack(problem: LinearFeasibilityProblem) -> LPOutcome:
    """Solve exactly.  Witnesses and Farkas certificates are re-verified before return."""
    E, b, N = problem.rows, problem.rhs, problem.num_vars
    m = len(E)
    # standard form columns: y_0..y_{N-1}, s ; then artificials
    rowsum = [sum(r, _ZERO) for r in E]
    M = [list(r) + [-rs] for r, rs in zip(E, rowsum)]
    bp = [bi - rs for bi, rs in zip(b, rowsum)]
    nz = N + 1
    signs = []
    tab: list[list[Fraction]] = []
    for i in range(m):
        sgn = -1 if bp[i] < 0 else 1
        signs.append(sgn)
        art = [_ZERO] * m
        art[i] = _ONE
        tab.append([sgn * x for x in M[i]] + art + [sgn * bp[i]])
    basis = [nz + i for i in range(m)]
    ncols = nz + m
    # phase 1: minimise the sum of artificials
    obj = [_ZERO] * (ncols + 1)
    for j in range(ncols + 1):
        if nz <= j < ncols:
            continue
        obj[j] = -sum((row[j] for row in tab), _ZERO)
    _run_simplex(tab, obj, basis, [True] * ncols)
    infeas = -obj[-1]
    if infeas > 0:
        # duals of the phase-1 problem: y'_i = 1 - reduced cost of artificial i
        y = tuple(signs[i] * (_ONE - obj[nz + i]) for i in range(m))
        _verify_farkas(E, b, y)
        return LPOutcome(LPStatus.INFEASIBLE, farkas=y)

    # drive zero-level artificials out of the basis; drop redundant rows
    i = 0
    while i < len(tab):
        if basis[i] >= nz:
            col = next((j for j in range(nz) if tab[i][j] != 0), None)
            if col is None:
                del tab[i]
                del basis[i]
                continue
            _pivot(tab, obj, i, col)
            basis[i] = col
        i += 1
    tab = [row[:nz] + [row[-1]] for row in tab]
    # phase 2: minimise s (column N)
    cost = [_ZERO] * nz
    cost[N] = _ONE
    obj = cost + [_ZERO]
    for i, bi in enumerate(basis):
        f = obj[bi]
        if f:
            obj = [x - f * y for x, y in zip(obj, tab[i])]
    _run_simplex(tab, obj, basis, [True] * nz)
    z = [_ZERO] * nz
    for i, bi in enumerate(basis):
        z[bi] = tab[i][-1]
    s = z[N]
    t = _ONE - s
    x = tuple(yv + t for yv in z[:N])
    _verify_witness(E, b, x, t)
    return LPOutcome(LPStatus.OPTIMAL, optimal_t=t, witness=x, basis=tuple(sorted(basis)))


def _verify_witness(E, b, x, t) -> None:
    for k, (row, bk) in enumerate(zip(E, b)):
        if sum((c * v for c, v in zip(row, x)), _ZERO) != bk:
            raise CertificateError(f"witness violates equality row {k}")
    if any(v < t for v in x) or t > 1:
        raise CertificateError("witness violates the slack bounds")


def _verify_farkas(E, b, y) -> None:
    # y^T E = 0 and y^T b > 0 proves E x = b has no solution at all
    ncols = len(E[0]) if E else 0
    for j in range(ncols):
        if sum((yi * row[j] for yi, row in zip(y, E)), _ZERO) != 0:
            raise CertificateError("Farkas certificate is not orthogonal to the columns")
    if sum((yi * bi for yi, bi in zip(y, b)), _ZERO) <= 0:
        raise CertificateError("Farkas certificate does not separate the right-hand side")
