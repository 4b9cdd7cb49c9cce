"""Convex-geometric decisions on configurations.

Every hull question is reduced to one exact max-slack LP over barycentric
weights: a point is in the closed hull when the optimum slack is ``>= 0`` and
in the interior when it is ``> 0`` *and* the hull is full-dimensional.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .exactnum import LinearFeasibilityProblem, rank, real_determinant, solve_max_slack
from .systems import (
    Configuration,
    FundamentalSet,
    Part,
    StructuralError,
    SystemReport,
    indispensable_coordinates,
    satisfies_per,
    satisfies_peur,
)

_ZERO = Fraction(0)


class Membership(enum.Enum):
    CLOSED = "ClosedMembership"
    INTERIOR = "InteriorMembership"


@dataclass(frozen=True)
class HullQuery:
    subset: Part
    point: Optional[tuple[Fraction, ...]] = None
    mode: Membership = Membership.CLOSED


class Side(enum.Enum):
    CONSTANT_POSITIVE = "ConstantPositive"
    CONSTANT_NEGATIVE = "ConstantNegative"
    MIXED = "Mixed"


class DegenerateLineError(ValueError):
    pass


# -- frames and dimension -----------------------------------------------------


def _frame_rows(lam: Configuration, subset: Sequence[int]) -> list[tuple[Fraction, ...]]:
    base = lam.real(min(subset))
    return [tuple(a - b for a, b in zip(lam.real(j), base)) for j in subset if j != min(subset)]


def affine_dimension(lam: Configuration, subset: Sequence[int]) -> int:
    if len(subset) <= 1:
        return 0
    return rank(_frame_rows(lam, subset))


def is_full_dimensional(lam: Configuration, subset: Sequence[int]) -> bool:
    return affine_dimension(lam, subset) == 2 * lam.m


def is_affine_frame(lam: Configuration, part: Sequence[int]) -> bool:
    """``len(part) == 2m+1`` points whose differences from the least index form a basis."""
    if len(part) != 2 * lam.m + 1:
        return False
    return real_determinant(_frame_rows(lam, sorted(part))) != 0


@dataclass(frozen=True)
class Verdict:
    """A boolean answer with an optional witness (the failing item)."""

    holds: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.holds


def is_studyable(eps: FundamentalSet, lam: Configuration) -> Verdict:
    _check_shapes(eps, lam)
    for sigma in eps.parts:
        if not is_affine_frame(lam, sigma):
            return Verdict(False, sigma)
    return Verdict(True)


def _check_shapes(eps: FundamentalSet, lam: Configuration) -> None:
    if eps.m != lam.m or eps.n != lam.n:
        raise StructuralError(
            f"fundamental set is (m={eps.m}, n={eps.n}) but configuration is (m={lam.m}, n={lam.n})"
        )


# -- LP builders ----------------------------------------------------------------


def _hull_point_problem(lam: Configuration, subset: Sequence[int], point: Sequence[Fraction]):
    subset = list(subset)
    d = 2 * lam.m
    rows = [[Fraction(1)] * len(subset)]
    rhs = [Fraction(1)]
    for c in range(d):
        rows.append([lam.real(j)[c] for j in subset])
        rhs.append(Fraction(point[c]))
    return LinearFeasibilityProblem.build(rows, rhs, len(subset))


def _intersection_problem(lam: Configuration, parts: Sequence[Sequence[int]], extra=None):
    """Barycentric system: weights sum to 1 per part; all parts give the same point.

    ``extra`` optionally appends free-form blocks; see :func:`_outside_facet_problem`.
    """
    d = 2 * lam.m
    sizes = [len(p) for p in parts]
    offsets = [sum(sizes[:k]) for k in range(len(parts))]
    nvars = sum(sizes) + (extra[0] if extra else 0)
    rows, rhs = [], []
    for k, p in enumerate(parts):
        row = [_ZERO] * nvars
        for a in range(len(p)):
            row[offsets[k] + a] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(1))
    last = len(parts) - 1
    for k in range(last):
        for c in range(d):
            row = [_ZERO] * nvars
            for a, j in enumerate(parts[k]):
                row[offsets[k] + a] += lam.real(j)[c]
            for a, j in enumerate(parts[last]):
                row[offsets[last] + a] -= lam.real(j)[c]
            rows.append(row)
            rhs.append(_ZERO)
    if extra:
        extra[1](rows, rhs, offsets[last], sum(sizes))
    return LinearFeasibilityProblem.build(rows, rhs, nvars), offsets


def _point_from_weights(lam: Configuration, part: Sequence[int], weights: Sequence[Fraction]):
    d = 2 * lam.m
    return tuple(sum((w * lam.real(j)[c] for w, j in zip(weights, part)), _ZERO) for c in range(d))


# -- hull predicates --------------------------------------------------------------


def interior_intersection_point(
    parts: Sequence[Sequence[int]], lam: Configuration
) -> Optional[tuple[Fraction, ...]]:
    """A rational point of the common interior of the hulls, or ``None`` if it is empty."""
    parts = [tuple(sorted(p)) for p in parts]
    if not parts:
        raise ValueError("need at least one part")
    for p in parts:
        if not is_full_dimensional(lam, p):
            return None
    problem, offsets = _intersection_problem(lam, parts)
    out = solve_max_slack(problem)
    if not out.interior():
        return None
    last = parts[-1]
    w = out.witness[offsets[-1] : offsets[-1] + len(last)]
    return _point_from_weights(lam, last, w)


def hull_intersection_empty(parts: Sequence[Sequence[int]], lam: Configuration) -> bool:
    return interior_intersection_point(parts, lam) is None


def imbrication(eps: FundamentalSet, lam: Configuration) -> Verdict:
    """Every pair of fundamental parts has hulls with intersecting interiors."""
    _check_shapes(eps, lam)
    for s, t in combinations(eps.parts, 2):
        if hull_intersection_empty([s, t], lam):
            return Verdict(False, (s, t))
    return Verdict(True)


def point_membership(q: HullQuery, lam: Configuration) -> bool:
    if q.point is None:
        raise ValueError("point_membership needs a point")
    if len(q.point) != 2 * lam.m:
        raise StructuralError(f"point has length {len(q.point)}, expected {2 * lam.m}")
    if any(not 1 <= j <= lam.n for j in q.subset):
        raise StructuralError(f"subset {q.subset} has indices outside 1..{lam.n}")
    subset = sorted(q.subset)
    if q.mode is Membership.INTERIOR and not is_full_dimensional(lam, subset):
        return False
    out = solve_max_slack(_hull_point_problem(lam, subset, q.point))
    return out.interior() if q.mode is Membership.INTERIOR else out.closed()


def in_closed_hull(lam: Configuration, subset: Sequence[int], point) -> bool:
    return point_membership(HullQuery(tuple(subset), tuple(point), Membership.CLOSED), lam)


def in_interior(lam: Configuration, subset: Sequence[int], point) -> bool:
    return point_membership(HullQuery(tuple(subset), tuple(point), Membership.INTERIOR), lam)


def siegel(lam: Configuration) -> bool:
    """``0`` lies in the closed convex hull of all the ``Lambda_j``."""
    return in_closed_hull(lam, range(1, lam.n + 1), (_ZERO,) * (2 * lam.m))


def weak_hyperbolicity(lam: Configuration) -> Verdict:
    """``0`` avoids the hull of every 2m of the points; the witness is the first failing subset."""
    origin = (_ZERO,) * (2 * lam.m)
    for P in combinations(range(1, lam.n + 1), 2 * lam.m):
        if in_closed_hull(lam, P, origin):
            return Verdict(False, P)
    return Verdict(True)


def is_admissible(lam: Configuration) -> bool:
    return siegel(lam) and weak_hyperbolicity(lam).holds


# -- m = 1 --------------------------------------------------------------------------


@dataclass(frozen=True)
class SideReport:
    side: Side
    signs: tuple[int, ...]
    degenerate: tuple[int, ...] = ()

    @property
    def constant(self) -> bool:
        return self.side is not Side.MIXED


def same_side_test(lam: Configuration) -> SideReport:
    """Signs of ``Im((L1 - Lj) / (L2 - L1))`` for ``j = 3..n`` (m = 1 only).

    ``degenerate`` lists the ``j`` lying on the line through ``L1`` and ``L2``.
    """
    if lam.m != 1:
        raise StructuralError("same_side_test is defined for m = 1 only")
    l1, l2 = lam[1][0], lam[2][0]
    if l1 == l2:
        raise DegenerateLineError("Lambda_1 = Lambda_2: no line through them")
    denom = l2 - l1
    signs = []
    for j in range(3, lam.n + 1):
        im = ((l1 - lam[j][0]) / denom).im
        signs.append((im > 0) - (im < 0))
    degenerate = tuple(j for j, s in zip(range(3, lam.n + 1), signs) if s == 0)
    if degenerate or len(set(signs)) != 1:
        side = Side.MIXED
    else:
        side = Side.CONSTANT_POSITIVE if signs[0] > 0 else Side.CONSTANT_NEGATIVE
    return SideReport(side, tuple(signs), degenerate)


# -- LVM recognition ------------------------------------------------------------------


def _subsets_by_size(items: Sequence, min_size: int):
    for size in range(min_size, len(items) + 1):
        yield from combinations(items, size)


def lvm_necessary_scan(eps: FundamentalSet, lam: Configuration) -> Verdict:
    """Look for ``A`` in eps, ``|A| >= 3``, whose hull interiors have empty common part.

    Subsets are scanned by increasing size, so a failing witness is minimal in size.
    ``True`` only means the necessary condition passed.
    """
    _check_shapes(eps, lam)
    for A in _subsets_by_size(eps.parts, 3):
        if hull_intersection_empty(A, lam):
            return Verdict(False, A)
    return Verdict(True)


class LvmStatus(enum.Enum):
    IS_LVM = "IsLvmType"
    NOT_LVM = "NotLvmType"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class LvmVerdict:
    verdict: LvmStatus
    witness_point: Optional[tuple[Fraction, ...]] = None
    mismatch: Optional[Part] = None
    empty_subset: Optional[tuple[Part, ...]] = None
    admissible: Optional[bool] = None
    attempts: int = 0
    detail: str = ""

    def to_dict(self) -> dict:
        from .exactnum import format_rational

        d = {
            "verdict": self.verdict.value,
            "admissible": self.admissible,
            "attempts": self.attempts,
            "detail": self.detail,
        }
        if self.witness_point is not None:
            d["witness_point"] = [format_rational(x) for x in self.witness_point]
        if self.mismatch is not None:
            d["mismatch"] = list(self.mismatch)
        if self.empty_subset is not None:
            d["empty_subset"] = [list(p) for p in self.empty_subset]
        return d


def in_theta(lam: Configuration, point) -> bool:
    """The point avoids every closed hull of 2m of the ``Lambda_j``."""
    for P in combinations(range(1, lam.n + 1), 2 * lam.m):
        if in_closed_hull(lam, P, point):
            return False
    return True


def containing_parts(lam: Configuration, point) -> tuple[Part, ...]:
    """All (2m+1)-subsets whose hull contains ``point`` in its interior."""
    return tuple(
        sigma for sigma in combinations(range(1, lam.n + 1), 2 * lam.m + 1) if in_interior(lam, sigma, point)
    )


def _outside_facet_problem(lam: Configuration, parts, tau: Part, facet: int):
    """Common interior of ``parts`` meets the open side of ``tau`` beyond the facet opposite ``facet``.

    Extra variables: ``c`` (the negated facet coordinate) and a ``(u, v)`` pair per
    remaining vertex of ``tau`` so that its barycentric coordinate ``u - v`` is free.
    """
    others = [j for j in tau if j != facet]
    d = 2 * lam.m
    n_extra = 1 + 2 * len(others)

    def add(rows, rhs, last_off, base):
        nvars = len(rows[0])
        row = [_ZERO] * nvars
        row[base] = Fraction(-1)
        for a in range(len(others)):
            row[base + 1 + 2 * a] = Fraction(1)
            row[base + 2 + 2 * a] = Fraction(-1)
        rows.append(row)
        rhs.append(Fraction(1))
        for c in range(d):
            row = [_ZERO] * nvars
            row[base] = -lam.real(facet)[c]
            for a, j in enumerate(others):
                row[base + 1 + 2 * a] = lam.real(j)[c]
                row[base + 2 + 2 * a] = -lam.real(j)[c]
            for a, j in enumerate(parts[-1]):
                row[last_off + a] -= lam.real(j)[c]
            rows.append(row)
            rhs.append(_ZERO)

    problem, _ = _intersection_problem(lam, parts, extra=(n_extra, add))
    return problem


def intersection_inside_hull(parts: Sequence[Part], tau: Part, lam: Configuration) -> bool:
    """Whether the common interior of ``parts`` (assumed nonempty) lies in the closed hull of ``tau``.

    ``tau`` must be an affine frame; each facet gives one LP asking for a point of the
    common interior strictly beyond it.
    """
    if not is_affine_frame(lam, tau):
        raise ValueError(f"{tau} is not an affine frame")
    for facet in tau:
        if solve_max_slack(_outside_facet_problem(lam, list(parts), tau, facet)).interior():
            return False
    return True


def _jitter(rng: random.Random, d: int, scale_exp: int, bits: int = 16) -> tuple[Fraction, ...]:
    half = 1 << bits
    return tuple(
        Fraction(int(rng.random() * (2 * half + 1)) - half, 1 << (bits + scale_exp)) for _ in range(d)
    )


def lvm_recognize(
    eps: FundamentalSet, lam: Configuration, seed: int = 0, max_attempts: int = 64
) -> LvmVerdict:
    """Decide whether ``(eps, lam)`` is the good system of an LVM manifold.

    A point ``p`` in the common interior of all fundamental hulls and off every
    2m-point hull lies in a connected component ``O`` of the hyperplane-free
    region, and ``O`` sits inside ``H(sigma)`` exactly when ``p`` is interior
    to it.  So ``eps' = {sigma : p in int H(sigma)}`` and a match ``eps' = eps``
    proves LVM type.  A mismatching ``tau`` proves the opposite only once the
    whole common interior is shown to lie in ``H(tau)``; otherwise another
    sample is drawn.  Exhausting ``max_attempts`` gives ``Inconclusive``.
    """
    _check_shapes(eps, lam)
    admissible = is_admissible(lam)
    note = "" if admissible else "configuration is not admissible; characterization applied regardless. "
    parts = list(eps.parts)
    p0 = interior_intersection_point(parts, lam)
    if p0 is None:
        scan = lvm_necessary_scan(eps, lam) if len(parts) >= 3 else Verdict(True)
        witness = scan.witness if not scan.holds else tuple(parts)
        return LvmVerdict(
            LvmStatus.NOT_LVM,
            empty_subset=witness,
            admissible=admissible,
            detail=note + "fundamental hulls have no common interior point",
        )
    rng = random.Random(seed)
    eps_set = set(parts)
    tried: set = set()
    d = 2 * lam.m
    for attempt in range(max_attempts):
        if attempt == 0:
            p = p0
        else:
            delta = _jitter(rng, d, scale_exp=(attempt - 1) // 4)
            p = tuple(a + b for a, b in zip(p0, delta))
        if not all(in_interior(lam, s, p) for s in parts) or not in_theta(lam, p):
            continue
        found = containing_parts(lam, p)
        if set(found) == eps_set:
            return LvmVerdict(
                LvmStatus.IS_LVM,
                witness_point=p,
                admissible=admissible,
                attempts=attempt + 1,
                detail=note + "component of the witness point reproduces the fundamental set",
            )
        for tau in found:
            if tau in eps_set or tau in tried:
                continue
            tried.add(tau)
            if intersection_inside_hull(parts, tau, lam):
                return LvmVerdict(
                    LvmStatus.NOT_LVM,
                    witness_point=p,
                    mismatch=tau,
                    admissible=admissible,
                    attempts=attempt + 1,
                    detail=note + "the whole common interior lies in the hull of a non-fundamental part",
                )
    return LvmVerdict(
        LvmStatus.INCONCLUSIVE,
        admissible=admissible,
        attempts=max_attempts,
        detail=note + "no sampled component matched and no mismatch could be certified",
    )


# -- aggregate report ----------------------------------------------------------------


def check_system(eps: FundamentalSet, lam: Configuration, admissibility: bool = True) -> SystemReport:
    """Run every good-system predicate plus (optionally) Siegel and weak hyperbolicity."""
    _check_shapes(eps, lam)
    stud = is_studyable(eps, lam)
    per = satisfies_per(eps)
    peur = satisfies_peur(eps)
    imb = imbrication(eps, lam)
    sg = wh = None
    wh_witness = None
    if admissibility:
        sg = siegel(lam)
        whv = weak_hyperbolicity(lam)
        wh, wh_witness = whv.holds, whv.witness
    return SystemReport(
        studyable=stud.holds,
        per=per.holds,
        peur=peur.holds,
        imbrication=imb.holds,
        indispensables=tuple(sorted(indispensable_coordinates(eps))),
        studyable_witness=stud.witness,
        peur_witness=peur,
        imbrication_witness=imb.witness,
        siegel=sg,
        weak_hyperbolicity=wh,
        weak_hyperbolicity_witness=wh_witness,
        m=eps.m,
        n=eps.n,
    )


def is_good_system(eps: FundamentalSet, lam: Configuration) -> bool:
    return bool(satisfies_peur(eps)) and bool(is_studyable(eps, lam)) and bool(imbrication(eps, lam))
