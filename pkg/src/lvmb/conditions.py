"""Conditions (K) and (H), the exponent witnesses of the discrete Z^m model, and
the classification table.

For an integer vector ``f`` and ``r in {m+2..n}`` the diagonal multiplier is
``Gamma(f)_r = exp(2*i*pi*w)`` with ``w = <Lambda_r - Lambda_1, A^{-1} f>``
(bilinear pairing, no conjugation) and ``A`` the matrix whose rows are
``Lambda_{j+1} - Lambda_1``, ``j = 1..m``.  Since
``|exp(2*i*pi*w)| = exp(-2*pi*Im w)``, the multiplier is contracting exactly
when ``Im w > 0``; everything below decides that sign exactly.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .exactnum import CMatrix, GaussianRational, SingularMatrixError, bilinear, determinant, format_rational, gr
from .systems import Configuration, FundamentalSet, StructuralError, indispensable_coordinates


class BasisMode(enum.Enum):
    STRICT = "strict"  # |det| = 1: a genuine basis of Z^m
    PAPER_COMPAT = "paper_compat"  # det != 0 only


class StudyabilityError(ValueError):
    """``A`` is singular, so the system cannot be studyable with 1..m+1 indispensable."""


class ClassificationError(ValueError):
    """An (m, k) combination that no good system can have."""


@dataclass(frozen=True)
class IntegerBasis:
    vectors: tuple[tuple[int, ...], ...]
    mode: BasisMode = BasisMode.PAPER_COMPAT
    det: int = field(init=False)

    def __post_init__(self):
        vecs = tuple(tuple(int(x) for x in f) for f in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        m = len(vecs)
        if m == 0 or any(len(f) != m for f in vecs):
            raise StructuralError("a basis needs m integer vectors of length m")
        d = int(determinant([[Fraction(x) for x in f] for f in vecs]))
        object.__setattr__(self, "det", d)
        if d == 0:
            raise StructuralError("basis vectors are linearly dependent (det = 0)")
        if self.mode is BasisMode.STRICT and abs(d) != 1:
            raise StructuralError(f"strict mode needs |det| = 1, got det = {d}")

    @property
    def m(self) -> int:
        return len(self.vectors)

    @property
    def unimodular(self) -> bool:
        return abs(self.det) == 1


def matrix_A(lam: Configuration) -> CMatrix:
    """Rows ``Lambda_{j+1} - Lambda_1`` for ``j = 1..m``; raises if singular."""
    A = CMatrix([lam.difference(j + 1) for j in range(1, lam.m + 1)])
    if A.det().is_zero():
        raise StudyabilityError("matrix A is singular: Lambda_1..Lambda_{m+1} are not affinely free over C")
    return A


@dataclass(frozen=True)
class ExponentWitness:
    r: int
    w: GaussianRational

    @property
    def contracting(self) -> bool:
        return self.w.im > 0

    @property
    def unimodular(self) -> bool:
        return self.w.im == 0

    @property
    def exponent(self) -> complex:
        """``2*i*pi*w`` as a float; reports only."""
        return 2j * math.pi * complex(self.w)

    @property
    def modulus(self) -> float:
        return math.exp(-2 * math.pi * float(self.w.im))

    def gamma(self) -> complex:
        return cmath.exp(self.exponent)

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "w": [format_rational(self.w.re), format_rational(self.w.im)],
            "modulus": self.modulus,
            "contracting": self.contracting,
        }


def _inverse_A(lam: Configuration) -> CMatrix:
    try:
        return matrix_A(lam).inverse()
    except SingularMatrixError as exc:  # pragma: no cover - matrix_A already checked det
        raise StudyabilityError(str(exc)) from None


def exponent_witness(f: Sequence[int], r: int, lam: Configuration, A_inv: Optional[CMatrix] = None) -> ExponentWitness:
    m = lam.m
    if not m + 2 <= r <= lam.n:
        raise ValueError(f"r={r} outside {m + 2}..{lam.n}")
    if len(f) != m:
        raise StructuralError(f"f has length {len(f)}, expected {m}")
    if A_inv is None:
        A_inv = _inverse_A(lam)
    y = A_inv @ [gr(x) for x in f]
    return ExponentWitness(r, bilinear(lam.difference(r), y))


@dataclass(frozen=True)
class ConditionHReport:
    basis: IntegerBasis
    witnesses: tuple[tuple[ExponentWitness, ...], ...]  # [j][r - (m+2)]
    contracting_js: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return bool(self.contracting_js)

    @property
    def l(self) -> int:
        return len(self.contracting_js)

    @property
    def cover_rank(self) -> int:
        return self.basis.m - self.l

    def to_dict(self) -> dict:
        return {
            "basis": [list(f) for f in self.basis.vectors],
            "basis_det": self.basis.det,
            "mode": self.basis.mode.value,
            "unimodular": self.basis.unimodular,
            "holds": self.holds,
            "contracting_js": list(self.contracting_js),
            "l": self.l,
            "cover_rank": self.cover_rank,
            "witnesses": [[w.to_dict() for w in row] for row in self.witnesses],
        }


def _require_core_indispensable(eps: Optional[FundamentalSet], m: int) -> None:
    if eps is None:
        return
    missing = sorted(set(range(1, m + 2)) - indispensable_coordinates(eps))
    if missing:
        raise StructuralError(f"coordinate {missing[0]} is not indispensable; the discrete model needs 1..{m + 1}")


def condition_h(basis: IntegerBasis, eps: Optional[FundamentalSet], lam: Configuration) -> ConditionHReport:
    """Which ``f_j`` of the basis give contracting multipliers for every ``r``."""
    if basis.m != lam.m:
        raise StructuralError(f"basis has m={basis.m}, configuration has m={lam.m}")
    _require_core_indispensable(eps, lam.m)
    A_inv = _inverse_A(lam)
    table = tuple(
        tuple(exponent_witness(f, r, lam, A_inv) for r in range(lam.m + 2, lam.n + 1)) for f in basis.vectors
    )
    js = tuple(j for j, row in enumerate(table, start=1) if all(w.contracting for w in row))
    return ConditionHReport(basis, table, js)


@dataclass(frozen=True)
class ContractionGenerator:
    j: int
    diagonal: tuple[complex, ...]
    witnesses: tuple[ExponentWitness, ...]

    @property
    def contracting(self) -> bool:
        return all(w.contracting for w in self.witnesses)


def contraction_generators(
    basis: IntegerBasis, j: int, eps: Optional[FundamentalSet], lam: Configuration
) -> ContractionGenerator:
    """Diagonal of ``alpha_j = Diag(Gamma(f_j)_{m+2}, ..., Gamma(f_j)_n)``.

    Computed even when ``f_j`` is not contracting; check ``.contracting``.
    """
    if not 1 <= j <= basis.m:
        raise ValueError(f"j={j} outside 1..{basis.m}")
    _require_core_indispensable(eps, lam.m)
    A_inv = _inverse_A(lam)
    ws = tuple(exponent_witness(basis.vectors[j - 1], r, lam, A_inv) for r in range(lam.m + 2, lam.n + 1))
    return ContractionGenerator(j, tuple(w.gamma() for w in ws), ws)


@dataclass(frozen=True)
class ConditionK:
    holds: bool
    scale: int  # Phi = scale * Identity maps every Lambda_j into Z[i]^m


def condition_k(lam: Configuration) -> ConditionK:
    """Exact inputs are in Q[i], so the common denominator always gives a witness."""
    return ConditionK(True, lcm(*lam.denominators()) if lam.denominators() else 1)


class Outcome(enum.Enum):
    NOT_LCK_SIMPLY_CONNECTED = "NotLck_SimplyConnected"
    DIAGONAL_HOPF = "DiagonalHopf"
    NOT_LCK_WITH_POTENTIAL_LCK_OPEN = "NotLckWithPotential_LckOpen"
    NOT_LCK = "NotLck"


_NOTES = {
    Outcome.NOT_LCK_SIMPLY_CONNECTED: "simply connected, hence not lck",
    Outcome.DIAGONAL_HOPF: "diagonal Hopf manifold (lck with potential)",
    Outcome.NOT_LCK_WITH_POTENTIAL_LCK_OPEN: "not lck with potential; lck existence open",
    Outcome.NOT_LCK: "condition (K) holds: not lck",
}


@dataclass(frozen=True)
class Classification:
    m: int
    n: int
    k: int
    condition_k: bool
    outcome: Outcome
    notes: str
    scale: Optional[int] = None

    @property
    def rules_out_lck(self) -> bool:
        return self.outcome in (Outcome.NOT_LCK, Outcome.NOT_LCK_SIMPLY_CONNECTED)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "condition_k": self.condition_k,
            "condition_k_scale": self.scale,
            "outcome": self.outcome.value,
            "notes": self.notes,
        }


def classify_row(m: int, k: int, condition_k: bool) -> Outcome:
    """The classification table as a pure function of ``(m, k, condition (K))``."""
    if m < 1 or k < 0:
        raise ClassificationError(f"invalid parameters m={m}, k={k}")
    if m == 1:
        if k in (0, 1):
            return Outcome.NOT_LCK_SIMPLY_CONNECTED
        if k == 2:
            return Outcome.DIAGONAL_HOPF
        if k == 3:
            raise ClassificationError("m=1, k=3: all parts coincide, which violates PEUR")
        raise ClassificationError(f"m=1 allows at most 3 indispensable coordinates, got k={k}")
    if k > 2 * m + 1:
        raise ClassificationError(f"k={k} exceeds the part size 2m+1={2 * m + 1}")
    return Outcome.NOT_LCK if condition_k else Outcome.NOT_LCK_WITH_POTENTIAL_LCK_OPEN


def classify(eps: FundamentalSet, lam: Configuration) -> Classification:
    """Classify a good system with ``n > 2m+1`` (goodness is the caller's responsibility)."""
    if eps.n <= 2 * eps.m + 1:
        raise ClassificationError(f"classification needs n > 2m+1, got n={eps.n}, m={eps.m}")
    k = len(indispensable_coordinates(eps))
    ck = condition_k(lam)
    outcome = classify_row(eps.m, k, ck.holds)
    return Classification(eps.m, eps.n, k, ck.holds, outcome, _NOTES[outcome], ck.scale)


@dataclass(frozen=True)
class PBracket:
    lower: int
    upper: int


def p_estimate(report: ConditionHReport, classification: Classification) -> PBracket:
    """Bracket on the minimal rank ``p`` of an lck-with-potential ``Z^p`` cover."""
    if not report.holds:
        raise ValueError("condition (H) is not satisfied: no estimate")
    upper = report.cover_rank
    lower = 1 if classification.rules_out_lck else 0
    if lower > upper:
        raise ValueError(f"inconsistent bracket: non-lck manifold but cover rank {upper}")
    return PBracket(lower, upper)
