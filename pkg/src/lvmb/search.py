"""Seeded random miners for good systems and condition-(H) bases, plus homotopy sampling.

Every function here is a pure function of its inputs and ``SearchParams.seed``.
Randomness comes only from ``random.Random(seed).random()``, whose output
sequence is stable across Python versions and platforms; an integer in
``[lo, hi)`` is ``lo + floor(random() * (hi - lo))``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .conditions import BasisMode, ConditionHReport, IntegerBasis, condition_h, matrix_A
from .exactnum import GaussianRational
from .geometry import imbrication, is_good_system, is_studyable
from .systems import Configuration, FundamentalSet, StructuralError, satisfies_peur


@dataclass(frozen=True)
class SearchParams:
    seed: int = 0
    max_trials: int = 10000
    coordinate_range: tuple[int, int] = (-2, 2)
    basis_mode: BasisMode = BasisMode.PAPER_COMPAT

    def __post_init__(self):
        if self.max_trials < 1:
            raise ValueError("max_trials must be at least 1")
        lo, hi = self.coordinate_range
        if hi <= lo:
            raise ValueError(f"empty coordinate range [{lo}, {hi})")

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def _randint(rng: random.Random, lo: int, hi: int) -> int:
    return lo + int(rng.random() * (hi - lo))


def _draw_configuration(rng: random.Random, m: int, n: int, lo: int, hi: int) -> Configuration:
    vecs = []
    for _ in range(n):
        v = []
        for _ in range(m):
            re = _randint(rng, lo, hi)
            im = _randint(rng, lo, hi)
            v.append(GaussianRational(re, im))
        vecs.append(tuple(v))
    return Configuration(m, tuple(vecs))


def random_configuration(params: SearchParams, m: int, n: int) -> Configuration:
    """``n`` vectors of Gaussian integers; re and im drawn from ``coordinate_range``."""
    return _draw_configuration(params.rng(), m, n, *params.coordinate_range)


@dataclass(frozen=True)
class MiningResult:
    found: bool
    trials: int
    seed: int
    lam: Optional[Configuration] = None
    basis: Optional[IntegerBasis] = None
    report: Optional[ConditionHReport] = None
    message: str = ""


class PeurRejected(ValueError):
    """The fundamental set fails PEUR, so no configuration can make it good."""


def mine_good_system(eps: FundamentalSet, params: SearchParams) -> MiningResult:
    """First seeded Λ making ``(eps, Λ)`` studyable with imbrication.

    One configuration is drawn per trial from a single generator stream.
    """
    peur = satisfies_peur(eps)
    if not peur:
        raise PeurRejected(f"fundamental set fails PEUR at part {peur.sigma}, k={peur.k} (replacers {list(peur.found)})")
    rng = params.rng()
    lo, hi = params.coordinate_range
    for trial in range(1, params.max_trials + 1):
        lam = _draw_configuration(rng, eps.m, eps.n, lo, hi)
        if is_studyable(eps, lam) and imbrication(eps, lam):
            return MiningResult(True, trial, params.seed, lam=lam, message=f"number of trials: {trial}")
    return MiningResult(False, params.max_trials, params.seed, message="too many trials")


def _draw_basis(rng: random.Random, m: int, lo: int, hi: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(_randint(rng, lo, hi) for _ in range(m)) for _ in range(m))


def mine_condition_h_basis(
    eps: Optional[FundamentalSet], lam: Configuration, params: SearchParams
) -> MiningResult:
    """First seeded integer basis (mode per ``params``) with a nonempty contracting set.

    Every draw counts as a trial, including those rejected by the basis mode.
    Goodness of the system is the caller's responsibility; indispensability of
    ``1..m+1`` and invertibility of ``A`` are checked here.
    """
    matrix_A(lam)
    rng = params.rng()
    lo, hi = params.coordinate_range
    for trial in range(1, params.max_trials + 1):
        vecs = _draw_basis(rng, lam.m, lo, hi)
        try:
            basis = IntegerBasis(vecs, params.basis_mode)
        except StructuralError:
            continue
        report = condition_h(basis, eps, lam)
        if report.holds:
            return MiningResult(True, trial, params.seed, lam=lam, basis=basis, report=report,
                                message=f"number of trials: {trial}")
    return MiningResult(False, params.max_trials, params.seed, lam=lam, message="too many trials")


@dataclass(frozen=True)
class HomotopySample:
    s: Fraction
    studyable: bool
    imbrication: bool

    @property
    def good(self) -> bool:
        return self.studyable and self.imbrication


@dataclass(frozen=True)
class HomotopyReport:
    samples: tuple[HomotopySample, ...] = field(default_factory=tuple)

    @property
    def all_good(self) -> bool:
        return all(x.good for x in self.samples)

    @property
    def first_failure(self) -> Optional[Fraction]:
        return next((x.s for x in self.samples if not x.good), None)


def interpolate(lam_a: Configuration, lam_b: Configuration, s: Union[Fraction, int]) -> Configuration:
    s = Fraction(s)
    return Configuration(
        lam_a.m,
        tuple(tuple(a * (1 - s) + b * s for a, b in zip(va, vb)) for va, vb in zip(lam_a.vectors, lam_b.vectors)),
    )


def homotopy_scan(eps: FundamentalSet, lam_a: Configuration, lam_b: Configuration, steps: int) -> HomotopyReport:
    """Good-system verdicts along ``(1-s) lam_a + s lam_b`` at ``s = i/(steps-1)``.

    A sampled check only: passing every sample does not prove the path stays good.
    """
    if steps < 2:
        raise ValueError("steps must be at least 2")
    if (lam_a.m, lam_a.n) != (lam_b.m, lam_b.n):
        raise StructuralError("endpoints have different shapes")
    for name, lam in (("start", lam_a), ("end", lam_b)):
        if not is_good_system(eps, lam):
            raise ValueError(f"{name} configuration is not a good system for this fundamental set")
    samples = []
    for i in range(steps):
        s = Fraction(i, steps - 1)
        lam = interpolate(lam_a, lam_b, s)
        stud = bool(is_studyable(eps, lam))
        imb = bool(imbrication(eps, lam))
        samples.append(HomotopySample(s, stud, imb))
    return HomotopyReport(tuple(samples))
