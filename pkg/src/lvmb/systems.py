"""Configurations, fundamental sets and the purely combinatorial predicates.

Indices are 1-based everywhere in this module's public surface.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Iterable, Optional, Sequence

from .exactnum import GaussianRational, gr, realify


class StructuralError(ValueError):
    """A fundamental set or configuration does not have the required shape."""


Part = tuple[int, ...]


@dataclass(frozen=True)
class Configuration:
    """``n`` vectors of ``C^m`` with Gaussian-rational coordinates."""

    m: int
    vectors: tuple[tuple[GaussianRational, ...], ...]

    def __post_init__(self):
        vecs = tuple(tuple(gr(z) for z in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        if self.m < 1:
            raise StructuralError("m must be positive")
        for j, v in enumerate(vecs, start=1):
            if len(v) != self.m:
                raise StructuralError(f"Lambda_{j} has {len(v)} coordinates, expected m={self.m}")
        if len(vecs) < 2 * self.m + 1:
            raise StructuralError(f"need n >= 2m+1 = {2 * self.m + 1} vectors, got {len(vecs)}")

    @classmethod
    def from_complex_rows(cls, m: int, vectors: Iterable[Iterable]) -> "Configuration":
        return cls(m, tuple(tuple(gr(z) for z in v) for v in vectors))

    @classmethod
    def from_matrix(cls, columns_by_row: Sequence[Sequence]) -> "Configuration":
        """Build from an m x n array whose column j is ``Lambda_j``."""
        m = len(columns_by_row)
        n = len(columns_by_row[0])
        return cls(m, tuple(tuple(gr(columns_by_row[i][j]) for i in range(m)) for j in range(n)))

    @property
    def n(self) -> int:
        return len(self.vectors)

    def __getitem__(self, j: int) -> tuple[GaussianRational, ...]:
        if not 1 <= j <= self.n:
            raise IndexError(f"index {j} outside 1..{self.n}")
        return self.vectors[j - 1]

    @cached_property
    def real_points(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(realify(v) for v in self.vectors)

    def real(self, j: int) -> tuple[Fraction, ...]:
        return self.real_points[j - 1]

    def difference(self, j: int, base: int = 1) -> tuple[GaussianRational, ...]:
        return tuple(a - b for a, b in zip(self[j], self[base]))

    def scaled(self, c) -> "Configuration":
        c = gr(c)
        return Configuration(self.m, tuple(tuple(c * z for z in v) for v in self.vectors))

    def denominators(self) -> list[int]:
        return [q.denominator for v in self.vectors for z in v for q in (z.re, z.im)]


@dataclass(frozen=True)
class FundamentalSet:
    """A nonempty family of (2m+1)-subsets of ``{1..n}``, canonically sorted."""

    m: int
    n: int
    parts: tuple[Part, ...]

    def __post_init__(self):
        canon = sorted({tuple(sorted(set(p))) for p in self.parts})
        object.__setattr__(self, "parts", tuple(canon))
        if self.m < 1:
            raise StructuralError("m must be positive")
        if self.n < 2 * self.m + 1:
            raise StructuralError(f"n={self.n} is below 2m+1={2 * self.m + 1}")
        if not canon:
            raise StructuralError("a fundamental set must be nonempty")
        for raw in self.parts:
            if len(raw) != 2 * self.m + 1:
                raise StructuralError(f"part {raw} has {len(raw)} elements, expected {2 * self.m + 1}")
            if raw[0] < 1 or raw[-1] > self.n:
                raise StructuralError(f"part {raw} has indices outside 1..{self.n}")

    @classmethod
    def of(cls, m: int, n: int, parts: Iterable[Iterable[int]]) -> "FundamentalSet":
        raw = [tuple(p) for p in parts]
        for p in raw:
            if len(set(p)) != len(p):
                raise StructuralError(f"part {p} repeats an index")
        return cls(m, n, tuple(raw))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __contains__(self, part) -> bool:
        return tuple(sorted(part)) in self._part_set

    @cached_property
    def _part_set(self) -> frozenset[Part]:
        return frozenset(self.parts)

    def without(self, part: Iterable[int]) -> "FundamentalSet":
        key = tuple(sorted(part))
        return FundamentalSet(self.m, self.n, tuple(p for p in self.parts if p != key))


def hopf_fundamental_set(n: int) -> FundamentalSet:
    """``{(1, 2, j) : j = 3..n}`` with ``m = 1``.

    For ``n = 3`` the single part satisfies PEUR only because ``n = 2m+1``.
    """
    if n < 3:
        raise StructuralError("hopf_fundamental_set needs n >= 3")
    return FundamentalSet(1, n, tuple((1, 2, j) for j in range(3, n + 1)))


def indispensable_coordinates(eps: FundamentalSet) -> frozenset[int]:
    common = set(eps.parts[0])
    for p in eps.parts[1:]:
        common &= set(p)
    return frozenset(common)


def replacers(eps: FundamentalSet, sigma: Part, k: int) -> tuple[int, ...]:
    """All ``k' in sigma`` with ``(sigma - {k'}) | {k}`` fundamental."""
    out = []
    for kp in sigma:
        candidate = set(sigma)
        candidate.discard(kp)
        candidate.add(k)
        if len(candidate) == len(sigma) and tuple(sorted(candidate)) in eps:
            out.append(kp)
    return tuple(out)


@dataclass(frozen=True)
class ReplacerCheck:
    holds: bool
    sigma: Optional[Part] = None
    k: Optional[int] = None
    found: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.holds


def _scan_replacers(eps: FundamentalSet, unique: bool) -> ReplacerCheck:
    for sigma in eps.parts:
        for k in range(1, eps.n + 1):
            found = replacers(eps, sigma, k)
            if not found or (unique and len(found) != 1):
                return ReplacerCheck(False, sigma, k, found)
    return ReplacerCheck(True)


def satisfies_per(eps: FundamentalSet) -> ReplacerCheck:
    """Existence of a replacer for every part and every ``k`` in ``1..n``."""
    return _scan_replacers(eps, unique=False)


def satisfies_peur(eps: FundamentalSet) -> ReplacerCheck:
    """Existence and uniqueness of the replacer.  The failing ``(sigma, k)`` is reported."""
    return _scan_replacers(eps, unique=True)


def residual_set(eps: FundamentalSet) -> tuple[tuple[int, ...], ...]:
    """Strip ``{1..m+1}`` from every part; requires those indices to be indispensable."""
    core = set(range(1, eps.m + 2))
    indisp = indispensable_coordinates(eps)
    missing = sorted(core - indisp)
    if missing:
        raise StructuralError(f"coordinate {missing[0]} is not indispensable")
    return tuple(tuple(i for i in p if i not in core) for p in eps.parts)


def cardinality_bound(n: int, m: int) -> int:
    """``C(n-m-1, m) - (m-1)``: PEUR upper bound on |eps| when 1..m+1 are indispensable."""
    if n < 2 * m + 1:
        raise StructuralError("cardinality_bound needs n >= 2m+1")
    return comb(n - m - 1, m) - (m - 1)


@dataclass(frozen=True)
class SystemReport:
    studyable: bool
    per: bool
    peur: bool
    imbrication: bool
    indispensables: tuple[int, ...]
    studyable_witness: Optional[Part] = None
    peur_witness: Optional[ReplacerCheck] = None
    imbrication_witness: Optional[tuple[Part, Part]] = None
    siegel: Optional[bool] = None
    weak_hyperbolicity: Optional[bool] = None
    weak_hyperbolicity_witness: Optional[Part] = None
    m: int = 0
    n: int = 0

    @property
    def k(self) -> int:
        return len(self.indispensables)

    @property
    def good(self) -> bool:
        return self.studyable and self.peur and self.imbrication

    def to_dict(self) -> dict:
        d = {
            "m": self.m,
            "n": self.n,
            "good": self.good,
            "studyable": self.studyable,
            "per": self.per,
            "peur": self.peur,
            "imbrication": self.imbrication,
            "indispensables": list(self.indispensables),
            "k": self.k,
            "siegel": self.siegel,
            "weak_hyperbolicity": self.weak_hyperbolicity,
        }
        if self.studyable_witness is not None:
            d["studyable_witness"] = list(self.studyable_witness)
        if self.peur_witness is not None and not self.peur_witness.holds:
            w = self.peur_witness
            d["peur_witness"] = {"sigma": list(w.sigma), "k": w.k, "replacers": list(w.found)}
        if self.imbrication_witness is not None:
            d["imbrication_witness"] = [list(p) for p in self.imbrication_witness]
        if self.weak_hyperbolicity_witness is not None:
            d["weak_hyperbolicity_witness"] = list(self.weak_hyperbolicity_witness)
        return d
