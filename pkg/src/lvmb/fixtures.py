"""Bundled example systems and their published expectations.

``run_fixture`` recomputes everything from the stored document and compares
against the expectation; every mismatch is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from . import documents
from .conditions import BasisMode, IntegerBasis, classify, condition_h, p_estimate
from .geometry import check_system, lvm_recognize


@dataclass(frozen=True)
class Expectation:
    label: str
    good: bool = True
    indispensables: Optional[tuple[int, ...]] = None
    contracting_js: Optional[tuple[int, ...]] = None
    p_bracket: Optional[tuple[int, int]] = None
    outcome: Optional[str] = None
    lvm: Optional[str] = None  # None: not claimed
    biholomorphic_to_lvm: str = "?"


EXPECTATIONS: dict[str, Expectation] = {
    "ex8_1": Expectation("Ex 8.1", indispensables=(1, 2, 3), contracting_js=(1,), p_bracket=(1, 1),
                         outcome="NotLck", lvm="IsLvmType", biholomorphic_to_lvm="yes"),
    "ex8_2": Expectation("Ex 8.2", indispensables=(1, 2, 3), contracting_js=(2,), p_bracket=(1, 1), outcome="NotLck"),
    "ex8_3": Expectation("Ex 8.3", contracting_js=(2, 3), p_bracket=(1, 1), outcome="NotLck"),
    "ex8_4": Expectation("Ex 8.4", contracting_js=(1, 2), p_bracket=(1, 1), outcome="NotLck"),
    "ex8_5": Expectation("Ex 8.5", contracting_js=(2, 3, 4), p_bracket=(1, 1), outcome="NotLck"),
    "hopf_m1": Expectation("Hopf m=1", indispensables=(1, 2), contracting_js=(1,), outcome="DiagonalHopf"),
    "k1_m1": Expectation("k=1 m=1", indispensables=(1,), outcome="NotLck_SimplyConnected"),
    "pentagon_m1": Expectation("k=0 m=1", indispensables=(), outcome="NotLck_SimplyConnected"),
    "triple_empty_m1": Expectation("triple m=1", indispensables=(), outcome="NotLck_SimplyConnected",
                                   lvm="NotLvmType"),
    "singleton_m1": Expectation("singleton", good=False),
}

NUMBERED_EXAMPLES = ("ex8_1", "ex8_2", "ex8_3", "ex8_4", "ex8_5")


def names() -> tuple[str, ...]:
    return tuple(EXPECTATIONS)


def load(name: str) -> documents.SystemDocument:
    if name not in EXPECTATIONS:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(EXPECTATIONS)}")
    text = resources.files("lvmb").joinpath("data").joinpath(f"{name}.json").read_text()
    return documents.loads(text)


@dataclass
class FixtureResult:
    name: str
    expectation: Expectation
    good: bool
    indispensables: tuple[int, ...]
    contracting_js: Optional[tuple[int, ...]] = None
    p_bracket: Optional[tuple[int, int]] = None
    outcome: Optional[str] = None
    lvm: Optional[str] = None
    mismatches: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "label": self.expectation.label,
            "passed": self.passed,
            "good": self.good,
            "indispensables": list(self.indispensables),
            "contracting_js": None if self.contracting_js is None else list(self.contracting_js),
            "p_bracket": None if self.p_bracket is None else list(self.p_bracket),
            "outcome": self.outcome,
            "lvm": self.lvm,
            "mismatches": list(self.mismatches),
        }


def run_fixture(name: str, lvm: bool = True, seed: int = 0) -> FixtureResult:
    exp = EXPECTATIONS[name]
    doc = load(name)
    eps, lam = doc.eps, doc.lam
    report = check_system(eps, lam, admissibility=False)
    res = FixtureResult(name, exp, report.good, report.indispensables)

    def compare(field_name, got, want):
        if want is not None and got != want:
            res.mismatches.append(f"{field_name}: expected {want}, got {got}")

    compare("good", report.good, exp.good)
    compare("indispensables", report.indispensables, exp.indispensables)
    if report.good and eps.n > 2 * eps.m + 1:
        cls = classify(eps, lam)
        res.outcome = cls.outcome.value
        if doc.basis is not None:
            ch = condition_h(IntegerBasis(doc.basis, BasisMode.PAPER_COMPAT), eps, lam)
            res.contracting_js = ch.contracting_js
            if ch.holds and eps.m >= 2:
                b = p_estimate(ch, cls)
                res.p_bracket = (b.lower, b.upper)
        if lvm:
            res.lvm = lvm_recognize(eps, lam, seed=seed).verdict.value
    elif doc.basis is not None and eps.m + 2 <= eps.n:
        # (H) is still computable on a non-good system; report it for diagnosis
        res.contracting_js = condition_h(IntegerBasis(doc.basis, BasisMode.PAPER_COMPAT), eps, lam).contracting_js
    compare("contracting_js", res.contracting_js, exp.contracting_js)
    compare("p_bracket", res.p_bracket, exp.p_bracket)
    compare("outcome", res.outcome, exp.outcome)
    compare("lvm", res.lvm, exp.lvm)
    return res


def one_lck_with_potential(res: FixtureResult, m: int) -> str:
    """``yes`` when the stored basis proves a 1-lck-with-potential cover, else ``not shown``."""
    if m < 2:
        return "-"
    return "yes" if res.p_bracket == (1, 1) else "not shown"
