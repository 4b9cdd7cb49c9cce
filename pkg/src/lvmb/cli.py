"""``lvmb`` command-line front end.

Exit codes: 0 affirmative, 1 verified negative, 2 input error,
3 undecided (LVM recognition inconclusive or a miner ran out of trials).

A document argument is a path to a JSON system document, or ``fixture:NAME``
for a bundled example (``lvmb fixtures`` lists them).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import documents, fixtures
from .conditions import (
    BasisMode,
    ClassificationError,
    IntegerBasis,
    StudyabilityError,
    classify,
    condition_h,
    p_estimate,
)
from .exactnum import format_rational
from .geometry import LvmStatus, check_system, lvm_necessary_scan, lvm_recognize
from .search import PeurRejected, SearchParams, homotopy_scan, mine_condition_h_basis, mine_good_system
from .systems import StructuralError

OK, NEGATIVE, INPUT_ERROR, UNDECIDED = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _load(ref: str) -> documents.SystemDocument:
    if ref.startswith("fixture:"):
        try:
            return fixtures.load(ref.split(":", 1)[1])
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    return documents.load(ref)


def _require(doc: documents.SystemDocument, eps: bool = True, lam: bool = True) -> None:
    if eps and doc.eps is None:
        raise UsageError("document has no 'epsilon' field")
    if lam and doc.lam is None:
        raise UsageError("document has no 'lambda' field")


def _mode(args) -> BasisMode:
    return BasisMode.STRICT if args.mode == "strict" else BasisMode.PAPER_COMPAT


def _params(args) -> SearchParams:
    return SearchParams(seed=args.seed, max_trials=args.max_trials, basis_mode=_mode(args))


def _emit(args, data: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _yn(flag) -> str:
    return "n/a" if flag is None else ("yes" if flag else "no")


def _render_check(r) -> str:
    lines = [
        f"system m={r.m} n={r.n}",
        f"  good system       : {_yn(r.good)}",
        f"  studyable         : {_yn(r.studyable)}",
        f"  PER               : {_yn(r.per)}",
        f"  PEUR              : {_yn(r.peur)}",
        f"  imbrication       : {_yn(r.imbrication)}",
        f"  indispensables    : {{{', '.join(map(str, r.indispensables))}}} (k={r.k})",
        f"  Siegel            : {_yn(r.siegel)}",
        f"  weak hyperbolicity: {_yn(r.weak_hyperbolicity)}",
    ]
    if r.studyable_witness is not None:
        lines.append(f"  not an affine frame: {r.studyable_witness}")
    if r.peur_witness is not None and not r.peur_witness.holds:
        w = r.peur_witness
        lines.append(f"  PEUR fails at part {w.sigma}, k={w.k}: replacers {list(w.found)}")
    if r.imbrication_witness is not None:
        a, b = r.imbrication_witness
        lines.append(f"  hull interiors disjoint: {a} and {b}")
    return "\n".join(lines)


def cmd_check(args) -> int:
    doc = _load(args.document)
    _require(doc)
    report = check_system(doc.eps, doc.lam)
    _emit(args, report.to_dict(), _render_check(report))
    return OK if report.good else NEGATIVE


def cmd_classify(args) -> int:
    doc = _load(args.document)
    _require(doc)
    report = check_system(doc.eps, doc.lam, admissibility=False)
    if not report.good:
        _emit(args, {"refused": "not a good system", "check": report.to_dict()},
              "refusing to classify: not a good system\n" + _render_check(report))
        return NEGATIVE
    cls = classify(doc.eps, doc.lam)
    text = (
        f"m={cls.m} n={cls.n} k={cls.k}\n"
        f"  condition (K): {_yn(cls.condition_k)} (scale D={cls.scale})\n"
        f"  outcome      : {cls.outcome.value}\n"
        f"  {cls.notes}"
    )
    _emit(args, cls.to_dict(), text)
    return OK


def _parse_inline_basis(text: str) -> tuple[tuple[int, ...], ...]:
    try:
        return tuple(tuple(int(x) for x in row.split(",")) for row in text.split(";"))
    except ValueError:
        raise UsageError(f"--basis: expected rows like '0,-2;1,0', got {text!r}") from None


def cmd_cond_h(args) -> int:
    doc = _load(args.document)
    _require(doc)
    if args.basis is not None:
        vecs = _parse_inline_basis(args.basis)
    elif args.basis_file is not None:
        other = documents.load(args.basis_file)
        if other.basis is None:
            raise UsageError(f"{args.basis_file} has no 'basis' field")
        vecs = other.basis
    elif doc.basis is not None:
        vecs = doc.basis
    else:
        raise UsageError("no basis: pass --basis, --basis-file, or use a document with a 'basis' field")
    report = condition_h(IntegerBasis(vecs, _mode(args)), doc.eps, doc.lam)
    data = report.to_dict()
    bracket = None
    check = check_system(doc.eps, doc.lam, admissibility=False)
    data["good_system"] = check.good
    if report.holds and check.good and doc.eps.n > 2 * doc.eps.m + 1:
        b = p_estimate(report, classify(doc.eps, doc.lam))
        bracket = (b.lower, b.upper)
    data["p_bracket"] = list(bracket) if bracket else None
    lines = [f"basis det={report.basis.det} mode={report.basis.mode.value}"]
    if not check.good:
        lines.append("  warning: not a good system; results are formal")
    for j, row in enumerate(report.witnesses, start=1):
        marks = " ".join(
            f"r{w.r}:Im w={format_rational(w.w.im)}" + ("" if w.contracting else "*") for w in row
        )
        lines.append(f"  f_{j} {'contracting' if j in report.contracting_js else 'not contracting'}: {marks}")
    lines.append(f"  contracting j: {{{', '.join(map(str, report.contracting_js))}}}  (* marks Im w <= 0)")
    lines.append(f"  condition (H): {_yn(report.holds)}; cover rank m-l = {report.cover_rank}")
    lines.append(f"  p bracket: {bracket if bracket else 'none'}")
    _emit(args, data, "\n".join(lines))
    return OK if report.holds else NEGATIVE


def cmd_lvm(args) -> int:
    doc = _load(args.document)
    _require(doc)
    if args.necessary_only:
        v = lvm_necessary_scan(doc.eps, doc.lam)
        data = {"necessary_condition": v.holds,
                "empty_subset": None if v.holds else [list(p) for p in v.witness]}
        text = "necessary condition holds" if v.holds else f"NotLvmType: hull interiors of {list(v.witness)} have no common point"
        _emit(args, data, text)
        return OK if v.holds else NEGATIVE
    v = lvm_recognize(doc.eps, doc.lam, seed=args.seed)
    text = [f"{v.verdict.value}: {v.detail}"]
    if v.witness_point is not None:
        text.append(f"  witness point: ({', '.join(format_rational(x) for x in v.witness_point)})")
    if v.mismatch is not None:
        text.append(f"  certified non-fundamental part: {v.mismatch}")
    if v.empty_subset is not None:
        text.append(f"  parts with no common interior point: {list(v.empty_subset)}")
    _emit(args, v.to_dict(), "\n".join(text))
    return {LvmStatus.IS_LVM: OK, LvmStatus.NOT_LVM: NEGATIVE}.get(v.verdict, UNDECIDED)


def cmd_mine_good_system(args) -> int:
    doc = _load(args.epsilon)
    _require(doc, lam=False)
    params = _params(args)
    try:
        result = mine_good_system(doc.eps, params)
    except PeurRejected as exc:
        _emit(args, {"found": False, "error": str(exc)}, f"rejected: {exc}")
        return NEGATIVE
    data = {"found": result.found, "trials": result.trials, "seed": params.seed, "message": result.message}
    if result.found:
        out = documents.make(doc.eps, result.lam, seed=params.seed, trials=result.trials)
        if args.out:
            documents.save(out, args.out)
            data["written"] = str(args.out)
        data["document"] = documents.to_dict(out)
    text = result.message
    if result.found:
        text += f"; written to {args.out}" if args.out else "\n" + documents.dumps(out).rstrip()
    _emit(args, data, text)
    return OK if result.found else UNDECIDED


def cmd_mine_basis(args) -> int:
    doc = _load(args.document)
    _require(doc)
    params = _params(args)
    result = mine_condition_h_basis(doc.eps, doc.lam, params)
    data = {"found": result.found, "trials": result.trials, "seed": params.seed, "message": result.message,
            "mode": params.basis_mode.value}
    text = result.message
    if result.found:
        data["basis"] = [list(f) for f in result.basis.vectors]
        data["contracting_js"] = list(result.report.contracting_js)
        text += f"\n  basis {data['basis']} (det {result.basis.det}); contracting j: {data['contracting_js']}"
        if args.out:
            meta = dict(doc.metadata, seed=params.seed, trials=result.trials, mode=params.basis_mode.value)
            documents.save(documents.make(doc.eps, doc.lam, result.basis.vectors, **meta), args.out)
            data["written"] = str(args.out)
            text += f"\n  written to {args.out}"
    _emit(args, data, text)
    return OK if result.found else UNDECIDED


def cmd_homotopy(args) -> int:
    a, b = _load(args.start), _load(args.end)
    _require(a)
    _require(b, eps=False)
    if b.eps is not None and b.eps.parts != a.eps.parts:
        raise UsageError("the two documents have different fundamental sets")
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    if (a.m, a.n) != (b.m, b.n):
        raise UsageError("the two documents have different shapes")
    try:
        report = homotopy_scan(a.eps, a.lam, b.lam, args.steps)
    except ValueError as exc:
        _emit(args, {"error": str(exc)}, f"rejected: {exc}")
        return NEGATIVE
    rows = [{"s": format_rational(x.s), "studyable": x.studyable, "imbrication": x.imbrication, "good": x.good}
            for x in report.samples]
    fail = report.first_failure
    data = {"samples": rows, "all_good": report.all_good,
            "first_failure": None if fail is None else format_rational(fail)}
    text = "\n".join(f"  s={r['s']:>6}  good={_yn(r['good'])}" for r in rows)
    text += "\nall samples good (sampled check only)" if report.all_good else f"\nfirst failing sample at s={format_rational(fail)}"
    _emit(args, data, text)
    return OK if report.all_good else NEGATIVE


def cmd_fixtures(args) -> int:
    results = [fixtures.run_fixture(name, seed=args.seed) for name in fixtures.names()]
    if args.format == "json":
        print(json.dumps({"fixtures": [r.to_dict() for r in results],
                          "all_passed": all(r.passed for r in results)}, sort_keys=True))
    else:
        header = f"{'Example':<11}{'m':>2}{'n':>4}  {'good':<5}{'LVM type':<11}{'(H) j':<10}{'p':<8}{'1-LCK with potential':<22}status"
        print(header)
        print("-" * len(header))
        for r in results:
            doc = fixtures.load(r.name)
            js = "-" if r.contracting_js is None else "{" + ",".join(map(str, r.contracting_js)) + "}"
            p = "-" if r.p_bracket is None else f"({r.p_bracket[0]},{r.p_bracket[1]})"
            lvm = {"IsLvmType": "yes", "NotLvmType": "no", "Inconclusive": "?"}.get(r.lvm, "-")
            print(f"{r.expectation.label:<11}{doc.m:>2}{doc.n:>4}  {_yn(r.good):<5}{lvm:<11}{js:<10}{p:<8}"
                  f"{fixtures.one_lck_with_potential(r, doc.m):<22}{'pass' if r.passed else 'FAIL'}")
            for msg in r.mismatches:
                print(f"    {msg}")
    return OK if all(r.passed for r in results) else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--max-trials", type=int, default=argparse.SUPPRESS)
    common.add_argument("--mode", choices=("strict", "paper"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="lvmb", description="Exact verifier for LVMB good systems.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-trials", type=int, default=10000)
    parser.add_argument("--mode", choices=("strict", "paper"), default="paper",
                        help="basis mode: strict needs |det| = 1, paper accepts any det != 0")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="good-system report")
    p.add_argument("document")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", parents=[common], help="classification table row")
    p.add_argument("document")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("cond-h", parents=[common], help="condition (H) for a basis")
    p.add_argument("document")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--basis", help="inline basis, rows f_j separated by ';', e.g. '0,-2;1,0'")
    g.add_argument("--basis-file", help="document whose 'basis' field is used")
    p.set_defaults(func=cmd_cond_h)

    p = sub.add_parser("lvm", parents=[common], help="LVM-type recognition")
    p.add_argument("document")
    p.add_argument("--necessary-only", action="store_true", help="only scan for empty common interiors")
    p.set_defaults(func=cmd_lvm)

    p = sub.add_parser("mine", help="seeded miners")
    msub = p.add_subparsers(dest="what", required=True)
    q = msub.add_parser("good-system", parents=[common], help="random configuration making epsilon good")
    q.add_argument("--epsilon", required=True, help="document supplying epsilon (lambda ignored)")
    q.add_argument("--out", type=Path)
    q.set_defaults(func=cmd_mine_good_system)
    q = msub.add_parser("basis", parents=[common], help="random basis satisfying condition (H)")
    q.add_argument("document")
    q.add_argument("--out", type=Path)
    q.set_defaults(func=cmd_mine_basis)

    p = sub.add_parser("homotopy", parents=[common], help="sample the straight path between two configurations")
    p.add_argument("start")
    p.add_argument("end")
    p.add_argument("--steps", type=int, default=11)
    p.set_defaults(func=cmd_homotopy)

    p = sub.add_parser("fixtures", parents=[common], help="run the bundled examples against their expectations")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (documents.DocumentError, UsageError, StructuralError, StudyabilityError, ClassificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
