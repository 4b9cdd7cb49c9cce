"""JSON documents holding a system ``(eps, Lambda)`` and an optional basis.

Layout::

    {
      "m": 2, "n": 7,
      "epsilon": [[1, 2, 3, 4, 6], ...],            # 1-based parts
      "lambda": [[["0", "0"], ["0", "-1"]], ...],   # n vectors of m (re, im) pairs
      "basis": [[0, -2], [1, 0]],                   # optional, f_1 .. f_m
      "metadata": {"name": "ex8_1"}                 # optional
    }

Rational entries are strings ``"p"`` or ``"p/q"``; JSON floats and decimal
strings are rejected so that every value is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Union

from .exactnum import GaussianRational
from .systems import Configuration, FundamentalSet, StructuralError


class DocumentError(ValueError):
    """The document cannot be parsed; the message names the offending field."""


@dataclass(frozen=True)
class SystemDocument:
    eps: Optional[FundamentalSet]
    lam: Optional[Configuration]
    m: int
    n: int
    basis: Optional[tuple[tuple[int, ...], ...]] = None
    metadata: dict = field(default_factory=dict)

    @property
    def name(self) -> str:
        return str(self.metadata.get("name", ""))


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where}: expected an integer, got {value!r}")
    return value


def _entry(value: Any, where: str) -> GaussianRational:
    if not isinstance(value, list) or len(value) != 2:
        raise DocumentError(f"{where}: expected a [re, im] pair of rational strings, got {value!r}")
    try:
        return GaussianRational.from_pair(value)
    except ValueError as exc:
        raise DocumentError(f"{where}: {exc}") from None


def from_dict(data: dict) -> SystemDocument:
    if not isinstance(data, dict):
        raise DocumentError("document root must be an object")
    for key in ("m", "n"):
        if key not in data:
            raise DocumentError(f"missing field '{key}'")
    m, n = _int(data["m"], "m"), _int(data["n"], "n")
    if m < 1 or n < 2 * m + 1:
        raise DocumentError(f"m={m}, n={n}: need m >= 1 and n >= 2m+1")

    eps = None
    if "epsilon" in data:
        raw = data["epsilon"]
        if not isinstance(raw, list) or not raw:
            raise DocumentError("epsilon: expected a nonempty list of parts")
        parts = []
        for a, part in enumerate(raw):
            if not isinstance(part, list):
                raise DocumentError(f"epsilon[{a}]: expected a list of indices")
            idx = [_int(x, f"epsilon[{a}][{b}]") for b, x in enumerate(part)]
            if len(idx) != 2 * m + 1:
                raise DocumentError(f"epsilon[{a}]: has {len(idx)} indices, expected 2m+1={2 * m + 1}")
            if len(set(idx)) != len(idx):
                raise DocumentError(f"epsilon[{a}]: repeated index")
            for b, x in enumerate(idx):
                if not 1 <= x <= n:
                    raise DocumentError(f"epsilon[{a}][{b}]: index {x} outside 1..{n}")
            parts.append(tuple(idx))
        eps = FundamentalSet(m, n, tuple(parts))

    lam = None
    if "lambda" in data:
        raw = data["lambda"]
        if not isinstance(raw, list) or len(raw) != n:
            raise DocumentError(f"lambda: expected {n} vectors")
        vecs = []
        for j, vec in enumerate(raw, start=1):
            if not isinstance(vec, list) or len(vec) != m:
                raise DocumentError(f"lambda[{j}]: expected {m} coordinates")
            vecs.append(tuple(_entry(z, f"lambda[{j}][{c}]") for c, z in enumerate(vec, start=1)))
        try:
            lam = Configuration(m, tuple(vecs))
        except StructuralError as exc:
            raise DocumentError(f"lambda: {exc}") from None

    basis = None
    if data.get("basis") is not None:
        raw = data["basis"]
        if not isinstance(raw, list) or len(raw) != m:
            raise DocumentError(f"basis: expected {m} vectors f_1..f_m")
        rows = []
        for j, f in enumerate(raw, start=1):
            if not isinstance(f, list) or len(f) != m:
                raise DocumentError(f"basis[{j}]: expected {m} integers")
            rows.append(tuple(_int(x, f"basis[{j}][{c}]") for c, x in enumerate(f, start=1)))
        basis = tuple(rows)

    meta = data.get("metadata") or {}
    if not isinstance(meta, dict):
        raise DocumentError("metadata: expected an object")
    return SystemDocument(eps, lam, m, n, basis, dict(meta))


def to_dict(doc: SystemDocument) -> dict:
    out: dict = {"m": doc.m, "n": doc.n}
    if doc.eps is not None:
        out["epsilon"] = [list(p) for p in doc.eps.parts]
    if doc.lam is not None:
        out["lambda"] = [[list(z.to_pair()) for z in v] for v in doc.lam.vectors]
    if doc.basis is not None:
        out["basis"] = [list(f) for f in doc.basis]
    if doc.metadata:
        out["metadata"] = dict(doc.metadata)
    return out


def dumps(doc: SystemDocument) -> str:
    """Deterministic text: one top-level field per line, one part or vector per line."""
    lines = []
    for key, value in to_dict(doc).items():
        if isinstance(value, list) and value:
            inner = ",\n".join("  " + json.dumps(v) for v in value)
            lines.append(f" {json.dumps(key)}: [\n{inner}\n ]")
        else:
            lines.append(f" {json.dumps(key)}: {json.dumps(value, sort_keys=True)}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def loads(text: str) -> SystemDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_dict(data)


def load(path: Union[str, Path]) -> SystemDocument:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def save(doc: SystemDocument, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(doc))


def make(eps: Optional[FundamentalSet], lam: Optional[Configuration], basis=None, **metadata) -> SystemDocument:
    ref = eps if eps is not None else lam
    return SystemDocument(eps, lam, ref.m, ref.n, tuple(map(tuple, basis)) if basis else None, metadata)
