"""Hilbert series inputs: monomial quotients, JSON-lines batches, the example corpus."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .errors import HilbertError, NotNonnegative, ParseError, PreconditionError, TooManyGenerators
from .polyseries import HilbertSeries, IntPolynomial, canonicalize, is_nonnegative_series, parse_poly

MAX_GENERATORS = 20

_FACTOR = re.compile(r"\s*x(\d+)\s*(?:\^\s*(\d+)\s*)?")


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: frozenset[tuple[int, ...]]

    def __post_init__(self):
        if self.nvars < 1:
            raise PreconditionError("need at least one variable")
        gens = frozenset(tuple(g) for g in self.gens)
        for g in gens:
            if len(g) != self.nvars or min(g, default=0) < 0:
                raise PreconditionError(f"bad exponent vector {g}")
        object.__setattr__(self, "gens", minimalize(gens))
        if len(self.gens) > MAX_GENERATORS:
            raise TooManyGenerators(f"{len(self.gens)} generators exceed the cap of {MAX_GENERATORS}")

    def contains(self, mono) -> bool:
        return any(divides(g, mono) for g in self.gens)


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(gens) -> frozenset:
    """Drop every generator that is a multiple of another one."""
    gens = set(gens)
    return frozenset(g for g in gens if not any(h != g and divides(h, g) for h in gens))


def parse_ideal(text: str, nvars: int) -> MonomialIdeal:
    """Parse ``x1^2, x1*x2, x2^2``; variables are x1..x<nvars>."""
    gens = []
    offset = 0
    for chunk in text.split(","):
        if not chunk.strip():
            if text.strip():
                raise ParseError("empty generator", offset)
            offset += len(chunk) + 1
            continue
        exps = [0] * nvars
        pos = 0
        for factor in chunk.split("*"):
            m = _FACTOR.fullmatch(factor)
            if m is None:
                raise ParseError(f"bad monomial factor {factor.strip()!r}", offset + pos)
            var = int(m.group(1))
            if not 1 <= var <= nvars:
                raise ParseError(f"variable x{var} out of range x1..x{nvars}", offset + pos)
            exps[var - 1] += int(m.group(2)) if m.group(2) else 1
            pos += len(factor) + 1
        gens.append(tuple(exps))
        offset += len(chunk) + 1
    return MonomialIdeal(nvars, frozenset(gens))


def inclusion_exclusion_numerator(ideal: MonomialIdeal) -> IntPolynomial:
    """sum over subsets S of gens of (-1)^|S| t^deg(lcm S), before any cancellation."""
    if len(ideal.gens) > MAX_GENERATORS:
        raise TooManyGenerators(f"{len(ideal.gens)} generators exceed the cap of {MAX_GENERATORS}")
    terms = {(0,) * ideal.nvars: 1}
    for g in sorted(ideal.gens):
        new = dict(terms)
        for v, c in terms.items():
            lcm = tuple(max(x, y) for x, y in zip(v, g))
            new[lcm] = new.get(lcm, 0) - c
        terms = {v: c for v, c in new.items() if c}
    coeffs: dict[int, int] = {}
    for v, c in terms.items():
        coeffs[sum(v)] = coeffs.get(sum(v), 0) + c
    top = max(coeffs, default=0)
    return IntPolynomial(tuple(coeffs.get(e, 0) for e in range(top + 1)))


def hilbert_numerator(ideal: MonomialIdeal) -> HilbertSeries:
    """Canonical Hilbert series of K[x1..xn]/I."""
    return canonicalize(HilbertSeries(inclusion_exclusion_numerator(ideal), ideal.nvars))


@dataclass(frozen=True)
class BatchLine:
    lineno: int
    series: Optional[HilbertSeries] = None
    error: Optional[str] = None
    error_type: Optional[str] = None
    record: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def parse_record(obj) -> HilbertSeries:
    """Turn a {"numerator": ..., "dim": ...} record into a validated canonical series."""
    if not isinstance(obj, dict) or "numerator" not in obj or "dim" not in obj:
        raise ParseError("record needs 'numerator' and 'dim'")
    num = obj["numerator"]
    if isinstance(num, str):
        q = parse_poly(num)
    elif isinstance(num, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in num):
        q = IntPolynomial(tuple(num))
    else:
        raise ParseError("numerator must be polynomial text or a list of integers")
    dim = obj["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise ParseError(f"dim must be a nonnegative integer, got {dim!r}")
    h = canonicalize(HilbertSeries(q, dim))
    if not is_nonnegative_series(h):
        raise NotNonnegative(f"{h} has a negative coefficient")
    return h


def parse_batch_lines(lines) -> list[BatchLine]:
    out = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            out.append(BatchLine(lineno, error=f"invalid JSON: {exc.msg}", error_type="ParseError"))
            continue
        try:
            out.append(BatchLine(lineno, series=parse_record(obj), record=obj))
        except HilbertError as exc:
            out.append(BatchLine(lineno, error=str(exc), error_type=type(exc).__name__, record=obj))
    return out


def read_batch(path) -> list[BatchLine]:
    """Read a JSON-lines file; bad lines are reported in place, good ones still parsed."""
    with open(path, encoding="utf-8") as fh:
        return parse_batch_lines(fh)


def fixture_path():
    return resources.files("hilbreg") / "fixtures" / "examples.jsonl"


def load_fixtures() -> list[dict]:
    text = fixture_path().read_text(encoding="utf-8")
    return [json.loads(line) for line in text.splitlines() if line.strip()]
