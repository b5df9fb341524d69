"""Extremal nonnegative presentations and positive representations."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .boundary import BoundaryPresentation, compute_presentation
from .errors import PreconditionError
from .invariants import admit, delta_d, hdepth, hreg
from .polyseries import HilbertSeries, IntPolynomial, canonicalize, one_minus_t_power, shift_substitute


@dataclass(frozen=True)
class PositiveRepresentation:
    """Multiset of terms a * t^j / (1-t)^i, stored as (i, j, a) sorted by (-i, j)."""

    terms: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        terms = tuple(sorted(((int(i), int(j), int(a)) for i, j, a in self.terms),
                             key=lambda t: (-t[0], t[1], t[2])))
        for i, j, a in terms:
            if i < 0 or j < 0 or a <= 0:
                raise PreconditionError(f"invalid term (i={i}, j={j}, a={a})")
        object.__setattr__(self, "terms", terms)

    def to_json(self) -> dict:
        return {"terms": [{"i": i, "j": j, "a": a} for i, j, a in self.terms]}

    @classmethod
    def from_json(cls, obj) -> "PositiveRepresentation":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(tuple((t["i"], t["j"], t["a"]) for t in obj["terms"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise PreconditionError(f"malformed representation: {exc}") from None

    def __str__(self):
        return format_terms(self.terms)


def format_terms(terms) -> str:
    """Render (i, j, a) triples as ``a*t^j/(1-t)^i`` joined by signs."""
    parts = []
    for i, j, a in terms:
        if a == 0:
            continue
        num = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
        mag = abs(a)
        if num:
            body = num if mag == 1 else f"{mag}*{num}"
        else:
            body = str(mag)
        if i == 1:
            body += "/(1-t)"
        elif i > 1:
            body += f"/(1-t)^{i}"
        sign = "-" if a < 0 else "+"
        parts.append(f"{sign} {body}" if parts or a < 0 else body)
    return " ".join(parts) if parts else "0"


def min_width_presentation(h: HilbertSeries) -> BoundaryPresentation:
    """The nonnegative (0, Hreg) presentation."""
    h = admit(h)
    return compute_presentation(h, 0, hreg(h))


def min_height_presentation(h: HilbertSeries) -> BoundaryPresentation:
    """The nonnegative corner-free (Hdepth, e) presentation, e = max(delta_d(Qt), deg Q + 1)."""
    h = admit(h)
    q = h.numerator
    e = max(delta_d(shift_substitute(q), h.dim), q.degree + 1)
    return compute_presentation(h, hdepth(h), e)


def to_positive_representation(p: BoundaryPresentation) -> PositiveRepresentation:
    if not p.is_nonnegative:
        raise PreconditionError("presentation has a negative coefficient")
    return PositiveRepresentation(tuple((i, j, a) for i, j, a in p.terms() if a > 0))


def verify_representation(rep: PositiveRepresentation, h: HilbertSeries) -> bool:
    """Exact check that sum a t^j/(1-t)^i equals h."""
    top = max([h.dim] + [i for i, _, _ in rep.terms])
    lhs = IntPolynomial()
    for i, j, a in rep.terms:
        lhs = lhs + one_minus_t_power(top - i).scale(a).shift(j)
    return canonicalize(HilbertSeries(lhs, top)) == canonicalize(h)
