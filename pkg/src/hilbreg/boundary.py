"""(n, k)-boundary presentations and the moves between them.

A presentation of H = Q/(1-t)^d writes

    H = sum_{i<k} f_i t^i/(1-t)^n + c t^k/(1-t)^n + sum_{j<d-n} g_j t^k/(1-t)^(d-j)

so in the (shift, denominator-exponent) grid the coefficients sit on the
bottom row n and the right column k of a rectangle, with c in the corner.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import accumulate

from .errors import InvalidMove, NoPresentation, PreconditionError
from .polyseries import (
    HilbertSeries,
    IntPolynomial,
    canonicalize,
    expand,
    one_minus_t_power,
    shift_substitute,
)


@dataclass(frozen=True)
class BoundaryPresentation:
    d: int
    n: int
    k: int
    f: tuple[int, ...]
    c: int
    g: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(int(x) for x in self.f))
        object.__setattr__(self, "g", tuple(int(x) for x in self.g))
        if not (0 <= self.n <= self.d) or self.k < 0:
            raise PreconditionError(f"need 0 <= n <= d and k >= 0, got d={self.d}, n={self.n}, k={self.k}")
        if len(self.f) != self.k:
            raise PreconditionError(f"f must have k={self.k} entries, got {len(self.f)}")
        if len(self.g) != self.d - self.n:
            raise PreconditionError(f"g must have d-n={self.d - self.n} entries, got {len(self.g)}")

    @property
    def is_corner_free(self) -> bool:
        return self.c == 0

    @property
    def is_nonnegative(self) -> bool:
        return self.c >= 0 and all(x >= 0 for x in self.f) and all(x >= 0 for x in self.g)

    def terms(self):
        """Yield (denominator exponent i, shift j, coefficient) for every cell on the boundary."""
        for i, fi in enumerate(self.f):
            yield self.n, i, fi
        yield self.n, self.k, self.c
        for j, gj in enumerate(self.g):
            yield self.d - j, self.k, gj

    def to_json(self) -> dict:
        return {"d": self.d, "n": self.n, "k": self.k, "f": list(self.f), "c": self.c, "g": list(self.g)}

    @classmethod
    def from_json(cls, obj) -> "BoundaryPresentation":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(int(obj["d"]), int(obj["n"]), int(obj["k"]),
                       tuple(obj["f"]), int(obj["c"]), tuple(obj["g"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise PreconditionError(f"malformed presentation: {exc}") from None


def compute_presentation(h: HilbertSeries, n: int, k: int) -> BoundaryPresentation:
    """The unique (n, k)-boundary presentation of h.

    f and g are read off the expansions of Q/(1-t)^(d-n) and Q(1-t)/(1-t)^k;
    the corner has two expressions that must agree, and the result is checked
    by reconstruction before being returned.
    """
    q, d = h.numerator, h.dim
    if not 0 <= n <= d or k < 0:
        raise PreconditionError(f"need 0 <= n <= d={d} and k >= 0, got n={n}, k={k}")
    m = d - n
    a = expand(q, m, k + 1).coeffs
    b = expand(shift_substitute(q), k, m + 1).coeffs
    f = a[:k]
    g = b[:m]
    c = a[k] - sum(g)
    if c != b[m] - sum(f):
        raise NoPresentation(f"no ({n},{k})-boundary presentation of {h}: corner formulas disagree")
    p = BoundaryPresentation(d, n, k, f, c, g)
    if reconstruct(p) != canonicalize(h):
        raise NoPresentation(f"no ({n},{k})-boundary presentation of {h}")
    return p


def reconstruct(p: BoundaryPresentation) -> HilbertSeries:
    """Sum the presentation over the common denominator (1-t)^d."""
    row = IntPolynomial(p.f + (p.c,)) * one_minus_t_power(p.d - p.n)
    col = IntPolynomial()
    for j, gj in enumerate(p.g):
        if gj:
            col = col + one_minus_t_power(j).scale(gj)
    return canonicalize(HilbertSeries(row + col.shift(p.k), p.d))


def expand_right(p: BoundaryPresentation) -> BoundaryPresentation:
    """(n, k) -> corner-free (n, k+1)."""
    g = tuple(accumulate(p.g)) if p.g else ()
    return BoundaryPresentation(p.d, p.n, p.k + 1, p.f + (p.c + sum(p.g),), 0, g)


def expand_down(p: BoundaryPresentation) -> BoundaryPresentation:
    """(n, k) -> corner-free (n-1, k)."""
    if p.n == 0:
        raise InvalidMove("cannot expand down from row 0")
    f = tuple(accumulate(p.f)) if p.f else ()
    return BoundaryPresentation(p.d, p.n - 1, p.k, f, 0, p.g + (p.c + sum(p.f),))


def reduce_left(p: BoundaryPresentation) -> BoundaryPresentation:
    """Corner-free (n, k) -> (n, k-1); inverse of expand_right."""
    if p.c != 0:
        raise InvalidMove("presentation has a nonzero corner; it is not an expansion")
    if p.k == 0:
        raise InvalidMove("cannot reduce width below 0")
    last_g = p.g[-1] if p.g else 0
    g = tuple(p.g[j] - (p.g[j - 1] if j else 0) for j in range(len(p.g)))
    return BoundaryPresentation(p.d, p.n, p.k - 1, p.f[:-1], p.f[-1] - last_g, g)


def reduce_up(p: BoundaryPresentation) -> BoundaryPresentation:
    """Corner-free (n, k) -> (n+1, k); inverse of expand_down."""
    if p.c != 0:
        raise InvalidMove("presentation has a nonzero corner; it is not an expansion")
    if p.n == p.d:
        raise InvalidMove("cannot reduce height above row d")
    last_f = p.f[-1] if p.f else 0
    f = tuple(p.f[i] - (p.f[i - 1] if i else 0) for i in range(len(p.f)))
    return BoundaryPresentation(p.d, p.n + 1, p.k, f, p.g[-1] - last_f, p.g[:-1])


def can_reduce_width(p: BoundaryPresentation) -> bool:
    """For a nonnegative presentation: does a nonnegative one of width k-1 exist?"""
    if not p.is_nonnegative:
        raise PreconditionError("can_reduce_width needs a nonnegative presentation")
    if p.k == 0 or p.c != 0:
        return False
    last_g = p.g[-1] if p.g else 0
    if p.f[-1] < last_g:
        return False
    return all(p.g[j + 1] >= p.g[j] for j in range(len(p.g) - 1))


def render_grid(p: BoundaryPresentation) -> str:
    """ASCII grid: rows are denominator exponents d..0, columns are shifts 0..k."""
    cells: dict[tuple[int, int], int] = {}
    for i, j, a in p.terms():
        cells[(i, j)] = a
    width = max([len(str(v)) for v in cells.values()] + [len(str(p.k)), 1])
    label = len(str(p.d))
    sep = " " * (label + 1) + "+" + "+".join("-" * (width + 2) for _ in range(p.k + 1)) + "+"
    lines = [sep]
    for row in range(p.d, -1, -1):
        body = "|".join(
            f" {str(cells[(row, col)]) if (row, col) in cells else '':>{width}} "
            for col in range(p.k + 1)
        )
        lines.append(f"{row:>{label}} |{body}|")
        lines.append(sep)
    lines.append(" " * (label + 1) + " " + " ".join(f" {col:>{width}} " for col in range(p.k + 1)))
    return "\n".join(line.rstrip() for line in lines)
