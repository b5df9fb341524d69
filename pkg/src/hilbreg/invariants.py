"""Hilbert depth, projective dimension and regularity of a nonnegative series.

Notation follows the usual convention: Q is the numerator, d the exponent of
(1-t) in the denominator, Qt = Q(1-t), a_n the coefficients of Q/(1-t)^d and
b_n^(k) those of Qt/(1-t)^k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import BudgetExceeded, InfiniteDelta, NotNonnegative, PreconditionError
from .polyseries import (
    HilbertSeries,
    IntPolynomial,
    canonicalize,
    expand,
    format_poly,
    is_nonnegative_series,
    shift_substitute,
)


@dataclass(frozen=True)
class InvariantReport:
    dim: int
    numerator: IntPolynomial
    hdepth: int
    hprojdim: int
    hreg: int
    delta_d_tilde: int
    deg_series: int
    width_k: Optional[int]

    @property
    def deg_numerator(self) -> Optional[int]:
        return self.numerator.degree

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "numerator": format_poly(self.numerator),
            "hdepth": self.hdepth,
            "hprojdim": self.hprojdim,
            "hreg": self.hreg,
            "delta_d_tilde": self.delta_d_tilde,
            "deg_series": self.deg_series,
            "width_k": self.width_k,
        }


def admit(h: HilbertSeries) -> HilbertSeries:
    """Canonicalize h and check it is a nonzero nonnegative series."""
    h = canonicalize(h)
    if h.numerator.is_zero:
        raise PreconditionError("the zero series has no invariants")
    if not is_nonnegative_series(h):
        raise NotNonnegative(f"{h} has a negative coefficient")
    return h


def _first_nonnegative_power(q: IntPolynomial, n: int) -> int:
    k = 0
    while any(x < 0 for x in expand(q, k, n).coeffs):
        k += 1
    return k


def delta_d(q: IntPolynomial, d: int) -> int:
    """Least k such that the first d coefficients of Q/(1-t)^k are nonnegative."""
    if d < 0:
        raise PreconditionError("d must be nonnegative")
    if d == 0 or q.is_zero:
        return 0
    low = q.low_order()
    if low < d and q[low] < 0:
        # the first nonzero coefficient never changes under division by (1-t)
        raise InfiniteDelta(f"lowest coefficient of {format_poly(q)} is negative")
    return _first_nonnegative_power(q, d)


def delta(q: IntPolynomial, budget: int) -> int:
    """Least k making Q/(1-t)^k nonnegative, searched only up to ``budget``."""
    for k in range(budget + 1):
        if is_nonnegative_series(canonicalize(HilbertSeries(q, k))):
            return k
    raise BudgetExceeded(f"no k <= {budget} makes {format_poly(q)}/(1-t)^k nonnegative")


def _e(h: HilbertSeries) -> int:
    return max(delta_d(shift_substitute(h.numerator), h.dim), h.numerator.degree + 1)


def hprojdim(h: HilbertSeries) -> int:
    h = admit(h)
    return _first_nonnegative_power(h.numerator, _e(h))


def hdepth(h: HilbertSeries) -> int:
    h = admit(h)
    return h.dim - hprojdim(h)


def deg_series(h: HilbertSeries) -> int:
    """Degree of Q/(1-t)^d as a rational function."""
    h = canonicalize(h)
    if h.numerator.is_zero:
        raise PreconditionError("degree of the zero series is undefined")
    return h.numerator.degree - h.dim


def _regularity(h: HilbertSeries) -> tuple[int, Optional[int]]:
    """Return (Hreg, k) where k is the minimal corner-free width, or None in the easy case."""
    q, d = h.numerator, h.dim
    deg = q.degree
    if d == 0:
        return deg, None
    qt = shift_substitute(q)
    dd = delta_d(qt, d)
    if deg <= d or dd >= deg:
        if deg == d and dd == 0 and qt[d] < 0:
            # the (0, 0) presentation is not an expansion here; its corner is qt[d]
            return 1, None
        return dd, None

    a = expand(q, d, deg + 1).coeffs
    b_last = {j: expand(qt, j, d).coeffs[d - 1] for j in range(dd, deg + 2)}
    if a[deg] != b_last[deg + 1]:
        raise AssertionError(f"a_deg != b_(d-1)^(deg+1) for {h}")
    k = deg
    while k > dd and a[k - 1] == b_last[k]:
        k -= 1
    if k > dd and a[k - 1] >= b_last[k]:
        return k - 1, k
    return k, k


def hreg(h: HilbertSeries) -> int:
    return _regularity(admit(h))[0]


def hreg_width_k(h: HilbertSeries) -> Optional[int]:
    """Width of the minimal nonnegative corner-free (0, k) presentation; None in case (i)."""
    return _regularity(admit(h))[1]


def reduce_to_linear(qt: IntPolynomial) -> tuple[int, int]:
    """Apply h_{m-1} <- min(h_{m-1}, h_{m-1} + h_m), dropping h_m, until degree <= 1."""
    h = list(qt.coeffs)
    while len(h) > 2:
        top = h.pop()
        h[-1] = min(h[-1], h[-1] + top)
    h += [0] * (2 - len(h))
    return h[0], h[1]


def loop_bound(qt: IntPolynomial, d: int) -> int:
    """Upper bound on delta_d(Qt) from the linear minorant q0 + r*t.

    For k >= 1 the coefficient of t^n in (q0 + r t)/(1-t)^k is a positive
    multiple of (q0 + r) n + (k - 1) q0, which must hold up to n = d - 1.
    """
    if qt[0] <= 0:
        raise PreconditionError("loop bound needs a positive constant term")
    q0, r = reduce_to_linear(qt)
    if q0 + r >= 0 or d <= 1:
        return 1
    return max(1, 1 + math.ceil(Fraction((1 - d) * (q0 + r), q0)))


def compute_invariants(h: HilbertSeries) -> InvariantReport:
    """Every invariant at once, plus the side data needed for reporting."""
    h = admit(h)
    q, d = h.numerator, h.dim
    dd = delta_d(shift_substitute(q), d)
    proj = _first_nonnegative_power(q, _e(h))
    reg, width = _regularity(h)
    return InvariantReport(
        dim=d,
        numerator=q,
        hdepth=d - proj,
        hprojdim=proj,
        hreg=reg,
        delta_d_tilde=dd,
        deg_series=q.degree - d,
        width_k=width,
    )
