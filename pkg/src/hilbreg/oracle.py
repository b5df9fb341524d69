"""Slow reference implementations used to cross-check the invariants.

Nothing here touches the binomial-convolution path or the boundary module:
series are produced by repeated prefix sums and Q(1-t) by Horner's rule.
"""

from __future__ import annotations

from .errors import BudgetExceeded, InfiniteDelta, PreconditionError
from .polyseries import HilbertSeries, IntPolynomial, canonicalize, is_nonnegative_series


def prefix_series(coeffs, k: int, n: int) -> list[int]:
    """First n coefficients of (sum coeffs t^i)/(1-t)^k by k rounds of running sums."""
    seq = (list(coeffs) + [0] * n)[:n]
    for _ in range(k):
        acc = 0
        for i in range(n):
            acc += seq[i]
            seq[i] = acc
    return seq


def substitute_one_minus_t(q: IntPolynomial) -> list[int]:
    """Q(1-t) via Horner: ((q_m (1-t) + q_{m-1}) (1-t) + ...)."""
    acc: list[int] = []
    for c in reversed(q.coeffs):
        # acc <- acc * (1 - t) + c
        nxt = [0] * (len(acc) + 1)
        for i, x in enumerate(acc):
            nxt[i] += x
            nxt[i + 1] -= x
        nxt[0] += c
        acc = nxt
    while acc and acc[-1] == 0:
        acc.pop()
    return acc


def brute_delta(q: IntPolynomial, d: int) -> int:
    seq = (list(q.coeffs) + [0] * d)[:d]
    first = next((x for x in seq if x), 0)
    if first < 0:
        raise InfiniteDelta("lowest nonvanishing coefficient is negative")
    k = 0
    while any(x < 0 for x in seq):
        acc = 0
        for i in range(d):
            acc += seq[i]
            seq[i] = acc
        k += 1
    return k


def zero_k_candidate(h: HilbertSeries, k: int) -> tuple[list[int], int, list[int]]:
    """The (0, k) presentation coefficients solved directly from the two expansions."""
    q, d = h.numerator, h.dim
    a = prefix_series(q.coeffs, d, k + 1)
    b = prefix_series(substitute_one_minus_t(q), k, d + 1)
    f = a[:k]
    g = b[:d]
    return f, a[k] - sum(g), g


def brute_hreg(h: HilbertSeries, budget: int) -> int:
    """Least k whose (0, k) presentation has no negative coefficient."""
    h = canonicalize(h)
    q, d = h.numerator, h.dim
    if q.is_zero:
        raise PreconditionError("the zero series has no regularity")
    for k in range(max(0, q.degree - d), budget + 1):
        f, c, g = zero_k_candidate(h, k)
        if c >= 0 and min(f + g, default=0) >= 0:
            return k
    raise BudgetExceeded(f"no nonnegative (0,k) presentation with k <= {budget}")


def brute_hdepth(h: HilbertSeries) -> int:
    """Largest r <= d such that (1-t)^r H is still a nonnegative series."""
    h = canonicalize(h)
    q, d = h.numerator, h.dim
    one_minus_t = IntPolynomial((1, -1))
    best = 0
    p = q
    for r in range(d + 1):
        if is_nonnegative_series(canonicalize(HilbertSeries(p, d))):
            best = r
        p = p * one_minus_t
    return best


def default_budget(h: HilbertSeries) -> int:
    """max(deg Q, delta_d(Qt)) + 8, computed with the oracle's own arithmetic."""
    h = canonicalize(h)
    q = h.numerator
    qt = IntPolynomial(tuple(substitute_one_minus_t(q)))
    return max(q.degree or 0, brute_delta(qt, h.dim)) + 8
