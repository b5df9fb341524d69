"""Exact integer polynomials and truncated expansions of Q(t)/(1-t)^k.

Polynomials are stored as tuples of Python ints indexed by degree, with
trailing zeros stripped, so the zero polynomial is the empty tuple.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional, Sequence

from .errors import ParseError, PreconditionError


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Univariate polynomial over the integers, ``coeffs[i]`` is the coefficient of t^i."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(coeffs))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "IntPolynomial":
        return cls((0,) * exp + (coeff,))

    @property
    def degree(self) -> Optional[int]:
        """Degree, or None for the zero polynomial (below every integer)."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def low_order(self) -> Optional[int]:
        """Index of the lowest nonvanishing coefficient."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self), len(other))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(n)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def scale(self, factor: int) -> "IntPolynomial":
        return IntPolynomial(tuple(factor * c for c in self.coeffs))

    def shift(self, exp: int) -> "IntPolynomial":
        """Multiply by t^exp."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * exp + self.coeffs)

    def __str__(self):
        return format_poly(self)


@dataclass(frozen=True)
class HilbertSeries:
    """The rational function numerator / (1-t)^dim."""

    numerator: IntPolynomial
    dim: int

    def __post_init__(self):
        if not isinstance(self.numerator, IntPolynomial):
            object.__setattr__(self, "numerator", IntPolynomial(tuple(self.numerator)))
        if self.dim < 0:
            raise PreconditionError(f"dimension must be nonnegative, got {self.dim}")

    def __str__(self):
        return f"({self.numerator})/(1-t)^{self.dim}"


@dataclass(frozen=True)
class SeriesPrefix:
    """First ``len(coeffs)`` coefficients of some Q(t)/(1-t)^denom_exp."""

    denom_exp: int
    coeffs: tuple[int, ...]

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]


# --- parsing and printing ---------------------------------------------------

_TERM = re.compile(
    r"""
    (?P<coef>\d+)?\s*
    (?:(?P<star>\*)\s*)?
    (?P<var>t)?
    (?:\s*\^\s*(?P<exp>\d+))?
    """,
    re.VERBOSE,
)
_LIST_ITEM = re.compile(r"\s*([+-]?\d+)\s*")


def parse_poly(text: str) -> IntPolynomial:
    """Parse ``2-5t+t^2+4*t^3`` style text or an ascending list ``[2,-5,1,4]``."""
    text = text.replace("−", "-")
    stripped = text.strip()
    if stripped.startswith("["):
        return _parse_list(text)
    if not stripped:
        raise ParseError("empty polynomial", 0)

    terms: dict[int, int] = {}
    pos = 0
    n = len(text)
    first = True
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            if first:
                raise ParseError("empty polynomial", pos)
            break
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
            while pos < n and text[pos].isspace():
                pos += 1
        elif not first:
            raise ParseError(f"expected '+' or '-', found {text[pos]!r}", pos)
        start = pos
        m = _TERM.match(text, pos)
        coef, star, var, exp = m.group("coef", "star", "var", "exp")
        if coef is None and var is None:
            found = repr(text[pos]) if pos < n else "end of input"
            raise ParseError(f"expected a term, found {found}", pos)
        if star and var is None:
            raise ParseError("expected 't' after '*'", m.end())
        if exp is not None and var is None:
            raise ParseError("exponent without variable", start)
        c = int(coef) if coef is not None else 1
        e = 0 if var is None else (int(exp) if exp is not None else 1)
        terms[e] = terms.get(e, 0) + sign * c
        pos = m.end()
        first = False
    if not terms:
        return IntPolynomial()
    out = [0] * (max(terms) + 1)
    for e, c in terms.items():
        out[e] += c
    return IntPolynomial(tuple(out))


def _parse_list(text: str) -> IntPolynomial:
    open_at = text.index("[")
    close_at = text.rfind("]")
    if close_at < 0:
        raise ParseError("missing closing ']'", len(text))
    if text[close_at + 1:].strip():
        raise ParseError("trailing characters after ']'", close_at + 1)
    body_start = open_at + 1
    body = text[body_start:close_at]
    if not body.strip():
        return IntPolynomial()
    coeffs = []
    offset = body_start
    for chunk in body.split(","):
        m = _LIST_ITEM.fullmatch(chunk)
        if m is None:
            bad = next((i for i, ch in enumerate(chunk)
                        if not (ch.isspace() or ch.isdigit() or ch in "+-")), 0)
            raise ParseError(f"invalid coefficient {chunk.strip()!r}", offset + bad)
        coeffs.append(int(m.group(1)))
        offset += len(chunk) + 1
    return IntPolynomial(tuple(coeffs))


def format_poly(p: IntPolynomial) -> str:
    """Render as ``c*t^e`` terms in ascending degree; round-trips through parse_poly."""
    if p.is_zero:
        return "0"
    parts = []
    for e, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if e == 0:
            body = str(abs(c))
        elif e == 1:
            body = f"{abs(c)}*t"
        else:
            body = f"{abs(c)}*t^{e}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


# --- arithmetic --------------------------------------------------------------

def poly_arith(op: str, p: IntPolynomial, q) -> IntPolynomial:
    """Dispatch ``add``, ``sub``, ``mul`` or ``scale`` (q is an int for scale)."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"unknown operation {op!r}")


def one_minus_t_power(k: int) -> IntPolynomial:
    """(1-t)^k by the binomial theorem."""
    return IntPolynomial(tuple((-1) ** i * comb(k, i) for i in range(k + 1)))


def shift_substitute(q: IntPolynomial) -> IntPolynomial:
    """Return Q(1-t)."""
    out = [0] * len(q)
    for i, qi in enumerate(q.coeffs):
        if not qi:
            continue
        # qi * (1-t)^i
        for j in range(i + 1):
            out[j] += qi * comb(i, j) * (-1) ** j
    return IntPolynomial(tuple(out))


def divide_one_minus_t(q: IntPolynomial) -> IntPolynomial:
    """Exact quotient Q/(1-t); requires Q(1) == 0."""
    if q(1) != 0:
        raise PreconditionError("polynomial is not divisible by 1-t")
    out = []
    acc = 0
    for c in q.coeffs[:-1]:
        acc += c
        out.append(acc)
    return IntPolynomial(tuple(out))


def expand(q: IntPolynomial, k: int, n: int) -> SeriesPrefix:
    """First n coefficients of Q(t)/(1-t)^k.

    The coefficient of t^m in 1/(1-t)^k is C(m+k-1, k-1); these are built
    with the recurrence C(m+k-1, k-1) = C(m+k-2, k-1) * (m+k-1) / m.
    """
    if n < 0 or k < 0:
        raise PreconditionError("expand needs k >= 0 and N >= 0")
    if k == 0:
        binom = [1] + [0] * (n - 1) if n else []
    else:
        binom = [1] * n
        for m in range(1, n):
            binom[m] = binom[m - 1] * (m + k - 1) // m
    qc = q.coeffs
    out = []
    for m in range(n):
        top = min(m, len(qc) - 1)
        out.append(sum(qc[i] * binom[m - i] for i in range(top + 1)))
    return SeriesPrefix(k, tuple(out))


def canonicalize(h: HilbertSeries) -> HilbertSeries:
    """Cancel common (1-t) factors; the coefficient stream is unchanged."""
    q, d = h.numerator, h.dim
    if q.is_zero:
        return HilbertSeries(IntPolynomial(), 0)
    while d > 0 and q(1) == 0:
        q = divide_one_minus_t(q)
        d -= 1
    return HilbertSeries(q, d)


def is_nonnegative_series(h: HilbertSeries) -> bool:
    """Exact decision whether every coefficient of Q(t)/(1-t)^d is >= 0.

    Level j is the sequence Q/(1-t)^j. Past the point where level j-1 stays
    nonnegative, level j is nondecreasing, so once it reaches a nonnegative
    value it stays there. Walking up the levels this way pins down a finite
    prefix of level d that decides the question.
    """
    q, d = h.numerator, h.dim
    if q.is_zero:
        return True
    if d == 0:
        return all(c >= 0 for c in q.coeffs)
    if q(1) == 0:
        return is_nonnegative_series(canonicalize(h))
    if q(1) < 0:
        return False

    levels: list[list[int]] = [list(q.coeffs)]

    def value(j: int, m: int) -> int:
        lv = levels[j]
        while len(lv) <= m:
            i = len(lv)
            if j == 0:
                lv.append(0)
            else:
                lv.append((lv[i - 1] if i else 0) + value(j - 1, i))
        return lv[m]

    stable = len(q.coeffs)  # level 0 is zero (hence nonnegative) from here on
    for j in range(1, d + 1):
        levels.append([])
        m = max(stable - 1, 0)
        while value(j, m) < 0:
            m += 1
        stable = m
    return all(value(d, m) >= 0 for m in range(stable))


def series_coefficients(h: HilbertSeries, n: int) -> tuple[int, ...]:
    return expand(h.numerator, h.dim, n).coeffs


def as_poly(value) -> IntPolynomial:
    """Accept an IntPolynomial, a coefficient sequence or polynomial text."""
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, str):
        return parse_poly(value)
    if isinstance(value, Sequence):
        return IntPolynomial(tuple(value))
    raise TypeError(f"cannot interpret {value!r} as a polynomial")
