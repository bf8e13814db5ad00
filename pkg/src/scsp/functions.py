"""Penalty functions over an ordered domain 1..M.

Three representations are used throughout the package:

* :class:`UnaryTable` and :class:`BinaryTable`, explicit tables of exact
  penalties;
* :class:`IntervalFunction`, the two-parameter step function

      f(x, y) = 0        if x < x_min or y > y_max,
               penalty   otherwise,

  which is the building block every submodular table decomposes into.
  Read on the diagonal (x = y) it charges exactly inside the interval
  [x_min, y_max], hence the ``gi`` (generalized interval) keyword in the
  file format.  x_min > y_max is legal and gives an empty diagonal.

The module also provides builders for the common penalty shapes used in
modelling: powers of differences, crisp relations, arithmetic comparisons,
and a few small named tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import (ApproximationBrokeSubmodularity, DomainError,
                     ParameterError)
from .evaluation import INF, ZERO, Evaluation, as_evaluation


@dataclass(frozen=True)
class IntervalFunction:
    """Charges ``penalty`` unless x < x_min or y > y_max."""

    x_min: int
    y_max: int
    penalty: Evaluation

    def __post_init__(self):
        if not (isinstance(self.x_min, int) and isinstance(self.y_max, int)):
            raise ParameterError("interval bounds must be integers")
        if self.x_min < 1 or self.y_max < 1:
            raise ParameterError("interval bounds must be at least 1")
        object.__setattr__(self, "penalty", as_evaluation(self.penalty))

    def value_at(self, x: int, y: int, m: int | None = None) -> Evaluation:
        if x < 1 or y < 1 or (m is not None and (x > m or y > m)):
            raise DomainError(f"arguments ({x}, {y}) outside the domain")
        if x < self.x_min or y > self.y_max:
            return ZERO
        return self.penalty


class UnaryTable:
    """Explicit penalty table for one variable; entry d is the cost of d."""

    __slots__ = ("values",)

    def __init__(self, values):
        vals = tuple(as_evaluation(v) for v in values)
        if not vals:
            raise ParameterError("unary table needs at least one entry")
        object.__setattr__(self, "values", vals)

    @property
    def m(self) -> int:
        return len(self.values)

    def value_at(self, d: int) -> Evaluation:
        if not 1 <= d <= self.m:
            raise DomainError(f"value {d} outside 1..{self.m}")
        return self.values[d - 1]

    @classmethod
    def from_function(cls, m, fn):
        return cls([fn(d) for d in range(1, m + 1)])

    def __add__(self, other):
        if not isinstance(other, UnaryTable) or other.m != self.m:
            return NotImplemented
        return UnaryTable([a + b for a, b in zip(self.values, other.values)])

    def __eq__(self, other):
        return isinstance(other, UnaryTable) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"UnaryTable([{', '.join(str(v) for v in self.values)}])"


class BinaryTable:
    """Explicit penalty table for a pair of variables, M rows by M columns.

    Row index is the first argument, column index the second, both 1-based
    through :meth:`value_at`.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        grid = tuple(tuple(as_evaluation(v) for v in row) for row in rows)
        if not grid:
            raise ParameterError("binary table needs at least one row")
        m = len(grid)
        if any(len(row) != m for row in grid):
            raise ParameterError("binary table must be square")
        object.__setattr__(self, "rows", grid)

    @property
    def m(self) -> int:
        return len(self.rows)

    def value_at(self, x: int, y: int) -> Evaluation:
        if not (1 <= x <= self.m and 1 <= y <= self.m):
            raise DomainError(f"arguments ({x}, {y}) outside 1..{self.m}")
        return self.rows[x - 1][y - 1]

    @classmethod
    def from_function(cls, m, fn):
        return cls([[fn(x, y) for y in range(1, m + 1)]
                    for x in range(1, m + 1)])

    def __add__(self, other):
        if not isinstance(other, BinaryTable) or other.m != self.m:
            return NotImplemented
        return BinaryTable([[a + b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.rows, other.rows)])

    def __eq__(self, other):
        return isinstance(other, BinaryTable) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = " / ".join(" ".join(str(v) for v in row) for row in self.rows)
        return f"BinaryTable({body})"


def _check_m(m):
    if not isinstance(m, int) or m < 1:
        raise ParameterError(f"domain size must be a positive integer, got {m}")


def _check_power(r):
    if not isinstance(r, int) or r < 1:
        raise ParameterError(f"exponent must be an integer >= 1, got {r}")


def _positive_fraction(name, value, allow_zero=False):
    f = Fraction(value)
    if f < 0 or (f == 0 and not allow_zero):
        raise ParameterError(f"{name} must be {'non-negative' if allow_zero else 'positive'}")
    return f


def abs_diff(m: int, r: int = 1) -> BinaryTable:
    """|x - y| ** r; prefers the two values as close as possible."""
    _check_m(m)
    _check_power(r)
    return BinaryTable.from_function(m, lambda x, y: abs(x - y) ** r)


def excess(m: int, r: int = 1) -> BinaryTable:
    """max(x - y, 0) ** r; charges only for x exceeding y."""
    _check_m(m)
    _check_power(r)
    return BinaryTable.from_function(m, lambda x, y: max(x - y, 0) ** r)


def delay(m: int, r: int = 1) -> BinaryTable:
    """(x - y) ** r for x >= y, infinite otherwise.

    Models "x happens at or after y, as soon as possible".
    """
    _check_m(m)
    _check_power(r)
    return BinaryTable.from_function(
        m, lambda x, y: (x - y) ** r if x >= y else INF)


def linear(m: int, a, b, c) -> BinaryTable:
    """a*x + b*y + c with non-negative rational coefficients."""
    _check_m(m)
    fa = _positive_fraction("a", a, allow_zero=True)
    fb = _positive_fraction("b", b, allow_zero=True)
    fc = _positive_fraction("c", c, allow_zero=True)
    return BinaryTable.from_function(m, lambda x, y: fa * x + fb * y + fc)


def product_complement(m: int) -> BinaryTable:
    """m**2 - x*y; prefers both coordinates large.

    Submodular, yet its decomposition needs on the order of m**2 interval
    terms, which makes it the stock example of a dense table.
    """
    _check_m(m)
    return BinaryTable.from_function(m, lambda x, y: m * m - x * y)


def euclidean_rounded(m: int, denom: int = 1) -> BinaryTable:
    """sqrt(x**2 + y**2) rounded to the nearest multiple of 1/denom.

    The exact value is irrational for most cells, so the table stores the
    closest rational with the requested denominator (ties round up).  The
    rounded table is re-checked for submodularity; if rounding destroyed
    it, ApproximationBrokeSubmodularity is raised.
    """
    _check_m(m)
    if not isinstance(denom, int) or denom < 1:
        raise ParameterError(f"denominator must be a positive integer, got {denom}")

    def cell(x, y):
        # nearest n to denom*sqrt(x^2+y^2): compare 4*t with (2*floor+1)^2
        t = denom * denom * (x * x + y * y)
        f = isqrt(t)
        n = f if 4 * t < (2 * f + 1) ** 2 else f + 1
        return Fraction(n, denom)

    table = BinaryTable.from_function(m, cell)
    from .submodular import find_violation
    witness = find_violation(table)
    if witness is not None:
        raise ApproximationBrokeSubmodularity(
            f"rounding to 1/{denom} broke submodularity at {witness}")
    return table


def crisp_relation(m: int, arity: int, allowed) -> UnaryTable | BinaryTable:
    """Zero on the allowed tuples, infinite elsewhere."""
    _check_m(m)
    if arity not in (1, 2):
        raise ParameterError(f"arity must be 1 or 2, got {arity}")
    tuples = set()
    for item in allowed:
        tup = (item,) if isinstance(item, int) else tuple(item)
        if len(tup) != arity:
            raise ParameterError(f"tuple {tup} does not have arity {arity}")
        if any(not isinstance(d, int) or not 1 <= d <= m for d in tup):
            raise DomainError(f"tuple {tup} outside the domain 1..{m}")
        tuples.add(tup)
    if arity == 1:
        return UnaryTable.from_function(
            m, lambda d: ZERO if (d,) in tuples else INF)
    return BinaryTable.from_function(
        m, lambda x, y: ZERO if (x, y) in tuples else INF)


ARITH_KINDS = ("neq_const", "eq", "leq", "geq")


def arith_relation(m: int, kind: str, a, b=0, c=0) -> UnaryTable | BinaryTable:
    """Crisp arithmetic comparisons with rational coefficients.

    kind "neq_const" is unary, allowing a*x != b; the binary kinds allow
    a*x == b*y + c, a*x <= b*y + c, and a*x >= b*y + c respectively.
    Requires a > 0 and b, c >= 0.
    """
    _check_m(m)
    if kind not in ARITH_KINDS:
        raise ParameterError(f"kind must be one of {ARITH_KINDS}, got {kind!r}")
    fa = _positive_fraction("a", a)
    fb = _positive_fraction("b", b, allow_zero=True)
    fc = _positive_fraction("c", c, allow_zero=True)
    if kind == "neq_const":
        return UnaryTable.from_function(
            m, lambda x: ZERO if fa * x != fb else INF)
    test = {"eq": lambda l, r: l == r,
            "leq": lambda l, r: l <= r,
            "geq": lambda l, r: l >= r}[kind]
    return BinaryTable.from_function(
        m, lambda x, y: ZERO if test(fa * x, fb * y + fc) else INF)


def xor_penalty() -> BinaryTable:
    """On domain {1, 2}: free when x != y, one unit when x == y.

    The smallest non-submodular table; its witness quadruple is
    (1, 1, 2, 2).
    """
    return BinaryTable([[1, 0], [0, 1]])


def equality_penalty(m: int) -> BinaryTable:
    """One unit unless x == y.  Not submodular for m >= 3."""
    _check_m(m)
    return BinaryTable.from_function(m, lambda x, y: 0 if x == y else 1)


def centered_square(m: int, i: int) -> UnaryTable:
    """(x - i/2) ** 2; draws the variable toward i/2."""
    _check_m(m)
    if not isinstance(i, int) or i < 0:
        raise ParameterError(f"center parameter must be a non-negative integer, got {i}")
    half = Fraction(i, 2)
    return UnaryTable.from_function(m, lambda x: (x - half) ** 2)
