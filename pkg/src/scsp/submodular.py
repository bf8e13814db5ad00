"""Submodularity checks and decomposition of tables into interval terms.

A binary table t is submodular when

    t(u, v) + t(x, y) <= t(u, y) + t(x, v)   for all u < x, v < y,

with the convention that inf > inf is false.  Every submodular table is a
pointwise sum of interval functions, each applied to one of four argument
patterns:

    "xy"  term(x, y)      "yx"  term(y, x)
    "xx"  term(x, x)      "yy"  term(y, y)

:func:`decompose_binary` computes such a sum with at most 2*M*(M+1) terms;
:func:`reconstruct` adds a term list back up.  The decomposition runs in
three stages:

1. strip *inconsistent* rows and columns (all entries infinite): each
   yields an infinite diagonal term, and the line is overwritten with an
   adjacent consistent one so the remainder stays submodular;
2. strip *penalized* rows and columns (all entries positive): each yields
   a diagonal term carrying the line minimum;
3. two peeling passes, by rows then by columns, each repeatedly locating
   the zero entry closest to the end of the current line and emitting the
   rectangle term that cancels the residual just after it.

Stage 3 keeps, per pass, a running array of finite amounts already peeled
from each position, so a line is only rewritten once, when it is finished.
Infinite terms cannot use that bookkeeping (nothing cancels an infinity),
but whenever an infinite residual is emitted the whole rectangle it covers
is infinite, so the term is instead cancelled by zeroing the single cell
that triggered it.  After both passes the residual must be identically
zero; anything else raises DecompositionError.

Internally a table cell is a plain Fraction, or None for infinity; the
inner loops run hot enough under decomposition-heavy workloads that the
arithmetic is done on raw values and wrapped into Evaluations only at the
boundaries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import (DecompositionError, DomainError, NotSubmodular,
                     ParameterError, PreconditionViolated, TooLarge)
from .evaluation import INF, ZERO, Evaluation, as_evaluation
from .functions import BinaryTable, IntervalFunction, UnaryTable

PATTERNS = ("xy", "yx", "xx", "yy")

_F0 = Fraction(0)


class SubmodularityWitness(NamedTuple):
    """A quadruple u < x, v < y with t(u,v) + t(x,y) > t(u,y) + t(x,v)."""

    u: int
    v: int
    x: int
    y: int


def _raw_grid(table: BinaryTable):
    # Fraction cells, None for infinity.
    return [[v._value for v in row] for row in table.rows]


def _table_from_raw(grid) -> BinaryTable:
    return BinaryTable([[Evaluation._make(v) for v in row] for row in grid])


def find_violation(table: BinaryTable) -> SubmodularityWitness | None:
    """A violating quadruple in O(M^2), or None.

    For finite tables, checking adjacent quadruples suffices (summing
    adjacent inequalities telescopes to the general one) and the witness
    returned is the lexicographically first adjacent violation.  Infinite
    entries break the telescoping, since an infinite middle term cannot be
    cancelled, so two more ingredients make the scan exact:

    * all-infinite rows and columns never participate in a violation (they
      put infinity on the greater side of the inequality), so adjacency is
      taken over the remaining lines;
    * an infinite cell with finite cells both somewhere right in its row
      and somewhere below in its column is itself a violation (the greater
      side is finite there), and likewise left-and-above.  Absent such
      cells, any quadruple of finite corners spans an entirely finite
      rectangle, and telescoping applies again.

    The scan order is fixed, so the witness is deterministic.
    """
    m = table.m
    raw = _raw_grid(table)
    row_first = [-1] * m
    row_last = [-1] * m
    col_first = [-1] * m
    col_last = [-1] * m
    for i in range(m):
        for j in range(m):
            if raw[i][j] is not None:
                if row_first[i] < 0:
                    row_first[i] = j
                row_last[i] = j
                if col_first[j] < 0:
                    col_first[j] = i
                col_last[j] = i
    rows = [i for i in range(m) if row_first[i] >= 0]
    cols = [j for j in range(m) if col_first[j] >= 0]
    for i in rows:
        line = raw[i]
        for j in cols:
            if line[j] is not None:
                continue
            if row_last[i] > j and col_last[j] > i:
                return SubmodularityWitness(i + 1, j + 1,
                                            col_last[j] + 1, row_last[i] + 1)
            if row_first[i] < j and col_first[j] < i:
                return SubmodularityWitness(col_first[j] + 1, row_first[i] + 1,
                                            i + 1, j + 1)
    for k in range(len(rows) - 1):
        upper, lower = raw[rows[k]], raw[rows[k + 1]]
        for l in range(len(cols) - 1):
            v, y = cols[l], cols[l + 1]
            c, d = upper[y], lower[v]
            if c is None or d is None:
                continue  # greater side infinite; nothing exceeds it
            a, b = upper[v], lower[y]
            if a is None or b is None or a + b > c + d:
                return SubmodularityWitness(rows[k] + 1, v + 1,
                                            rows[k + 1] + 1, y + 1)
    return None


def find_violation_full(table: BinaryTable) -> SubmodularityWitness | None:
    """Reference check over every quadruple, lexicographic in (u, v, x, y)."""
    m = table.m
    raw = _raw_grid(table)
    for u in range(1, m + 1):
        for v in range(1, m + 1):
            for x in range(u + 1, m + 1):
                for y in range(v + 1, m + 1):
                    c, d = raw[u - 1][y - 1], raw[x - 1][v - 1]
                    if c is None or d is None:
                        continue
                    a, b = raw[u - 1][v - 1], raw[x - 1][y - 1]
                    if a is None or b is None or a + b > c + d:
                        return SubmodularityWitness(u, v, x, y)
    return None


def is_submodular(table: BinaryTable) -> bool:
    return find_violation(table) is None


def find_kary_violation(values, m: int, k: int):
    """Submodularity over k-tuples: f(min) + f(max) <= f(a) + f(b).

    ``values`` maps every k-tuple over 1..m to an evaluation.  Returns the
    lexicographically first violating pair of tuples, or None.  Meant for
    small tables; enumeration is guarded by m**k <= 10**6.
    """
    if k not in (1, 2, 3):
        raise ParameterError(f"k must be 1, 2, or 3, got {k}")
    if not isinstance(m, int) or m < 1:
        raise ParameterError(f"domain size must be a positive integer, got {m}")
    if m ** k > 10 ** 6:
        raise TooLarge(f"{m}**{k} tuples exceed the enumeration guard")
    tuples = list(itertools.product(range(1, m + 1), repeat=k))
    table = {}
    for t in tuples:
        if t not in values:
            raise ParameterError(f"missing table entry for {t}")
        table[t] = as_evaluation(values[t])
    for a in tuples:
        fa = table[a]
        for b in tuples:
            lo = tuple(map(min, a, b))
            if lo == a or lo == b:
                continue  # comparable tuples satisfy the inequality trivially
            hi = tuple(map(max, a, b))
            if table[lo] + table[hi] > fa + table[b]:
                return (a, b)
    return None


def tightness(table: UnaryTable | BinaryTable) -> int:
    """Number of non-zero entries (infinite entries count)."""
    if isinstance(table, UnaryTable):
        return sum(1 for v in table.values if v != ZERO)
    return sum(1 for row in table.rows for v in row if v != ZERO)


@dataclass(frozen=True)
class IntervalTerm:
    """One summand of a decomposition: an interval function plus the
    argument pattern it is applied to."""

    interval: IntervalFunction
    pattern: str

    def __post_init__(self):
        if self.pattern not in PATTERNS:
            raise ParameterError(f"pattern must be one of {PATTERNS}")


@dataclass(frozen=True)
class Decomposition:
    terms: tuple[IntervalTerm, ...]
    m: int


def term_table(term: IntervalTerm, m: int) -> BinaryTable:
    """Tabulate a single term as a function of (x, y)."""
    return reconstruct([term], m)


def reconstruct(terms, m: int) -> BinaryTable:
    """Pointwise sum of the terms, tabulated over (x, y) in 1..m squared."""
    grid = [[ZERO] * m for _ in range(m)]
    for term in terms:
        f = term.interval
        if f.x_min > m or f.y_max > m:
            raise DomainError(
                f"interval bounds ({f.x_min}, {f.y_max}) exceed domain size {m}")
        p = f.penalty
        if term.pattern == "xy":      # charges x >= x_min, y <= y_max
            rows, cols = range(f.x_min - 1, m), range(0, f.y_max)
        elif term.pattern == "yx":    # charges y >= x_min, x <= y_max
            rows, cols = range(0, f.y_max), range(f.x_min - 1, m)
        elif term.pattern == "xx":    # charges x in [x_min, y_max]
            rows, cols = range(f.x_min - 1, f.y_max), range(0, m)
        else:                         # "yy": charges y in [x_min, y_max]
            rows, cols = range(0, m), range(f.x_min - 1, f.y_max)
        for i in rows:
            row = grid[i]
            for j in cols:
                row[j] = row[j] + p
    return BinaryTable(grid)


def decompose_unary(table: UnaryTable) -> tuple[IntervalTerm, ...]:
    """A unary table is a sum of point terms, one per non-zero entry."""
    return tuple(IntervalTerm(IntervalFunction(d, d, v), "xx")
                 for d, v in enumerate(table.values, 1) if v != ZERO)


def decompose_binary(table: BinaryTable, trace=None) -> Decomposition:
    """Write a submodular table as a sum of interval terms.

    Raises NotSubmodular (with a witness) otherwise.  When ``trace`` is a
    list, the residual table after each emitted term is appended to it;
    this exists so tests can observe that intermediate residuals stay
    submodular.
    """
    witness = find_violation(table)
    if witness is not None:
        raise NotSubmodular(witness)
    m = table.m
    grid = _raw_grid(table)
    terms: list[IntervalTerm] = []
    _strip_inconsistent(grid, m, terms, trace)
    _strip_penalized(grid, m, terms, trace)
    _peel(grid, m, False, terms, trace)
    _peel(grid, m, True, terms, trace)
    for row in grid:
        for v in row:
            if v != 0:
                raise DecompositionError("nonzero residual after peeling")
    return Decomposition(tuple(terms), m)


def strip_inconsistent(table: BinaryTable):
    """Remove all-infinite rows and columns.

    Returns (terms, residual) with table == sum(terms) + residual and the
    residual free of inconsistent lines.  Input must be submodular.
    """
    witness = find_violation(table)
    if witness is not None:
        raise NotSubmodular(witness)
    grid = _raw_grid(table)
    terms: list[IntervalTerm] = []
    _strip_inconsistent(grid, table.m, terms, None)
    return tuple(terms), _table_from_raw(grid)


def strip_penalized(table: BinaryTable):
    """Remove all-positive rows and columns by subtracting line minima.

    Returns (terms, residual); the residual has a zero in every row and
    column.  Input must be submodular and free of inconsistent lines.
    """
    witness = find_violation(table)
    if witness is not None:
        raise NotSubmodular(witness)
    grid = _raw_grid(table)
    terms: list[IntervalTerm] = []
    _strip_penalized(grid, table.m, terms, None)
    return tuple(terms), _table_from_raw(grid)


def _snapshot(grid):
    return tuple(tuple(Evaluation._make(v) for v in row) for row in grid)


def _strip_inconsistent(grid, m, terms, trace):
    def row_inf(i):
        return all(v is None for v in grid[i])

    def col_inf(j):
        return all(grid[i][j] is None for i in range(m))

    while True:
        bad = [i for i in range(m) if row_inf(i)]
        if not bad:
            break
        if len(bad) == m:
            # The whole table is infinite; one blanket term covers it.
            terms.append(IntervalTerm(IntervalFunction(1, m, INF), "xy"))
            for i in range(m):
                grid[i] = [_F0] * m
            if trace is not None:
                trace.append(_snapshot(grid))
            return
        progressed = False
        for a in bad:
            b = a - 1 if a > 0 and not row_inf(a - 1) else a + 1
            if b >= m or row_inf(b):
                continue  # interior of a block; a later sweep reaches it
            terms.append(IntervalTerm(IntervalFunction(a + 1, a + 1, INF), "xx"))
            grid[a] = list(grid[b])
            if trace is not None:
                trace.append(_snapshot(grid))
            progressed = True
            break
        if not progressed:
            raise DecompositionError("no consistent row to copy from")
    while True:
        bad = [j for j in range(m) if col_inf(j)]
        if not bad:
            break
        progressed = False
        for a in bad:
            b = a - 1 if a > 0 and not col_inf(a - 1) else a + 1
            if b >= m or col_inf(b):
                continue
            terms.append(IntervalTerm(IntervalFunction(a + 1, a + 1, INF), "yy"))
            for i in range(m):
                grid[i][a] = grid[i][b]
            if trace is not None:
                trace.append(_snapshot(grid))
            progressed = True
            break
        if not progressed:
            raise DecompositionError("no consistent column to copy from")


def _strip_penalized(grid, m, terms, trace):
    while True:
        changed = False
        for i in range(m):
            row = grid[i]
            mu = _F0 if 0 in row else min((v for v in row if v is not None),
                                          default=None)
            if mu is None:
                raise DecompositionError("inconsistent row while stripping minima")
            if mu != 0:
                terms.append(IntervalTerm(
                    IntervalFunction(i + 1, i + 1, Evaluation._make(mu)), "xx"))
                grid[i] = [None if v is None else v - mu for v in row]
                changed = True
                if trace is not None:
                    trace.append(_snapshot(grid))
        for j in range(m):
            column = [grid[i][j] for i in range(m)]
            mu = _F0 if 0 in column else min((v for v in column if v is not None),
                                             default=None)
            if mu is None:
                raise DecompositionError("inconsistent column while stripping minima")
            if mu != 0:
                terms.append(IntervalTerm(
                    IntervalFunction(j + 1, j + 1, Evaluation._make(mu)), "yy"))
                for i in range(m):
                    if grid[i][j] is not None:
                        grid[i][j] -= mu
                changed = True
                if trace is not None:
                    trace.append(_snapshot(grid))
        if not changed:
            return


def _peel(grid, m, by_columns, terms, trace):
    """One peeling pass over rows (pattern "yx") or columns ("xy").

    A term emitted at (line, pos+1) covers every line not yet finalized,
    so the amounts peeled so far are kept in ``taken`` and only applied to
    a line's stored entries once, when the line is done.
    """
    if by_columns:
        def get(line, pos):
            return grid[pos - 1][line - 1]

        def put(line, pos, value):
            grid[pos - 1][line - 1] = value

        pattern = "xy"
    else:
        def get(line, pos):
            return grid[line - 1][pos - 1]

        def put(line, pos, value):
            grid[line - 1][pos - 1] = value

        pattern = "yx"

    taken = [_F0] * (m + 1)  # taken[p]: finite amount pending at position p
    for line in range(m, 0, -1):
        while True:
            end = get(line, m)
            if end is not None and end == taken[m]:
                break  # residual at the end of the line is zero
            pos = m
            while pos >= 1:
                v = get(line, pos)
                if v is not None and v == taken[pos]:
                    break
                pos -= 1
            if pos < 1:
                raise DecompositionError("no zero anchor while peeling")
            anchor = get(line, pos + 1)
            if anchor is None:
                terms.append(IntervalTerm(
                    IntervalFunction(pos + 1, line, INF), pattern))
                # No finite bookkeeping can cancel an infinite term; it is
                # sound to cancel it at its anchor cell alone because the
                # whole rectangle it covers is infinite.
                if __debug__:
                    for l2 in range(1, line + 1):
                        for p2 in range(pos + 1, m + 1):
                            assert get(l2, p2) is None, \
                                "finite cell under an infinite term"
                put(line, pos + 1, taken[pos + 1])
            else:
                delta = anchor - taken[pos + 1]
                if delta < 0:
                    raise PreconditionViolated(
                        "peeled more than a cell holds; input cannot have "
                        "been submodular")
                terms.append(IntervalTerm(
                    IntervalFunction(pos + 1, line, Evaluation._make(delta)),
                    pattern))
                for p2 in range(pos + 1, m + 1):
                    taken[p2] = taken[p2] + delta
            if trace is not None:
                trace.append(_peel_snapshot(grid, m, by_columns, line, taken))
        for p2 in range(1, m + 1):
            v = get(line, p2)
            if v is not None:
                residual = v - taken[p2]
                if residual < 0:
                    raise PreconditionViolated(
                        "peeled more than a cell holds; input cannot have "
                        "been submodular")
                put(line, p2, residual)


def _peel_snapshot(grid, m, by_columns, current_line, taken):
    # Materialize the true residual: finalized lines are stored as-is,
    # unfinished ones still owe the pending amounts.
    out = []
    for r in range(1, m + 1):
        row = []
        for c in range(1, m + 1):
            line, pos = (c, r) if by_columns else (r, c)
            v = grid[r - 1][c - 1]
            if v is not None and line <= current_line:
                v = v - taken[pos]
            row.append(Evaluation._make(v))
        out.append(tuple(row))
    return tuple(out)
