"""Exact penalty arithmetic: non-negative rationals extended with infinity.

Penalties aggregate by addition, and ``inf`` is absorbing: ``inf + e = inf``
and ``inf - e = inf`` for every ``e``, including ``inf - inf = inf``.
Subtraction of finite values is partial; taking more than is there raises
:class:`~scsp.errors.PreconditionViolated`.  Values are exact fractions so
that the repeated subtractions performed during table decomposition never
drift.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionViolated


class Evaluation:
    """A penalty: an exact non-negative rational, or infinity.

    Instances are immutable and compare by value.  The infinite value is
    exposed as the module constant :data:`INF`; it is never encoded as a
    large number.
    """

    __slots__ = ("_value",)

    def __init__(self, value):
        f = Fraction(value)
        if f < 0:
            raise ValueError(f"penalties must be non-negative, got {f}")
        object.__setattr__(self, "_value", f)

    @classmethod
    def _make(cls, fraction_or_none):
        # Internal fast path; skips the non-negativity re-check.
        e = object.__new__(cls)
        object.__setattr__(e, "_value", fraction_or_none)
        return e

    def __setattr__(self, name, value):
        raise AttributeError("Evaluation is immutable")

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def is_zero(self) -> bool:
        return self._value == 0

    @property
    def fraction(self) -> Fraction:
        """The finite value as a Fraction; raises on the infinite value."""
        if self._value is None:
            raise ValueError("infinite evaluation has no finite value")
        return self._value

    def __add__(self, other):
        if not isinstance(other, Evaluation):
            return NotImplemented
        if self._value is None or other._value is None:
            return INF
        return Evaluation._make(self._value + other._value)

    def __sub__(self, other):
        """Partial subtraction: defined only when self >= other.

        The infinite value absorbs: inf - e = inf for every e, so in
        particular inf - inf = inf.
        """
        if not isinstance(other, Evaluation):
            return NotImplemented
        if self._value is None:
            return INF
        if other._value is None or self._value < other._value:
            raise PreconditionViolated(f"cannot take {other} from {self}")
        return Evaluation._make(self._value - other._value)

    def __eq__(self, other):
        if not isinstance(other, Evaluation):
            return NotImplemented
        return self._value == other._value

    def __lt__(self, other):
        if not isinstance(other, Evaluation):
            return NotImplemented
        if self._value is None:
            return False
        if other._value is None:
            return True
        return self._value < other._value

    def __le__(self, other):
        if not isinstance(other, Evaluation):
            return NotImplemented
        return self == other or self < other

    def __gt__(self, other):
        if not isinstance(other, Evaluation):
            return NotImplemented
        return other < self

    def __ge__(self, other):
        if not isinstance(other, Evaluation):
            return NotImplemented
        return other <= self

    def __hash__(self):
        return hash(self._value) if self._value is not None else hash("inf")

    def __str__(self):
        return "inf" if self._value is None else str(self._value)

    def __repr__(self):
        return f"Evaluation({self})"


INF = Evaluation._make(None)
ZERO = Evaluation._make(Fraction(0))


def as_evaluation(value) -> Evaluation:
    """Coerce ints, Fractions, Evaluations, or tokens like ``7``, ``3/4``,
    ``inf`` to an Evaluation.

    Floats are rejected: the library is exact, and a caller holding a float
    should decide for itself how to rationalize it.
    """
    if isinstance(value, Evaluation):
        return value
    if isinstance(value, float):
        raise TypeError("refusing float; pass a Fraction or a string instead")
    if isinstance(value, str):
        if value.strip() == "inf":
            return INF
        return Evaluation(Fraction(value))
    return Evaluation(Fraction(value))
