"""Exception types shared across the package."""


class ScspError(Exception):
    """Base class for every error raised by this package."""


class PreconditionViolated(ScspError):
    """Subtraction was asked to produce a negative penalty."""


class DomainError(ScspError):
    """A domain value lies outside 1..M."""


class ScopeError(ScspError):
    """An assignment does not cover the instance's variables."""


class ParameterError(ScspError):
    """A builder was called with parameters outside its legal range."""


class ApproximationBrokeSubmodularity(ScspError):
    """Rounding an irrational-valued table destroyed submodularity."""


class NotSubmodular(ScspError):
    """A binary table failed the submodularity check.

    Carries the violating quadruple and, when raised while compiling an
    instance, the index of the offending constraint.
    """

    def __init__(self, witness, constraint_index=None):
        self.witness = witness
        self.constraint_index = constraint_index
        where = "" if constraint_index is None else f"constraint {constraint_index}: "
        super().__init__(f"{where}violated at u={witness.u} v={witness.v} "
                         f"x={witness.x} y={witness.y}")


class IsSubmodular(ScspError):
    """The gadget needs a non-submodular table but was given a submodular one."""


class GadgetMismatch(ScspError):
    """The gadget's projection does not reproduce the target table."""


class TooLarge(ScspError):
    """An enumeration guard tripped; the request would take too long."""


class WrongConstraintKind(ScspError):
    """The flow network accepts interval-function constraints only."""


class DecompositionError(ScspError):
    """Internal invariant of the decomposition failed; indicates a bug."""


class ParseError(ScspError):
    """Malformed instance text; carries the 1-based line number."""

    def __init__(self, line, message):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")
