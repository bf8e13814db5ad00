"""End-to-end solving: decompose tables, cut the network, read the answer.

:func:`solve` is exact and deterministic: the same instance always yields
the same optimal assignment.  :func:`brute_force` enumerates assignments
in lexicographic variable order and serves as the independent oracle.

:func:`xor_gadget` is the counterpart construction: given any
non-submodular binary table, it wires six constraints into a pair of
two-valued variables whose projected penalty is an exclusive-or pattern,
the standard seed of NP-hardness proofs.  Its existence is what makes the
submodularity requirement of :func:`solve` tight rather than convenient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cutgraph import build_network, extract_assignment, min_cut
from .errors import (GadgetMismatch, IsSubmodular, NotSubmodular,
                     ParameterError, TooLarge)
from .evaluation import INF, ZERO, Evaluation, as_evaluation
from .functions import BinaryTable, IntervalFunction, UnaryTable
from .model import Instance, SoftConstraint, evaluate
from .submodular import (decompose_binary, decompose_unary,
                         find_violation_full)

BRUTE_FORCE_GUARD = 10 ** 7


@dataclass(frozen=True)
class Solution:
    assignment: dict
    evaluation: Evaluation


def _route(term, v, w) -> SoftConstraint:
    if term.pattern == "xy":
        scope = (v, w)
    elif term.pattern == "yx":
        scope = (w, v)
    elif term.pattern == "xx":
        scope = (v, v)
    else:
        scope = (w, w)
    return SoftConstraint(scope, term.interval)


def expand_constraint(constraint: SoftConstraint, m: int,
                      index: int | None = None) -> tuple[SoftConstraint, ...]:
    """Rewrite one constraint as interval-function constraints.

    Table constraints are decomposed; interval constraints pass through
    (zero-penalty ones are dropped).  A binary table on a repeated scope
    only ever sees its diagonal, so it reduces to a unary table with no
    submodularity requirement.
    """
    f = constraint.function
    if isinstance(f, IntervalFunction):
        return () if f.penalty == ZERO else (constraint,)
    if isinstance(f, UnaryTable):
        v = constraint.scope[0]
        return tuple(_route(t, v, v) for t in decompose_unary(f))
    v, w = constraint.scope
    if v == w:
        diagonal = UnaryTable([f.value_at(d, d) for d in range(1, m + 1)])
        return tuple(_route(t, v, v) for t in decompose_unary(diagonal))
    try:
        decomposition = decompose_binary(f)
    except NotSubmodular as err:
        raise NotSubmodular(err.witness, constraint_index=index) from None
    return tuple(_route(t, v, w) for t in decomposition.terms)


def compile_to_intervals(instance: Instance) -> Instance:
    """An equivalent instance whose constraints are all interval functions.

    Pointwise equivalent: every assignment keeps its evaluation.  Raises
    NotSubmodular, tagged with the constraint index, if a binary table
    over two distinct variables is not submodular.
    """
    constraints = []
    for index, c in enumerate(instance.constraints):
        constraints.extend(expand_constraint(c, instance.domain_size, index))
    return Instance(instance.variables, instance.domain_size,
                    tuple(constraints))


def solve(instance: Instance) -> Solution:
    """An assignment of minimum evaluation, found through a minimum cut."""
    compiled = compile_to_intervals(instance)
    network = build_network(compiled)
    cut = min_cut(network)
    assignment = extract_assignment(network, cut)
    value = evaluate(instance, assignment)
    assert value == cut.value, "cut weight must equal the extracted assignment's evaluation"
    return Solution(assignment, value)


def brute_force(instance: Instance, guard: int = BRUTE_FORCE_GUARD) -> Solution:
    """Exhaustive minimum, keeping the lexicographically first optimum."""
    names = instance.variables
    m = instance.domain_size
    if m ** len(names) > guard:
        raise TooLarge(f"{m}**{len(names)} assignments exceed the guard")
    best_assignment = None
    best_value = None
    for combo in itertools.product(range(1, m + 1), repeat=len(names)):
        assignment = dict(zip(names, combo))
        value = evaluate(instance, assignment)
        if best_value is None or value < best_value:
            best_assignment, best_value = assignment, value
    return Solution(best_assignment, best_value)


@dataclass(frozen=True)
class GadgetResult:
    """The pieces of the exclusive-or simulation built on a violation.

    With psi(a, c) + psi(b, d) > psi(a, d) + psi(b, c), the simulation
    prices agreement of two two-valued variables at chi(1,1) = chi(2,2)
    = 2*(lam + mu) and disagreement at lam + mu + psi(a,d) + psi(b,c),
    strictly cheaper; every other cell is infinite.  ``projection`` is the
    penalty actually realized by minimizing out the four inner variables,
    and ``verified`` records that it matches ``chi`` cell by cell.
    """

    a: int
    b: int
    c: int
    d: int
    epsilon: Evaluation
    lam: Evaluation
    mu: Evaluation
    zeta: BinaryTable
    phi: BinaryTable
    chi: BinaryTable
    projection: BinaryTable
    verified: bool


def xor_gadget(psi: BinaryTable, epsilon=1) -> GadgetResult:
    """Simulate an exclusive-or penalty using a non-submodular table.

    Raises IsSubmodular when psi has no violation to build on, and
    GadgetMismatch if the projected penalty fails to reproduce chi (which
    would mean the construction itself is broken).
    """
    eps = as_evaluation(epsilon)
    if eps == ZERO or eps.is_infinite:
        raise ParameterError("epsilon must be finite and positive")
    m = psi.m
    if m ** 6 > BRUTE_FORCE_GUARD:
        raise TooLarge(f"projecting out four variables over 1..{m} "
                       "exceeds the enumeration guard")
    witness = find_violation_full(psi)
    if witness is None:
        raise IsSubmodular("the table has no violating quadruple")
    a, c, b, d = witness.u, witness.v, witness.x, witness.y
    psi_ad = psi.value_at(a, d)
    psi_bc = psi.value_at(b, c)
    base = psi_ad + psi_bc  # finite, else the witness inequality could not hold
    lam = min(psi.value_at(a, c), base + eps)
    mu = min(psi.value_at(b, d), base + eps)

    def zeta_cell(x, t):
        if (x, t) == (1, a):
            return mu
        if (x, t) == (2, b):
            return lam
        return INF

    def phi_cell(v, y):
        if v == c:
            return ZERO if y == 1 else psi_ad + eps if y == 2 else INF
        if v == d:
            return psi_bc + eps if y == 1 else ZERO if y == 2 else INF
        return INF

    def chi_cell(x, y):
        if x in (1, 2) and y in (1, 2):
            return (lam + mu) + (lam + mu) if x == y else lam + mu + base
        return INF

    zeta = BinaryTable.from_function(m, zeta_cell)
    phi = BinaryTable.from_function(m, phi_cell)
    chi = BinaryTable.from_function(m, chi_cell)

    # The six constraints form two chains meeting only at x and y:
    #   zeta(x, t), psi(t, v), phi(v, y)   and   zeta(y, u), psi(u, w), phi(w, x)
    # so the projection splits into two independent minimizations.
    def chain(first, last):
        best = INF
        for t in range(1, m + 1):
            zt = zeta.value_at(first, t)
            if zt.is_infinite:
                continue
            for v in range(1, m + 1):
                candidate = zt + psi.value_at(t, v) + phi.value_at(v, last)
                if candidate < best:
                    best = candidate
        return best

    projection = BinaryTable.from_function(
        m, lambda x, y: chain(x, y) + chain(y, x))
    if projection != chi:
        raise GadgetMismatch("projection does not reproduce chi")
    return GadgetResult(a, b, c, d, eps, lam, mu, zeta, phi, chi,
                        projection, True)
