"""Compilation to interval constraints and end-to-end solving."""

import random
from fractions import Fraction

import pytest

from helpers import random_mixed_instance, unary
from scsp import (Instance, IntervalFunction, SoftConstraint, as_evaluation,
                  brute_force, compile_to_intervals, evaluate,
                  expand_constraint, parse_instance, solve, xor_penalty)
from scsp.errors import NotSubmodular, TooLarge


def all_assignments(instance):
    import itertools
    names = instance.variables
    for combo in itertools.product(range(1, instance.domain_size + 1),
                                   repeat=len(names)):
        yield dict(zip(names, combo))


class TestExpandConstraint:
    def test_interval_passes_through(self):
        c = SoftConstraint(("a", "b"), IntervalFunction(2, 3, 5))
        assert expand_constraint(c, 4) == (c,)

    def test_zero_penalty_interval_is_dropped(self):
        c = SoftConstraint(("a", "b"), IntervalFunction(2, 3, 0))
        assert expand_constraint(c, 4) == ()

    def test_unary_table_becomes_diagonal_intervals(self):
        c = SoftConstraint(("a",), unary([6, 3, 0]))
        expanded = expand_constraint(c, 3)
        assert all(e.scope == ("a", "a") for e in expanded)
        inst = Instance(("a",), 3, (c,))
        compiled = Instance(("a",), 3, expanded)
        for assignment in ({"a": 1}, {"a": 2}, {"a": 3}):
            assert evaluate(compiled, assignment) == evaluate(inst, assignment)

    def test_repeated_scope_table_needs_no_submodularity(self):
        # only the diagonal is ever consulted, so the xor table is fine here
        c = SoftConstraint(("a", "a"), xor_penalty())
        expanded = expand_constraint(c, 2)
        inst = Instance(("a",), 2, (c,))
        compiled = Instance(("a",), 2, expanded)
        for assignment in ({"a": 1}, {"a": 2}):
            assert evaluate(compiled, assignment) == evaluate(inst, assignment)

    def test_non_submodular_table_is_rejected(self):
        c = SoftConstraint(("a", "b"), xor_penalty())
        with pytest.raises(NotSubmodular) as info:
            expand_constraint(c, 2, index=7)
        assert info.value.constraint_index == 7
        assert info.value.witness == (1, 1, 2, 2)


class TestCompile:
    def test_results_are_all_intervals(self):
        rng = random.Random(71)
        for _ in range(40):
            inst = random_mixed_instance(rng)
            compiled = compile_to_intervals(inst)
            assert compiled.variables == inst.variables
            assert all(isinstance(c.function, IntervalFunction)
                       for c in compiled.constraints)

    def test_pointwise_equivalence(self):
        rng = random.Random(72)
        for _ in range(60):
            inst = random_mixed_instance(rng, max_vars=3, max_domain=3)
            compiled = compile_to_intervals(inst)
            for assignment in all_assignments(inst):
                assert evaluate(compiled, assignment) == \
                    evaluate(inst, assignment)

    def test_reports_offending_constraint(self):
        inst = Instance(("p", "q"), 2, (
            SoftConstraint(("p",), unary([1, 2])),
            SoftConstraint(("p", "q"), xor_penalty()),
        ))
        with pytest.raises(NotSubmodular) as info:
            compile_to_intervals(inst)
        assert info.value.constraint_index == 1
        assert "u=1" in str(info.value)


class TestSolve:
    def test_chain_instance(self, chain_text):
        sol = solve(parse_instance(chain_text))
        assert sol.assignment == {"x": 4, "y": 4, "z": 1}
        assert str(sol.evaluation) == "5"

    def test_quadratic_instance(self, data_dir):
        inst = parse_instance((data_dir / "quadratic.scsp").read_text())
        sol = solve(inst)
        assert sol.evaluation == as_evaluation(Fraction(11, 4))
        named = {"v1": 1, "v2": 1, "v3": 2, "v4": 2, "v5": 3, "v6": 3}
        assert evaluate(inst, named) == sol.evaluation

    def test_infinite_optimum_is_reported(self):
        inst = Instance(("a",), 2, (
            SoftConstraint(("a",), unary([None, None])),))
        sol = solve(inst)
        assert sol.evaluation.is_infinite
        assert evaluate(inst, sol.assignment).is_infinite

    def test_empty_instance(self):
        sol = solve(Instance((), 2, ()))
        assert sol.assignment == {} and sol.evaluation.is_zero

    def test_rejects_non_submodular_tables(self):
        inst = Instance(("p", "q"), 2,
                        (SoftConstraint(("p", "q"), xor_penalty()),))
        with pytest.raises(NotSubmodular) as info:
            solve(inst)
        assert info.value.constraint_index == 0

    def test_deterministic(self):
        rng = random.Random(73)
        for _ in range(20):
            inst = random_mixed_instance(rng)
            first = solve(inst)
            second = solve(inst)
            assert first.assignment == second.assignment
            assert first.evaluation == second.evaluation

    def test_matches_brute_force(self):
        rng = random.Random(74)
        for _ in range(200):
            inst = random_mixed_instance(rng)
            sol = solve(inst)
            best = brute_force(inst)
            assert sol.evaluation == best.evaluation
            assert evaluate(inst, sol.assignment) == best.evaluation


class TestBruteForce:
    def test_prefers_lexicographically_first_optimum(self):
        inst = Instance(("a", "b"), 3, ())
        assert brute_force(inst).assignment == {"a": 1, "b": 1}
        # make value 2 strictly better for b only
        inst = Instance(("a", "b"), 3, (
            SoftConstraint(("b",), unary([4, 1, 4])),))
        assert brute_force(inst).assignment == {"a": 1, "b": 2}

    def test_guard_limits_enumeration(self):
        inst = Instance(tuple(f"v{i}" for i in range(4)), 3, ())
        with pytest.raises(TooLarge):
            brute_force(inst, guard=80)
        assert brute_force(inst, guard=81).evaluation.is_zero
