import random

import pytest
from pydantic import ValidationError

from andorcut.encoder import decode, encode
from andorcut.graph import AndOrGraph, Node
from andorcut.instance import SoftClause, WcnfInstance
from andorcut.oracle import brute_force_min_cut
from andorcut.solver import BranchAndBoundSolver, SolveStatus, SolverBudget, solve
from tests.helpers import random_dag


def solve_graph(graph, budget=None):
    instance = encode(graph)
    result = solve(instance, budget)
    return instance, result


def test_actuator_graph_optimum(actuator_graph):
    instance, result = solve_graph(actuator_graph)
    assert result.status is SolveStatus.OPTIMAL
    assert result.cost == 4
    assert instance.falsified_weight(result.assignment) == 4
    assert instance.check_hard(result.assignment) is None
    critical = decode(instance, actuator_graph, result.assignment)
    assert critical.nodes == {"a", "c"}


def test_and_gate_takes_the_cheaper_input(and_graph):
    instance, result = solve_graph(and_graph)
    assert result.cost == 3
    assert decode(instance, and_graph, result.assignment).nodes == {"x"}


def test_or_gate_needs_both_inputs(or_graph):
    instance, result = solve_graph(or_graph)
    assert result.cost == 10
    assert decode(instance, or_graph, result.assignment).nodes == {"x", "y"}


def test_hard_unsat():
    instance = WcnfInstance(1, 10, [[1], [-1]], [SoftClause(1, (1,))])
    result = solve(instance)
    assert result.status is SolveStatus.HARD_UNSAT
    assert result.assignment is None


def test_infeasible_target(lonely_target):
    _, result = solve_graph(lonely_target)
    assert result.status is SolveStatus.HARD_UNSAT


def test_non_unit_and_opposite_soft_clauses():
    instance = WcnfInstance(
        2,
        100,
        [[1, 2]],
        [SoftClause(4, (-1,)), SoftClause(3, (-2,)), SoftClause(2, (-1, -2)), SoftClause(1, (1,))],
    )
    result = solve(instance)
    assert result.is_optimal
    assert result.cost == 4
    assert instance.falsified_weight(result.assignment) == 4


def test_budget_validation():
    with pytest.raises(ValidationError):
        SolverBudget(wall_clock=0)
    with pytest.raises(ValidationError):
        SolverBudget(decision_limit=-1)


def test_decision_budget_reports_timeout():
    rng = random.Random(8)
    graph = random_dag(rng, atomic=12, inner=14, inf_prob=0.0, min_cost=1)
    instance = encode(graph)
    result = solve(instance, SolverBudget(decision_limit=1))
    assert result.status is SolveStatus.TIMEOUT
    if result.assignment is not None:
        assert instance.check_hard(result.assignment) is None


def test_deterministic_without_budget():
    rng = random.Random(21)
    graph = random_dag(rng, atomic=8, inner=8, min_cost=1)
    instance = encode(graph)
    first = solve(instance)
    second = solve(instance)
    assert first.cost == second.cost
    assert first.assignment == second.assignment


def test_stats_are_recorded(actuator_graph):
    solver = BranchAndBoundSolver(encode(actuator_graph))
    result = solver.solve()
    assert result.stats.sat_calls >= 2
    assert result.stats.nodes >= 1
    assert result.stats.elapsed >= 0


def test_matches_brute_force_on_random_dags():
    rng = random.Random(404)
    for _ in range(80):
        graph = random_dag(rng, atomic=rng.randint(1, 7), inner=rng.randint(0, 6))
        instance, result = solve_graph(graph)
        truth = brute_force_min_cut(graph)
        if not truth.feasible:
            assert result.status is SolveStatus.HARD_UNSAT
            continue
        assert result.status is SolveStatus.OPTIMAL
        assert result.cost == truth.critical_set.total_cost


def test_raising_a_cost_never_lowers_the_optimum():
    rng = random.Random(77)
    for _ in range(40):
        graph = random_dag(rng, atomic=rng.randint(2, 6), inner=rng.randint(1, 5), min_cost=1)
        _, before = solve_graph(graph)
        if not before.is_optimal:
            continue
        name = rng.choice(graph.compromisable())
        bumped = [
            Node.atomic(n.id, n.cost.value + rng.randint(1, 5)) if n.id == name else n
            for n in graph.nodes
        ]
        _, after = solve_graph(AndOrGraph(bumped, graph.edges, graph.target))
        assert after.cost >= before.cost
