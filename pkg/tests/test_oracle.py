import pytest

from andorcut.exceptions import InvalidCompromiseError, OracleCapExceededError, UnknownNodeError
from andorcut.generator import GeneratorConfig, generate
from andorcut.instance import CriticalSet
from andorcut.oracle import brute_force_min_cut, verify


def test_actuator_graph(actuator_graph):
    result = brute_force_min_cut(actuator_graph, "c1")
    assert result.feasible
    assert result.critical_set.nodes == {"a", "c"}
    assert result.critical_set.total_cost == 4


def test_or_graph(or_graph):
    result = brute_force_min_cut(or_graph)
    assert result.critical_set.nodes == {"x", "y"}
    assert result.critical_set.total_cost == 10


def test_infeasible(lonely_target):
    result = brute_force_min_cut(lonely_target)
    assert not result.feasible
    assert result.critical_set is None


def test_cap():
    graph = generate(GeneratorConfig(size_target=80, composition=(80, 10, 10), seed=3))
    with pytest.raises(OracleCapExceededError):
        brute_force_min_cut(graph, cap=5)


def test_verify_optimal_cut(actuator_graph):
    report = verify(actuator_graph, "c1", CriticalSet.from_nodes(actuator_graph, ["a", "c"]))
    assert report.disrupts and report.claimed_cost_matches and report.irredundant
    assert report.violations == []
    assert report.ok


def test_verify_redundant_cut(actuator_graph):
    report = verify(actuator_graph, "c1", CriticalSet.from_nodes(actuator_graph, ["a", "b", "c"]))
    assert report.disrupts
    assert not report.irredundant
    assert any("redundant" in v for v in report.violations)


def test_verify_insufficient_cut(actuator_graph):
    report = verify(actuator_graph, "c1", CriticalSet.from_nodes(actuator_graph, ["a"]))
    assert not report.disrupts
    assert not report.ok


def test_verify_wrong_claimed_cost(actuator_graph):
    claimed = CriticalSet(frozenset({"a", "c"}), 3)
    report = verify(actuator_graph, "c1", claimed)
    assert report.disrupts and not report.claimed_cost_matches


def test_verify_rejects_bad_ids(actuator_graph):
    with pytest.raises(UnknownNodeError):
        verify(actuator_graph, "c1", CriticalSet(frozenset({"zz"}), 0))
    with pytest.raises(InvalidCompromiseError):
        verify(actuator_graph, "c1", CriticalSet(frozenset({"g1"}), 0))
