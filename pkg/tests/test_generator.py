import pytest
from pydantic import ValidationError

from andorcut.generator import GeneratorConfig, generate, kind_quotas
from andorcut.graph import NodeKind


def fractions(graph):
    counts = graph.kind_counts()
    total = len(graph)
    return tuple(100.0 * counts[k] / total for k in (NodeKind.ATOMIC, NodeKind.AND, NodeKind.OR))


def test_single_node():
    graph = generate(GeneratorConfig(size_target=1, composition=(100, 0, 0), seed=4))
    assert len(graph) == 1
    assert graph.node("n0").cost.is_infinite
    assert graph.edges == ()


@pytest.mark.parametrize("composition", [(80, 10, 10), (60, 20, 20)])
def test_benchmark_graph_size_and_composition(composition):
    graph = generate(GeneratorConfig(size_target=5000, composition=composition, seed=7))
    assert graph.is_valid
    assert len(graph) == 5000
    for expected, observed in zip(composition, fractions(graph)):
        assert abs(expected - observed) <= 1


def test_kind_quotas():
    assert kind_quotas(5000, (60, 20, 20)) == {NodeKind.ATOMIC: 3000, NodeKind.AND: 1000, NodeKind.OR: 1000}
    assert kind_quotas(22, (80, 10, 10)) == {NodeKind.ATOMIC: 18, NodeKind.AND: 2, NodeKind.OR: 2}
    assert kind_quotas(1, (1, 50, 49))[NodeKind.ATOMIC] == 1


def test_wide_gates_overshoot_only_by_missing_leaves():
    # 30% de compuertas con fan-in 4 piden más aristas de las que tiene un árbol de 200 nodos
    config = GeneratorConfig(size_target=200, composition=(70, 15, 15), branching=(4, 4), seed=1)
    graph = generate(config)
    gates = 200 - kind_quotas(200, (70, 15, 15))[NodeKind.ATOMIC]
    assert len(graph) == 1 + gates * 4
    assert graph.kind_counts()[NodeKind.AND] + graph.kind_counts()[NodeKind.OR] == gates


def test_structure_invariants():
    graph = generate(GeneratorConfig(size_target=600, composition=(60, 20, 20), seed=12))
    assert graph.is_valid
    assert graph.target == "n0"
    assert graph.node("n0").cost.is_infinite
    for node in graph.nodes:
        preds = graph.predecessors(node.id)
        if node.is_atomic:
            if node.id != "n0":
                assert 1 <= node.cost.value <= 100
            assert len(preds) <= 1
        else:
            assert 2 <= len(preds) <= 3
    # árbol: cada nodo salvo el objetivo alimenta exactamente a uno
    assert all(len(graph.successors(n.id)) == 1 for n in graph.nodes if n.id != "n0")
    atomic, gates_and, gates_or = fractions(graph)
    assert atomic >= 50 and gates_and > 5 and gates_or > 5


def test_deterministic_under_seed():
    config = GeneratorConfig(size_target=300, composition=(60, 20, 20), seed=99)
    assert generate(config) == generate(config)
    other = generate(config.model_copy(update={"seed": 100}))
    assert other != generate(config)


def test_custom_ranges():
    config = GeneratorConfig(size_target=200, composition=(70, 15, 15), cost_range=(5, 6), branching=(4, 4), seed=1)
    graph = generate(config)
    for node in graph.nodes:
        if node.is_compromisable:
            assert node.cost.value in (5, 6)
        elif not node.is_atomic:
            assert len(graph.predecessors(node.id)) == 4


@pytest.mark.parametrize(
    "fields",
    [
        {"composition": (50, 20, 20)},
        {"composition": (0, 50, 50)},
        {"composition": (110, -5, -5)},
        {"cost_range": (0, 10)},
        {"cost_range": (10, 5)},
        {"branching": (1, 3)},
        {"seed": -1},
        {"size_target": 0},
    ],
)
def test_invalid_configs(fields):
    values = {"size_target": 10, **fields}
    with pytest.raises(ValidationError):
        GeneratorConfig(**values)


def test_from_cli():
    config = GeneratorConfig.from_cli("60, 20, 20", size_target=50, seed=3)
    assert config.composition == (60, 20, 20)
    with pytest.raises(ValueError):
        GeneratorConfig.from_cli("60,40", size_target=50)
    with pytest.raises(ValueError):
        GeneratorConfig.from_cli("a,b,c", size_target=50)
