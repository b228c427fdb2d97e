import pytest

from andorcut.encoder import encode
from andorcut.exceptions import GraphSyntaxError, GraphValidationError, WcnfFormatError
from andorcut.formats import (
    WcnfClauseCountWarning,
    emit_graph,
    emit_wcnf,
    parse_graph,
    parse_wcnf,
    read_graph,
    read_wcnf,
    write_graph,
    write_wcnf,
)
from andorcut.generator import GeneratorConfig, generate
from andorcut.instance import SoftClause, WcnfInstance


def test_actuator_wcnf_document(actuator_graph):
    instance = encode(actuator_graph)
    document = emit_wcnf(instance)
    lines = document.splitlines()
    assert lines[0] == "c andorcut wcnf v1"
    assert "c var 1 = node a" in lines
    assert "c var 6 = aux" in lines
    assert f"p wcnf {instance.nvars} {instance.num_clauses} 1000000" in lines
    for weight, name in [(2, "a"), (5, "b"), (2, "c"), (10, "d")]:
        assert f"{weight} {instance.varmap[name]} 0" in lines
    assert f"1000000 {instance.varmap['c1']} 0" in lines
    assert document.endswith("\n")


def test_minimal_document():
    instance = WcnfInstance(1, 1_000_000, [], [SoftClause(1, (1,))])
    assert emit_wcnf(instance) == "c andorcut wcnf v1\np wcnf 1 1 1000000\n1 1 0\n"


def test_wcnf_round_trip(actuator_graph):
    instance = encode(actuator_graph)
    assert parse_wcnf(emit_wcnf(instance)) == instance


def test_hard_weight_is_top():
    instance = parse_wcnf("p wcnf 5 2 1000000\n1000000 -3 -5 0\nc comentario\n7 2 0\n")
    assert instance.hard == [[-3, -5]]
    assert instance.soft == [SoftClause(7, (2,))]
    assert instance.varmap == {}


def test_clause_count_mismatch_is_tolerated():
    document = "p wcnf 2 5 10\n10 1 2 0\n3 -1 0\n4 -2 0\n10 -1 -2 0\n"
    with pytest.warns(WcnfClauseCountWarning):
        instance = parse_wcnf(document)
    assert len(instance.hard) == 2 and len(instance.soft) == 2


@pytest.mark.parametrize(
    "document",
    [
        "p cnf 2 1\n1 0\n",
        "p wcnf x 1 10\n1 1 0\n",
        "1 1 0\n",
        "p wcnf 2 1 10\n11 1 0\n",
        "p wcnf 2 1 10\n1 1 0 2 0\n",
        "p wcnf 2 1 10\n1 1 2\n",
        "p wcnf 2 1 10\n1 3 0\n",
        "p wcnf 2 1 10\n0 1 0\n",
        "p wcnf 2 2 10\n6 1 0\n4 2 0\n",
        "c nada\n",
    ],
)
def test_malformed_wcnf(document):
    with pytest.raises(WcnfFormatError):
        parse_wcnf(document)


def test_wcnf_files(tmp_path, actuator_graph):
    instance = encode(actuator_graph)
    path = write_wcnf(instance, tmp_path / "actuator.wcnf")
    assert read_wcnf(path) == instance


@pytest.mark.slow
def test_wcnf_byte_identical_on_generated_instances():
    for seed in range(100):
        graph = generate(GeneratorConfig(size_target=30 + seed, composition=(80, 10, 10), seed=seed))
        document = emit_wcnf(encode(graph))
        assert emit_wcnf(parse_wcnf(document)) == document


ACTUATOR_DOCUMENT = """\
aog 1
# ejemplo del actuador c1
target c1
node a atomic 2
node b atomic 5
node c atomic 2
node d atomic 10
node c1 atomic inf
node g1 and
node g2 and
node o or

edge a g1
edge b g1
edge b g2
edge c g2
edge g1 o
edge g2 o
edge o d
edge d c1
"""


def test_parse_actuator_document(actuator_graph):
    graph = parse_graph(ACTUATOR_DOCUMENT)
    assert graph == actuator_graph
    assert graph.node("c1").cost.is_infinite


def test_graph_round_trip(actuator_graph):
    assert parse_graph(emit_graph(actuator_graph)) == actuator_graph
    generated = generate(GeneratorConfig(size_target=200, composition=(60, 20, 20), seed=5))
    assert parse_graph(emit_graph(generated)) == generated


def test_graph_files(tmp_path, actuator_graph):
    path = write_graph(actuator_graph, tmp_path / "actuator.aog")
    assert read_graph(path) == actuator_graph
    assert path.read_bytes().count(b"\r") == 0


def test_unknown_kind_is_positioned():
    with pytest.raises(GraphSyntaxError) as info:
        parse_graph("aog 1\ntarget t\nnode t atomic 1\nnode g nand\n")
    assert info.value.line == 4
    assert info.value.column == 8
    assert "'nand'" in str(info.value)


@pytest.mark.parametrize(
    "document, line",
    [
        ("aog 2\n", 1),
        ("graph 1\n", 1),
        ("aog 1\nnode t atomic 1\n", 3),
        ("aog 1\ntarget t\nnode t atomic -1\n", 3),
        ("aog 1\ntarget t\nnode t atomic\n", 3),
        ("aog 1\ntarget t\nnode t atomic 1\nnode t atomic 2\n", 4),
        ("aog 1\ntarget t\nnode t atomic 1\nedge t x\n", 4),
        ("aog 1\ntarget t\nnode t atomic 1\nnode g and 3\n", 4),
        ("aog 1\ntarget t\nnode t atomic 1\nvertex t\n", 4),
        ("aog 1\ntarget x\nnode t atomic 1\n", 2),
    ],
)
def test_graph_syntax_errors(document, line):
    with pytest.raises(GraphSyntaxError) as info:
        parse_graph(document)
    assert info.value.line == line


def test_semantic_errors_go_through_validation():
    with pytest.raises(GraphValidationError) as info:
        parse_graph("aog 1\ntarget t\nnode t atomic 1\nnode g and\nedge g t\n")
    assert info.value.violations[0].code == "gate-without-input"
