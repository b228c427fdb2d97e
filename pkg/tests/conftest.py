import pytest

from andorcut.graph import build_graph


@pytest.fixture
def actuator_graph():
    """Actuador c1 que depende del agente d, alimentado por (a ∧ b) ∨ (b ∧ c)."""
    return build_graph(
        atomic={"a": 2, "b": 5, "c": 2, "d": 10, "c1": None},
        gates={"g1": "and", "g2": "and", "o": "or"},
        edges=[
            ("a", "g1"), ("b", "g1"),
            ("b", "g2"), ("c", "g2"),
            ("g1", "o"), ("g2", "o"),
            ("o", "d"), ("d", "c1"),
        ],
        target="c1",
    )


@pytest.fixture
def and_graph():
    return build_graph(
        atomic={"x": 3, "y": 7, "t": None},
        gates={"g": "and"},
        edges=[("x", "g"), ("y", "g"), ("g", "t")],
        target="t",
    )


@pytest.fixture
def or_graph():
    return build_graph(
        atomic={"x": 3, "y": 7, "t": None},
        gates={"g": "or"},
        edges=[("x", "g"), ("y", "g"), ("g", "t")],
        target="t",
    )


@pytest.fixture
def lonely_target():
    return build_graph(atomic={"t": None}, gates={}, edges=[], target="t")
