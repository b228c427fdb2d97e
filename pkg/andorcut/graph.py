"""Modelo de grafos AND/OR de dependencias.

Un nodo atómico es un componente ciber-físico (sensor, agente, actuador) con un
costo de ataque. Los nodos AND/OR son compuertas lógicas sin costo. Una arista
``(u, v)`` significa que ``v`` depende de ``u``.

Semántica operacional, calculada en orden topológico:

- atómico ``n``: opera si no fue comprometido y todos sus predecesores operan
  (sin predecesores: opera salvo que esté comprometido);
- AND: opera si todos sus predecesores operan;
- OR: opera si al menos uno de sus predecesores opera.
"""
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union
import logging

import networkx as nx

from andorcut.exceptions import GraphValidationError, InvalidCompromiseError, UnknownNodeError

logger = logging.getLogger(__name__)

INF_TOKEN = "inf"


class NodeKind(str, Enum):
    ATOMIC = "atomic"
    AND = "and"
    OR = "or"


@dataclass(frozen=True)
class Cost:
    """Costo de ataque: entero no negativo, o infinito cuando ``value`` es None."""

    value: Optional[int] = None

    def __post_init__(self):
        if self.value is not None:
            if isinstance(self.value, bool) or not isinstance(self.value, int):
                raise TypeError(f"cost must be an integer, got {self.value!r}")
            if self.value < 0:
                raise ValueError(f"cost must be non-negative, got {self.value}")

    @classmethod
    def finite(cls, value: int) -> "Cost":
        return cls(value)

    @classmethod
    def infinite(cls) -> "Cost":
        return cls(None)

    @classmethod
    def parse(cls, token: str) -> "Cost":
        if token == INF_TOKEN:
            return cls.infinite()
        if not token.isdigit():
            raise ValueError(f"invalid cost {token!r}: expected a non-negative integer or 'inf'")
        return cls.finite(int(token))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return INF_TOKEN if self.value is None else str(self.value)


CostLike = Union[Cost, int, None]


def _as_cost(cost: CostLike) -> Cost:
    if isinstance(cost, Cost):
        return cost
    return Cost(cost)


def is_valid_node_id(node_id: str) -> bool:
    return bool(node_id) and node_id.isprintable() and not any(c.isspace() for c in node_id)


@dataclass(frozen=True)
class Node:
    id: str
    kind: NodeKind
    cost: Optional[Cost] = None

    def __post_init__(self):
        if not isinstance(self.id, str) or not is_valid_node_id(self.id):
            raise ValueError(f"invalid node id {self.id!r}: must be printable and without whitespace")
        object.__setattr__(self, "kind", NodeKind(self.kind))
        if self.kind is NodeKind.ATOMIC and self.cost is None:
            raise ValueError(f"atomic node {self.id!r} needs a cost")
        if self.kind is not NodeKind.ATOMIC and self.cost is not None:
            raise ValueError(f"{self.kind.value} node {self.id!r} cannot carry a cost")

    @classmethod
    def atomic(cls, node_id: str, cost: CostLike) -> "Node":
        """Nodo atómico; ``cost=None`` equivale a costo infinito."""
        return cls(node_id, NodeKind.ATOMIC, _as_cost(cost))

    @classmethod
    def gate(cls, node_id: str, kind: Union[NodeKind, str]) -> "Node":
        return cls(node_id, NodeKind(kind))

    @property
    def is_atomic(self) -> bool:
        return self.kind is NodeKind.ATOMIC

    @property
    def is_compromisable(self) -> bool:
        return self.is_atomic and not self.cost.is_infinite


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    subjects: Tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class AndOrGraph:
    """Grafo AND/OR inmutable con un nodo objetivo.

    El constructor no valida: un grafo inválido puede existir para que
    ``validate`` reporte todas sus violaciones. Las operaciones que necesitan
    un grafo válido llaman a ``ensure_valid``.
    """

    def __init__(self, nodes: Iterable[Node], edges: Iterable[Tuple[str, str]], target: str):
        self._node_list: Tuple[Node, ...] = tuple(nodes)
        self._edges: Tuple[Tuple[str, str], ...] = tuple((u, v) for u, v in edges)
        self._target = target

        self._nodes: Dict[str, Node] = {}
        for node in self._node_list:
            self._nodes.setdefault(node.id, node)

        self._preds: Dict[str, List[str]] = {nid: [] for nid in self._nodes}
        self._succs: Dict[str, List[str]] = {nid: [] for nid in self._nodes}
        seen = set()
        for u, v in self._edges:
            if u not in self._nodes or v not in self._nodes or (u, v) in seen:
                continue
            seen.add((u, v))
            self._preds[v].append(u)
            self._succs[u].append(v)

    @property
    def nodes(self) -> Tuple[Node, ...]:
        return tuple(self._nodes.values())

    @property
    def edges(self) -> Tuple[Tuple[str, str], ...]:
        return self._edges

    @property
    def target(self) -> str:
        return self._target

    def __len__(self) -> int:
        return len(self._nodes)

    def __contains__(self, node_id: object) -> bool:
        return node_id in self._nodes

    def node(self, node_id: str) -> Node:
        try:
            return self._nodes[node_id]
        except KeyError:
            raise UnknownNodeError(node_id) from None

    def predecessors(self, node_id: str) -> Tuple[str, ...]:
        if node_id not in self._preds:
            raise UnknownNodeError(node_id)
        return tuple(self._preds[node_id])

    def successors(self, node_id: str) -> Tuple[str, ...]:
        if node_id not in self._succs:
            raise UnknownNodeError(node_id)
        return tuple(self._succs[node_id])

    def kind_counts(self) -> Dict[NodeKind, int]:
        counts = {kind: 0 for kind in NodeKind}
        for node in self._nodes.values():
            counts[node.kind] += 1
        return counts

    def compromisable(self) -> Tuple[str, ...]:
        return tuple(n.id for n in self._nodes.values() if n.is_compromisable)

    @cached_property
    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self._nodes)
        for v, preds in self._preds.items():
            g.add_edges_from((u, v) for u in preds)
        return g

    @cached_property
    def _violations(self) -> Tuple[Violation, ...]:
        return tuple(_collect_violations(self))

    def validate(self) -> List[Violation]:
        return list(self._violations)

    @property
    def is_valid(self) -> bool:
        return not self._violations

    def ensure_valid(self) -> None:
        if self._violations:
            raise GraphValidationError(self._violations)

    @cached_property
    def topological_order(self) -> Tuple[str, ...]:
        self.ensure_valid()
        return tuple(nx.topological_sort(self.digraph))

    def reachable(self, node_id: Optional[str] = None) -> FrozenSet[str]:
        """Nodos alcanzables hacia atrás desde ``node_id`` (por defecto el objetivo), incluido él mismo."""
        node_id = self._target if node_id is None else node_id
        if node_id not in self._nodes:
            raise UnknownNodeError(node_id)
        return frozenset(nx.ancestors(self.digraph, node_id)) | {node_id}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AndOrGraph):
            return NotImplemented
        return (
            self._node_list == other._node_list
            and self._edges == other._edges
            and self._target == other._target
        )

    __hash__ = None

    def __repr__(self) -> str:
        counts = self.kind_counts()
        return (
            f"AndOrGraph(nodes={len(self)}, atomic={counts[NodeKind.ATOMIC]}, "
            f"and={counts[NodeKind.AND]}, or={counts[NodeKind.OR]}, "
            f"edges={len(self._edges)}, target={self._target!r})"
        )


def _collect_violations(graph: AndOrGraph) -> List[Violation]:
    violations: List[Violation] = []

    seen_ids = set()
    for node in graph._node_list:
        if node.id in seen_ids:
            violations.append(Violation("duplicate-node", f"node {node.id} declared twice", (node.id,)))
        seen_ids.add(node.id)

    seen_edges = set()
    for u, v in graph.edges:
        missing = [x for x in (u, v) if x not in graph]
        if missing:
            violations.append(
                Violation(
                    "unknown-endpoint",
                    f"edge ({u}, {v}) names unknown node(s) {', '.join(missing)}",
                    (u, v),
                )
            )
        if (u, v) in seen_edges:
            violations.append(Violation("duplicate-edge", f"edge ({u}, {v}) appears twice", (u, v)))
        seen_edges.add((u, v))

    if graph.target not in graph:
        violations.append(Violation("missing-target", f"target {graph.target} is not a node", (graph.target,)))
    elif not graph.node(graph.target).is_atomic:
        violations.append(
            Violation("target-not-atomic", f"target {graph.target} must be an atomic node", (graph.target,))
        )

    for node in graph.nodes:
        if not node.is_atomic and not graph.predecessors(node.id):
            violations.append(
                Violation(
                    "gate-without-input",
                    f"{node.kind.value} node {node.id} has no predecessors",
                    (node.id,),
                )
            )

    digraph = graph.digraph
    for u, _ in nx.selfloop_edges(digraph):
        violations.append(Violation("cycle", f"self-loop at {u}", (u,)))
    for component in nx.strongly_connected_components(digraph):
        if len(component) > 1:
            members = tuple(sorted(component))
            violations.append(Violation("cycle", f"cycle through {', '.join(members)}", members))

    return violations


def validate(graph: AndOrGraph) -> List[Violation]:
    return graph.validate()


def _check_compromise(graph: AndOrGraph, compromised: FrozenSet[str]) -> None:
    for node_id in compromised:
        if node_id not in graph:
            raise UnknownNodeError(node_id)
    invalid = [n for n in compromised if not graph.node(n).is_compromisable]
    if invalid:
        raise InvalidCompromiseError(invalid)


def evaluate(graph: AndOrGraph, compromised: Iterable[str]) -> Dict[str, bool]:
    """Valor operacional de cada nodo cuando se comprometen los nodos dados."""
    graph.ensure_valid()
    compromised = frozenset(compromised)
    _check_compromise(graph, compromised)

    values: Dict[str, bool] = {}
    for node_id in graph.topological_order:
        node = graph.node(node_id)
        inputs = [values[p] for p in graph.predecessors(node_id)]
        if node.kind is NodeKind.ATOMIC:
            values[node_id] = node_id not in compromised and all(inputs)
        elif node.kind is NodeKind.AND:
            values[node_id] = all(inputs)
        else:
            values[node_id] = any(inputs)
    return values


def is_disrupted(graph: AndOrGraph, compromised: Iterable[str]) -> bool:
    return not evaluate(graph, compromised)[graph.target]


def total_cost(graph: AndOrGraph, node_ids: Iterable[str]) -> int:
    total = 0
    for node_id in node_ids:
        node = graph.node(node_id)
        if not node.is_compromisable:
            raise InvalidCompromiseError([node_id])
        total += node.cost.value
    return total


def build_graph(
    atomic: Mapping[str, CostLike],
    gates: Mapping[str, Union[NodeKind, str]],
    edges: Sequence[Tuple[str, str]],
    target: str,
) -> AndOrGraph:
    """Atajo para construir grafos a mano (ejemplos y pruebas)."""
    nodes = [Node.atomic(nid, cost) for nid, cost in atomic.items()]
    nodes += [Node.gate(nid, kind) for nid, kind in gates.items()]
    return AndOrGraph(nodes, edges, target)
