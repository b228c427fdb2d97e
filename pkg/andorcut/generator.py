"""Generador pseudoaleatorio de grafos AND/OR para benchmarks.

Se crea el objetivo (atómico, costo infinito) y se expande en anchura: cada
nodo recibe sus predecesores en orden. Las cantidades de cada tipo salen de la
composición; cada compuerta recibe un fan-in sorteado en ``branching`` y los
atómicos internos tienen un único predecesor. Si la composición pide más
entradas de las que el árbol admite, el fan-in se recorta hacia el mínimo; solo
cuando eso no alcanza se agregan hojas atómicas por encima del tamaño pedido.

El flujo aleatorio sale de ``numpy.random.Generator`` sobre ``PCG64``, así que
la misma configuración y semilla producen el mismo grafo en cualquier
plataforma.
"""
from typing import Dict, List, Tuple
import logging

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveInt, field_validator, model_validator

from andorcut.graph import AndOrGraph, Cost, Node, NodeKind

logger = logging.getLogger(__name__)


class GeneratorConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    size_target: PositiveInt
    composition: Tuple[int, int, int] = (80, 10, 10)
    cost_range: Tuple[int, int] = (1, 100)
    seed: int = Field(default=0, ge=0, lt=2**64)
    branching: Tuple[int, int] = (2, 3)

    @field_validator("composition")
    @classmethod
    def check_composition(cls, value):
        if any(p < 0 for p in value):
            raise ValueError("composition percentages must be non-negative")
        if sum(value) != 100:
            raise ValueError(f"composition must sum to 100, got {sum(value)}")
        if value[0] < 1:
            raise ValueError("composition needs at least 1% atomic nodes")
        return value

    @field_validator("cost_range", "branching")
    @classmethod
    def check_interval(cls, value):
        low, high = value
        if low > high:
            raise ValueError(f"empty interval [{low}, {high}]")
        return value

    @model_validator(mode="after")
    def check_bounds(self):
        if self.cost_range[0] < 1:
            raise ValueError("cost_range minimum must be at least 1")
        if self.branching[0] < 2:
            raise ValueError("gate nodes need at least 2 children")
        return self

    @staticmethod
    def parse_composition(text: str) -> Tuple[int, int, int]:
        """``"80,10,10"`` -> ``(80, 10, 10)``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"composition must have three values A,B,C, got {text!r}")
        try:
            return tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"composition values must be integers, got {text!r}") from None

    @classmethod
    def from_cli(cls, composition: str, **fields) -> "GeneratorConfig":
        return cls(composition=cls.parse_composition(composition), **fields)


def kind_quotas(size: int, composition: Tuple[int, int, int]) -> Dict[NodeKind, int]:
    """Cantidad exacta de nodos de cada tipo para ``size`` nodos (redondeo al más cercano)."""
    _, and_pct, or_pct = composition
    n_and = (size * and_pct + 50) // 100
    n_or = (size * or_pct + 50) // 100
    # el objetivo siempre es atómico
    while size - n_and - n_or < 1:
        if n_and >= n_or:
            n_and -= 1
        else:
            n_or -= 1
    return {NodeKind.ATOMIC: size - n_and - n_or, NodeKind.AND: n_and, NodeKind.OR: n_or}


class _Builder:
    """Arma la secuencia (tipo, cantidad de hijos) de todos los nodos salvo el objetivo."""

    def __init__(self, config: GeneratorConfig):
        self.config = config
        self.rng = np.random.Generator(np.random.PCG64(config.seed))
        self.extra_leaves = 0

    def degree_sequence(self, quotas: Dict[NodeKind, int]) -> Tuple[List[NodeKind], np.ndarray]:
        low, high = self.config.branching
        n_gates = quotas[NodeKind.AND] + quotas[NodeKind.OR]
        n_atomic = quotas[NodeKind.ATOMIC] - 1
        kinds = [NodeKind.ATOMIC] * n_atomic + [NodeKind.AND] * quotas[NodeKind.AND] + [NodeKind.OR] * quotas[NodeKind.OR]

        fan_in = self.rng.integers(low, high + 1, size=n_gates)
        # un árbol de m nodos bajo n1 tiene m - 1 aristas
        excess = int(fan_in.sum()) - (len(kinds) - 1)
        if excess > 0 and n_gates:
            for index in self.rng.permutation(n_gates):
                cut = min(excess, int(fan_in[index]) - low)
                fan_in[index] -= cut
                excess -= cut
                if excess == 0:
                    break
        if excess > 0:
            # la composición no admite un árbol con ese fan-in; se agregan hojas atómicas
            self.extra_leaves = excess
            kinds = [NodeKind.ATOMIC] * excess + kinds
            n_atomic += excess
            excess = 0

        degrees = np.zeros(len(kinds), dtype=np.int64)
        degrees[n_atomic:] = fan_in
        chained = -excess
        if chained:
            degrees[self.rng.choice(n_atomic, size=chained, replace=False)] = 1
        return kinds, degrees

    def arrange(self, degrees: np.ndarray) -> np.ndarray:
        """Baraja la secuencia y la rota para que sea un recorrido en anchura válido.

        Con suma de (grado - 1) igual a -1 hay exactamente una rotación cuyas
        sumas parciales no bajan de cero antes del final: la que empieza tras el
        primer mínimo.
        """
        order = self.rng.permutation(len(degrees))
        prefix = np.cumsum(degrees[order] - 1)
        start = int(np.argmin(prefix)) + 1
        return np.concatenate([order[start:], order[:start]])

    def costs(self, count: int) -> List[int]:
        low, high = self.config.cost_range
        return [int(c) for c in self.rng.integers(low, high + 1, size=count)]


def generate(config: GeneratorConfig) -> AndOrGraph:
    target = Node("n0", NodeKind.ATOMIC, Cost.infinite())
    if config.size_target == 1:
        return AndOrGraph([target], [], "n0")

    builder = _Builder(config)
    quotas = kind_quotas(config.size_target, config.composition)
    kinds, degrees = builder.degree_sequence(quotas)
    order = builder.arrange(degrees)

    ordered_kinds = [kinds[i] for i in order]
    costs = iter(builder.costs(sum(1 for k in ordered_kinds if k is NodeKind.ATOMIC)))
    nodes = [target]
    for position, kind in enumerate(ordered_kinds, start=1):
        node_id = f"n{position}"
        nodes.append(Node.atomic(node_id, next(costs)) if kind is NodeKind.ATOMIC else Node.gate(node_id, kind))

    # expansión en anchura: cada nodo toma como predecesores los siguientes sin padre
    edges: List[Tuple[str, str]] = [("n1", "n0")]
    next_child = 2
    for position, index in enumerate(order, start=1):
        for _ in range(int(degrees[index])):
            edges.append((f"n{next_child}", f"n{position}"))
            next_child += 1

    graph = AndOrGraph(nodes, edges, "n0")
    counts = graph.kind_counts()
    logger.info(
        f"🌱 Grafo generado con {len(graph)} nodos (atomic={counts[NodeKind.ATOMIC]}, and={counts[NodeKind.AND]}, "
        f"or={counts[NodeKind.OR]}), semilla {config.seed}, {builder.extra_leaves} hojas extra"
    )
    return graph
