"""Verdad de referencia independiente del camino SAT.

``brute_force_min_cut`` enumera subconjuntos de nodos atómicos comprometibles
usando solo la semántica del grafo; ``verify`` revisa una solución dada.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional
import logging

from pydantic import BaseModel, Field

from andorcut.config import get_settings
from andorcut.exceptions import InvalidCompromiseError, OracleCapExceededError
from andorcut.graph import AndOrGraph, NodeKind, evaluate, total_cost
from andorcut.instance import CriticalSet

logger = logging.getLogger(__name__)


class VerificationReport(BaseModel):
    disrupts: bool
    claimed_cost_matches: bool
    irredundant: bool
    violations: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class OracleResult:
    feasible: bool
    critical_set: Optional[CriticalSet] = None
    subsets_checked: int = 0


class _CompiledGraph:
    """Evaluador compacto del subgrafo alcanzable, indexado por posición."""

    def __init__(self, graph: AndOrGraph, target: str, candidates: List[str]):
        reachable = graph.reachable(target)
        order = [n for n in graph.topological_order if n in reachable]
        index = {n: i for i, n in enumerate(order)}
        self._steps = [
            (graph.node(n).kind, tuple(index[p] for p in graph.predecessors(n)))
            for n in order
        ]
        self._candidate_index = [index[n] for n in candidates]
        self._target = index[target]
        self._size = len(order)

    def disrupted(self, chosen: Iterable[int]) -> bool:
        down = [False] * self._size
        for c in chosen:
            down[self._candidate_index[c]] = True
        values = [False] * self._size
        for i, (kind, preds) in enumerate(self._steps):
            if kind is NodeKind.OR:
                values[i] = any(values[p] for p in preds)
            elif kind is NodeKind.AND:
                values[i] = all(values[p] for p in preds)
            else:
                values[i] = not down[i] and all(values[p] for p in preds)
        return not values[self._target]


def brute_force_min_cut(graph: AndOrGraph, target: Optional[str] = None, cap: Optional[int] = None) -> OracleResult:
    """Corte de costo mínimo por enumeración en cardinalidad creciente.

    Se poda por el mejor costo conocido: si los ``k`` nodos más baratos ya
    cuestan al menos eso, ningún subconjunto de tamaño ``k`` o mayor mejora.
    """
    target = graph.target if target is None else target
    cap = get_settings().oracle_cap if cap is None else cap
    graph.ensure_valid()

    reachable = graph.reachable(target)
    candidates = sorted(
        (n for n in reachable if graph.node(n).is_compromisable),
        key=lambda n: (graph.node(n).cost.value, n),
    )
    if len(candidates) > cap:
        raise OracleCapExceededError(len(candidates), cap)

    compiled = _CompiledGraph(graph, target, candidates)
    weights = [graph.node(n).cost.value for n in candidates]
    m = len(candidates)
    if not compiled.disrupted(range(m)):
        logger.debug(f"Ningún subconjunto de {m} candidatos interrumpe {target}")
        return OracleResult(False, subsets_checked=1)

    best_cost = sum(weights)
    best = tuple(range(m))
    checked = 1
    for k in range(m):
        if sum(weights[:k]) >= best_cost:
            break
        for combo in combinations(range(m), k):
            cost = sum(weights[i] for i in combo)
            if cost >= best_cost:
                continue
            checked += 1
            if compiled.disrupted(combo):
                best_cost, best = cost, combo

    nodes = [candidates[i] for i in best]
    logger.debug(f"Óptimo por fuerza bruta {best_cost} para {target} tras {checked} subconjuntos")
    return OracleResult(True, CriticalSet.from_nodes(graph, nodes), checked)


def verify(graph: AndOrGraph, target: Optional[str], solution: CriticalSet) -> VerificationReport:
    target = graph.target if target is None else target
    nodes = frozenset(solution.nodes)
    for node_id in nodes:
        if not graph.node(node_id).is_compromisable:
            raise InvalidCompromiseError([node_id])

    def disrupted(subset) -> bool:
        return not evaluate(graph, subset)[target]

    disrupts = disrupted(nodes)
    recomputed = total_cost(graph, nodes)
    cost_matches = recomputed == solution.total_cost
    redundant = sorted(n for n in nodes if disrupted(nodes - {n}))

    violations = []
    if not disrupts:
        violations.append(f"compromising {sorted(nodes)} does not disrupt {target}")
    if not cost_matches:
        violations.append(f"claimed cost {solution.total_cost} but the nodes cost {recomputed}")
    if redundant:
        violations.append(f"redundant members: {', '.join(redundant)}")
    return VerificationReport(
        disrupts=disrupts,
        claimed_cost_matches=cost_matches,
        irredundant=not redundant,
        violations=violations,
    )
