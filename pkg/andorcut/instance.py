"""Tipos de datos de instancias Weighted Partial MaxSAT y de sus soluciones."""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from andorcut.graph import AndOrGraph, total_cost
from andorcut.logic.cnf import clause_holds


@dataclass(frozen=True)
class SoftClause:
    weight: int
    clause: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "clause", tuple(self.clause))
        if isinstance(self.weight, bool) or not isinstance(self.weight, int) or self.weight < 1:
            raise ValueError(f"soft clause weight must be a positive integer, got {self.weight!r}")


@dataclass
class WcnfInstance:
    nvars: int
    top: int
    hard: List[List[int]]
    soft: List[SoftClause]
    varmap: Dict[str, int] = field(default_factory=dict)
    aux: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        for sc in self.soft:
            if sc.weight >= self.top:
                raise ValueError(f"soft weight {sc.weight} must be below top {self.top}")
            if any(abs(lit) in self.aux for lit in sc.clause):
                raise ValueError("auxiliary variables cannot appear in soft clauses")
        # top debe superar cualquier suma de violaciones blandas
        if self.soft_weight_total >= self.top:
            raise ValueError(f"soft weights sum to {self.soft_weight_total}, top {self.top} must exceed it")

    @property
    def soft_weight_total(self) -> int:
        return sum(sc.weight for sc in self.soft)

    @property
    def num_clauses(self) -> int:
        return len(self.hard) + len(self.soft)

    @property
    def names(self) -> Dict[int, str]:
        return {v: name for name, v in self.varmap.items()}

    def check_hard(self, assignment: Mapping[int, bool]) -> Optional[int]:
        """Índice de la primera cláusula dura violada, o None."""
        for index, clause in enumerate(self.hard):
            if not clause_holds(clause, assignment):
                return index
        return None

    def falsified_weight(self, assignment: Mapping[int, bool]) -> int:
        return sum(sc.weight for sc in self.soft if not clause_holds(list(sc.clause), assignment))


@dataclass
class SolverStats:
    decisions: int = 0
    propagations: int = 0
    sat_calls: int = 0
    nodes: int = 0
    cores: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class CriticalSet:
    """Conjunto crítico decodificado: nodos comprometidos y su costo total."""

    nodes: FrozenSet[str]
    total_cost: int
    assignment: Mapping[int, bool] = field(default_factory=dict)
    stats: Optional[SolverStats] = None
    costs: Mapping[str, int] = field(default_factory=dict)

    @classmethod
    def from_nodes(cls, graph: AndOrGraph, nodes: Iterable[str], **extra) -> "CriticalSet":
        nodes = frozenset(nodes)
        costs = {n: total_cost(graph, [n]) for n in nodes}
        return cls(nodes, sum(costs.values()), costs=costs, **extra)

    def solution(self) -> List[Tuple[str, int]]:
        return sorted(self.costs.items())
