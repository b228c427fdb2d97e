"""Solver exacto de Weighted Partial MaxSAT por ramificación y acotamiento.

Cada nodo de búsqueda fija algunos literales blandos (mantenidos o
falsificados) y pregunta al núcleo DPLL si el resto puede mantenerse. Si la
respuesta es UNSAT, el núcleo devuelto nombra literales blandos de los que al
menos uno debe falsificarse: se ramifica sobre el más barato, primero
falsificándolo. Núcleos disjuntos dan la cota inferior.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple
import logging
import time

from pydantic import BaseModel, ConfigDict, PositiveFloat, PositiveInt

from andorcut.config import get_settings
from andorcut.instance import SolverStats, WcnfInstance
from andorcut.logic.cnf import literal_holds
from andorcut.logic.dpll import DpllSolver, SearchInterrupted

logger = logging.getLogger(__name__)


class SolverBudget(BaseModel):
    model_config = ConfigDict(frozen=True)

    wall_clock: Optional[PositiveFloat] = None
    decision_limit: Optional[PositiveInt] = None


class SolveStatus(str, Enum):
    OPTIMAL = "optimal"
    HARD_UNSAT = "hard-unsat"
    TIMEOUT = "timeout"


@dataclass
class SolveResult:
    status: SolveStatus
    assignment: Optional[Dict[int, bool]] = None
    cost: Optional[int] = None
    stats: SolverStats = field(default_factory=SolverStats)

    @property
    def is_optimal(self) -> bool:
        return self.status is SolveStatus.OPTIMAL


class _Interrupted(Exception):
    pass


class BranchAndBoundSolver:
    def __init__(self, instance: WcnfInstance, budget: Optional[SolverBudget] = None, core_limit: Optional[int] = None):
        self.instance = instance
        self.budget = budget or SolverBudget()
        self.core_limit = core_limit or get_settings().core_limit
        self.stats = SolverStats()

        hard = [list(c) for c in instance.hard]
        next_var = instance.nvars + 1
        self._base_cost = 0
        weights: Dict[int, int] = {}
        for sc in instance.soft:
            if not sc.clause:
                self._base_cost += sc.weight
                continue
            if len(sc.clause) == 1:
                lit = sc.clause[0]
            else:
                # Selector: mantener el literal obliga a satisfacer la cláusula
                lit = next_var
                next_var += 1
                hard.append([-lit] + list(sc.clause))
            weights[lit] = weights.get(lit, 0) + sc.weight

        # x y ¬x blandos a la vez: uno de los dos siempre se paga
        for lit in sorted(weights, key=abs):
            if lit > 0 and -lit in weights:
                low = min(weights[lit], weights[-lit])
                self._base_cost += low
                for l in (lit, -lit):
                    weights[l] -= low
                    if weights[l] == 0:
                        del weights[l]

        self._weights = weights
        self._order: List[int] = sorted(weights, key=lambda l: (weights[l], abs(l), l))
        self._rank = {lit: i for i, lit in enumerate(self._order)}
        self._sat = DpllSolver(hard, nvars=next_var - 1, phase=False)
        self._deadline: Optional[float] = None
        self._best_model: Optional[Dict[int, bool]] = None
        self._best_cost: Optional[int] = None

    def _cost(self, model: Dict[int, bool]) -> int:
        return self._base_cost + sum(w for lit, w in self._weights.items() if not literal_holds(lit, model))

    def _check_budget(self) -> None:
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise _Interrupted()
        limit = self.budget.decision_limit
        if limit is not None and self._sat.decisions >= limit:
            raise _Interrupted()

    def _sat_call(self, assumptions: List[int]):
        self._check_budget()
        remaining = None
        if self.budget.decision_limit is not None:
            remaining = self.budget.decision_limit - self._sat.decisions
        try:
            return self._sat.solve(assumptions, deadline=self._deadline, max_decisions=remaining)
        except SearchInterrupted:
            raise _Interrupted() from None

    def _project(self, model: Dict[int, bool]) -> Dict[int, bool]:
        return {v: model.get(v, False) for v in range(1, self.instance.nvars + 1)}

    def solve(self) -> SolveResult:
        start = time.monotonic()
        if self.budget.wall_clock is not None:
            self._deadline = start + self.budget.wall_clock

        status = SolveStatus.OPTIMAL
        try:
            root = self._sat_call([])
            if not root:
                status = SolveStatus.HARD_UNSAT
            else:
                self._best_model, self._best_cost = root.model, self._cost(root.model)
                logger.debug(f"Incumbente inicial con costo {self._best_cost}")
                self._search()
        except _Interrupted:
            status = SolveStatus.TIMEOUT
        best_model, best_cost = self._best_model, self._best_cost

        self.stats.decisions = self._sat.decisions
        self.stats.propagations = self._sat.propagations
        self.stats.sat_calls = self._sat.calls
        self.stats.elapsed = time.monotonic() - start

        if status is SolveStatus.HARD_UNSAT:
            logger.info("🚫 Las cláusulas duras son insatisfacibles")
            return SolveResult(status, stats=self.stats)
        assignment = self._project(best_model) if best_model is not None else None
        if status is SolveStatus.OPTIMAL:
            logger.info(f"✅ Óptimo {best_cost} tras {self.stats.nodes} nodos en {self.stats.elapsed:.3f}s")
        else:
            logger.warning(f"⏱️ Presupuesto agotado tras {self.stats.nodes} nodos; mejor costo hasta ahora {best_cost}")
        return SolveResult(status, assignment, best_cost, self.stats)

    def _search(self) -> None:
        def offer(model: Dict[int, bool]) -> None:
            cost = self._cost(model)
            if cost < self._best_cost:
                logger.debug(f"Nuevo incumbente con costo {cost}")
                self._best_model, self._best_cost = model, cost

        stack: List[Tuple[Tuple[int, ...], int]] = [((), self._base_cost)]
        while stack:
            self._check_budget()
            fixed, acc = stack.pop()
            if acc >= self._best_cost:
                continue
            self.stats.nodes += 1

            decided = {abs(l) for l in fixed}
            remaining = [lit for lit in self._order if abs(lit) not in decided]
            result = self._sat_call(list(fixed) + remaining)
            if result:
                offer(result.model)
                continue

            core = [lit for lit in remaining if lit in result.core]
            if not core:
                continue
            self.stats.cores += 1
            bound = acc + min(self._weights[l] for l in core)

            freed = set(core)
            found = 1
            while bound < self._best_cost and found < self.core_limit:
                kept = [lit for lit in remaining if lit not in freed]
                extra = self._sat_call(list(fixed) + kept)
                if extra:
                    offer(extra.model)
                    break
                disjoint = [lit for lit in kept if lit in extra.core]
                if not disjoint:
                    bound = self._best_cost
                    break
                self.stats.cores += 1
                bound += min(self._weights[l] for l in disjoint)
                freed.update(disjoint)
                found += 1
            if bound >= self._best_cost:
                continue

            branch = min(core, key=self._rank.__getitem__)
            stack.append((fixed + (branch,), acc))
            stack.append((fixed + (-branch,), acc + self._weights[branch]))


def solve(instance: WcnfInstance, budget: Optional[SolverBudget] = None) -> SolveResult:
    return BranchAndBoundSolver(instance, budget).solve()
