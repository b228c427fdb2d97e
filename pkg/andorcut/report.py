"""Reportes por caso, con las columnas de las tablas de benchmark.

``solve_case`` encadena codificación, resolución, decodificación, verificación
y (si el caso es chico) el oráculo de fuerza bruta.
"""
from enum import Enum
from typing import List, Optional, Tuple
import logging
import time

from pydantic import BaseModel, ConfigDict, Field, model_validator

from andorcut.config import DEFAULT_TOP, get_settings
from andorcut.encoder import decode, encode
from andorcut.graph import AndOrGraph, NodeKind
from andorcut.instance import CriticalSet, WcnfInstance
from andorcut.logic.cnf import clause_holds
from andorcut.oracle import VerificationReport, brute_force_min_cut, verify
from andorcut.solver import SolveResult, SolveStatus, SolverBudget, solve

logger = logging.getLogger(__name__)


class CaseStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    TIMEOUT = "timeout"
    ERROR = "error"


EXIT_CODES = {
    CaseStatus.OPTIMAL: 0,
    CaseStatus.INFEASIBLE: 3,
    CaseStatus.TIMEOUT: 4,
    CaseStatus.ERROR: 2,
}


class CaseReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    id: str
    g_nodes: Optional[int] = Field(default=None, alias="gNodes")
    g_at: Optional[int] = Field(default=None, alias="gAT")
    g_and: Optional[int] = Field(default=None, alias="gAND")
    g_or: Optional[int] = Field(default=None, alias="gOR")
    ts_vars: Optional[int] = Field(default=None, alias="tsVars")
    ts_clauses: Optional[int] = Field(default=None, alias="tsClauses")
    cost: Optional[int] = None
    time: float = 0.0
    encode_ms: float = 0.0
    solve_ms: float = 0.0
    solution: List[Tuple[str, int]] = Field(default_factory=list)
    status: CaseStatus
    oracle_cost: Optional[int] = None
    oracle_agrees: Optional[bool] = None
    verification: Optional[VerificationReport] = None
    error: Optional[str] = None

    @model_validator(mode="after")
    def check_cost(self):
        if self.cost is not None and self.cost != sum(c for _, c in self.solution):
            raise ValueError(f"cost {self.cost} differs from the solution total")
        return self

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_record(self) -> dict:
        return self.model_dump(mode="json", by_alias=True)

    def table_row(self) -> list:
        solution = " ".join(f"{n}:{c}" for n, c in self.solution)
        return [
            self.id, self.g_nodes, self.g_at, self.g_and, self.g_or, self.ts_vars, self.ts_clauses,
            self.cost, f"{self.time:.1f}", self.status.value, solution,
        ]


TABLE_HEADERS = ["id", "gNodes", "gAT", "gAND", "gOR", "tsVars", "tsClauses", "cost", "time", "status", "solution"]


def _ms(start: float) -> float:
    return (time.perf_counter() - start) * 1000.0


def solution_from_instance(instance: WcnfInstance, assignment) -> List[Tuple[str, int]]:
    """Cláusulas blandas falsificadas, nombradas por su nodo cuando hay correspondencia.

    Sin grafo no se conocen los costos de los nodos: cada entrada lleva el peso
    de la cláusula blanda que la asignación falsifica.
    """
    names = instance.names
    entries: List[Tuple[str, int]] = []
    for index, sc in enumerate(instance.soft):
        if clause_holds(list(sc.clause), assignment):
            continue
        if len(sc.clause) == 1 and abs(sc.clause[0]) in names:
            entries.append((names[abs(sc.clause[0])], sc.weight))
        elif len(sc.clause) == 1:
            entries.append((f"#{abs(sc.clause[0])}", sc.weight))
        else:
            entries.append((f"soft{index}", sc.weight))
    merged = {}
    for name, weight in entries:
        merged[name] = merged.get(name, 0) + weight
    return sorted(merged.items())


def _status_of(result: SolveResult) -> CaseStatus:
    if result.status is SolveStatus.HARD_UNSAT:
        return CaseStatus.INFEASIBLE
    if result.status is SolveStatus.TIMEOUT:
        return CaseStatus.TIMEOUT
    return CaseStatus.OPTIMAL


def solve_case(
    graph: AndOrGraph,
    case_id: str = "0",
    budget: Optional[SolverBudget] = None,
    oracle_limit: Optional[int] = None,
    preferred_top: int = DEFAULT_TOP,
) -> CaseReport:
    oracle_limit = get_settings().bench_oracle_limit if oracle_limit is None else oracle_limit
    counts = graph.kind_counts()

    start = time.perf_counter()
    instance = encode(graph, preferred_top=preferred_top)
    encode_ms = _ms(start)

    start = time.perf_counter()
    result = solve(instance, budget)
    solve_ms = _ms(start)

    status = _status_of(result)
    critical: Optional[CriticalSet] = None
    report: Optional[VerificationReport] = None
    if result.assignment is not None:
        critical = decode(instance, graph, result.assignment, stats=result.stats)
        report = verify(graph, None, critical)
        if status is CaseStatus.OPTIMAL and not report.ok:
            logger.warning(f"⚠️ Caso {case_id}: la verificación marcó {report.violations}")

    oracle_cost = None
    oracle_agrees = None
    reachable = graph.reachable()
    if sum(1 for n in reachable if graph.node(n).is_compromisable) <= oracle_limit:
        truth = brute_force_min_cut(graph, cap=oracle_limit)
        oracle_cost = truth.critical_set.total_cost if truth.feasible else None
        if status is CaseStatus.OPTIMAL:
            oracle_agrees = truth.feasible and oracle_cost == critical.total_cost
        elif status is CaseStatus.INFEASIBLE:
            oracle_agrees = not truth.feasible
        if oracle_agrees is False:
            logger.warning(f"⚠️ Caso {case_id}: el oráculo da costo {oracle_cost} y el solver terminó en {status.value}")

    return CaseReport(
        id=case_id,
        gNodes=len(graph),
        gAT=counts[NodeKind.ATOMIC],
        gAND=counts[NodeKind.AND],
        gOR=counts[NodeKind.OR],
        tsVars=instance.nvars,
        tsClauses=instance.num_clauses,
        cost=critical.total_cost if critical else None,
        time=encode_ms + solve_ms,
        encode_ms=encode_ms,
        solve_ms=solve_ms,
        solution=critical.solution() if critical else [],
        status=status,
        oracle_cost=oracle_cost,
        oracle_agrees=oracle_agrees,
        verification=report,
    )


def solve_wcnf_case(instance: WcnfInstance, case_id: str = "0", budget: Optional[SolverBudget] = None) -> CaseReport:
    """Resuelve una instancia leída de archivo, sin grafo asociado."""
    start = time.perf_counter()
    result = solve(instance, budget)
    solve_ms = _ms(start)

    solution: List[Tuple[str, int]] = []
    cost = None
    if result.assignment is not None:
        solution = solution_from_instance(instance, result.assignment)
        cost = instance.falsified_weight(result.assignment)
    return CaseReport(
        id=case_id,
        tsVars=instance.nvars,
        tsClauses=instance.num_clauses,
        cost=cost,
        time=solve_ms,
        solve_ms=solve_ms,
        solution=solution,
        status=_status_of(result),
    )
