"""Codificación del problema de corte mínimo como Weighted Partial MaxSAT.

Cláusulas duras: Tseitin de ¬form(t), más una unidad ``{n}`` por cada nodo
atómico de costo infinito. Cláusulas blandas: una unidad ``{n}`` por nodo
atómico de costo finito positivo alcanzable desde el objetivo, con su costo
como peso. Las auxiliares de Tseitin no tienen peso.
"""
from typing import Mapping
import logging

from andorcut.config import DEFAULT_TOP
from andorcut.exceptions import GraphValidationError, HardClauseViolation
from andorcut.graph import AndOrGraph, Violation
from andorcut.instance import CriticalSet, SoftClause, WcnfInstance
from andorcut.logic.cnf import tseitin
from andorcut.logic.formula import build_formula, negate

logger = logging.getLogger(__name__)


def encode(graph: AndOrGraph, target: str = None, preferred_top: int = DEFAULT_TOP) -> WcnfInstance:
    target = graph.target if target is None else target
    graph.ensure_valid()
    if not graph.node(target).is_atomic:
        raise GraphValidationError(
            [Violation("target-not-atomic", f"target {target} must be an atomic node", (target,))]
        )

    cnf = tseitin(negate(build_formula(graph, target)))
    hard = [list(clause) for clause in cnf.clauses]
    soft = []
    for name, var in sorted(cnf.varmap.items(), key=lambda item: item[1]):
        cost = graph.node(name).cost
        if cost.is_infinite:
            hard.append([var])
        elif cost.value > 0:
            soft.append(SoftClause(cost.value, (var,)))

    top = max(preferred_top, sum(sc.weight for sc in soft) + 1)
    instance = WcnfInstance(cnf.nvars, top, hard, soft, dict(cnf.varmap), cnf.aux)
    logger.info(
        f"🧮 Objetivo {target} codificado: tsVars={instance.nvars} tsClauses={instance.num_clauses} "
        f"(hard={len(hard)}, soft={len(soft)}, top={top})"
    )
    return instance


def decode(instance: WcnfInstance, graph: AndOrGraph, assignment: Mapping[int, bool], stats=None) -> CriticalSet:
    """Nodos atómicos de costo finito falsificados por la asignación."""
    violated = instance.check_hard(assignment)
    if violated is not None:
        raise HardClauseViolation(violated, instance.hard[violated])

    compromised = [
        name
        for name, var in instance.varmap.items()
        if graph.node(name).is_compromisable and not assignment[var]
    ]
    return CriticalSet.from_nodes(graph, compromised, assignment=dict(assignment), stats=stats)
