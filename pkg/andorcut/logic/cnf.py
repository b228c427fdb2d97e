"""Conversión a CNF: ingenua (oráculo de pruebas) y transformación de Tseitin.

Los literales siguen la convención DIMACS: ``v`` o ``-v`` con ``v >= 1``.
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, FrozenSet, List, Mapping, Set, Tuple
import logging

from andorcut.exceptions import FormulaTooLargeError
from andorcut.logic.formula import And, Formula, Not, Or, Var, iter_postorder, literal_of, to_nnf, variables

logger = logging.getLogger(__name__)

NAIVE_CNF_MAX_VARS = 24

Clause = List[int]


def literal_holds(lit: int, assignment: Mapping[int, bool]) -> bool:
    value = assignment[abs(lit)]
    return value if lit > 0 else not value


def clause_holds(clause: Clause, assignment: Mapping[int, bool]) -> bool:
    return any(literal_holds(lit, assignment) for lit in clause)


@dataclass
class CnfFormula:
    nvars: int
    clauses: List[Clause]
    varmap: Dict[str, int]
    aux: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        graph_vars = set(self.varmap.values())
        if graph_vars & self.aux:
            raise ValueError("graph variables and auxiliary variables overlap")
        if graph_vars | self.aux != set(range(1, self.nvars + 1)):
            raise ValueError("variables must cover 1..nvars exactly")

    @property
    def names(self) -> Dict[int, str]:
        return {v: name for name, v in self.varmap.items()}

    def var(self, name: str) -> int:
        return self.varmap[name]

    def is_satisfied_by(self, assignment: Mapping[int, bool]) -> bool:
        return all(clause_holds(c, assignment) for c in self.clauses)

    def named_clause_set(self) -> Set[FrozenSet[Tuple[str, bool]]]:
        """Cláusulas como conjuntos de (nombre, polaridad); solo para variables del grafo."""
        names = self.names
        return {frozenset((names[abs(l)], l > 0) for l in c) for c in self.clauses}


def _canonical(clause: FrozenSet[int]) -> Tuple[int, ...]:
    return tuple(sorted(clause, key=lambda l: (abs(l), l < 0)))


def naive_cnf(f: Formula, max_vars: int = NAIVE_CNF_MAX_VARS) -> CnfFormula:
    """CNF equivalente por NNF + distribución.

    Exponencial en el peor caso; se usa como oráculo en las pruebas. Descarta
    tautologías y fusiona literales repetidos.
    """
    names = sorted(variables(f))
    if len(names) > max_vars:
        raise FormulaTooLargeError(len(names), max_vars)
    varmap = {name: i for i, name in enumerate(names, 1)}

    root = to_nnf(f)
    memo: Dict[int, Set[FrozenSet[int]]] = {}
    for node in iter_postorder(root):
        leaf = literal_of(node)
        if leaf is not None:
            name, positive = leaf
            v = varmap[name]
            memo[id(node)] = {frozenset((v if positive else -v,))}
        elif isinstance(node, And):
            clauses: Set[FrozenSet[int]] = set()
            for child in node.args:
                clauses |= memo[id(child)]
            memo[id(node)] = clauses
        elif isinstance(node, Or):
            acc: Set[FrozenSet[int]] = {frozenset()}
            for child in node.args:
                acc = {
                    merged
                    for left, right in product(acc, memo[id(child)])
                    for merged in (left | right,)
                    if not any(-lit in merged for lit in merged)
                }
            memo[id(node)] = acc
        else:
            raise TypeError(f"unexpected node in NNF: {node!r}")

    clauses = sorted(_canonical(c) for c in memo[id(root)])
    return CnfFormula(len(names), [list(c) for c in clauses], varmap)


def tseitin(f: Formula, push_negations: bool = True) -> CnfFormula:
    """Transformación de Tseitin con bicondicionales completos.

    Una variable auxiliar por subfórmula no hoja distinta. Numeración:
    variables originales en orden de nombre, luego auxiliares en orden de
    primera visita. Con ``push_negations`` la negación se empuja a las hojas
    antes de codificar; si no, cada ``Not`` es una compuerta con dos cláusulas.
    """
    root = to_nnf(f) if push_negations else f
    names = sorted(variables(root))
    varmap = {name: i for i, name in enumerate(names, 1)}
    next_var = len(names) + 1

    lits: Dict[int, int] = {}
    aux: List[int] = []
    clauses: List[Clause] = []

    def leaf_literal(node: Formula):
        if isinstance(node, Var):
            return varmap[node.name]
        if push_negations and isinstance(node, Not) and isinstance(node.arg, Var):
            return -varmap[node.arg.name]
        return None

    stack: List[Tuple[Formula, bool]] = [(root, False)]
    while stack:
        node, ready = stack.pop()
        if ready:
            g = lits[id(node)]
            inputs = [lits[id(c)] for c in node.children]
            if isinstance(node, And):
                clauses.extend([-g, l] for l in inputs)
                clauses.append([g] + [-l for l in inputs])
            elif isinstance(node, Or):
                clauses.extend([g, -l] for l in inputs)
                clauses.append([-g] + inputs)
            else:
                (l,) = inputs
                clauses.append([-g, -l])
                clauses.append([g, l])
            continue
        if id(node) in lits:
            continue
        leaf = leaf_literal(node)
        if leaf is not None:
            lits[id(node)] = leaf
            continue
        lits[id(node)] = next_var
        aux.append(next_var)
        next_var += 1
        stack.append((node, True))
        for child in reversed(node.children):
            if id(child) not in lits:
                stack.append((child, False))

    clauses.append([lits[id(root)]])
    logger.debug(f"Tseitin: {len(names)} variables, {len(aux)} auxiliares, {len(clauses)} cláusulas")
    return CnfFormula(next_var - 1, clauses, varmap, frozenset(aux))
