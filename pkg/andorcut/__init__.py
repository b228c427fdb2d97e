"""andorcut: conjuntos críticos de costo mínimo en grafos AND/OR vía Weighted Partial MaxSAT."""
from andorcut.encoder import decode, encode
from andorcut.graph import AndOrGraph, Cost, Node, NodeKind, build_graph, evaluate, is_disrupted, validate
from andorcut.instance import CriticalSet, SoftClause, WcnfInstance
from andorcut.oracle import brute_force_min_cut, verify
from andorcut.solver import SolveResult, SolveStatus, SolverBudget, solve

__version__ = "0.1.0"

__all__ = [
    "AndOrGraph",
    "Cost",
    "CriticalSet",
    "Node",
    "NodeKind",
    "SoftClause",
    "SolveResult",
    "SolveStatus",
    "SolverBudget",
    "WcnfInstance",
    "brute_force_min_cut",
    "build_graph",
    "decode",
    "encode",
    "evaluate",
    "is_disrupted",
    "solve",
    "validate",
    "verify",
]
