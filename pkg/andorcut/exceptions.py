"""Errores propios de andorcut.

Todas las fallas esperables de la librería heredan de ``AndorcutError`` para que
la CLI pueda traducirlas a códigos de salida estables.
"""
from typing import Iterable, Optional, Sequence


class AndorcutError(Exception):
    """Error base de la librería."""


class GraphValidationError(AndorcutError):
    def __init__(self, violations: Sequence["object"]):
        self.violations = list(violations)
        detail = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid AND/OR graph: {detail}")


class UnknownNodeError(AndorcutError, KeyError):
    def __init__(self, node_id: str):
        self.node_id = node_id
        super().__init__(f"unknown node id: {node_id!r}")

    def __str__(self) -> str:
        return self.args[0]


class InvalidCompromiseError(AndorcutError, ValueError):
    def __init__(self, node_ids: Iterable[str]):
        self.node_ids = sorted(node_ids)
        super().__init__(
            "only atomic nodes with finite cost can be compromised: "
            + ", ".join(self.node_ids)
        )


class MissingVariableError(AndorcutError, KeyError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"assignment has no value for variable {name!r}")

    def __str__(self) -> str:
        return self.args[0]


class FormulaTooLargeError(AndorcutError):
    def __init__(self, nvars: int, limit: int):
        self.nvars = nvars
        self.limit = limit
        super().__init__(f"naive CNF limited to {limit} variables, formula has {nvars}")


class HardClauseViolation(AndorcutError):
    def __init__(self, clause_index: int, clause: Sequence[int]):
        self.clause_index = clause_index
        self.clause = list(clause)
        super().__init__(f"assignment violates hard clause #{clause_index}: {self.clause}")


class OracleCapExceededError(AndorcutError):
    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(
            f"brute force limited to {cap} finite-cost atomic nodes, target depends on {count}"
        )


class WcnfFormatError(AndorcutError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class GraphSyntaxError(AndorcutError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
