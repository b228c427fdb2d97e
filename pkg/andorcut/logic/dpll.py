"""Núcleo SAT tipo DPLL con propagación unitaria por literales vigilados.

Sin aprendizaje de cláusulas: búsqueda cronológica completa. Con supuestos
(assumptions), una respuesta UNSAT trae un núcleo: el subconjunto de supuestos
que participó en los conflictos, suficiente para la insatisfacibilidad.
"""
from collections import defaultdict
from dataclasses import dataclass, field
from typing import DefaultDict, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set
import logging
import time

from andorcut.exceptions import AndorcutError

logger = logging.getLogger(__name__)


class SearchInterrupted(AndorcutError):
    """Se agotó el presupuesto (tiempo o decisiones) durante la búsqueda."""


@dataclass
class SatResult:
    satisfiable: bool
    model: Optional[Dict[int, bool]] = None
    core: Optional[FrozenSet[int]] = None

    def __bool__(self) -> bool:
        return self.satisfiable


@dataclass
class _Frame:
    position: int
    literal: int
    flipped: bool = False
    core: Set[int] = field(default_factory=set)


def normalize_clause(clause: Iterable[int]) -> Optional[List[int]]:
    """Quita literales repetidos; None si la cláusula es tautológica."""
    lits: List[int] = []
    seen = set()
    for lit in clause:
        if lit == 0:
            raise ValueError("literal 0 is not allowed inside a clause")
        if -lit in seen:
            return None
        if lit not in seen:
            seen.add(lit)
            lits.append(lit)
    return lits


class DpllSolver:
    """Solver reutilizable sobre un conjunto fijo de cláusulas.

    Las listas de vigilancia se construyen una vez; cada llamada a ``solve``
    deshace la asignación anterior y arranca de cero.
    """

    def __init__(self, clauses: Iterable[Sequence[int]], nvars: int = 0, phase: bool = False):
        self.phase = phase
        self.decisions = 0
        self.propagations = 0
        self.calls = 0

        self._clauses: List[List[int]] = []
        self._units: List[int] = []
        self._has_empty = False
        self._watches: DefaultDict[int, List[int]] = defaultdict(list)
        self._nvars = nvars

        for raw in clauses:
            clause = normalize_clause(raw)
            if clause is None:
                continue
            if not clause:
                self._has_empty = True
                continue
            index = len(self._clauses)
            self._clauses.append(clause)
            self._nvars = max(self._nvars, max(abs(l) for l in clause))
            if len(clause) == 1:
                self._units.append(index)
            else:
                self._watches[clause[0]].append(index)
                self._watches[clause[1]].append(index)

        self._val: List[int] = [0] * (self._nvars + 1)
        self._reason: List[Optional[int]] = [None] * (self._nvars + 1)
        self._trail: List[int] = []
        self._qhead = 0
        self._assumed: Set[int] = set()

    @property
    def nvars(self) -> int:
        return self._nvars

    def _ensure_var(self, var: int) -> None:
        if var > self._nvars:
            grow = var - self._nvars
            self._val.extend([0] * grow)
            self._reason.extend([None] * grow)
            self._nvars = var

    def _value(self, lit: int) -> int:
        return self._val[lit] if lit > 0 else -self._val[-lit]

    def _assign(self, lit: int, reason: Optional[int]) -> None:
        var = abs(lit)
        self._val[var] = 1 if lit > 0 else -1
        self._reason[var] = reason
        self._trail.append(lit)

    def _undo(self, position: int) -> None:
        for lit in self._trail[position:]:
            var = abs(lit)
            self._val[var] = 0
            self._reason[var] = None
        del self._trail[position:]
        self._qhead = min(self._qhead, position)

    def _propagate(self) -> Optional[int]:
        """Propaga hasta el punto fijo; devuelve el índice de la cláusula en conflicto."""
        val = self._val
        clauses = self._clauses
        watches = self._watches
        trail = self._trail
        while self._qhead < len(trail):
            false_lit = -trail[self._qhead]
            self._qhead += 1
            self.propagations += 1
            watching = watches.get(false_lit)
            if not watching:
                continue
            kept: List[int] = []
            conflict = None
            i, n = 0, len(watching)
            while i < n:
                ci = watching[i]
                i += 1
                c = clauses[ci]
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                first = c[0]
                first_value = val[first] if first > 0 else -val[-first]
                if first_value == 1:
                    kept.append(ci)
                    continue
                for k in range(2, len(c)):
                    lit = c[k]
                    if (val[lit] if lit > 0 else -val[-lit]) != -1:
                        c[1], c[k] = lit, false_lit
                        watches[lit].append(ci)
                        break
                else:
                    kept.append(ci)
                    if first_value == -1:
                        conflict = ci
                        kept.extend(watching[i:])
                        break
                    self._assign(first, ci)
            watches[false_lit] = kept
            if conflict is not None:
                return conflict
        return None

    def _cone(self, variables: Iterable[int]) -> Set[int]:
        """Supuestos de los que dependen las asignaciones de ``variables``."""
        core: Set[int] = set()
        seen: Set[int] = set()
        stack = list(variables)
        while stack:
            var = stack.pop()
            if var in seen:
                continue
            seen.add(var)
            reason = self._reason[var]
            if reason is None:
                if var in self._assumed:
                    core.add(var if self._val[var] > 0 else -var)
                continue
            stack.extend(abs(l) for l in self._clauses[reason] if abs(l) != var)
        return core

    def _conflict_core(self, clause_index: int) -> Set[int]:
        return self._cone(abs(l) for l in self._clauses[clause_index])

    def _model(self) -> Dict[int, bool]:
        return {v: self._val[v] > 0 for v in range(1, self._nvars + 1)}

    def solve(
        self,
        assumptions: Sequence[int] = (),
        deadline: Optional[float] = None,
        max_decisions: Optional[int] = None,
    ) -> SatResult:
        """Busca un modelo total que satisfaga las cláusulas y los supuestos.

        ``deadline`` es un instante de ``time.monotonic()``; al superarlo, o al
        superar ``max_decisions`` decisiones en esta llamada, se lanza
        ``SearchInterrupted``.
        """
        self.calls += 1
        self._undo(0)
        self._qhead = 0
        self._assumed = set()
        if self._has_empty:
            return SatResult(False, core=frozenset())

        for ci in self._units:
            lit = self._clauses[ci][0]
            current = self._value(lit)
            if current == -1:
                return SatResult(False, core=frozenset(self._conflict_core(ci)))
            if current == 0:
                self._assign(lit, ci)
        conflict = self._propagate()
        if conflict is not None:
            return SatResult(False, core=frozenset(self._conflict_core(conflict)))

        for lit in assumptions:
            var = abs(lit)
            self._ensure_var(var)
            current = self._value(lit)
            if current == 1:
                continue
            if current == -1:
                return SatResult(False, core=frozenset({lit} | self._cone([var])))
            self._assumed.add(var)
            self._assign(lit, None)
            conflict = self._propagate()
            if conflict is not None:
                return SatResult(False, core=frozenset(self._conflict_core(conflict)))

        return self._search(deadline, max_decisions)

    def _search(self, deadline: Optional[float], max_decisions: Optional[int]) -> SatResult:
        frames: List[_Frame] = []
        pointer = 1
        decisions = 0
        val = self._val
        while True:
            conflict = self._propagate()
            if conflict is not None:
                core = self._conflict_core(conflict)
                while frames:
                    frame = frames[-1]
                    frame.core |= core
                    self._undo(frame.position)
                    if not frame.flipped:
                        frame.flipped = True
                        self._assign(-frame.literal, None)
                        pointer = abs(frame.literal)
                        break
                    core = frame.core
                    frames.pop()
                else:
                    return SatResult(False, core=frozenset(core))
                continue

            while pointer <= self._nvars and val[pointer] != 0:
                pointer += 1
            if pointer > self._nvars:
                return SatResult(True, model=self._model())

            decisions += 1
            self.decisions += 1
            if max_decisions is not None and decisions > max_decisions:
                raise SearchInterrupted(f"decision limit {max_decisions} reached")
            if deadline is not None and time.monotonic() > deadline:
                raise SearchInterrupted("wall-clock limit reached")

            literal = pointer if self.phase else -pointer
            frames.append(_Frame(len(self._trail), literal))
            self._assign(literal, None)


def sat_solve(
    clauses: Iterable[Sequence[int]],
    assumptions: Sequence[int] = (),
    nvars: int = 0,
) -> SatResult:
    """Atajo de una sola llamada sobre ``DpllSolver``."""
    return DpllSolver(clauses, nvars=nvars).solve(assumptions)
